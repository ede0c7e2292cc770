#include "gcw/semantics.hpp"

#include <random>

namespace gcw {

namespace {

// Division truncating toward zero and the matching modulo, so that
// n = (n/d)*d + (n%d) holds; 5/(-3) = -1 and 5%(-3) = 2.
long long trunc_div(long long n, long long d) { return n / d; }
long long trunc_mod(long long n, long long d) { return n - (n / d) * d; }

}  // namespace

OrUndef<long long> eval_aexp(const Aexp& a, const Memory& m) {
  switch (a.kind) {
    case Aexp::Kind::Num:
      return a.num;
    case Aexp::Kind::Str:
      return Undef{"string literal has no integer value"};
    case Aexp::Kind::Var: {
      auto it = m.vars.find(a.text);
      if (it == m.vars.end()) return Undef{"unknown variable " + a.text};
      return it->second;
    }
    case Aexp::Kind::Index: {
      auto it = m.arrays.find(a.text);
      if (it == m.arrays.end()) return Undef{"unknown array " + a.text};
      OrUndef<long long> idx = eval_aexp(*a.a1, m);
      if (!is_def(idx)) return idx;
      long long i = value_of(idx);
      if (i < 0 || i >= static_cast<long long>(it->second.size()))
        return Undef{"index " + std::to_string(i) + " out of bounds for " + a.text};
      return it->second[static_cast<size_t>(i)];
    }
    case Aexp::Kind::Len: {
      auto it = m.arrays.find(a.text);
      if (it == m.arrays.end()) return Undef{"unknown array " + a.text};
      return static_cast<long long>(it->second.size());
    }
    case Aexp::Kind::Bin: {
      OrUndef<long long> l = eval_aexp(*a.a1, m);
      if (!is_def(l)) return l;
      OrUndef<long long> r = eval_aexp(*a.a2, m);
      if (!is_def(r)) return r;
      long long x = value_of(l), y = value_of(r);
      switch (a.op) {
        case AOp::Add: return x + y;
        case AOp::Sub: return x - y;
        case AOp::Mul: return x * y;
        case AOp::Div:
          if (y == 0) return Undef{"division by zero"};
          return trunc_div(x, y);
        case AOp::Mod:
          if (y == 0) return Undef{"modulo by zero"};
          return trunc_mod(x, y);
      }
      return Undef{"bad operator"};
    }
    case Aexp::Kind::Neg: {
      OrUndef<long long> v = eval_aexp(*a.a1, m);
      if (!is_def(v)) return v;
      return -value_of(v);
    }
    case Aexp::Kind::San:
      // Sanitisation has no semantic effect.
      return eval_aexp(*a.a1, m);
  }
  return Undef{"bad expression"};
}

OrUndef<bool> eval_bexp(const Bexp& b, const Memory& m) {
  switch (b.kind) {
    case Bexp::Kind::True:
      return true;
    case Bexp::Kind::False:
      return false;
    case Bexp::Kind::Rel: {
      OrUndef<long long> l = eval_aexp(*b.a1, m);
      if (!is_def(l)) return Undef{undef_reason(l)};
      OrUndef<long long> r = eval_aexp(*b.a2, m);
      if (!is_def(r)) return Undef{undef_reason(r)};
      long long x = value_of(l), y = value_of(r);
      switch (b.rop) {
        case ROp::Eq: return x == y;
        case ROp::Ne: return x != y;
        case ROp::Gt: return x > y;
        case ROp::Ge: return x >= y;
        case ROp::Lt: return x < y;
        case ROp::Le: return x <= y;
      }
      return Undef{"bad operator"};
    }
    case Bexp::Kind::Bool: {
      OrUndef<bool> l = eval_bexp(*b.b1, m);
      if (!is_def(l)) return l;
      bool x = value_of(l);
      // Short-circuit operators may skip the second argument entirely.
      if (b.bop == BOp::AndAnd && !x) return false;
      if (b.bop == BOp::OrOr && x) return true;
      OrUndef<bool> r = eval_bexp(*b.b2, m);
      if (!is_def(r)) return r;
      bool y = value_of(r);
      switch (b.bop) {
        case BOp::And:
        case BOp::AndAnd: return x && y;
        case BOp::Or:
        case BOp::OrOr: return x || y;
      }
      return Undef{"bad operator"};
    }
    case Bexp::Kind::Not: {
      OrUndef<bool> v = eval_bexp(*b.b1, m);
      if (!is_def(v)) return v;
      return !value_of(v);
    }
  }
  return Undef{"bad expression"};
}

std::variant<Memory, Stuck> step_action(const Action& act, const Memory& m) {
  switch (act.kind) {
    case Action::Kind::Assign: {
      if (!m.vars.count(act.var)) return Stuck{"unknown variable " + act.var};
      OrUndef<long long> v = eval_aexp(*act.rhs, m);
      if (!is_def(v)) return Stuck{undef_reason(v)};
      Memory out = m;
      out.vars[act.var] = value_of(v);
      return out;
    }
    case Action::Kind::ArrAssign: {
      auto it = m.arrays.find(act.arr);
      if (it == m.arrays.end()) return Stuck{"unknown array " + act.arr};
      OrUndef<long long> idx = eval_aexp(*act.idx, m);
      if (!is_def(idx)) return Stuck{undef_reason(idx)};
      OrUndef<long long> v = eval_aexp(*act.rhs, m);
      if (!is_def(v)) return Stuck{undef_reason(v)};
      long long i = value_of(idx);
      if (i < 0 || i >= static_cast<long long>(it->second.size()))
        return Stuck{"index " + std::to_string(i) + " out of bounds for " + act.arr};
      Memory out = m;
      out.arrays[act.arr][static_cast<size_t>(i)] = value_of(v);
      return out;
    }
    case Action::Kind::Input: {
      if (!m.vars.count(act.var)) return Stuck{"unknown variable " + act.var};
      auto it = m.chans.find(act.chan);
      if (it == m.chans.end()) return Stuck{"unknown channel " + act.chan};
      if (it->second.empty()) return Stuck{"channel " + act.chan + " is empty"};
      Memory out = m;
      out.vars[act.var] = it->second.front();
      out.chans[act.chan].pop_front();
      return out;
    }
    case Action::Kind::InputArr: {
      auto ait = m.arrays.find(act.arr);
      if (ait == m.arrays.end()) return Stuck{"unknown array " + act.arr};
      auto cit = m.chans.find(act.chan);
      if (cit == m.chans.end()) return Stuck{"unknown channel " + act.chan};
      if (cit->second.empty()) return Stuck{"channel " + act.chan + " is empty"};
      OrUndef<long long> idx = eval_aexp(*act.idx, m);
      if (!is_def(idx)) return Stuck{undef_reason(idx)};
      long long i = value_of(idx);
      if (i < 0 || i >= static_cast<long long>(ait->second.size()))
        return Stuck{"index " + std::to_string(i) + " out of bounds for " + act.arr};
      Memory out = m;
      out.arrays[act.arr][static_cast<size_t>(i)] = cit->second.front();
      out.chans[act.chan].pop_front();
      return out;
    }
    case Action::Kind::Output: {
      auto it = m.chans.find(act.chan);
      if (it == m.chans.end()) return Stuck{"unknown channel " + act.chan};
      OrUndef<long long> v = eval_aexp(*act.rhs, m);
      if (!is_def(v)) return Stuck{undef_reason(v)};
      Memory out = m;
      out.chans[act.chan].push_back(value_of(v));
      return out;
    }
    case Action::Kind::Test: {
      OrUndef<bool> v = eval_bexp(*act.cond, m);
      if (!is_def(v)) return Stuck{undef_reason(v)};
      if (!value_of(v)) return Stuck{"test " + to_string(*act.cond) + " failed"};
      return m;
    }
    case Action::Kind::Skip:
      return m;
  }
  return Stuck{"bad action"};
}

Trace execute(const ProgramGraph& pg, const Memory& initial, size_t max_steps, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Trace trace;
  trace.configurations.push_back({pg.initial(), initial});
  NodeId q = pg.initial();
  Memory m = initial;
  for (size_t step = 0; step < max_steps; ++step) {
    if (q == pg.final_node()) {
      trace.status = RunStatus::Final;
      return trace;
    }
    std::vector<std::pair<size_t, Memory>> enabled;
    for (size_t i : pg.out_edges(q)) {
      auto r = step_action(pg.edges()[i].action, m);
      if (std::holds_alternative<Memory>(r))
        enabled.emplace_back(i, std::get<Memory>(std::move(r)));
    }
    if (enabled.empty()) {
      trace.status = RunStatus::Stuck;
      return trace;
    }
    size_t pick = enabled.size() == 1
                      ? 0
                      : std::uniform_int_distribution<size_t>(0, enabled.size() - 1)(rng);
    q = pg.edges()[enabled[pick].first].target;
    m = std::move(enabled[pick].second);
    trace.taken_edges.push_back(enabled[pick].first);
    trace.configurations.push_back({q, m});
  }
  trace.status = q == pg.final_node() ? RunStatus::Final : RunStatus::Budget;
  return trace;
}

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Final: return "final";
    case RunStatus::Stuck: return "stuck";
    case RunStatus::Budget: return "budget";
  }
  return "?";
}

namespace {

void enumerate_rec(const ProgramGraph& pg, NodeId at, NodeId to, size_t budget, Path& cur,
                   std::vector<Path>& out) {
  if (at == to) out.push_back(cur);
  if (budget == 0) return;
  for (size_t i : pg.out_edges(at)) {
    cur.nodes.push_back(pg.edges()[i].target);
    cur.edges.push_back(i);
    enumerate_rec(pg, pg.edges()[i].target, to, budget - 1, cur, out);
    cur.nodes.pop_back();
    cur.edges.pop_back();
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const ProgramGraph& pg, NodeId from, NodeId to, size_t max_len) {
  std::vector<Path> out;
  Path cur;
  cur.nodes.push_back(from);
  enumerate_rec(pg, from, to, max_len, cur, out);
  return out;
}

}  // namespace gcw
