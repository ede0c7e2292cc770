#include "gcw/bitvector.hpp"

#include <sstream>

namespace gcw {

std::string to_string(const RdFact& f) {
  return "(" + f.subject + "," + (f.source ? to_string(*f.source) : std::string("?")) + "," +
         to_string(f.target) + ")";
}

NameSet free_vars(const Aexp& a) {
  NameSet out;
  std::set<std::string> vars, arrs;
  collect_idents(a, vars, arrs);
  out.insert(vars.begin(), vars.end());
  out.insert(arrs.begin(), arrs.end());
  return out;
}

NameSet free_vars(const Bexp& b) {
  NameSet out;
  std::set<std::string> vars, arrs;
  collect_idents(b, vars, arrs);
  out.insert(vars.begin(), vars.end());
  out.insert(arrs.begin(), arrs.end());
  return out;
}

namespace {

void ae_rec(const AexpPtr& a, AexpSet& out) {
  switch (a->kind) {
    case Aexp::Kind::Num:
    case Aexp::Kind::Str:
    case Aexp::Kind::Var:
    case Aexp::Kind::Len:
      // A# reads a length fixed for the whole run, so it stays trivial.
      break;
    case Aexp::Kind::Index:
      ae_rec(a->a1, out);
      out.insert(a);
      break;
    case Aexp::Kind::Bin:
      ae_rec(a->a1, out);
      ae_rec(a->a2, out);
      out.insert(a);
      break;
    case Aexp::Kind::Neg:
      ae_rec(a->a1, out);
      out.insert(a);
      break;
    case Aexp::Kind::San:
      ae_rec(a->a1, out);
      break;
  }
}

void ae_rec(const BexpPtr& b, AexpSet& out) {
  switch (b->kind) {
    case Bexp::Kind::True:
    case Bexp::Kind::False:
      break;
    case Bexp::Kind::Rel:
      ae_rec(b->a1, out);
      ae_rec(b->a2, out);
      break;
    case Bexp::Kind::Bool:
      ae_rec(b->b1, out);
      ae_rec(b->b2, out);
      break;
    case Bexp::Kind::Not:
      ae_rec(b->b1, out);
      break;
  }
}

bool mentions(const AexpPtr& a, const std::string& name) {
  return free_vars(*a).count(name) > 0;
}

AexpSet exprs_mentioning(const AexpSet& universe, const std::string& name) {
  AexpSet out;
  for (const AexpPtr& a : universe)
    if (mentions(a, name)) out.insert(a);
  return out;
}

AexpSet exprs_not_mentioning(const AexpSet& s, const std::string& name) {
  AexpSet out;
  for (const AexpPtr& a : s)
    if (!mentions(a, name)) out.insert(a);
  return out;
}

NameSet set_union(const NameSet& a, const NameSet& b) {
  NameSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

}  // namespace

AexpSet nontrivial_subexpressions(const Aexp& a) {
  AexpSet out;
  ae_rec(std::make_shared<Aexp>(a), out);
  return out;
}

AexpSet nontrivial_subexpressions(const Bexp& b) {
  AexpSet out;
  ae_rec(std::make_shared<Bexp>(b), out);
  return out;
}

AexpSet action_exprs(const Action& act) {
  AexpSet out;
  switch (act.kind) {
    case Action::Kind::Assign: ae_rec(act.rhs, out); break;
    case Action::Kind::ArrAssign:
      ae_rec(act.idx, out);
      ae_rec(act.rhs, out);
      break;
    case Action::Kind::Input: break;
    case Action::Kind::InputArr: ae_rec(act.idx, out); break;
    case Action::Kind::Output: ae_rec(act.rhs, out); break;
    case Action::Kind::Test: ae_rec(act.cond, out); break;
    case Action::Kind::Skip: break;
  }
  return out;
}

NameSet action_defs(const Action& act) {
  switch (act.kind) {
    case Action::Kind::Assign:
    case Action::Kind::Input:
      return {act.var};
    case Action::Kind::ArrAssign:
    case Action::Kind::InputArr:
      return {act.arr};
    default:
      return {};
  }
}

NameSet action_uses(const Action& act) {
  switch (act.kind) {
    case Action::Kind::Assign: return free_vars(*act.rhs);
    case Action::Kind::ArrAssign:
      return set_union(free_vars(*act.idx), free_vars(*act.rhs));
    case Action::Kind::Input: return {};
    case Action::Kind::InputArr: return free_vars(*act.idx);
    case Action::Kind::Output: return free_vars(*act.rhs);
    case Action::Kind::Test: return free_vars(*act.cond);
    case Action::Kind::Skip: return {};
  }
  return {};
}

BitvectorContext BitvectorContext::from(const ProgramGraph& pg) {
  BitvectorContext ctx;
  ctx.nodes = pg.nodes();
  ctx.vars = pg.vars();
  ctx.arrays = pg.arrays();
  for (const Edge& e : pg.edges()) {
    AexpSet s = action_exprs(e.action);
    ctx.universe.insert(s.begin(), s.end());
  }
  return ctx;
}

std::pair<RdSet, RdSet> rd_kill_gen(const Edge& e, const BitvectorContext& ctx) {
  RdSet kill, gen;
  auto kill_all = [&](const std::string& name) {
    // {name} x Q? x Q
    for (NodeId t : ctx.nodes) {
      kill.insert(RdFact{name, std::nullopt, t});
      for (NodeId s : ctx.nodes) kill.insert(RdFact{name, s, t});
    }
  };
  switch (e.action.kind) {
    case Action::Kind::Assign:
    case Action::Kind::Input:
      kill_all(e.action.var);
      gen.insert(RdFact{e.action.var, e.source, e.target});
      break;
    case Action::Kind::ArrAssign:
    case Action::Kind::InputArr:
      gen.insert(RdFact{e.action.arr, e.source, e.target});
      break;
    default:
      break;
  }
  return {std::move(kill), std::move(gen)};
}

std::pair<NameSet, NameSet> lv_kill_gen(const Edge& e) {
  NameSet kill, gen;
  const Action& a = e.action;
  switch (a.kind) {
    case Action::Kind::Assign:
      kill = {a.var};
      gen = free_vars(*a.rhs);
      break;
    case Action::Kind::ArrAssign:
      gen = set_union(free_vars(*a.idx), free_vars(*a.rhs));
      break;
    case Action::Kind::Input:
      kill = {a.var};
      break;
    case Action::Kind::InputArr:
      gen = free_vars(*a.idx);
      break;
    case Action::Kind::Output:
      gen = free_vars(*a.rhs);
      break;
    case Action::Kind::Test:
      gen = free_vars(*a.cond);
      break;
    case Action::Kind::Skip:
      break;
  }
  return {std::move(kill), std::move(gen)};
}

std::pair<AexpSet, AexpSet> ae_kill_gen(const Edge& e, const BitvectorContext& ctx) {
  AexpSet kill, gen;
  const Action& a = e.action;
  switch (a.kind) {
    case Action::Kind::Assign:
      kill = exprs_mentioning(ctx.universe, a.var);
      gen = exprs_not_mentioning(nontrivial_subexpressions(*a.rhs), a.var);
      break;
    case Action::Kind::ArrAssign: {
      kill = exprs_mentioning(ctx.universe, a.arr);
      AexpSet computed = nontrivial_subexpressions(*a.idx);
      AexpSet rhs = nontrivial_subexpressions(*a.rhs);
      computed.insert(rhs.begin(), rhs.end());
      gen = exprs_not_mentioning(computed, a.arr);
      break;
    }
    case Action::Kind::Input:
      kill = exprs_mentioning(ctx.universe, a.var);
      break;
    case Action::Kind::InputArr:
      kill = exprs_mentioning(ctx.universe, a.arr);
      gen = exprs_not_mentioning(nontrivial_subexpressions(*a.idx), a.arr);
      break;
    case Action::Kind::Output:
      gen = nontrivial_subexpressions(*a.rhs);
      break;
    case Action::Kind::Test:
      gen = nontrivial_subexpressions(*a.cond);
      break;
    case Action::Kind::Skip:
      break;
  }
  return {std::move(kill), std::move(gen)};
}

std::pair<AexpSet, AexpSet> vb_kill_gen(const Edge& e, const BitvectorContext& ctx) {
  // kill_VB coincides with kill_AE; gen_VB is every expression computed.
  AexpSet kill = ae_kill_gen(e, ctx).first;
  AexpSet gen = action_exprs(e.action);
  return {std::move(kill), std::move(gen)};
}

namespace {

template <typename S>
S apply_kill_gen(const S& in, const S& kill, const S& gen) {
  S out;
  for (const auto& x : in)
    if (!kill.count(x)) out.insert(x);
  out.insert(gen.begin(), gen.end());
  return out;
}

}  // namespace

AnalysisSpec<RdSet> rd_spec(const ProgramGraph& pg) {
  auto ctx = std::make_shared<BitvectorContext>(BitvectorContext::from(pg));
  AnalysisSpec<RdSet> spec;
  RdSet universe;
  for (const std::string& n : ctx->vars)
    for (NodeId t : ctx->nodes) {
      universe.insert(RdFact{n, std::nullopt, t});
      for (NodeId s : ctx->nodes) universe.insert(RdFact{n, s, t});
    }
  for (const std::string& n : ctx->arrays)
    for (NodeId t : ctx->nodes) {
      universe.insert(RdFact{n, std::nullopt, t});
      for (NodeId s : ctx->nodes) universe.insert(RdFact{n, s, t});
    }
  spec.domain = make_subset_powerset(std::move(universe));
  spec.transfer = [ctx](const Edge& e, const RdSet& in) {
    auto [kill, gen] = rd_kill_gen(e, *ctx);
    return apply_kill_gen(in, kill, gen);
  };
  for (const std::string& n : ctx->vars) spec.initial.insert(RdFact{n, std::nullopt, pg.initial()});
  for (const std::string& n : ctx->arrays)
    spec.initial.insert(RdFact{n, std::nullopt, pg.initial()});
  spec.direction = Direction::Forward;
  spec.extremal = Extremal::AtInitial;
  return spec;
}

AnalysisSpec<NameSet> lv_spec(const ProgramGraph& pg, NameSet live_at_final) {
  NameSet universe;
  universe.insert(pg.vars().begin(), pg.vars().end());
  universe.insert(pg.arrays().begin(), pg.arrays().end());
  AnalysisSpec<NameSet> spec;
  spec.domain = make_subset_powerset(std::move(universe));
  spec.transfer = [](const Edge& e, const NameSet& in) {
    auto [kill, gen] = lv_kill_gen(e);
    return apply_kill_gen(in, kill, gen);
  };
  spec.initial = std::move(live_at_final);
  spec.direction = Direction::Backward;
  spec.extremal = Extremal::AtFinal;
  return spec;
}

AnalysisSpec<AexpSet> ae_spec(const ProgramGraph& pg) {
  auto ctx = std::make_shared<BitvectorContext>(BitvectorContext::from(pg));
  AnalysisSpec<AexpSet> spec;
  spec.domain = make_superset_powerset(ctx->universe);
  spec.transfer = [ctx](const Edge& e, const AexpSet& in) {
    auto [kill, gen] = ae_kill_gen(e, *ctx);
    return apply_kill_gen(in, kill, gen);
  };
  spec.initial = {};
  spec.direction = Direction::Forward;
  spec.extremal = Extremal::AtInitial;
  return spec;
}

AnalysisSpec<AexpSet> vb_spec(const ProgramGraph& pg) {
  auto ctx = std::make_shared<BitvectorContext>(BitvectorContext::from(pg));
  AnalysisSpec<AexpSet> spec;
  spec.domain = make_superset_powerset(ctx->universe);
  spec.transfer = [ctx](const Edge& e, const AexpSet& in) {
    auto [kill, gen] = vb_kill_gen(e, *ctx);
    return apply_kill_gen(in, kill, gen);
  };
  spec.initial = {};
  spec.direction = Direction::Backward;
  spec.extremal = Extremal::AtFinal;
  return spec;
}

NameSet dv_transfer(const Action& act, const NameSet& s) {
  auto overlaps = [&](const NameSet& fv) {
    for (const std::string& n : fv)
      if (s.count(n)) return true;
    return false;
  };
  NameSet out = s;
  switch (act.kind) {
    case Action::Kind::Assign:
      if (overlaps(free_vars(*act.rhs)))
        out.insert(act.var);
      else
        out.erase(act.var);
      return out;
    case Action::Kind::ArrAssign:
      if (overlaps(set_union(free_vars(*act.idx), free_vars(*act.rhs)))) out.insert(act.arr);
      return out;
    case Action::Kind::Input:
      out.erase(act.var);
      return out;
    case Action::Kind::InputArr:
      if (overlaps(free_vars(*act.idx))) out.insert(act.arr);
      return out;
    default:
      return out;
  }
}

NameSet fv_transfer(const Action& act, const NameSet& s) {
  NameSet out = s;
  switch (act.kind) {
    case Action::Kind::Assign:
      if (s.count(act.var)) {
        out.erase(act.var);
        NameSet fv = free_vars(*act.rhs);
        out.insert(fv.begin(), fv.end());
      }
      return out;
    case Action::Kind::ArrAssign:
      if (s.count(act.arr)) {
        NameSet fv = set_union(free_vars(*act.idx), free_vars(*act.rhs));
        out.insert(fv.begin(), fv.end());
      }
      return out;
    case Action::Kind::Input:
      out.erase(act.var);
      return out;
    case Action::Kind::InputArr:
      if (s.count(act.arr)) {
        NameSet fv = free_vars(*act.idx);
        out.insert(fv.begin(), fv.end());
      }
      return out;
    case Action::Kind::Output: {
      NameSet fv = free_vars(*act.rhs);
      out.insert(fv.begin(), fv.end());
      return out;
    }
    case Action::Kind::Test: {
      NameSet fv = free_vars(*act.cond);
      out.insert(fv.begin(), fv.end());
      return out;
    }
    case Action::Kind::Skip:
      return out;
  }
  return out;
}

AnalysisSpec<NameSet> dv_spec(const ProgramGraph& pg) {
  NameSet universe;
  universe.insert(pg.vars().begin(), pg.vars().end());
  universe.insert(pg.arrays().begin(), pg.arrays().end());
  AnalysisSpec<NameSet> spec;
  spec.domain = make_subset_powerset(universe);
  spec.transfer = [](const Edge& e, const NameSet& in) { return dv_transfer(e.action, in); };
  spec.initial = universe;
  spec.direction = Direction::Forward;
  spec.extremal = Extremal::AtInitial;
  return spec;
}

AnalysisSpec<NameSet> fv_spec(const ProgramGraph& pg) {
  NameSet universe;
  universe.insert(pg.vars().begin(), pg.vars().end());
  universe.insert(pg.arrays().begin(), pg.arrays().end());
  AnalysisSpec<NameSet> spec;
  spec.domain = make_subset_powerset(std::move(universe));
  spec.transfer = [](const Edge& e, const NameSet& in) { return fv_transfer(e.action, in); };
  spec.initial = {};
  spec.direction = Direction::Backward;
  spec.extremal = Extremal::AtFinal;
  return spec;
}

std::string render(const AexpSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const AexpPtr& a : s) {
    if (!first) os << ", ";
    first = false;
    os << to_string(*a);
  }
  os << "}";
  return os.str();
}

std::string render(const NameSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const std::string& n : s) {
    if (!first) os << ", ";
    first = false;
    os << n;
  }
  os << "}";
  return os.str();
}

std::string render(const RdSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const RdFact& f : s) {
    if (!first) os << ", ";
    first = false;
    os << to_string(f);
  }
  os << "}";
  return os.str();
}

}  // namespace gcw
