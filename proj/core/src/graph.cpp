#include "gcw/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gcw/errors.hpp"

namespace gcw {

std::string to_string(NodeId q) {
  if (q.is_initial()) return "q▷";
  if (q.is_final()) return "q◀";
  return "q" + std::to_string(q.v);
}

NodeId node_from_string(const std::string& s) {
  if (s == "q▷" || s == "qS") return NodeId::initial();
  if (s == "q◀" || s == "qE") return NodeId::final_();
  if (s.size() > 1 && s[0] == 'q') {
    try {
      return NodeId::plain(static_cast<int32_t>(std::stol(s.substr(1))));
    } catch (const std::exception&) {
    }
  }
  throw InputError("not a node name: " + s);
}

std::string to_string(const Edge& e) {
  return "(" + to_string(e.source) + ", " + e.action.label() + ", " + to_string(e.target) + ")";
}

ProgramGraph ProgramGraph::make(NodeId initial, NodeId final, std::vector<Edge> edges) {
  if (initial == final)
    throw ReachabilityViolation(to_string(initial), "initial and final node coincide");
  ProgramGraph pg;
  pg.initial_ = initial;
  pg.final_ = final;
  pg.edges_ = std::move(edges);
  pg.nodes_.insert(initial);
  pg.nodes_.insert(final);
  for (const Edge& e : pg.edges_) {
    pg.nodes_.insert(e.source);
    pg.nodes_.insert(e.target);
    pg.actions_.insert(e.action);
  }
  pg.index();

  // All nodes reachable from the initial node.
  std::set<NodeId> seen{initial};
  std::vector<NodeId> stack{initial};
  while (!stack.empty()) {
    NodeId q = stack.back();
    stack.pop_back();
    for (size_t i : pg.out_edges(q)) {
      NodeId t = pg.edges_[i].target;
      if (seen.insert(t).second) stack.push_back(t);
    }
  }
  for (NodeId q : pg.nodes_)
    if (!seen.count(q))
      throw ReachabilityViolation(to_string(q),
                                  "node " + to_string(q) + " unreachable from " + to_string(initial));

  // The final node reachable from all nodes (backward search from final).
  std::map<NodeId, std::vector<NodeId>> preds;
  for (const Edge& e : pg.edges_) preds[e.target].push_back(e.source);
  std::set<NodeId> coseen{final};
  stack.assign(1, final);
  while (!stack.empty()) {
    NodeId q = stack.back();
    stack.pop_back();
    for (NodeId p : preds[q])
      if (coseen.insert(p).second) stack.push_back(p);
  }
  for (NodeId q : pg.nodes_)
    if (!coseen.count(q))
      throw ReachabilityViolation(to_string(q),
                                  to_string(final) + " not reachable from node " + to_string(q));

  // Identifier inventory.
  for (const Edge& e : pg.edges_) {
    const Action& a = e.action;
    switch (a.kind) {
      case Action::Kind::Assign:
        pg.vars_.insert(a.var);
        collect_idents(*a.rhs, pg.vars_, pg.arrays_);
        break;
      case Action::Kind::ArrAssign:
        pg.arrays_.insert(a.arr);
        collect_idents(*a.idx, pg.vars_, pg.arrays_);
        collect_idents(*a.rhs, pg.vars_, pg.arrays_);
        break;
      case Action::Kind::Input:
        pg.vars_.insert(a.var);
        pg.chans_.insert(a.chan);
        break;
      case Action::Kind::InputArr:
        pg.arrays_.insert(a.arr);
        pg.chans_.insert(a.chan);
        collect_idents(*a.idx, pg.vars_, pg.arrays_);
        break;
      case Action::Kind::Output:
        pg.chans_.insert(a.chan);
        collect_idents(*a.rhs, pg.vars_, pg.arrays_);
        break;
      case Action::Kind::Test:
        collect_idents(*a.cond, pg.vars_, pg.arrays_);
        break;
      case Action::Kind::Skip:
        break;
    }
  }
  return pg;
}

void ProgramGraph::index() {
  node_list_.assign(nodes_.begin(), nodes_.end());
  out_.assign(node_list_.size(), {});
  for (size_t i = 0; i < edges_.size(); ++i) {
    auto it = std::lower_bound(node_list_.begin(), node_list_.end(), edges_[i].source);
    out_[static_cast<size_t>(it - node_list_.begin())].push_back(i);
  }
}

const std::vector<size_t>& ProgramGraph::out_edges(NodeId q) const {
  auto it = std::lower_bound(node_list_.begin(), node_list_.end(), q);
  static const std::vector<size_t> kEmpty;
  if (it == node_list_.end() || *it != q) return kEmpty;
  return out_[static_cast<size_t>(it - node_list_.begin())];
}

ProgramGraph ProgramGraph::reversed() const {
  std::vector<Edge> rev;
  rev.reserve(edges_.size());
  for (const Edge& e : edges_) rev.push_back(Edge{e.target, e.action, e.source});
  return make(final_, initial_, std::move(rev));
}

void collect_idents(const Aexp& a, std::set<std::string>& vars, std::set<std::string>& arrs) {
  switch (a.kind) {
    case Aexp::Kind::Num:
    case Aexp::Kind::Str:
      break;
    case Aexp::Kind::Var:
      vars.insert(a.text);
      break;
    case Aexp::Kind::Index:
      arrs.insert(a.text);
      collect_idents(*a.a1, vars, arrs);
      break;
    case Aexp::Kind::Len:
      arrs.insert(a.text);
      break;
    case Aexp::Kind::Bin:
      collect_idents(*a.a1, vars, arrs);
      collect_idents(*a.a2, vars, arrs);
      break;
    case Aexp::Kind::Neg:
    case Aexp::Kind::San:
      collect_idents(*a.a1, vars, arrs);
      break;
  }
}

void collect_idents(const Bexp& b, std::set<std::string>& vars, std::set<std::string>& arrs) {
  switch (b.kind) {
    case Bexp::Kind::True:
    case Bexp::Kind::False:
      break;
    case Bexp::Kind::Rel:
      collect_idents(*b.a1, vars, arrs);
      collect_idents(*b.a2, vars, arrs);
      break;
    case Bexp::Kind::Bool:
      collect_idents(*b.b1, vars, arrs);
      collect_idents(*b.b2, vars, arrs);
      break;
    case Bexp::Kind::Not:
      collect_idents(*b.b1, vars, arrs);
      break;
  }
}

namespace {

std::string dot_id(NodeId q) {
  if (q.is_initial()) return "qS";
  if (q.is_final()) return "qE";
  return "q" + std::to_string(q.v);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string emit_dot(const ProgramGraph& pg) {
  std::ostringstream os;
  os << "digraph program_graph {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=circle, fontname=\"monospace\"];\n";
  for (NodeId q : pg.nodes()) {
    os << "  " << dot_id(q) << " [label=\"" << to_string(q) << "\"";
    if (q == pg.initial()) os << ", shape=doublecircle";
    if (q == pg.final_node()) os << ", shape=box";
    os << "];\n";
  }
  for (const Edge& e : pg.edges()) {
    os << "  " << dot_id(e.source) << " -> " << dot_id(e.target) << " [label=\""
       << dot_escape(e.action.label()) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gcw
