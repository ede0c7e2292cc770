#include "gcw/graph_algos.hpp"

#include <algorithm>
#include <functional>

#include "gcw/errors.hpp"

namespace gcw {

std::vector<NodeId> RPNumbering::order() const {
  std::vector<NodeId> out(rp.size());
  for (const auto& [q, i] : rp) out[static_cast<size_t>(i - 1)] = q;
  return out;
}

RPNumbering dfs_spanning_tree(const ProgramGraph& pg) {
  RPNumbering res;
  std::set<NodeId> visited;
  int k = static_cast<int>(pg.nodes().size());
  std::function<void(NodeId)> dfs = [&](NodeId q) {
    visited.insert(q);
    for (size_t i : pg.out_edges(q)) {
      NodeId t = pg.edges()[i].target;
      if (!visited.count(t)) {
        res.tree.insert({q, t});
        dfs(t);
      }
    }
    res.rp[q] = k--;
  };
  dfs(pg.initial());
  return res;
}

std::vector<EdgeClass> classify_edges(const ProgramGraph& pg, const RPNumbering& rp) {
  // Reachability within the tree (T* / T++) via ancestor relations.
  std::map<NodeId, NodeId> parent;
  for (const auto& [s, t] : rp.tree) parent[t] = s;
  auto ancestor = [&](NodeId up, NodeId down) {  // up in T* down
    NodeId q = down;
    for (;;) {
      if (q == up) return true;
      auto it = parent.find(q);
      if (it == parent.end()) return false;
      q = it->second;
    }
  };
  std::vector<EdgeClass> out;
  out.reserve(pg.edges().size());
  for (const Edge& e : pg.edges()) {
    if (rp.tree.count({e.source, e.target})) {
      out.push_back(EdgeClass::Tree);
    } else if (ancestor(e.target, e.source)) {  // includes self loops
      out.push_back(EdgeClass::Back);
    } else if (ancestor(e.source, e.target)) {
      out.push_back(EdgeClass::Forward);
    } else {
      out.push_back(EdgeClass::Cross);
    }
  }
  return out;
}

std::string to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Tree: return "tree";
    case EdgeClass::Forward: return "forward";
    case EdgeClass::Back: return "back";
    case EdgeClass::Cross: return "cross";
  }
  return "?";
}

size_t SccResult::component_of(NodeId q) const {
  for (size_t i = 0; i < components.size(); ++i)
    if (components[i].count(q)) return i;
  return components.size();
}

SccResult strong_components(const ProgramGraph& pg, const RPNumbering& rp) {
  // Kosaraju: visit nodes in ascending reverse postorder, assign each
  // unvisited node's backward-reachable region to a fresh component.
  std::map<NodeId, std::vector<NodeId>> preds;
  for (const Edge& e : pg.edges()) preds[e.target].push_back(e.source);

  SccResult res;
  std::set<NodeId> visited;
  std::function<void(NodeId, std::set<NodeId>&)> assign = [&](NodeId q, std::set<NodeId>& sc) {
    sc.insert(q);
    visited.insert(q);
    for (NodeId p : preds[q])
      if (!visited.count(p)) assign(p, sc);
  };
  for (NodeId q : rp.order()) {
    if (visited.count(q)) continue;
    std::set<NodeId> sc;
    assign(q, sc);
    res.components.push_back(std::move(sc));
  }
  for (const Edge& e : pg.edges()) {
    size_t a = res.component_of(e.source);
    size_t b = res.component_of(e.target);
    if (a != b) res.reduced_edges.insert({a, b});
  }
  return res;
}

std::map<NodeId, std::set<NodeId>> natural_loops(const ProgramGraph& pg, const RPNumbering& rp) {
  std::map<NodeId, std::set<NodeId>> L;
  std::map<NodeId, std::vector<NodeId>> preds;
  for (const Edge& e : pg.edges()) preds[e.target].push_back(e.source);

  std::function<void(NodeId, NodeId)> build = [&](NodeId q_src, NodeId head) {
    if (rp[head] <= rp[q_src]) {
      if (L[head].count(q_src)) return;
      L[head].insert(q_src);
      for (NodeId p : preds[q_src]) build(p, head);
    } else {
      throw NonReducible("back edge into " + to_string(head) +
                         " is not a dominator edge; graph is non-reducible");
    }
  };
  for (const Edge& e : pg.edges()) {
    if (rp[e.target] <= rp[e.source]) {  // a back edge
      L[e.target].insert(e.target);
      build(e.source, e.target);
    }
  }
  // Drop empty entries so the mapping only names actual loop headers.
  for (auto it = L.begin(); it != L.end();)
    it = it->second.empty() ? L.erase(it) : std::next(it);
  return L;
}

GraphOfLoops graph_of_loops(const ProgramGraph& pg,
                            const std::map<NodeId, std::set<NodeId>>& loops) {
  GraphOfLoops g;
  std::set<NodeId> covered;
  for (const auto& [head, loop] : loops) {
    g.components.push_back(loop);
    covered.insert(loop.begin(), loop.end());
  }
  for (NodeId q : pg.nodes())
    if (!covered.count(q)) g.components.push_back({q});

  auto contains = [](const std::set<NodeId>& a, const std::set<NodeId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (size_t i = 0; i < g.components.size(); ++i) {
    for (size_t j = 0; j < g.components.size(); ++j) {
      if (i == j) continue;
      const auto& a = g.components[i];
      const auto& b = g.components[j];
      if (contains(a, b) && a != b) {
        g.edges.insert({i, j});  // inner loop to enclosing loop
        continue;
      }
      bool disjoint = std::none_of(a.begin(), a.end(), [&](NodeId q) { return b.count(q); });
      if (disjoint) {
        for (const Edge& e : pg.edges())
          if (a.count(e.source) && b.count(e.target)) {
            g.edges.insert({i, j});
            break;
          }
      }
    }
  }
  return g;
}

bool dominates(const ProgramGraph& pg, NodeId q_dom, NodeId q) {
  if (q_dom == q) return true;
  if (q == pg.initial()) return false;
  // Search from the initial node avoiding q_dom; q is dominated iff unreachable.
  std::set<NodeId> seen{pg.initial()};
  std::vector<NodeId> stack{pg.initial()};
  while (!stack.empty()) {
    NodeId at = stack.back();
    stack.pop_back();
    if (at == q_dom) continue;
    for (size_t i : pg.out_edges(at)) {
      NodeId t = pg.edges()[i].target;
      if (t == q) return false;
      if (!seen.count(t) && t != q_dom) {
        seen.insert(t);
        stack.push_back(t);
      }
    }
  }
  return true;
}

}  // namespace gcw
