#pragma once

// Graph preprocessing for the worklist solvers: depth-first spanning tree
// with reverse postorder, edge classification, Kosaraju strong components,
// natural loops and the graph of loops.

#include <map>
#include <set>
#include <vector>

#include "gcw/graph.hpp"

namespace gcw {

struct RPNumbering {
  std::set<std::pair<NodeId, NodeId>> tree;  // T, the spanning-tree edges
  std::map<NodeId, int> rp;                  // bijection onto 1..|Q|

  int operator[](NodeId q) const { return rp.at(q); }
  // Nodes sorted by ascending reverse postorder.
  std::vector<NodeId> order() const;
};

// DFS from the initial node; out-edges are explored in edge-sequence order,
// which resolves the algorithm's nondeterminism deterministically.
RPNumbering dfs_spanning_tree(const ProgramGraph& pg);

enum class EdgeClass { Tree, Forward, Back, Cross };
std::vector<EdgeClass> classify_edges(const ProgramGraph& pg, const RPNumbering& rp);
std::string to_string(EdgeClass c);

// Strong components in topological order of the reduced graph, plus the
// reduced graph's edges (indices into the component list).
struct SccResult {
  std::vector<std::set<NodeId>> components;
  std::set<std::pair<size_t, size_t>> reduced_edges;
  size_t component_of(NodeId q) const;
};
SccResult strong_components(const ProgramGraph& pg, const RPNumbering& rp);

// L[q] is the natural loop headed at q (absent keys mean none). Throws
// NonReducible when a back edge is not a dominator edge.
std::map<NodeId, std::set<NodeId>> natural_loops(const ProgramGraph& pg, const RPNumbering& rp);

// Natural components (natural loops plus singletons for uncovered nodes) and
// the acyclic graph over them: containment edges run from inner to outer
// loops, adjacency edges between disjoint components follow program edges.
struct GraphOfLoops {
  std::vector<std::set<NodeId>> components;
  std::set<std::pair<size_t, size_t>> edges;
};
GraphOfLoops graph_of_loops(const ProgramGraph& pg,
                            const std::map<NodeId, std::set<NodeId>>& loops);

// Brute-force dominator oracle: q_dom dominates q iff removing q_dom cuts
// every path from the initial node to q. Test oracle for Prop. 4.28.
bool dominates(const ProgramGraph& pg, NodeId q_dom, NodeId q);

}  // namespace gcw
