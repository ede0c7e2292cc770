#pragma once

// Program graphs: nodes, initial/final node, action-labelled edges.

#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "gcw/ast.hpp"

namespace gcw {

// Node identities. The initial node sorts first and the final node last so
// that ordinary integer order is also the display order q> , q1, ..., q<.
struct NodeId {
  int32_t v = 0;

  static constexpr int32_t kInitialV = 0;
  static constexpr int32_t kFinalV = std::numeric_limits<int32_t>::max();

  static constexpr NodeId initial() { return NodeId{kInitialV}; }
  static constexpr NodeId final_() { return NodeId{kFinalV}; }
  static constexpr NodeId plain(int32_t n) { return NodeId{n}; }

  bool is_initial() const { return v == kInitialV; }
  bool is_final() const { return v == kFinalV; }

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

// UTF-8 rendering matching the book: q▷, q1, ..., q◀.
std::string to_string(NodeId q);
// Parses the rendering above (also accepts the ASCII aliases qS and qE).
NodeId node_from_string(const std::string& s);

struct Edge {
  NodeId source;
  Action action;
  NodeId target;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.source == b.source && a.target == b.target && a.action == b.action;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.target != b.target) return a.target < b.target;
    return a.action < b.action;
  }
};

std::string to_string(const Edge& e);

// A validated program graph. Edges keep their construction order; that order
// resolves every tie-break in the solvers so runs are reproducible.
class ProgramGraph {
 public:
  // Validates the reachability requirements and throws ReachabilityViolation
  // if they fail.
  static ProgramGraph make(NodeId initial, NodeId final, std::vector<Edge> edges);

  NodeId initial() const { return initial_; }
  NodeId final_node() const { return final_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::set<NodeId>& nodes() const { return nodes_; }
  const std::set<Action>& actions() const { return actions_; }

  // Out-edge indices per node, in edge-sequence order.
  const std::vector<size_t>& out_edges(NodeId q) const;

  // Identifiers occurring in the actions.
  const std::set<std::string>& vars() const { return vars_; }
  const std::set<std::string>& arrays() const { return arrays_; }
  const std::set<std::string>& channels() const { return chans_; }

  // Swaps initial/final and reverses every edge (positionally).
  ProgramGraph reversed() const;

 private:
  ProgramGraph() = default;
  void index();

  NodeId initial_;
  NodeId final_;
  std::vector<Edge> edges_;
  std::set<NodeId> nodes_;
  std::set<Action> actions_;
  std::set<std::string> vars_, arrays_, chans_;
  std::vector<std::vector<size_t>> out_;  // parallel to sorted node list
  std::vector<NodeId> node_list_;
};

// A path: node sequence plus the indices of the traversed edges.
struct Path {
  std::vector<NodeId> nodes;  // n+1 entries
  std::vector<size_t> edges;  // n entries, indices into pg.edges()

  friend auto operator<=>(const Path&, const Path&) = default;
};

// Identifier collection over expressions: variables and arrays referenced.
void collect_idents(const Aexp& a, std::set<std::string>& vars, std::set<std::string>& arrs);
void collect_idents(const Bexp& b, std::set<std::string>& vars, std::set<std::string>& arrs);

// Deterministic DOT rendering (initial node doubly circled, final node boxed).
std::string emit_dot(const ProgramGraph& pg);

}  // namespace gcw
