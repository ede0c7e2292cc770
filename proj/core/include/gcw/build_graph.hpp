#pragma once

// Compilation of commands to program graphs: the done/edges construction.

#include <vector>

#include "gcw/ast.hpp"
#include "gcw/graph.hpp"

namespace gcw {

// Fresh nodes are integers from a monotone counter seeded at 1, so the
// numbering of a left-to-right traversal reproduces q1, q2, ...
class NodeAllocator {
 public:
  NodeId fresh() { return NodeId::plain(next_++); }

 private:
  int32_t next_ = 1;
};

// done[[b -> C]] = !b ; done[[GC1 [] GC2]] = done[[GC1]] & done[[GC2]].
BexpPtr done(const GuardedCommand& gc);

// Edge set of a graph fragment with the given entry and exit nodes. Fresh
// nodes are taken from the allocator in traversal order.
std::vector<Edge> edges(NodeId q_src, NodeId q_tgt, const Command& c, NodeAllocator& alloc);
std::vector<Edge> edges(NodeId q_src, NodeId q_tgt, const GuardedCommand& gc, NodeAllocator& alloc);

// Wraps edges(q> ~> q<)[[c]] and validates the result.
ProgramGraph build_program_graph(const Command& c);

}  // namespace gcw
