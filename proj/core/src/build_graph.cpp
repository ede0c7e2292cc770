#include "gcw/build_graph.hpp"

namespace gcw {

BexpPtr done(const GuardedCommand& gc) {
  if (gc.kind == GuardedCommand::Kind::Guard) return Bexp::mk_not(gc.guard);
  return Bexp::mk_bool(BOp::And, done(*gc.g1), done(*gc.g2));
}

std::vector<Edge> edges(NodeId q_src, NodeId q_tgt, const Command& c, NodeAllocator& alloc) {
  switch (c.kind) {
    case Command::Kind::Assign:
      return {Edge{q_src, Action::assign(c.name, c.rhs), q_tgt}};
    case Command::Kind::ArrAssign:
      return {Edge{q_src, Action::arr_assign(c.name, c.idx, c.rhs), q_tgt}};
    case Command::Kind::Input:
      return {Edge{q_src, Action::input(c.chan, c.name), q_tgt}};
    case Command::Kind::InputArr:
      return {Edge{q_src, Action::input_arr(c.chan, c.name, c.idx), q_tgt}};
    case Command::Kind::Output:
      return {Edge{q_src, Action::output(c.chan, c.rhs), q_tgt}};
    case Command::Kind::Skip:
      return {Edge{q_src, Action::skip(), q_tgt}};
    case Command::Kind::Seq: {
      NodeId q = alloc.fresh();
      std::vector<Edge> e1 = edges(q_src, q, *c.c1, alloc);
      std::vector<Edge> e2 = edges(q, q_tgt, *c.c2, alloc);
      e1.insert(e1.end(), e2.begin(), e2.end());
      return e1;
    }
    case Command::Kind::If:
      return edges(q_src, q_tgt, *c.gc, alloc);
    case Command::Kind::Do: {
      // The done edge is emitted first, matching the edge listing of the
      // factorial graph; depth-first search therefore reaches the loop exit
      // before the loop body, which fixes the reverse postorders reproduced
      // in the tests.
      BexpPtr b = done(*c.gc);
      std::vector<Edge> e{Edge{q_src, Action::test(std::move(b)), q_tgt}};
      std::vector<Edge> body = edges(q_src, q_src, *c.gc, alloc);
      e.insert(e.end(), body.begin(), body.end());
      return e;
    }
  }
  return {};
}

std::vector<Edge> edges(NodeId q_src, NodeId q_tgt, const GuardedCommand& gc,
                        NodeAllocator& alloc) {
  if (gc.kind == GuardedCommand::Kind::Guard) {
    NodeId q = alloc.fresh();
    std::vector<Edge> e{Edge{q_src, Action::test(gc.guard), q}};
    std::vector<Edge> body = edges(q, q_tgt, *gc.body, alloc);
    e.insert(e.end(), body.begin(), body.end());
    return e;
  }
  std::vector<Edge> e1 = edges(q_src, q_tgt, *gc.g1, alloc);
  std::vector<Edge> e2 = edges(q_src, q_tgt, *gc.g2, alloc);
  e1.insert(e1.end(), e2.begin(), e2.end());
  return e1;
}

ProgramGraph build_program_graph(const Command& c) {
  NodeAllocator alloc;
  std::vector<Edge> e = edges(NodeId::initial(), NodeId::final_(), c, alloc);
  return ProgramGraph::make(NodeId::initial(), NodeId::final_(), std::move(e));
}

}  // namespace gcw
