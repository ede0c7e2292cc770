#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gcw/build_graph.hpp"
#include "gcw/errors.hpp"
#include "gcw/graph.hpp"
#include "gcw/parser.hpp"

using namespace gcw;

namespace {

const char* kFactorial = "y:=1; do x>0 -> y:=x*y; x:=x-1 od";

std::string edge_list(const ProgramGraph& pg) {
  std::string out;
  for (const Edge& e : pg.edges()) out += to_string(e) + "\n";
  return out;
}

}  // namespace

TEST_CASE("factorial parses to the expected command tree") {
  CommandPtr c = parse_program(kFactorial);
  REQUIRE(c->kind == Command::Kind::Seq);
  CHECK(c->c1->kind == Command::Kind::Assign);
  CHECK(c->c1->name == "y");
  REQUIRE(c->c2->kind == Command::Kind::Do);
  const GuardedCommand& gc = *c->c2->gc;
  REQUIRE(gc.kind == GuardedCommand::Kind::Guard);
  CHECK(to_string(*gc.guard) == "x > 0");
  CHECK(to_string(*gc.body) == "y := x*y; x := x-1");
}

TEST_CASE("skip parses to the atomic command") {
  CommandPtr c = parse_program("skip");
  CHECK(c->kind == Command::Kind::Skip);
}

TEST_CASE("security dialect accepts san, plain dialect rejects it") {
  CommandPtr c = parse_program("x := y + san(y+z)", Dialect::Security);
  REQUIRE(c->kind == Command::Kind::Assign);
  REQUIRE(c->rhs->kind == Aexp::Kind::Bin);
  CHECK(c->rhs->a2->kind == Aexp::Kind::San);
  CHECK_THROWS_AS(parse_program("x := y + san(y+z)", Dialect::Plain), ParseError);
  CHECK_THROWS_AS(parse_program("c?x", Dialect::Security), ParseError);
  CHECK_THROWS_AS(parse_program("x := \"s\"", Dialect::Plain), ParseError);
}

TEST_CASE("operator precedence: x*y+z parses as (x*y)+z") {
  AexpPtr a = parse_aexp("x*y+z");
  REQUIRE(a->kind == Aexp::Kind::Bin);
  CHECK(a->op == AOp::Add);
  CHECK(a->a1->op == AOp::Mul);
  // and short-circuit operators are distinct nodes from the strict ones
  BexpPtr strict = parse_bexp("x > 0 & y > 0");
  BexpPtr circuit = parse_bexp("x > 0 && y > 0");
  CHECK(strict->bop == BOp::And);
  CHECK(circuit->bop == BOp::AndAnd);
  CHECK_FALSE(equal(strict, circuit));
}

TEST_CASE("done of a single guard is the negated guard") {
  CommandPtr c = parse_program("do x>0 -> skip od");
  BexpPtr d = done(*c->gc);
  CHECK(to_string(*d) == "!(x > 0)");
}

TEST_CASE("done of a choice is the conjunction of the components") {
  CommandPtr c = parse_program("do x>0 -> skip [] y>0 -> skip od");
  BexpPtr d = done(*c->gc);
  CHECK(to_string(*d) == "!(x > 0) & !(y > 0)");
  CommandPtr t = parse_program("do true -> skip od");
  CHECK(to_string(*done(*t->gc)) == "!true");
}

TEST_CASE("edges for the factorial command build the five-edge loop graph") {
  CommandPtr c = parse_program(kFactorial);
  NodeAllocator alloc;
  std::vector<Edge> e = edges(NodeId::initial(), NodeId::final_(), *c, alloc);
  REQUIRE(e.size() == 5);
  CHECK(to_string(e[0]) == "(q▷, y := 1, q1)");
  CHECK(to_string(e[1]) == "(q1, x > 0, q2)");
  CHECK(to_string(e[2]) == "(q2, y := x*y, q3)");
  CHECK(to_string(e[3]) == "(q3, x := x-1, q1)");
  CHECK(to_string(e[4]) == "(q1, !(x > 0), q◀)");
}

TEST_CASE("edges for skip is the single edge") {
  CommandPtr c = parse_program("skip");
  NodeAllocator alloc;
  std::vector<Edge> e = edges(NodeId::initial(), NodeId::final_(), *c, alloc);
  REQUIRE(e.size() == 1);
  CHECK(e[0].source == NodeId::initial());
  CHECK(e[0].target == NodeId::final_());
}

TEST_CASE("a two-guard conditional fans out from the source node") {
  CommandPtr c = parse_program("if x>0 -> y:=1 [] x<=0 -> y:=2 fi");
  ProgramGraph pg = build_program_graph(*c);
  REQUIRE(pg.edges().size() == 4);
  CHECK(pg.edges()[0].source == pg.initial());
  CHECK(pg.edges()[2].source == pg.initial());
  CHECK(pg.edges()[1].target == pg.final_node());
  CHECK(pg.edges()[3].target == pg.final_node());
}

TEST_CASE("build_program_graph: factorial has Q = {q>,q1,q2,q3,q<}") {
  ProgramGraph pg = build_program_graph(*parse_program(kFactorial));
  CHECK(pg.nodes().size() == 5);
  CHECK(pg.nodes().count(NodeId::initial()) == 1);
  CHECK(pg.nodes().count(NodeId::plain(1)) == 1);
  CHECK(pg.nodes().count(NodeId::plain(3)) == 1);
  CHECK(pg.nodes().count(NodeId::final_()) == 1);
  CHECK(pg.vars() == std::set<std::string>{"x", "y"});
}

TEST_CASE("reachability validation catches disconnected hand-built graphs") {
  // The edges construction always emits the done edge, so even
  // do true -> skip od yields a graph where q< is reachable.
  CHECK_NOTHROW(build_program_graph(*parse_program("do true -> skip od")));
  // A hand-built edge set with a node that cannot reach the final node.
  std::vector<Edge> bad{
      Edge{NodeId::initial(), Action::skip(), NodeId::final_()},
      Edge{NodeId::initial(), Action::skip(), NodeId::plain(1)},
      Edge{NodeId::plain(1), Action::skip(), NodeId::plain(1)},
  };
  CHECK_THROWS_AS(ProgramGraph::make(NodeId::initial(), NodeId::final_(), bad),
                  ReachabilityViolation);
  // And one with a node unreachable from the initial node.
  std::vector<Edge> bad2{
      Edge{NodeId::initial(), Action::skip(), NodeId::final_()},
      Edge{NodeId::plain(1), Action::skip(), NodeId::final_()},
  };
  CHECK_THROWS_AS(ProgramGraph::make(NodeId::initial(), NodeId::final_(), bad2),
                  ReachabilityViolation);
  CHECK_THROWS_AS(ProgramGraph::make(NodeId::initial(), NodeId::initial(), {}),
                  ReachabilityViolation);
}

TEST_CASE("node allocation is deterministic across runs") {
  CommandPtr c = parse_program(kFactorial);
  NodeAllocator a1, a2;
  auto e1 = edges(NodeId::initial(), NodeId::final_(), *c, a1);
  auto e2 = edges(NodeId::initial(), NodeId::final_(), *c, a2);
  REQUIRE(e1.size() == e2.size());
  for (size_t i = 0; i < e1.size(); ++i) CHECK(e1[i] == e2[i]);
}

namespace {

// Random command generator for the round-trip property.
struct Gen {
  std::mt19937 rng;
  explicit Gen(uint32_t seed) : rng(seed) {}
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }
  std::string var() { return pick(2) ? "x" : "y"; }

  AexpPtr aexp(int depth) {
    if (depth == 0) {
      switch (pick(3)) {
        case 0: return Aexp::mk_num(pick(10));
        case 1: return Aexp::mk_var(var());
        default: return Aexp::mk_len("A");
      }
    }
    switch (pick(4)) {
      case 0:
        return Aexp::mk_bin(static_cast<AOp>(pick(5)), aexp(depth - 1), aexp(depth - 1));
      case 1: return Aexp::mk_neg(aexp(depth - 1));
      case 2: return Aexp::mk_index("A", aexp(depth - 1));
      default: return aexp(0);
    }
  }

  BexpPtr bexp(int depth) {
    if (depth == 0) {
      switch (pick(3)) {
        case 0: return Bexp::mk_true();
        case 1: return Bexp::mk_false();
        default: return Bexp::mk_rel(static_cast<ROp>(pick(6)), aexp(1), aexp(1));
      }
    }
    switch (pick(3)) {
      case 0: return Bexp::mk_bool(static_cast<BOp>(pick(4)), bexp(depth - 1), bexp(depth - 1));
      case 1: return Bexp::mk_not(bexp(depth - 1));
      default: return bexp(0);
    }
  }

  CommandPtr command(int depth) {
    if (depth == 0) {
      switch (pick(4)) {
        case 0: return Command::mk_assign(var(), aexp(1));
        case 1: return Command::mk_arr_assign("A", aexp(1), aexp(1));
        case 2: return Command::mk_output("out", aexp(1));
        default: return Command::mk_skip();
      }
    }
    switch (pick(4)) {
      case 0: return Command::mk_seq(command(depth - 1), command(depth - 1));
      case 1: return Command::mk_if(guarded(depth - 1));
      case 2: return Command::mk_do(guarded(depth - 1));
      default: return command(0);
    }
  }

  GuardedPtr guarded(int depth) {
    if (depth == 0 || pick(2) == 0)
      return GuardedCommand::mk_guard(bexp(1), command(depth));
    return GuardedCommand::mk_choice(guarded(0), guarded(depth - 1));
  }
};

}  // namespace

TEST_CASE("round trip: pretty-printing a parsed command and re-parsing is the identity") {
  for (uint32_t seed = 0; seed < 200; ++seed) {
    Gen g(seed);
    // Normalise through the parser first: the surface grammar associates
    // sequencing and choice to the right, so only parsed trees are in range.
    CommandPtr c = parse_program(to_string(*g.command(3)));
    std::string printed = to_string(*c);
    CAPTURE(printed);
    CommandPtr back = parse_program(printed);
    CHECK(equal(c, back));
  }
}

TEST_CASE("done over random choices is the conjunction of the parts") {
  for (uint32_t seed = 0; seed < 100; ++seed) {
    Gen g(seed + 1000);
    GuardedPtr g1 = g.guarded(1);
    GuardedPtr g2 = g.guarded(1);
    BexpPtr both = done(*GuardedCommand::mk_choice(g1, g2));
    REQUIRE(both->kind == Bexp::Kind::Bool);
    CHECK(both->bop == BOp::And);
    CHECK(equal(both->b1, done(*g1)));
    CHECK(equal(both->b2, done(*g2)));
  }
}

TEST_CASE("command-built graphs have exactly one node without out-edges") {
  for (uint32_t seed = 0; seed < 100; ++seed) {
    Gen g(seed + 7);
    CommandPtr c = g.command(2);
    ProgramGraph pg = [&] {
      try {
        return build_program_graph(*c);
      } catch (const ReachabilityViolation&) {
        return build_program_graph(*parse_program("skip"));
      }
    }();
    int sinks = 0;
    for (NodeId q : pg.nodes())
      if (pg.out_edges(q).empty()) {
        ++sinks;
        CHECK(q == pg.final_node());
      }
    CHECK(sinks == 1);
  }
}

TEST_CASE("reversal is an involution and flips endpoints") {
  ProgramGraph pg = build_program_graph(*parse_program(kFactorial));
  ProgramGraph rev = pg.reversed();
  CHECK(rev.initial() == pg.final_node());
  CHECK(rev.final_node() == pg.initial());
  ProgramGraph back = rev.reversed();
  CHECK(edge_list(back) == edge_list(pg));
  ProgramGraph single = build_program_graph(*parse_program("skip"));
  CHECK(single.reversed().edges().size() == 1);
}

TEST_CASE("DOT output is byte stable and well formed") {
  ProgramGraph pg = build_program_graph(*parse_program(kFactorial));
  std::string a = emit_dot(pg);
  std::string b = emit_dot(pg);
  CHECK(a == b);
  CHECK(a.find("doublecircle") != std::string::npos);
  CHECK(a.find("shape=box") != std::string::npos);
  // 5 node lines + 5 edge lines
  CHECK(std::count(a.begin(), a.end(), '\n') == 3 + 5 + 5 + 1);
}
