#include <doctest.h>

#include <random>

#include "gcw/build_graph.hpp"
#include "gcw/errors.hpp"
#include "gcw/memory.hpp"
#include "gcw/parser.hpp"
#include "gcw/semantics.hpp"

using namespace gcw;

namespace {

Memory fig18_memory() {
  // Four variables, two arrays of length 8, channels in/out.
  Memory m;
  m.vars = {{"x", 4}, {"y", 7}, {"i", 3}, {"n", 8}};
  m.arrays = {{"A", {1, 2, 4, 6, 7, 12, 4, 19}}, {"B", {7, 9, 13, 21, 0, 4, 3, 13}}};
  m.chans = {{"in", {4, 12, 19, 7, 0}}, {"out", {}}};
  return m;
}

long long eval_or_die(const char* text, const Memory& m) {
  auto r = eval_aexp(*parse_aexp(text), m);
  REQUIRE(is_def(r));
  return value_of(r);
}

}  // namespace

TEST_CASE("arithmetic evaluation matches the worked example x*3-5") {
  Memory m;
  m.vars = {{"x", 7}};
  CHECK(eval_or_die("x*3-5", m) == 16);
}

TEST_CASE("division truncates toward zero and modulo matches") {
  Memory m;
  CHECK(eval_or_die("5/(-3)", m) == -1);
  CHECK(eval_or_die("5%(-3)", m) == 2);
  CHECK(eval_or_die("(-5)/3", m) == -1);
  CHECK(eval_or_die("(-5)%3", m) == -2);
  // n = (n/d)*d + n%d over a sampled grid
  for (long long n = -9; n <= 9; ++n)
    for (long long d = -4; d <= 4; ++d) {
      if (d == 0) continue;
      Memory mm;
      mm.vars = {{"n", n}, {"d", d}};
      CHECK(eval_or_die("(n/d)*d + n%d", mm) == n);
    }
}

TEST_CASE("array lookups are bounds checked and lengths are read via #") {
  Memory m;
  m.vars = {{"x", 4}};
  m.arrays = {{"A", {7, 9, 13, 17}}};
  auto r = eval_aexp(*parse_aexp("A[x]"), m);
  CHECK_FALSE(is_def(r));
  CHECK(undef_reason(r).find("out of bounds") != std::string::npos);
  CHECK(eval_or_die("A#", m) == 4);
  auto unk = eval_aexp(*parse_aexp("B#"), m);
  CHECK_FALSE(is_def(unk));
  auto unkv = eval_aexp(*parse_aexp("z"), m);
  CHECK_FALSE(is_def(unkv));
}

TEST_CASE("strict conjunction vs short-circuit conjunction") {
  Memory ok;
  ok.vars = {{"x", 5}, {"y", 3}};
  auto t = eval_bexp(*parse_bexp("(y > 0) & (x/y > 0)"), ok);
  REQUIRE(is_def(t));
  CHECK(value_of(t));

  Memory zero;
  zero.vars = {{"x", 5}, {"y", 0}};
  auto strict = eval_bexp(*parse_bexp("(y > 0) & (x/y > 0)"), zero);
  CHECK_FALSE(is_def(strict));  // strict & requires both arguments defined
  auto circuit = eval_bexp(*parse_bexp("(y > 0) && (x/y > 0)"), zero);
  REQUIRE(is_def(circuit));
  CHECK_FALSE(value_of(circuit));  // first conjunct false, second never runs
  auto or_circuit = eval_bexp(*parse_bexp("(y = 0) || (x/y > 0)"), zero);
  REQUIRE(is_def(or_circuit));
  CHECK(value_of(or_circuit));
}

TEST_CASE("step_action: input pops the channel front, output appends") {
  Memory m = fig18_memory();
  auto in = step_action(Action::input("in", "x"), m);
  REQUIRE(std::holds_alternative<Memory>(in));
  const Memory& m1 = std::get<Memory>(in);
  CHECK(m1.vars.at("x") == 4);
  CHECK(m1.chans.at("in") == std::deque<long long>{12, 19, 7, 0});
  CHECK(m1.arrays == m.arrays);

  auto out = step_action(Action::output("out", Aexp::mk_var("y")), m);
  REQUIRE(std::holds_alternative<Memory>(out));
  CHECK(std::get<Memory>(out).chans.at("out") == std::deque<long long>{7});

  Memory empty_chan = m;
  empty_chan.chans["in"].clear();
  CHECK(std::holds_alternative<Stuck>(step_action(Action::input("in", "x"), empty_chan)));
}

TEST_CASE("step_action: failed tests are stuck, skip and tests keep memory") {
  Memory m;
  m.vars = {{"x", 3}};
  CHECK(std::holds_alternative<Stuck>(step_action(Action::test(parse_bexp("x <= 0")), m)));
  auto pass = step_action(Action::test(parse_bexp("x > 0")), m);
  REQUIRE(std::holds_alternative<Memory>(pass));
  CHECK(std::get<Memory>(pass) == m);
  auto sk = step_action(Action::skip(), m);
  CHECK(std::get<Memory>(sk) == m);
}

TEST_CASE("array assignment updates one slot and preserves lengths") {
  Memory m = fig18_memory();
  // B[i] := B[i] + B[i]/10 with i = 3: B[3] becomes 21 + 2 = 23
  auto r = step_action(
      Action::arr_assign("B", Aexp::mk_var("i"),
                         parse_aexp("B[i] + B[i]/10")),
      m);
  REQUIRE(std::holds_alternative<Memory>(r));
  const Memory& m2 = std::get<Memory>(r);
  CHECK(m2.arrays.at("B")[3] == 21 + 21 / 10);
  CHECK(m2.arrays.at("B").size() == m.arrays.at("B").size());
}

TEST_CASE("execute: factorial terminates with x=0, y=6 from x=3") {
  ProgramGraph pg = build_program_graph(*parse_program("y:=1; do x>0 -> y:=x*y; x:=x-1 od"));
  Memory m;
  m.vars = {{"x", 3}, {"y", 7}};
  Trace t = execute(pg, m, 100, 1);
  CHECK(t.status == RunStatus::Final);
  const Memory& last = t.configurations.back().memory;
  CHECK(last.vars.at("x") == 0);
  CHECK(last.vars.at("y") == 6);
  CHECK(t.configurations.back().node == pg.final_node());
}

TEST_CASE("execute: a single skip edge takes one step to final") {
  ProgramGraph pg = build_program_graph(*parse_program("skip"));
  Trace t = execute(pg, Memory{}, 10, 0);
  CHECK(t.status == RunStatus::Final);
  CHECK(t.taken_edges.size() == 1);
}

TEST_CASE("execute: replacing the guard with x>3 gets stuck at q1") {
  ProgramGraph pg = build_program_graph(*parse_program("y:=1; do x>3 -> y:=x*y; x:=x-1 od"));
  Memory m;
  m.vars = {{"x", 3}, {"y", 7}};
  // x <= 0 becomes !(x > 3): with x = 3, neither guard nor done-test... the
  // done test !(x>3) holds, so this terminates; use the book's stuck variant:
  // both the loop guard and exit test replaced so nothing is enabled.
  ProgramGraph stuck_pg = ProgramGraph::make(
      NodeId::initial(), NodeId::final_(),
      {Edge{NodeId::initial(), Action::assign("y", parse_aexp("1")), NodeId::plain(1)},
       Edge{NodeId::plain(1), Action::test(parse_bexp("x > 3")), NodeId::plain(2)},
       Edge{NodeId::plain(2), Action::assign("y", parse_aexp("x*y")), NodeId::plain(3)},
       Edge{NodeId::plain(3), Action::assign("x", parse_aexp("x-1")), NodeId::plain(1)},
       Edge{NodeId::plain(1), Action::test(parse_bexp("x <= 0")), NodeId::final_()}});
  Trace t = execute(stuck_pg, m, 100, 1);
  CHECK(t.status == RunStatus::Stuck);
  CHECK(t.configurations.back().node == NodeId::plain(1));
}

TEST_CASE("execute: budget exhaustion reports Budget") {
  ProgramGraph pg = build_program_graph(*parse_program("do x > 0 -> skip od"));
  Memory m;
  m.vars = {{"x", 1}};
  Trace t = execute(pg, m, 5, 42);
  CHECK(t.status == RunStatus::Budget);
}

TEST_CASE("traces replay: every trace corresponds to a realisable path") {
  std::mt19937 rng(7);
  ProgramGraph pg = build_program_graph(
      *parse_program("y:=1; do x>0 -> y:=x*y; x:=x-1 [] x>5 -> x:=x-2 od"));
  for (int round = 0; round < 30; ++round) {
    Memory m;
    m.vars = {{"x", static_cast<long long>(rng() % 9)}, {"y", 1}};
    Trace t = execute(pg, m, 60, rng());
    Memory cur = t.configurations.front().memory;
    for (size_t i = 0; i < t.taken_edges.size(); ++i) {
      const Edge& e = pg.edges()[t.taken_edges[i]];
      CHECK(e.source == t.configurations[i].node);
      auto r = step_action(e.action, cur);
      REQUIRE(std::holds_alternative<Memory>(r));
      cur = std::get<Memory>(r);
      CHECK(cur == t.configurations[i + 1].memory);
    }
  }
}

TEST_CASE("step preserves array lengths and channel discipline") {
  std::mt19937 rng(99);
  Memory base = fig18_memory();
  std::vector<Action> actions = {
      Action::assign("x", parse_aexp("x+1")),
      Action::arr_assign("A", parse_aexp("i"), parse_aexp("x*2")),
      Action::input("in", "y"),
      Action::input_arr("in", "A", parse_aexp("i")),
      Action::output("out", parse_aexp("x+y")),
      Action::test(parse_bexp("x < n")),
      Action::skip(),
  };
  for (int round = 0; round < 100; ++round) {
    Memory m = base;
    m.vars["x"] = static_cast<long long>(rng() % 20) - 10;
    m.vars["i"] = static_cast<long long>(rng() % 10) - 1;
    const Action& act = actions[rng() % actions.size()];
    auto r = step_action(act, m);
    if (!std::holds_alternative<Memory>(r)) continue;
    const Memory& m2 = std::get<Memory>(r);
    for (const auto& [name, vals] : m.arrays)
      CHECK(m2.arrays.at(name).size() == vals.size());
    if (act.kind == Action::Kind::Input || act.kind == Action::Kind::InputArr) {
      std::deque<long long> tail = m.chans.at(act.chan);
      tail.pop_front();
      CHECK(m2.chans.at(act.chan) == tail);
    }
    if (act.kind == Action::Kind::Output) {
      CHECK(m2.chans.at(act.chan).size() == m.chans.at(act.chan).size() + 1);
    }
    if (act.kind == Action::Kind::Test || act.kind == Action::Kind::Skip) CHECK(m2 == m);
  }
}

TEST_CASE("enumerate_paths contains the book's path (d) and respects bounds") {
  ProgramGraph pg = build_program_graph(*parse_program("y:=1; do x>0 -> y:=x*y; x:=x-1 od"));
  auto paths = enumerate_paths(pg, pg.initial(), NodeId::plain(2), 5);
  // path (d): q>, y:=1, q1, x>0, q2, y:=x*y, q3, x:=x-1, q1, x>0, q2
  bool found = false;
  for (const Path& p : paths)
    if (p.nodes == std::vector<NodeId>{NodeId::initial(), NodeId::plain(1), NodeId::plain(2),
                                       NodeId::plain(3), NodeId::plain(1), NodeId::plain(2)})
      found = true;
  CHECK(found);
  for (const Path& p : paths) CHECK(p.edges.size() <= 5);

  auto self_paths = enumerate_paths(pg, pg.initial(), pg.initial(), 0);
  REQUIRE(self_paths.size() == 1);
  CHECK(self_paths[0].edges.empty());

  ProgramGraph two = build_program_graph(*parse_program("skip"));
  auto ps = enumerate_paths(two, two.initial(), two.final_node(), 4);
  CHECK(ps.size() == 1);
}

TEST_CASE("memory JSON loads and validates against the program") {
  ProgramGraph pg = build_program_graph(*parse_program("y:=1; do x>0 -> y:=x*y; x:=x-1 od"));
  Memory m = load_memory_json(R"({"vars": {"x": 3, "y": 0}})", pg);
  CHECK(m.vars.at("x") == 3);
  CHECK_THROWS_AS(load_memory_json(R"({"vars": {"x": 3}})", pg), InputError);
  CHECK_THROWS_AS(load_memory_json(R"({"vars": {"x":1, "y":2, "z": 3}})", pg), InputError);
  CHECK_THROWS_AS(load_memory_json(R"({"vars": {"x":1, "y":2}, "arrays": {"A": []}})", pg),
                  InputError);
  Memory round = parse_memory_json(memory_to_json(m));
  CHECK(round == m);
}
