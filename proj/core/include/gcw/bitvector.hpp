#pragma once

// The four classical bit-vector analyses (Reaching Definitions, Live
// Variables, Available Expressions, Very Busy Expressions) as kill/gen
// tables packaged into analysis specs, plus the conditional Dangerous
// Variables and Faint Variables transfer functions.

#include <map>
#include <optional>
#include <set>
#include <string>

#include "gcw/ast.hpp"
#include "gcw/graph.hpp"
#include "gcw/solver.hpp"

namespace gcw {

// A reaching definition (x, q., q') with '?' encoded as an absent source.
struct RdFact {
  std::string subject;
  std::optional<NodeId> source;  // nullopt is the '?' token
  NodeId target;

  friend auto operator<=>(const RdFact&, const RdFact&) = default;
};

std::string to_string(const RdFact& f);

using RdSet = std::set<RdFact>;
using NameSet = std::set<std::string>;

// fv(.): free variables and array names of an expression.
NameSet free_vars(const Aexp& a);
NameSet free_vars(const Bexp& b);

// ae(.): composite arithmetic expressions and their non-trivial
// subexpressions; literals and bare variables excluded.
AexpSet nontrivial_subexpressions(const Aexp& a);
AexpSet nontrivial_subexpressions(const Bexp& b);

// Per-graph context shared by the kill/gen tables.
struct BitvectorContext {
  std::set<NodeId> nodes;
  NameSet vars;
  NameSet arrays;
  AexpSet universe;  // AExp: every non-trivial expression of the graph

  static BitvectorContext from(const ProgramGraph& pg);
};

// AExp(alpha): the non-trivial expressions evaluated by an action.
AexpSet action_exprs(const Action& act);
// Def(alpha) and Use(alpha): names defined and used by an action.
NameSet action_defs(const Action& act);
NameSet action_uses(const Action& act);

std::pair<RdSet, RdSet> rd_kill_gen(const Edge& e, const BitvectorContext& ctx);
std::pair<NameSet, NameSet> lv_kill_gen(const Edge& e);
std::pair<AexpSet, AexpSet> ae_kill_gen(const Edge& e, const BitvectorContext& ctx);
std::pair<AexpSet, AexpSet> vb_kill_gen(const Edge& e, const BitvectorContext& ctx);

// Packaged monotone-framework instances. RD/AE are forward, LV/VB backward;
// AE/VB use the superset order so the least-solution engine computes the
// book's greatest solutions.
AnalysisSpec<RdSet> rd_spec(const ProgramGraph& pg);
AnalysisSpec<NameSet> lv_spec(const ProgramGraph& pg, NameSet live_at_final = {});
AnalysisSpec<AexpSet> ae_spec(const ProgramGraph& pg);
AnalysisSpec<AexpSet> vb_spec(const ProgramGraph& pg);

// Dangerous Variables (forward, extremal Var u Arr) and Faint Variables
// (backward strongly-live form, extremal {}). Both conditional, not kill/gen.
NameSet dv_transfer(const Action& act, const NameSet& s);
NameSet fv_transfer(const Action& act, const NameSet& s);
AnalysisSpec<NameSet> dv_spec(const ProgramGraph& pg);
AnalysisSpec<NameSet> fv_spec(const ProgramGraph& pg);

std::string render(const AexpSet& s);
std::string render(const NameSet& s);
std::string render(const RdSet& s);

}  // namespace gcw
