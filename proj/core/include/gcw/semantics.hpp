#pragma once

// Expression evaluation, action semantics and execution sequences.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gcw/ast.hpp"
#include "gcw/graph.hpp"
#include "gcw/memory.hpp"

namespace gcw {

// Undefinedness is a value of the semantics, not a fault.
struct Undef {
  std::string reason;
};

template <typename T>
using OrUndef = std::variant<T, Undef>;

template <typename T>
bool is_def(const OrUndef<T>& v) {
  return std::holds_alternative<T>(v);
}
template <typename T>
const T& value_of(const OrUndef<T>& v) {
  return std::get<T>(v);
}
template <typename T>
const std::string& undef_reason(const OrUndef<T>& v) {
  return std::get<Undef>(v).reason;
}

// A[[a]] sigma: truncated-toward-zero division, matching modulo, bounds-checked
// array indexing, and A# = length of the array.
OrUndef<long long> eval_aexp(const Aexp& a, const Memory& m);

// B[[b]] sigma: strict for &/|, short-circuit for &&/||.
OrUndef<bool> eval_bexp(const Bexp& b, const Memory& m);

// S[[alpha]] sigma, or a stuck explanation.
struct Stuck {
  std::string reason;
};
std::variant<Memory, Stuck> step_action(const Action& act, const Memory& m);

struct Configuration {
  NodeId node;
  Memory memory;
};

enum class RunStatus { Final, Stuck, Budget };

struct Trace {
  std::vector<Configuration> configurations;  // first entry is the start
  std::vector<size_t> taken_edges;            // indices into pg.edges()
  RunStatus status = RunStatus::Stuck;
};

// Repeatedly applies enabled out-edges; several enabled edges are resolved
// pseudo-randomly from the seed, so runs are reproducible.
Trace execute(const ProgramGraph& pg, const Memory& initial, size_t max_steps, uint64_t seed);

std::string to_string(RunStatus s);

// All paths with at most max_len edges from `from` to `to`, including the
// empty path when the endpoints coincide. Exhaustive-search oracle; keep
// max_len small.
std::vector<Path> enumerate_paths(const ProgramGraph& pg, NodeId from, NodeId to, size_t max_len);

}  // namespace gcw
