#pragma once

#include <stdexcept>
#include <string>

namespace gcw {

// Lexical, syntactic or dialect error while reading a program.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(std::string msg, int line_, int col_)
      : std::runtime_error(std::move(msg)), line(line_), col(col_) {}
};

// The edge set violates the reachability requirements on program graphs.
struct ReachabilityViolation : std::runtime_error {
  std::string node;
  explicit ReachabilityViolation(std::string node_, const std::string& what_)
      : std::runtime_error(what_), node(std::move(node_)) {}
};

// A fixpoint over an unbounded domain was requested without a widening.
struct DomainNotAcc : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Natural-loop construction hit a back edge that is not a dominator edge.
struct NonReducible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A security-type side condition failed.
struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input files (memories, policies, datalog sources).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gcw
