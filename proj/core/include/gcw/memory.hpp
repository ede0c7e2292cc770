#pragma once

// Concrete memories: variable, array and channel valuations.

#include <compare>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "gcw/graph.hpp"

namespace gcw {

struct Memory {
  std::map<std::string, long long> vars;
  std::map<std::string, std::vector<long long>> arrays;
  // Front of the deque is the next value to be read.
  std::map<std::string, std::deque<long long>> chans;

  friend auto operator<=>(const Memory&, const Memory&) = default;
};

std::string to_string(const Memory& m);

// Loads {"vars": {...}, "arrays": {...}, "channels": {...}} and checks that
// the declared identifiers cover exactly those of the program graph and that
// array lengths are positive. Throws InputError otherwise.
Memory load_memory_json(const std::string& text, const ProgramGraph& pg);
Memory parse_memory_json(const std::string& text);  // no coverage check
std::string memory_to_json(const Memory& m);

}  // namespace gcw
