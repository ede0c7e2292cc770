#include "gcw/memory.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "gcw/errors.hpp"

namespace gcw {

using nlohmann::json;

std::string to_string(const Memory& m) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << ", ";
    first = false;
  };
  for (const auto& [x, v] : m.vars) {
    sep();
    os << x << "=" << v;
  }
  for (const auto& [a, vs] : m.arrays) {
    sep();
    os << a << "=[";
    for (size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << "]";
  }
  for (const auto& [c, vs] : m.chans) {
    sep();
    os << c << "=[";
    bool f2 = true;
    for (long long v : vs) {
      if (!f2) os << ",";
      f2 = false;
      os << v;
    }
    os << "]";
  }
  return os.str();
}

Memory parse_memory_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad memory file: ") + e.what());
  }
  Memory m;
  if (j.contains("vars"))
    for (auto& [k, v] : j.at("vars").items()) m.vars[k] = v.get<long long>();
  if (j.contains("arrays"))
    for (auto& [k, v] : j.at("arrays").items()) {
      auto vals = v.get<std::vector<long long>>();
      if (vals.empty()) throw InputError("array " + k + " must have positive length");
      m.arrays[k] = std::move(vals);
    }
  if (j.contains("channels"))
    for (auto& [k, v] : j.at("channels").items())
      m.chans[k] = std::deque<long long>(v.begin(), v.end());
  return m;
}

Memory load_memory_json(const std::string& text, const ProgramGraph& pg) {
  Memory m = parse_memory_json(text);
  auto check = [](const auto& have, const std::set<std::string>& want, const char* what) {
    for (const std::string& id : want)
      if (!have.count(id)) throw InputError(std::string("memory misses ") + what + " " + id);
    for (const auto& [id, _] : have)
      if (!want.count(id))
        throw InputError(std::string("memory declares unknown ") + what + " " + id);
  };
  check(m.vars, pg.vars(), "variable");
  check(m.arrays, pg.arrays(), "array");
  check(m.chans, pg.channels(), "channel");
  return m;
}

std::string memory_to_json(const Memory& m) {
  json j;
  j["vars"] = json::object();
  j["arrays"] = json::object();
  j["channels"] = json::object();
  for (const auto& [x, v] : m.vars) j["vars"][x] = v;
  for (const auto& [a, vs] : m.arrays) j["arrays"][a] = vs;
  for (const auto& [c, vs] : m.chans) j["channels"][c] = std::vector<long long>(vs.begin(), vs.end());
  return j.dump(2);
}

}  // namespace gcw
