#pragma once

#include <map>
#include <memory>
#include <ostream>
#include <string>

#include "hopfkit/builders.hpp"
#include "hopfkit/scalar_io.hpp"
#include "hopfkit/session.hpp"

namespace hopfkit {

/// Readable gtest output for exact scalars.
inline void PrintTo(const CycScalar& a, std::ostream* os) { *os << a.to_string(); }

}  // namespace hopfkit

namespace hopfkit::testing {

/// The example algebras used throughout the tests, keyed by a short name.
inline const std::map<std::string, HopfData>& examples() {
  static const std::map<std::string, HopfData> all = [] {
    std::map<std::string, HopfData> m;
    for (const char* g : {"C2", "C3", "C2xC2", "S3", "D4", "Q8"}) {
      m.emplace(std::string("k") + g, group_algebra(builtin_group(g)));
      m.emplace(std::string("k^") + g, function_algebra(builtin_group(g)));
    }
    m.emplace("D(C2)", drinfeld_double(builtin_group("C2")));
    m.emplace("D(S3)", drinfeld_double(builtin_group("S3")));
    m.emplace("kS3(x)k^C2", tensor_product(group_algebra(builtin_group("S3")), function_algebra(builtin_group("C2"))));
    return m;
  }();
  return all;
}

inline const HopfData& example(const std::string& name) { return examples().at(name); }

/// A cached analysis session per example, with the default order and seed 0.
inline Session& session(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Session>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<Session>(example(name), SessionConfig{});
  return *slot;
}

inline CycScalar cyc(const std::string& text, unsigned order) { return parse_scalar(text, order); }

}  // namespace hopfkit::testing
