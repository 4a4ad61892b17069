#pragma once

#include <stdexcept>
#include <string>

namespace atomlat {

// Invalid arguments, malformed input, broken preconditions.  CLI exit 2.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

// Configured limits exceeded (atom budget, oracle size caps).  CLI exit 3.
struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& m) : std::runtime_error(m) {}
};

// The requested constraint set cannot be satisfied.  CLI exit 1.
struct Infeasible : std::runtime_error {
  explicit Infeasible(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace atomlat
