#pragma once

#include <stdexcept>
#include <string>

namespace proxflow {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct PointOutsideDomain : Error {
  explicit PointOutsideDomain(const std::string& msg) : Error(msg) {}
};

struct UnknownPotential : Error {
  explicit UnknownPotential(const std::string& msg) : Error(msg) {}
};

struct UnboundedDomain : Error {
  explicit UnboundedDomain(const std::string& msg) : Error(msg) {}
};

struct EmptySample : Error {
  explicit EmptySample(const std::string& msg) : Error(msg) {}
};

struct SolverStall : Error {
  explicit SolverStall(const std::string& msg) : Error(msg) {}
};

struct NonPositiveValue : Error {
  explicit NonPositiveValue(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Thrown when a simulation violates a feasibility invariant that the
// scheme is supposed to maintain; indicates a bug, not bad input.
struct InvariantBreach : Error {
  explicit InvariantBreach(const std::string& msg) : Error(msg) {}
};

}  // namespace proxflow
