#pragma once

#include <stdexcept>
#include <string>

namespace distint {

// Input that cannot be parsed or violates a documented precondition.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Structurally invalid partition description (sizes not increasing, zero
// counts, and so on), independent of any textual syntax.
class InvalidSpec : public std::invalid_argument {
 public:
  explicit InvalidSpec(const std::string& msg) : std::invalid_argument(msg) {}
};

// eval_f called at a pole of the rational eigenvalue function.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& msg) : std::domain_error(msg) {}
};

// Eigenvalue tuple breaks the strict interlacing chain required by the
// multiplicity reconstruction.
class InterlacingViolation : public std::invalid_argument {
 public:
  explicit InterlacingViolation(const std::string& msg)
      : std::invalid_argument(msg) {}
};

// Family construction requires a distance-integral base solution.
class NotIntegralBase : public std::invalid_argument {
 public:
  explicit NotIntegralBase(const std::string& msg)
      : std::invalid_argument(msg) {}
};

// Dense-matrix oracle asked to materialize a graph above its size limit.
class TooLarge : public std::length_error {
 public:
  explicit TooLarge(const std::string& msg) : std::length_error(msg) {}
};

// Search box whose estimated cost exceeds the configured budget.
class BoundsTooLarge : public std::runtime_error {
 public:
  explicit BoundsTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

// Bundled corpus data failed its integrity check.
class CorpusCorrupt : public std::runtime_error {
 public:
  explicit CorpusCorrupt(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace distint
