#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rbmono {

// Base class for everything this library throws. The CLI maps any Error
// to a structured message on stderr and exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text input rejected; `offset` is the byte position of the problem.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// A table-backed operator was queried past its last entry. `needed` is the
// smallest n_max that would make the rejected call succeed.
struct DegreeExceedsTable : Error {
  std::uint64_t needed;
  explicit DegreeExceedsTable(std::uint64_t needed_index)
      : Error("operator table too short: entries up to exponent " +
              std::to_string(needed_index) + " required"),
        needed(needed_index) {}
};

struct InvalidParams : Error {
  using Error::Error;
};

// Malformed JSON document (unknown field, wrong type, broken invariant).
struct SchemaError : Error {
  using Error::Error;
};

struct EmptySet : Error {
  EmptySet() : Error("gcd of an empty set is undefined") {}
};

struct EmptyGenerators : Error {
  EmptyGenerators() : Error("semigroup needs at least one generator") {}
};

struct ZeroOperator : Error {
  ZeroOperator() : Error("operator has empty support on the sampled range") {}
};

struct InsufficientData : Error {
  using Error::Error;
};

// The residue-class test of the support decomposition failed at `counterexample`.
struct InconsistentDecomposition : Error {
  std::uint64_t counterexample;
  explicit InconsistentDecomposition(std::uint64_t n)
      : Error("support is not a union of residue classes: counterexample n=" +
              std::to_string(n)),
        counterexample(n) {}
};

struct NotInSupport : Error {
  std::uint64_t index;
  explicit NotInSupport(std::uint64_t n)
      : Error("exponent " + std::to_string(n) + " is not in the support"),
        index(n) {}
};

struct ZeroWeight : Error {
  ZeroWeight()
      : Error("weight 0 rejected here; use the weight-zero condition check") {}
};

struct SearchSpaceTooLarge : Error {
  explicit SearchSpaceTooLarge(const std::string& detail)
      : Error("search space too large: " + detail) {}
};

}  // namespace rbmono
