#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aaco {

// Base class for every domain error thrown by the library. CLI maps these
// to exit code 1; anything else is a usage or internal error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A rank table failed one of the matroid axioms. `witness` holds the
// subsets of the first failing instance in canonical (mask) order.
struct AxiomViolation : Error {
  AxiomViolation(std::string which, std::vector<std::uint32_t> w, const std::string& msg)
      : Error(msg), axiom(std::move(which)), witness(std::move(w)) {}
  std::string axiom;  // "R1", "R2" or "R3"
  std::vector<std::uint32_t> witness;
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

struct NotABasis : Error {
  explicit NotABasis(const std::string& msg) : Error(msg) {}
};

struct ElementInBasis : Error {
  explicit ElementInBasis(const std::string& msg) : Error(msg) {}
};

struct NotAlmostAffine : Error {
  NotAlmostAffine(std::uint32_t w, const std::string& msg) : Error(msg), witness(w) {}
  std::uint32_t witness;  // first subset whose puncture size is not a power of q
};

struct WordNotInCode : Error {
  explicit WordNotInCode(const std::string& msg) : Error(msg) {}
};

struct LengthMismatch : Error {
  explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

struct AlphabetMismatch : Error {
  explicit AlphabetMismatch(const std::string& msg) : Error(msg) {}
};

struct EmptyCode : Error {
  explicit EmptyCode(const std::string& msg) : Error(msg) {}
};

struct InvalidCode : Error {
  explicit InvalidCode(const std::string& msg) : Error(msg) {}
};

struct EnumerationBudgetExceeded : Error {
  explicit EnumerationBudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct Degenerate : Error {
  Degenerate(int pos, const std::string& msg) : Error(msg), position(pos) {}
  int position;  // 1-based offending position
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct RankDeficient : Error {
  explicit RankDeficient(const std::string& msg) : Error(msg) {}
};

struct NotAGenerator : Error {
  explicit NotAGenerator(const std::string& msg) : Error(msg) {}
};

struct DivisibilityViolated : Error {
  explicit DivisibilityViolated(const std::string& msg) : Error(msg) {}
};

struct NotMultilinear : Error {
  explicit NotMultilinear(const std::string& msg) : Error(msg) {}
};

struct InvalidSideMap : Error {
  explicit InvalidSideMap(const std::string& msg) : Error(msg) {}
};

struct MessageLengthMismatch : Error {
  explicit MessageLengthMismatch(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  ParseError(int line_no, const std::string& msg) : Error(msg), line(line_no) {}
  int line;  // 1-based line of the offending input, 0 if unknown
};

struct FileNotFound : Error {
  explicit FileNotFound(const std::string& msg) : Error(msg) {}
};

}  // namespace aaco
