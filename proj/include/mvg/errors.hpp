#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvg {

using ElementId = std::uint32_t;

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table entry out of range, wrong dimensions, unparsable input.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// An element index that does not belong to the algebra it was passed to,
/// or an ideal/graph handed to an algebra it was not built from.
class ForeignObject : public Error {
 public:
  using Error::Error;
};

/// The tables describe an algebra, but not an MV-algebra.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<ElementId> witness,
                 const std::string& detail);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<ElementId>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<ElementId> witness_;
};

/// Operation requires a nontrivial algebra, a proper ideal, etc.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A backtracking search ran out of its node budget before deciding.
/// Never to be read as "no".
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// chain_decomposition could not reproduce its input.
class DecompositionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace mvg
