#pragma once

#include <stdexcept>
#include <string>

namespace harmonia {

// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unreadable files, bad builtin specs, mismatched lengths,
// out-of-range element indices.
class InputError : public Error {
 public:
  using Error::Error;
};

// A table that fails one of the group axioms (Latin property, associativity,
// two-sided inverses). The message carries a witness.
class StructureError : public InputError {
 public:
  using InputError::InputError;
};

// A valid group table whose identity is not element 0; the normalize tool
// reindexes such tables.
class NormalizationError : public InputError {
 public:
  using InputError::InputError;
};

// Group order beyond the configured maximum, or a search above its
// exhaustive cap without an explicit override.
class SizeError : public InputError {
 public:
  using InputError::InputError;
};

// An operation requiring odd order was given an even-order group.
class ParityError : public Error {
 public:
  using Error::Error;
};

// Quotient formation over a non-normal subgroup. Carries the conjugation
// witness: conjugator * member * conjugator^-1 == conjugate, outside the
// subgroup.
class NormalityError : public Error {
 public:
  NormalityError(const std::string& what, int conjugator, int member, int conjugate)
      : Error(what), conjugator(conjugator), member(member), conjugate(conjugate) {}

  int conjugator;
  int member;
  int conjugate;
};

// The derived subgroup failed to shrink. Impossible for genuine odd-order
// input; defends against corrupted tables.
class NonSolvabilityError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of a construction step was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A sequence that must start at the identity does not.
class AnchorError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Internal consistency failure; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace harmonia
