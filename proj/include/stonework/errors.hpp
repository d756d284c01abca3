#pragma once

#include <stdexcept>
#include <string>

namespace stonework {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
  using Error::Error;
};

// ---- order layer ----

struct CyclicCovers : Error {
  using Error::Error;
};

struct Unbounded : Error {
  using Error::Error;
};

struct NotALattice : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

struct NotAnOrderIso : Error {
  using Error::Error;
};

struct ExtensionNotIso : Error {
  using Error::Error;
};

// ---- algebra layer ----

struct NoPseudoComplement : Error {
  using Error::Error;
};

struct NoDualPseudoComplement : Error {
  using Error::Error;
};

struct UnsupportedArity : Error {
  using Error::Error;
};

struct SignatureMismatch : Error {
  using Error::Error;
};

struct NotClassified : Error {
  using Error::Error;
};

struct EmbeddingFailed : Error {
  using Error::Error;
};

struct NegationMismatch : Error {
  using Error::Error;
};

// ---- rough set layer ----

struct NotASubset : Error {
  using Error::Error;
};

struct NotClosed : Error {
  using Error::Error;
};

struct PointNotInUniverse : Error {
  using Error::Error;
};

// ---- logic layer ----

struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

struct MissingConnective : Error {
  using Error::Error;
};

struct UnboundVariable : Error {
  using Error::Error;
};

struct UnsupportedAlgebra : Error {
  using Error::Error;
};

struct WrongTarget : Error {
  using Error::Error;
};

// ---- proof layer ----

struct UnknownCalculus : Error {
  using Error::Error;
};

}  // namespace stonework
