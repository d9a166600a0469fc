#pragma once

#include <stdexcept>
#include <string>

namespace steinberg {

// Base class for all domain errors raised by the library. Each operation's
// documented failure mode gets its own type so callers can distinguish them.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Weyl-group layer.
struct ShapeMismatchError : Error {
  using Error::Error;
};
struct SearchBoundError : Error {
  using Error::Error;
};
struct NotRegularError : Error {
  using Error::Error;
};

// Polynomial-algebra layer.
struct DegreeBoundError : Error {
  using Error::Error;
};
struct RingMismatchError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct PointNotOnVarietyError : Error {
  using Error::Error;
};
struct NotAComplexError : Error {
  using Error::Error;
};
struct NotCMError : Error {
  using Error::Error;
};
struct LengthExceededError : Error {
  using Error::Error;
};

// Local-model layer.
struct TranscriptionMismatchError : Error {
  using Error::Error;
};
struct ComponentMismatchError : Error {
  using Error::Error;
};

// Multiplicity-calculus layer.
struct ZeroSheafError : Error {
  using Error::Error;
};

// Number-theory layer.
struct InvalidSpecError : Error {
  using Error::Error;
};
struct BadPrimeError : Error {
  using Error::Error;
};
struct NoShiftFoundError : Error {
  using Error::Error;
};
struct NonAbelianSpecError : Error {
  using Error::Error;
};

}  // namespace steinberg
