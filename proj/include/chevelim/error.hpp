#pragma once

#include <stdexcept>
#include <string>

namespace chevelim {

enum class Errc {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  Unsupported,
  DivisionByZero,
  ZeroArgument,
  FactorLimitExceeded,
  DimensionMismatch,
  FieldMismatch,
  IndexOutOfRange,
  ZeroScale,
  BadCharacteristic,
  InvalidSymbolForKind,
  NotAMember,
  WrongKind,
  ZeroLambda,
  NotASquareWitness,
  GroupTooLarge,
  ShapeViolation,
  InternalInvariantViolation,
  ParseError,
};

const char* errc_name(Errc c);

/// Library-wide exception type carrying an error code alongside the message.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace chevelim
