#pragma once

#include <stdexcept>
#include <string>

namespace fir {

enum class Err {
  NotClosed,
  NotAssociative,
  NoIdentity,
  NoInverse,
  OrderCapExceeded,
  InvalidAction,
  NotPrimePower,
  NotASubgroup,
  PrimeDoesNotDivideOrder,
  CarrierNotNormal,
  AbelianMinimalNotElementary,
  SearchCapExceeded,
  NotCompletelyReducible,
  OracleCapExceeded,
  ModulusMismatch,
  DimensionMismatch,
  ParseError,
  Internal,
};

const char* err_name(Err e);

/// Library-wide exception. `kind()` identifies the failure class so callers
/// (and tests) can match on it without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& what)
      : std::runtime_error(std::string(err_name(kind)) + ": " + what), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fir
