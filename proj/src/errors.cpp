#include "fir/errors.hpp"

namespace fir {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotClosed: return "NotClosed";
    case Err::NotAssociative: return "NotAssociative";
    case Err::NoIdentity: return "NoIdentity";
    case Err::NoInverse: return "NoInverse";
    case Err::OrderCapExceeded: return "OrderCapExceeded";
    case Err::InvalidAction: return "InvalidAction";
    case Err::NotPrimePower: return "NotPrimePower";
    case Err::NotASubgroup: return "NotASubgroup";
    case Err::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case Err::CarrierNotNormal: return "CarrierNotNormal";
    case Err::AbelianMinimalNotElementary: return "AbelianMinimalNotElementary";
    case Err::SearchCapExceeded: return "SearchCapExceeded";
    case Err::NotCompletelyReducible: return "NotCompletelyReducible";
    case Err::OracleCapExceeded: return "OracleCapExceeded";
    case Err::ModulusMismatch: return "ModulusMismatch";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace fir
