#include "detpol/error.hpp"

namespace detpol {

const char* errcode_name(ErrCode c) {
  switch (c) {
    case ErrCode::SyntaxError: return "SYNTAX_ERROR";
    case ErrCode::UndeclaredVariable: return "UNDECLARED_VARIABLE";
    case ErrCode::NegativeExponent: return "NEGATIVE_EXPONENT";
    case ErrCode::RingMismatch: return "RING_MISMATCH";
    case ErrCode::OrderingMismatch: return "ORDERING_MISMATCH";
    case ErrCode::LengthMismatch: return "LENGTH_MISMATCH";
    case ErrCode::UnknownVariable: return "UNKNOWN_VARIABLE";
    case ErrCode::ZeroDivisorRequest: return "ZERO_DIVISOR_REQUEST";
    case ErrCode::NotZeroDimensional: return "NOT_ZERO_DIMENSIONAL";
    case ErrCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrCode::GenericityFail: return "GENERICITY_FAIL";
    case ErrCode::GenericitySuspect: return "GENERICITY_SUSPECT";
    case ErrCode::InvariantViolation: return "INVARIANT_VIOLATION";
    case ErrCode::NotUnibranchSupported: return "NOT_UNIBRANCH_SUPPORTED";
    case ErrCode::RankDefect: return "RANK_DEFECT";
    case ErrCode::RangeError: return "RANGE";
    case ErrCode::InputError: return "INPUT";
    case ErrCode::ResourceLimit: return "RESOURCE_LIMIT";
  }
  return "UNKNOWN";
}

}  // namespace detpol
