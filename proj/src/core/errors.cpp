#include "polyinv/errors.hpp"

namespace polyinv {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Dimension: return "dimension-mismatch";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::NotInvertible: return "not-invertible";
    case ErrorCode::NotInvariant: return "not-invariant";
    case ErrorCode::NotClosed: return "not-closed";
    case ErrorCode::ZeroEigenvalue: return "zero-eigenvalue";
    case ErrorCode::UndefinedResultant: return "undefined-resultant";
    case ErrorCode::UnsupportedSymbolic: return "unsupported-symbolic";
    case ErrorCode::Numerical: return "numerical-failure";
    case ErrorCode::InvalidStart: return "invalid-start";
    case ErrorCode::InconclusivePowerClosure: return "inconclusive-power-closure";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::NonCommuting: return "non-commuting";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace polyinv
