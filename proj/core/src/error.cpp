#include "dforge/error.hpp"

namespace dforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::index: return "index";
    case ErrorCode::parse: return "parse";
    case ErrorCode::unsupported_comparison: return "unsupported_comparison";
    case ErrorCode::insufficient_digits: return "insufficient_digits";
    case ErrorCode::insufficient_prefix: return "insufficient_prefix";
    case ErrorCode::oracle_violation: return "oracle_violation";
    case ErrorCode::density_violation: return "density_violation";
    case ErrorCode::modulus_violation: return "modulus_violation";
    case ErrorCode::not_a_cover: return "not_a_cover";
    case ErrorCode::nesting_violation: return "nesting_violation";
    case ErrorCode::configuration: return "configuration";
    case ErrorCode::turn: return "turn";
    case ErrorCode::illegal_move: return "illegal_move";
    case ErrorCode::validation: return "validation";
    case ErrorCode::not_found: return "not_found";
  }
  return "unknown";
}

}  // namespace dforge
