#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dforge {

enum class ErrorCode {
  domain,
  index,
  parse,
  unsupported_comparison,
  insufficient_digits,
  insufficient_prefix,
  oracle_violation,
  density_violation,
  modulus_violation,
  not_a_cover,
  nesting_violation,
  configuration,
  turn,
  illegal_move,
  validation,
  not_found,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the engine. `witness` carries the exact value
/// (canonical text form) that demonstrates the failure, when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::string> witness = std::nullopt)
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::optional<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::optional<std::string> witness_;
};

}  // namespace dforge
