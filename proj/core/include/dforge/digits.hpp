#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dforge/interval.hpp"
#include "dforge/rational.hpp"

namespace dforge {

enum class TailConvention { no_trailing_zeros, no_trailing_max, unnormalized };

std::string_view to_string(TailConvention c) noexcept;
TailConvention parse_tail_convention(std::string_view text);

/// Finite prefix of a base-b expansion of a number in [0,1].
class DigitStream {
 public:
  DigitStream(unsigned base, std::vector<std::uint8_t> digits,
              TailConvention convention = TailConvention::unnormalized);

  /// "0.d1d2...dn(base b)"; the "(base b)" suffix may be omitted, in which
  /// case `default_base` applies. Digits above 9 use lowercase letters.
  static DigitStream parse(std::string_view text, unsigned default_base = 10);

  unsigned base() const noexcept { return base_; }
  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  /// 1-based digit access; throws insufficient_digits past the prefix.
  unsigned digit(std::size_t position) const;
  TailConvention convention() const noexcept { return convention_; }

  /// sum d_i * base^-i over the stored prefix.
  Rational prefix_value() const;
  /// Same, truncated to the first n digits.
  Rational prefix_value(std::size_t n) const;
  /// Closed set of reals whose expansion starts with this prefix.
  IntervalQ cell() const;

  std::string to_string() const;

  friend bool operator==(const DigitStream&, const DigitStream&) = default;

 private:
  unsigned base_;
  std::vector<std::uint8_t> digits_;
  TailConvention convention_;
};

/// First n digits of x in [0,1]. For a terminating x the convention picks
/// the expansion: no_trailing_max gives the terminating one, no_trailing_zeros
/// the one ending in (base-1)s. 0 and 1 each have a single expansion in this
/// form (all zeros, all (base-1)s). `unnormalized` behaves like no_trailing_max.
DigitStream to_digits(const Rational& x, unsigned base, std::size_t n,
                      TailConvention convention = TailConvention::no_trailing_zeros);
/// Point overload; irrational surds have a single expansion.
DigitStream to_digits(const Point& x, unsigned base, std::size_t n,
                      TailConvention convention = TailConvention::no_trailing_zeros);

}  // namespace dforge
