#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dforge/digits.hpp"
#include "dforge/rational.hpp"

namespace dforge::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  std::uint64_t raw() { return engine_(); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(std::int64_t max_abs = 1000) {
    return Rational(integer(-max_abs, max_abs), integer(1, max_abs));
  }
  /// Uniform-ish rational in [0,1] with denominator at most max_den.
  Rational unit_rational(std::int64_t max_den = 1000) {
    const auto q = integer(1, max_den);
    return Rational(integer(0, q), q);
  }
  /// Rational strictly inside (lo, hi).
  Rational between(const Rational& lo, const Rational& hi) {
    return lo + (hi - lo) * Rational(integer(1, 1023), 1024);
  }
  DigitStream stream(unsigned base, std::size_t n) {
    std::vector<std::uint8_t> d(n);
    for (auto& x : d) x = static_cast<std::uint8_t>(integer(0, base - 1));
    return DigitStream(base, d, TailConvention::unnormalized);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dforge::testing
