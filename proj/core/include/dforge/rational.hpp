#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace dforge {

/// Exact fraction, always in lowest terms with a positive denominator.
/// Canonical text form is "p/q", or "p" when q = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value);

  /// Parses the canonical form; also accepts a non-reduced "p/q" and reduces it.
  static Rational parse(std::string_view text);

  /// 2^exponent, exponent of either sign.
  static Rational pow2(long exponent);
  /// base^exponent for an integer base and exponent of either sign.
  static Rational pow(long base, long exponent);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  /// Largest integer <= value.
  mpz_class floor() const;
  /// Smallest integer >= value.
  mpz_class ceil() const;

  std::string to_string() const;
  /// Decimal rendering with `significant` significant digits. Display only.
  std::string approx(int significant = 12) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

Rational midpoint(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace dforge

template <>
struct std::hash<dforge::Rational> {
  std::size_t operator()(const dforge::Rational& r) const noexcept;
};
