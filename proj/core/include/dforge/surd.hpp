#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "dforge/rational.hpp"

namespace dforge {

/// p + q*sqrt(d) with d square-free. Canonical: q = 0 iff the value is
/// rational, in which case d is stored as 0.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational p, Rational q, unsigned long d);

  /// Parses "p+q*sqrt(d)" and its abbreviations ("sqrt(2)", "-1/3*sqrt(5)",
  /// "1/2-sqrt(3)"). A plain rational is accepted too.
  static QuadraticSurd parse(std::string_view text);

  const Rational& p() const noexcept { return p_; }
  const Rational& q() const noexcept { return q_; }
  unsigned long d() const noexcept { return d_; }
  bool is_rational() const noexcept { return q_.is_zero(); }

  int sign() const;
  /// Closed rational enclosure of the value of width at most |q| * 2^-bits.
  std::pair<Rational, Rational> bracket(unsigned bits) const;

  std::string to_string() const;
  std::string approx(int significant = 12) const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  Rational p_;
  Rational q_;
  unsigned long d_ = 0;
};

/// A real point the engine can compare exactly.
using Point = std::variant<Rational, QuadraticSurd>;

/// Exact trichotomy. Same-radicand and surd-vs-rational cases go through an
/// exact sign test; distinct radicands never coincide and are separated by
/// refining rational brackets.
std::strong_ordering compare(const Point& x, const Point& y);

std::string to_string(const Point& x);
std::string approx(const Point& x, int significant = 12);
/// Parses either a canonical rational or a surd.
Point parse_point(std::string_view text);

/// Closed rational enclosure of x; degenerate for rationals.
std::pair<Rational, Rational> bracket(const Point& x, unsigned bits);

/// A rational strictly between `from` and the point x, where x != from.
/// Used when a construction needs a rational stand-in on the near side of x.
Rational rational_between(const Rational& from, const Point& x);

/// A rational r with r <= |x - c| / 2 and r > 0, for x != c.
Rational half_distance_floor(const Rational& c, const Point& x);

}  // namespace dforge
