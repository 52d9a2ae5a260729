#pragma once

#include <string>
#include <string_view>

#include "dforge/rational.hpp"
#include "dforge/surd.hpp"

namespace dforge {

enum class IntervalKind {
  open,             // (lo,hi)
  closed,           // [lo,hi]
  half_open_left,   // (lo,hi]
  half_open_right,  // [lo,hi)
};

/// Interval with rational endpoints. Closed intervals may be degenerate;
/// every other kind must be nonempty (lo < hi).
class IntervalQ {
 public:
  IntervalQ(Rational lo, Rational hi, IntervalKind kind);

  static IntervalQ closed(Rational lo, Rational hi) {
    return IntervalQ(std::move(lo), std::move(hi), IntervalKind::closed);
  }
  static IntervalQ open(Rational lo, Rational hi) {
    return IntervalQ(std::move(lo), std::move(hi), IntervalKind::open);
  }
  static IntervalQ unit() { return closed(Rational(0), Rational(1)); }

  /// "[lo,hi]", "(lo,hi)", "(lo,hi]" or "[lo,hi)".
  static IntervalQ parse(std::string_view text);

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  IntervalKind kind() const noexcept { return kind_; }
  bool lo_open() const noexcept {
    return kind_ == IntervalKind::open || kind_ == IntervalKind::half_open_left;
  }
  bool hi_open() const noexcept {
    return kind_ == IntervalKind::open || kind_ == IntervalKind::half_open_right;
  }
  bool is_closed() const noexcept { return kind_ == IntervalKind::closed; }

  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return dforge::midpoint(lo_, hi_); }

  bool contains(const Rational& x) const;
  bool contains(const Point& x) const;
  /// Exact inclusion, endpoint kinds respected.
  bool is_subset_of(const IntervalQ& other) const;
  bool intersects(const IntervalQ& other) const;

  IntervalQ closure() const { return closed(lo_, hi_); }
  /// Requires lo < hi.
  IntervalQ interior() const { return open(lo_, hi_); }

  std::string to_string() const;

  friend bool operator==(const IntervalQ&, const IntervalQ&) = default;

 private:
  Rational lo_;
  Rational hi_;
  IntervalKind kind_;
};

}  // namespace dforge
