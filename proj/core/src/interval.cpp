#include "dforge/interval.hpp"

#include <string>

#include "dforge/error.hpp"

namespace dforge {

IntervalQ::IntervalQ(Rational lo, Rational hi, IntervalKind kind)
    : lo_(std::move(lo)), hi_(std::move(hi)), kind_(kind) {
  if (hi_ < lo_) {
    throw Error(ErrorCode::domain, "interval endpoints out of order: " + lo_.to_string() +
                                       " > " + hi_.to_string());
  }
  if (kind_ != IntervalKind::closed && lo_ == hi_) {
    throw Error(ErrorCode::domain, "empty interval at " + lo_.to_string());
  }
}

IntervalQ IntervalQ::parse(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::parse, "malformed interval '" + std::string(text) + "'");
  };
  if (text.size() < 5) throw fail();
  const char open_c = text.front();
  const char close_c = text.back();
  if ((open_c != '[' && open_c != '(') || (close_c != ']' && close_c != ')')) throw fail();
  std::string_view body = text.substr(1, text.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
    throw fail();
  }
  Rational lo = Rational::parse(body.substr(0, comma));
  Rational hi = Rational::parse(body.substr(comma + 1));
  IntervalKind kind = IntervalKind::closed;
  if (open_c == '(' && close_c == ')') kind = IntervalKind::open;
  if (open_c == '(' && close_c == ']') kind = IntervalKind::half_open_left;
  if (open_c == '[' && close_c == ')') kind = IntervalKind::half_open_right;
  return IntervalQ(std::move(lo), std::move(hi), kind);
}

bool IntervalQ::contains(const Rational& x) const {
  const bool above = lo_open() ? lo_ < x : lo_ <= x;
  const bool below = hi_open() ? x < hi_ : x <= hi_;
  return above && below;
}

bool IntervalQ::contains(const Point& x) const {
  if (const auto* r = std::get_if<Rational>(&x)) return contains(*r);
  const auto lo_cmp = compare(x, Point(lo_));
  const auto hi_cmp = compare(x, Point(hi_));
  const bool above = lo_open() ? lo_cmp > 0 : lo_cmp >= 0;
  const bool below = hi_open() ? hi_cmp < 0 : hi_cmp <= 0;
  return above && below;
}

bool IntervalQ::is_subset_of(const IntervalQ& other) const {
  bool lower_ok = false;
  if (other.lo_open()) {
    lower_ok = other.lo_ < lo_ || (other.lo_ == lo_ && lo_open());
  } else {
    lower_ok = other.lo_ <= lo_;
  }
  bool upper_ok = false;
  if (other.hi_open()) {
    upper_ok = hi_ < other.hi_ || (hi_ == other.hi_ && hi_open());
  } else {
    upper_ok = hi_ <= other.hi_;
  }
  return lower_ok && upper_ok;
}

bool IntervalQ::intersects(const IntervalQ& other) const {
  // Intersection is nonempty iff the larger lower bound sits below the smaller upper bound.
  const IntervalQ& left_lo = lo_ < other.lo_ ? other : *this;  // larger lo
  const IntervalQ& right_hi = other.hi_ < hi_ ? other : *this;  // smaller hi
  if (left_lo.lo_ < right_hi.hi_) return true;
  if (right_hi.hi_ < left_lo.lo_) return false;
  // Touching at one point: both bounds at that point must be closed.
  const Rational& x = left_lo.lo_;
  return contains(x) && other.contains(x);
}

std::string IntervalQ::to_string() const {
  const char* open_c = lo_open() ? "(" : "[";
  const char* close_c = hi_open() ? ")" : "]";
  return open_c + lo_.to_string() + "," + hi_.to_string() + close_c;
}

}  // namespace dforge
