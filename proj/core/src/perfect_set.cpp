#include "dforge/perfect_set.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dforge/error.hpp"

namespace dforge {

std::string_view to_string(PerfectSetKind kind) noexcept {
  return kind == PerfectSetKind::unit_interval ? "unit_interval" : "cantor_middle_thirds";
}

PerfectSetKind parse_perfect_set_kind(std::string_view text) {
  if (text == "unit_interval" || text == "unit") return PerfectSetKind::unit_interval;
  if (text == "cantor_middle_thirds" || text == "cantor") return PerfectSetKind::cantor_middle_thirds;
  throw Error(ErrorCode::parse, "unknown perfect set '" + std::string(text) + "'");
}

std::optional<Rational> PerfectSetOracle::sample(const IntervalQ& open_interval) const {
  if (kind_ == PerfectSetKind::unit_interval) {
    const Rational lo = max(open_interval.lo(), Rational(0));
    const Rational hi = min(open_interval.hi(), Rational(1));
    if (lo < hi) return midpoint(lo, hi);
    if (lo == hi && open_interval.contains(lo)) return lo;
    return std::nullopt;
  }

  // Depth-first over the construction intervals [x, x + w]. An interval that
  // meets I but has neither endpoint in I must contain I in its interior, so
  // the search descends only while w exceeds the width of I.
  struct Node {
    Rational x;
    Rational w;
  };
  std::vector<Node> stack{{Rational(0), Rational(1)}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const IntervalQ piece = IntervalQ::closed(node.x, node.x + node.w);
    if (!piece.intersects(open_interval)) continue;
    if (open_interval.contains(node.x)) return node.x;
    if (open_interval.contains(piece.hi())) return piece.hi();
    const Rational third = node.w / Rational(3);
    stack.push_back({node.x + third * Rational(2), third});
    stack.push_back({node.x, third});  // left child explored first
  }
  return std::nullopt;
}

bool PerfectSetOracle::member(const Rational& x) const {
  if (x.sign() < 0 || Rational(1) < x) return false;
  if (kind_ == PerfectSetKind::unit_interval) return true;
  // Iterate the expanding map of the two kept thirds; a rational orbit is
  // eventually periodic, so a repeated state means x never hits a gap.
  const Rational one_third(1, 3);
  const Rational two_thirds(2, 3);
  std::set<Rational> seen;
  Rational y = x;
  while (seen.insert(y).second) {
    if (y <= one_third) {
      y *= Rational(3);
    } else if (two_thirds <= y) {
      y = y * Rational(3) - Rational(2);
    } else {
      return false;
    }
  }
  return true;
}

DenseOpenSet::DenseOpenSet(std::vector<IntervalQ> pieces, bool dense) : dense_(dense) {
  for (const auto& p : pieces) {
    if (p.kind() != IntervalKind::open) {
      throw Error(ErrorCode::domain, "dense open set pieces must be open, got " + p.to_string());
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const IntervalQ& a, const IntervalQ& b) { return a.lo() < b.lo(); });
  for (auto& p : pieces) {
    if (!pieces_.empty() && p.lo() < pieces_.back().hi()) {
      if (pieces_.back().hi() < p.hi()) pieces_.back() = IntervalQ::open(pieces_.back().lo(), p.hi());
    } else {
      pieces_.push_back(std::move(p));
    }
  }
}

DenseOpenSet DenseOpenSet::punctured(const Rational& r) {
  return DenseOpenSet({IntervalQ::open(Rational(-1), r), IntervalQ::open(r, Rational(2))});
}

bool DenseOpenSet::contains(const Rational& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const IntervalQ& p) { return p.contains(x); });
}

}  // namespace dforge
