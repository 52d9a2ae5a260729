#include "dforge/constructors.hpp"

#include <algorithm>
#include <string>

#include "dforge/error.hpp"

namespace dforge {
namespace {

constexpr unsigned kStartBits = 64;
constexpr unsigned kMaxBits = 1u << 16;

// Largest bracket end r <= x with r >= floor; x itself when rational.
// Requires floor < x when x is irrational.
Rational rational_below(const Point& x, const Rational& floor) {
  for (unsigned bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    auto [lo, hi] = bracket(x, bits);
    if (floor <= lo) return lo;
  }
  throw Error(ErrorCode::domain, "no rational between " + floor.to_string() + " and " + to_string(x));
}

Rational rational_above(const Point& x, const Rational& ceiling) {
  for (unsigned bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    auto [lo, hi] = bracket(x, bits);
    if (hi <= ceiling) return hi;
  }
  throw Error(ErrorCode::domain, "no rational between " + to_string(x) + " and " + ceiling.to_string());
}

bool strictly_inside(const Point& x, const Point& lo, const Point& hi) {
  return compare(x, lo) > 0 && compare(x, hi) < 0;
}

std::size_t available(const Enumeration& e, std::size_t wanted) {
  auto cap = e.capacity();
  return cap ? std::min(wanted, *cap) : wanted;
}

WidthSchedule geometric(std::string label, Rational first, long ratio_den) {
  return WidthSchedule{std::move(label), [first, ratio_den](std::size_t n) {
                         return first * Rational::pow(ratio_den, -static_cast<long>(n - 1));
                       }};
}

}  // namespace

// ---------------------------------------------------------------------------

ConstructionOutput cantor1874(const Enumeration& e, const IntervalQ& bounds, std::size_t pairs,
                              const Cantor1874Options& options) {
  if (!bounds.is_closed() || !(bounds.lo() < bounds.hi())) {
    throw Error(ErrorCode::domain, "cantor1874 needs a closed interval with lo < hi, got " + bounds.to_string());
  }

  enum class Tag { outside, endpoint, unpaired };
  struct Scan {
    Tag tag;
    std::size_t stage;
  };

  Construction result;
  result.method = "cantor1874";
  Point lo = bounds.lo();
  Point hi = bounds.hi();
  std::vector<Scan> scans;
  std::optional<std::pair<std::size_t, Point>> first;
  const std::size_t limit = available(e, options.scan_limit);

  std::size_t k = 0;
  while (result.endpoints.size() < pairs && k < limit) {
    ++k;
    const Point w = require_point(e, k);
    const std::size_t stage = result.endpoints.size();
    if (!strictly_inside(w, lo, hi)) {
      scans.push_back({Tag::outside, stage});
      continue;
    }
    scans.push_back({Tag::endpoint, stage + 1});
    if (!first) {
      first.emplace(k, w);
      continue;
    }
    if (compare(w, first->second) == 0) continue;  // repeat of the pending value
    const bool first_low = compare(first->second, w) < 0;
    Point a = first_low ? first->second : w;
    Point b = first_low ? w : first->second;
    result.endpoint_indices.emplace_back(first_low ? first->first : k, first_low ? k : first->first);
    result.endpoints.emplace_back(a, b);
    lo = std::move(a);
    hi = std::move(b);
    first.reset();
  }
  const std::size_t stages = result.endpoints.size();
  for (auto& s : scans) {
    if (s.tag == Tag::endpoint && s.stage > stages) s.tag = Tag::unpaired;
  }
  result.scanned = k;
  result.early_termination = stages < pairs;

  // Rational inner copy of the last open interval, halved away from a pending value.
  Rational lo_r = bounds.lo();
  Rational hi_r = bounds.hi();
  if (stages > 0) {
    for (unsigned bits = kStartBits;; bits *= 2) {
      lo_r = bracket(lo, bits).second;
      hi_r = bracket(hi, bits).first;
      if (lo_r < hi_r) break;
      if (bits > kMaxBits) throw Error(ErrorCode::domain, "cantor1874: interval too narrow to rationalize");
    }
  }
  std::optional<IntervalQ> unpaired_half;
  if (first && strictly_inside(first->second, Point(lo_r), Point(hi_r))) {
    const Rational mid = midpoint(lo_r, hi_r);
    if (compare(first->second, Point(mid)) >= 0) {
      hi_r = mid;
    } else {
      lo_r = mid;
    }
    unpaired_half = IntervalQ::open(lo_r, hi_r);
  }
  const Rational quarter = (hi_r - lo_r) / Rational(4);
  result.enclosure = IntervalQ::closed(lo_r + quarter, hi_r - quarter);
  result.eta = result.enclosure.midpoint();

  // Chain: bounds, then rational hulls of I_n; and the open intervals that
  // certify exclusion, each squeezed between I_n's endpoints and the enclosure.
  std::vector<IntervalQ> chain{bounds};
  std::vector<IntervalQ> excluders{IntervalQ::open(bounds.lo(), bounds.hi())};
  Rational hull_lo = bounds.lo();
  Rational hull_hi = bounds.hi();
  for (const auto& [a, b] : result.endpoints) {
    hull_lo = rational_below(a, hull_lo);
    hull_hi = rational_above(b, hull_hi);
    chain.push_back(IntervalQ::closed(hull_lo, hull_hi));
    const Rational in_lo = std::holds_alternative<Rational>(a) ? std::get<Rational>(a)
                                                                : rational_between(result.enclosure.lo(), a);
    const Rational in_hi = std::holds_alternative<Rational>(b) ? std::get<Rational>(b)
                                                                : rational_between(result.enclosure.hi(), b);
    excluders.push_back(IntervalQ::open(in_lo, in_hi));
  }
  result.value = NestedReal(std::move(chain));

  ExclusionCertificate cert;
  cert.method = result.method;
  for (std::size_t i = 0; i < scans.size(); ++i) {
    ExclusionRound round;
    round.index = i + 1;
    round.reason = ExclusionReason::outside_interval;
    round.excluded_by = scans[i].tag == Tag::unpaired ? *unpaired_half : excluders[scans[i].stage];
    cert.rounds.push_back(std::move(round));
  }
  return {std::move(result), std::move(cert)};
}

// ---------------------------------------------------------------------------

ConstructionOutput trisect(const Enumeration& e, std::size_t depth) {
  Construction result;
  result.method = "trisect";
  ExclusionCertificate cert;
  cert.method = result.method;
  const std::size_t steps = available(e, depth);
  result.early_termination = steps < depth;

  std::vector<IntervalQ> chain{IntervalQ::unit()};
  for (std::size_t n = 1; n <= steps; ++n) {
    const Point w = require_point(e, n);
    const IntervalQ& current = chain.back();
    const Rational third = current.width() / Rational(3);
    std::optional<IntervalQ> pick;
    for (int t = 0; t < 3 && !pick; ++t) {
      IntervalQ candidate = IntervalQ::closed(current.lo() + third * Rational(t),
                                              current.lo() + third * Rational(t + 1));
      if (!candidate.contains(w)) pick = std::move(candidate);
    }
    // A point lies in at most two closed thirds.
    chain.push_back(*pick);
    cert.rounds.push_back({n, ExclusionReason::outside_interval, *pick, std::nullopt, false});
  }
  result.scanned = steps;
  result.enclosure = chain.back();
  result.eta = result.enclosure.midpoint();
  result.value = NestedReal(std::move(chain), geometric("3^-(n-1)", Rational(1), 3));
  return {std::move(result), std::move(cert)};
}

// ---------------------------------------------------------------------------

ConstructionOutput diagonal(const Enumeration& e, unsigned base, std::size_t depth) {
  if (base < 2 || base > 36) {
    throw Error(ErrorCode::domain, "diagonal base must lie in [2,36], got " + std::to_string(base));
  }
  Construction result;
  result.method = "diagonal";
  ExclusionCertificate cert;
  cert.method = result.method;
  const std::size_t steps = available(e, depth);
  result.early_termination = steps < depth;
  result.scanned = steps;

  const unsigned high = base >= 4 ? std::min(5u, base - 2) : 0;
  const unsigned low = base >= 4 ? high - 1 : 0;

  std::vector<std::uint8_t> out;
  std::vector<DigitStream> rows;
  for (std::size_t n = 1; n <= steps; ++n) {
    const Element element = e.at(n);
    try {
      rows.push_back(digits_of(element, base, n));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::insufficient_digits) throw;
      throw Error(ErrorCode::insufficient_digits,
                  "row " + std::to_string(n) + " has fewer than " + std::to_string(n) + " digits",
                  std::to_string(n));
    }
    const unsigned f = rows.back().digit(n);
    unsigned d = 0;
    if (base == 2) {
      d = 1 - f;
    } else if (base == 3) {
      d = f != 1 ? 1 : 2;
    } else {
      d = f != high ? high : low;
    }
    out.push_back(static_cast<std::uint8_t>(d));
  }
  const DigitStream digits(base, out);

  // Chain: for bases >= 4 the reals whose digits all lie in [low, high]
  // after the prefix; for bases 2 and 3 the prefix cells.
  std::vector<IntervalQ> chain;
  const Rational b(static_cast<long long>(base));
  Rational prefix(0);
  Rational scale(1);
  const Rational lo_frac = base >= 4 ? Rational(low, base - 1) : Rational(0);
  const Rational hi_frac = base >= 4 ? Rational(high, base - 1) : Rational(1);
  for (std::size_t n = 0; n <= steps; ++n) {
    if (n > 0) {
      scale /= b;
      prefix += Rational(out[n - 1]) * scale;
    }
    chain.push_back(IntervalQ::closed(prefix + lo_frac * scale, prefix + hi_frac * scale));
  }

  const bool real_claims_allowed =
      e.kind() == EnumerationKind::dyadics_both_reps || e.kind() == EnumerationKind::digit_grid;
  const Rational unit = Rational::pow(static_cast<long>(base), -static_cast<long>(steps));
  for (std::size_t n = 1; n <= steps; ++n) {
    ExclusionRound round;
    round.index = n;
    round.reason = ExclusionReason::digit_mismatch;
    round.position = n;
    if (base >= 4) {
      round.excluded_by = chain[n];
    } else if (real_claims_allowed && rows[n - 1].size() >= steps) {
      const Rational gap = (digits.prefix_value(steps) - rows[n - 1].prefix_value(steps)).abs();
      round.value_separated = unit < gap;
    }
    cert.rounds.push_back(std::move(round));
  }

  result.enclosure = chain.back();
  result.eta = result.enclosure.midpoint();
  result.digits = digits;
  const Rational first_width = hi_frac - lo_frac;
  result.value = NestedReal(std::move(chain),
                            geometric(base >= 4 ? "base^-(n-1)/(base-1)" : "base^-(n-1)", first_width,
                                      static_cast<long>(base)));
  return {std::move(result), std::move(cert)};
}

// ---------------------------------------------------------------------------

namespace {

// A point of P in the open region other than w.
std::optional<Rational> sample_avoiding(const PerfectSetOracle& p, const IntervalQ& region, const Point& w) {
  if (!region.contains(w)) return p.sample(region);
  for (unsigned bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    auto [w_lo, w_hi] = bracket(w, bits);
    if (region.lo() < w_lo) {
      if (auto s = p.sample(IntervalQ::open(region.lo(), w_lo))) return s;
    }
    if (w_hi < region.hi()) {
      if (auto s = p.sample(IntervalQ::open(w_hi, region.hi()))) return s;
    }
    if (w_lo == w_hi) break;  // rational w: both sides were exact
  }
  return std::nullopt;
}

}  // namespace

ConstructionOutput perfect_escape(const PerfectSetOracle& p, const Enumeration& e, std::size_t depth) {
  Construction result;
  result.method = "perfect";
  ExclusionCertificate cert;
  cert.method = result.method;
  const std::size_t steps = available(e, depth);
  result.early_termination = steps < depth;
  result.scanned = steps;

  IntervalQ ball = IntervalQ::open(Rational(-1), Rational(2));
  std::optional<Rational> center = p.sample(ball);
  if (!center) throw Error(ErrorCode::oracle_violation, "perfect set is empty");
  std::vector<IntervalQ> chain;
  for (std::size_t n = 1; n <= steps; ++n) {
    const Point w = require_point(e, n);
    center = sample_avoiding(p, ball, w);
    if (!center) {
      throw Error(ErrorCode::oracle_violation,
                  "no point of " + std::string(to_string(p.kind())) + " in " + ball.to_string() +
                      " other than omega_" + std::to_string(n),
                  ball.to_string());
    }
    const Rational& c = *center;
    Rational radius = min((c - ball.lo()) / Rational(2), (ball.hi() - c) / Rational(2));
    radius = min(radius, half_distance_floor(c, w));
    radius = min(radius, Rational::pow2(-static_cast<long>(n - 1)));
    ball = IntervalQ::open(c - radius, c + radius);
    chain.push_back(ball.closure());
    cert.rounds.push_back({n, ExclusionReason::outside_interval, ball.closure(), std::nullopt, false});
  }
  result.enclosure = ball.closure();
  result.eta = *center;
  result.value = NestedReal(std::move(chain), geometric("2^-(n-2)", Rational(2), 2));
  return {std::move(result), std::move(cert)};
}

// ---------------------------------------------------------------------------

ConstructionOutput baire_point(const std::vector<DenseOpenSet>& g, const IntervalQ& b, std::size_t depth) {
  if (b.kind() != IntervalKind::open) {
    throw Error(ErrorCode::domain, "baire_point needs an open ball, got " + b.to_string());
  }
  Construction result;
  result.method = "baire";
  ExclusionCertificate cert;
  cert.method = result.method;
  const std::size_t steps = std::min(depth, g.size());
  result.early_termination = steps < depth;
  result.scanned = steps;

  IntervalQ region = b;
  std::optional<Rational> previous_radius;
  Rational first_radius;
  Rational x = b.midpoint();
  std::vector<IntervalQ> chain;
  for (std::size_t n = 1; n <= steps; ++n) {
    const auto& pieces = g[n - 1].pieces();
    const auto hit = std::find_if(pieces.begin(), pieces.end(),
                                  [&](const IntervalQ& piece) { return piece.intersects(region); });
    if (hit == pieces.end()) {
      throw Error(ErrorCode::density_violation,
                  "G_" + std::to_string(n) + " has no piece meeting " + region.to_string(), std::to_string(n));
    }
    const IntervalQ meet = IntervalQ::open(max(hit->lo(), region.lo()), min(hit->hi(), region.hi()));
    x = meet.midpoint();
    Rational radius = meet.width() / Rational(4);
    if (previous_radius) radius = min(radius, *previous_radius / Rational(2));
    if (n == 1) first_radius = radius;
    previous_radius = radius;
    region = IntervalQ::open(x - radius, x + radius);
    chain.push_back(region.closure());
    cert.rounds.push_back({n, ExclusionReason::outside_interval, *hit, std::nullopt, false});
  }
  result.enclosure = steps > 0 ? chain.back() : b.closure();
  result.eta = x;
  if (steps > 0) {
    result.value = NestedReal(std::move(chain), geometric("2*eps_1*2^-(n-1)", first_radius * Rational(2), 2));
  }
  return {std::move(result), std::move(cert)};
}

std::vector<DenseOpenSet> punctured_sets(const Enumeration& e, std::size_t depth) {
  std::vector<DenseOpenSet> sets;
  const std::size_t steps = available(e, depth);
  for (std::size_t n = 1; n <= steps; ++n) {
    const Point w = require_point(e, n);
    if (const auto* r = std::get_if<Rational>(&w)) {
      sets.push_back(DenseOpenSet::punctured(*r));
    } else {
      auto [lo, hi] = bracket(w, kStartBits);
      sets.emplace_back(std::vector<IntervalQ>{IntervalQ::open(Rational(-1), lo), IntervalQ::open(hi, Rational(2))},
                        false);
    }
  }
  return sets;
}

VerifyReport verify_containment(const Construction& result, const ExclusionCertificate& cert,
                                const std::vector<DenseOpenSet>& g, const IntervalQ& b) {
  VerifyReport report;
  auto fail = [&](std::optional<std::size_t> round, std::string message) {
    report.ok = false;
    report.failed_round = round;
    report.message = std::move(message);
    return report;
  };
  if (!result.enclosure.is_subset_of(b)) return fail(std::nullopt, "enclosure not inside B");
  const auto& chain = result.value.chain();
  if (cert.rounds.size() > g.size() || cert.rounds.size() != chain.size()) {
    return fail(std::nullopt, "round count does not match the chain");
  }
  for (std::size_t n = 1; n <= cert.rounds.size(); ++n) {
    const auto& round = cert.rounds[n - 1];
    if (!round.excluded_by) return fail(n, "missing piece");
    const auto& pieces = g[n - 1].pieces();
    if (std::find(pieces.begin(), pieces.end(), *round.excluded_by) == pieces.end()) {
      return fail(n, "recorded piece is not a piece of G_" + std::to_string(n));
    }
    for (std::size_t m = n; m <= chain.size(); ++m) {
      if (!chain[m - 1].is_subset_of(*round.excluded_by)) {
        return fail(n, "link " + std::to_string(m) + " leaves G_" + std::to_string(n));
      }
    }
    ++report.rounds_checked;
  }
  report.message = "containment OK (" + std::to_string(report.rounds_checked) + " sets)";
  return report;
}

}  // namespace dforge
