#include "dforge/cauchy.hpp"

#include <string>

#include "dforge/error.hpp"

namespace dforge {

std::optional<std::pair<std::size_t, std::size_t>> first_modulus_violation(const std::vector<Rational>& terms) {
  for (std::size_t n = 1; n <= terms.size(); ++n) {
    const Rational bound = CauchyReal::modulus(n);
    for (std::size_t m = n + 1; m <= terms.size(); ++m) {
      if (bound < (terms[m - 1] - terms[n - 1]).abs()) return std::make_pair(m, n);
    }
  }
  return std::nullopt;
}

CauchyReal::CauchyReal(std::vector<Rational> terms) : terms_(std::move(terms)) {
  if (auto bad = first_modulus_violation(terms_)) {
    const std::string pair = "(" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ")";
    throw Error(ErrorCode::modulus_violation, "terms " + pair + " differ by more than 2^-" +
                                                  std::to_string(3 * bad->second + 2),
                pair);
  }
}

CauchyReal CauchyReal::unchecked(std::vector<Rational> terms) {
  CauchyReal out;
  out.terms_ = std::move(terms);
  return out;
}

CauchyReal CauchyReal::from_point(const Point& x, std::size_t count) {
  std::vector<Rational> terms;
  terms.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) {
    const Rational tolerance = Rational::pow2(-static_cast<long>(3 * n + 4));
    for (unsigned bits = static_cast<unsigned>(3 * n + 4);; bits += 8) {
      auto [lo, hi] = bracket(x, bits);
      if (hi - lo <= tolerance) {
        terms.push_back(lo);
        break;
      }
    }
  }
  return CauchyReal(std::move(terms));
}

const Rational& CauchyReal::term(std::size_t n) const {
  if (n == 0 || n > terms_.size()) {
    throw Error(ErrorCode::index, "term " + std::to_string(n) + " outside 1.." + std::to_string(terms_.size()));
  }
  return terms_[n - 1];
}

namespace {

std::size_t level_index(const CauchyReal& a, std::size_t k, std::size_t previous) {
  const Rational bound = CauchyReal::modulus(k);
  const auto& t = a.terms();
  // Smallest N such that every stored pair at or beyond N is within bound;
  // scanning downward keeps the running spread of the tail.
  std::size_t best = t.size();
  Rational lo = t.back();
  Rational hi = t.back();
  for (std::size_t n = t.size(); n > previous + 1; --n) {
    lo = min(lo, t[n - 2]);
    hi = max(hi, t[n - 2]);
    if (!(hi - lo < bound)) break;
    best = n - 1;
  }
  return best;
}

}  // namespace

WennerOutput wenner_escape(const std::vector<CauchyReal>& inputs, std::size_t n) {
  if (inputs.size() < n) {
    throw Error(ErrorCode::domain, "wenner_escape needs " + std::to_string(n) + " inputs, got " +
                                       std::to_string(inputs.size()));
  }
  WennerCertificate cert;
  std::vector<Rational> b;
  std::size_t previous = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const CauchyReal& a = inputs[k - 1];
    if (a.capacity() <= previous) {
      throw Error(ErrorCode::insufficient_prefix,
                  "input " + std::to_string(k) + " has " + std::to_string(a.capacity()) +
                      " terms, needs more than " + std::to_string(previous),
                  std::to_string(k));
    }
    if (auto bad = first_modulus_violation(a.terms())) {
      const std::string pair = "(" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ")";
      throw Error(ErrorCode::modulus_violation, "input " + std::to_string(k) + " breaks its modulus at " + pair,
                  std::to_string(k) + ":" + pair);
    }
    const std::size_t level = level_index(a, k, previous);
    const Rational& anchor = a.term(level);
    Rational next;
    if (k == 1) {
      next = anchor + Rational(1, 16);
    } else {
      const Rational step = Rational(3) * Rational::pow2(-static_cast<long>(3 * k + 2));
      next = anchor <= b.back() ? b.back() + step : b.back() - step;
    }
    b.push_back(next);
    cert.rounds.push_back({k, level, anchor, next});
    previous = level;
  }
  return {CauchyReal(std::move(b)), std::move(cert)};
}

VerifyReport verify_wenner(const CauchyReal& b, const WennerCertificate& cert,
                           const std::vector<CauchyReal>& inputs) {
  VerifyReport report;
  auto fail = [&](std::size_t k, std::string message) {
    report.ok = false;
    report.failed_round = k;
    report.message = "round " + std::to_string(k) + ": " + std::move(message);
    return report;
  };
  if (cert.rounds.size() != b.capacity() || inputs.size() < b.capacity()) {
    report.ok = false;
    report.message = "certificate, output and inputs disagree in length";
    return report;
  }
  std::size_t previous = 0;
  for (std::size_t k = 1; k <= cert.rounds.size(); ++k) {
    const WennerRound& round = cert.rounds[k - 1];
    const CauchyReal& a = inputs[k - 1];
    if (round.k != k) return fail(k, "index out of order");
    if (round.b != b.term(k)) return fail(k, "b_k differs from the output term");
    if (round.n_k <= previous || round.n_k > a.capacity()) return fail(k, "N_k not strictly increasing");
    if (round.anchor != a.term(round.n_k)) return fail(k, "anchor is not a_k(N_k)");
    const Rational level = Rational::pow2(-static_cast<long>(3 * k));
    if (k > 1 && !((b.term(k) - b.term(k - 1)).abs() < level)) return fail(k, "step not below 2^-3k");
    if ((b.term(k) - round.anchor).abs() < level / Rational(2)) return fail(k, "separation below 2^-(3k+1)");
    const Rational floor = Rational(3, 28) * level;
    for (std::size_t m = round.n_k; m <= b.capacity() && m <= a.capacity(); ++m) {
      if (!(floor < (b.term(m) - a.term(m)).abs())) {
        return fail(k, "|b_" + std::to_string(m) + " - a_k(" + std::to_string(m) + ")| not above 3/28 * 2^-3k");
      }
    }
    previous = round.n_k;
    ++report.rounds_checked;
  }
  report.message = "certificate OK (" + std::to_string(report.rounds_checked) + "/" +
                   std::to_string(cert.rounds.size()) + " rounds)";
  return report;
}

}  // namespace dforge
