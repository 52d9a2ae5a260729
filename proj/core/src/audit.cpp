// Certificate audit, recomputed from the enumeration with interval and digit
// arithmetic alone.

#include <string>

#include "dforge/certificate.hpp"
#include "dforge/error.hpp"

namespace dforge {

std::string_view to_string(ExclusionReason r) noexcept {
  switch (r) {
    case ExclusionReason::outside_interval: return "outside_interval";
    case ExclusionReason::digit_mismatch: return "digit_mismatch";
  }
  return "outside_interval";
}

ExclusionReason parse_exclusion_reason(std::string_view text) {
  if (text == "outside_interval") return ExclusionReason::outside_interval;
  if (text == "digit_mismatch") return ExclusionReason::digit_mismatch;
  throw Error(ErrorCode::parse, "unknown exclusion reason '" + std::string(text) + "'");
}

Point require_point(const Enumeration& e, std::size_t k) {
  const Element element = e.at(k);
  if (auto p = element.point()) return *p;
  throw Error(ErrorCode::unsupported_comparison,
              "element " + std::to_string(k) + " (" + element.to_string() +
                  ") is a bare digit prefix with no exact value",
              std::to_string(k));
}

DigitStream digits_of(const Element& element, unsigned base, std::size_t n) {
  if (const DigitStream* s = element.stream()) {
    if (s->base() != base) {
      if (element.exact) return to_digits(*element.exact, base, n);
      throw Error(ErrorCode::configuration, "stream " + s->to_string() + " is not in base " +
                                                std::to_string(base));
    }
    if (s->size() < n) {
      throw Error(ErrorCode::insufficient_digits,
                  "stream " + s->to_string() + " has fewer than " + std::to_string(n) + " digits",
                  std::to_string(n));
    }
    return *s;
  }
  return to_digits(*element.point(), base, n);
}

namespace {

VerifyReport fail(VerifyReport report, std::optional<std::size_t> round, std::string message) {
  report.ok = false;
  report.failed_round = round;
  report.message = std::move(message);
  return report;
}

}  // namespace

VerifyReport verify_certificate(const Construction& result, const ExclusionCertificate& cert,
                                const Enumeration& e) {
  VerifyReport report;
  const auto& chain = result.value.chain();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!chain[i].is_closed()) return fail(report, std::nullopt, "chain link " + std::to_string(i + 1) + " not closed");
  }
  if (auto bad = first_nesting_violation(chain)) {
    return fail(report, std::nullopt, "chain not nested at link " + std::to_string(*bad));
  }
  if (!chain.empty() && !result.enclosure.is_subset_of(chain.back())) {
    return fail(report, std::nullopt, "enclosure " + result.enclosure.to_string() +
                                          " not inside last link " + chain.back().to_string());
  }

  for (std::size_t i = 0; i < cert.rounds.size(); ++i) {
    const ExclusionRound& round = cert.rounds[i];
    const std::size_t k = i + 1;
    const std::string where = "round " + std::to_string(k) + ": ";
    if (round.index != k) {
      return fail(report, k, where + "expected index " + std::to_string(k) + ", found " +
                                 std::to_string(round.index));
    }
    if (!e.has(k)) return fail(report, k, where + "enumeration has no element " + std::to_string(k));
    const Element omega = e.at(k);

    try {
      if (round.excluded_by) {
        const IntervalQ& x = *round.excluded_by;
        if (!result.enclosure.is_subset_of(x)) {
          return fail(report, k, where + "enclosure " + result.enclosure.to_string() + " not inside " +
                                     x.to_string());
        }
        if (membership(omega, x) != Membership::outside) {
          return fail(report, k, where + omega.to_string() + " not excluded by " + x.to_string());
        }
      } else if (round.reason == ExclusionReason::outside_interval) {
        return fail(report, k, where + "missing excluding interval");
      }

      if (round.reason == ExclusionReason::digit_mismatch) {
        if (!result.digits) return fail(report, k, where + "digit round without output digits");
        const DigitStream& out = *result.digits;
        if (round.position != k) return fail(report, k, where + "digit position must equal the index");
        const DigitStream row = digits_of(omega, out.base(), k);
        if (out.digit(k) == row.digit(k)) {
          return fail(report, k, where + "output digit " + std::to_string(out.digit(k)) +
                                     " equals the row digit at position " + std::to_string(k));
        }
        if (round.value_separated) {
          const std::size_t n = out.size();
          const DigitStream full = digits_of(omega, out.base(), n);
          const Rational gap = (out.prefix_value(n) - full.prefix_value(n)).abs();
          const Rational unit = Rational::pow(static_cast<long>(out.base()), -static_cast<long>(n));
          if (!(unit < gap)) {
            return fail(report, k, where + "claimed value separation fails: gap " + gap.to_string() +
                                       " <= " + unit.to_string());
          }
        }
      }
    } catch (const Error& err) {
      return fail(report, k, where + err.what());
    }
    ++report.rounds_checked;
  }
  report.message = "certificate OK (" + std::to_string(report.rounds_checked) + "/" +
                   std::to_string(cert.rounds.size()) + " rounds)";
  return report;
}

}  // namespace dforge
