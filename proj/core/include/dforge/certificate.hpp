#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dforge/digits.hpp"
#include "dforge/enumeration.hpp"
#include "dforge/interval.hpp"
#include "dforge/nested_real.hpp"

namespace dforge {

enum class ExclusionReason {
  outside_interval,  // omega_k lies outside an interval that contains the enclosure
  digit_mismatch,    // output digit k differs from omega_k's digit k
};

std::string_view to_string(ExclusionReason r) noexcept;
ExclusionReason parse_exclusion_reason(std::string_view text);

struct ExclusionRound {
  std::size_t index = 0;
  ExclusionReason reason = ExclusionReason::outside_interval;
  std::optional<IntervalQ> excluded_by;
  /// Digit position, for digit_mismatch rounds.
  std::optional<std::size_t> position;
  /// Digit rounds only: the output prefix and omega_k's prefix differ by more
  /// than base^-N, so the two reals differ whatever digits follow.
  bool value_separated = false;
};

/// Per-index evidence that omega_k is not the constructed value. Rounds are
/// numbered 1..m without gaps; m is the number of enumerated values covered.
struct ExclusionCertificate {
  std::string method;
  std::vector<ExclusionRound> rounds;

  std::size_t covered() const noexcept { return rounds.size(); }
};

/// Output of an escape construction.
struct Construction {
  std::string method;
  /// Certified nested chain; for the digit method at bases 2 and 3 it is the
  /// chain of prefix cells.
  NestedReal value{std::vector<IntervalQ>{}};
  /// Final enclosure of the constructed real; lies inside value.last().
  IntervalQ enclosure = IntervalQ::unit();
  /// Representative point of the enclosure.
  Rational eta;
  std::optional<DigitStream> digits;
  /// The construction stopped before the requested depth.
  bool early_termination = false;
  /// Number of enumeration indices examined.
  std::size_t scanned = 0;
  /// cantor1874: exact endpoints (a_n, b_n) and their enumeration indices.
  std::vector<std::pair<Point, Point>> endpoints;
  std::vector<std::pair<std::size_t, std::size_t>> endpoint_indices;
};

struct VerifyReport {
  bool ok = true;
  std::size_t rounds_checked = 0;
  std::optional<std::size_t> failed_round;
  std::string message;
};

/// Independent audit: re-derives every exclusion from the enumeration using
/// only exact interval and digit arithmetic. Never throws for a bad
/// certificate; the first failure is reported.
VerifyReport verify_certificate(const Construction& result, const ExclusionCertificate& cert,
                                const Enumeration& e);

/// omega_k as an exact point; streams without a known value raise
/// unsupported_comparison naming k.
Point require_point(const Enumeration& e, std::size_t k);

/// Digit k of omega_k in the given base: read from the stream when omega_k
/// is one in that base, otherwise extracted from the exact point
/// (no_trailing_zeros).
DigitStream digits_of(const Element& element, unsigned base, std::size_t n);

}  // namespace dforge
