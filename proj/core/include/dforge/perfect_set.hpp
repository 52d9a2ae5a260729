#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dforge/interval.hpp"
#include "dforge/rational.hpp"

namespace dforge {

enum class PerfectSetKind { unit_interval, cantor_middle_thirds };

std::string_view to_string(PerfectSetKind kind) noexcept;
PerfectSetKind parse_perfect_set_kind(std::string_view text);

/// A concrete perfect subset P of [0,1] with exact sampling and membership.
class PerfectSetOracle {
 public:
  explicit PerfectSetOracle(PerfectSetKind kind) : kind_(kind) {}

  PerfectSetKind kind() const noexcept { return kind_; }

  /// A point of P inside the open interval, or nullopt exactly when the
  /// intersection is empty. For the Cantor set the point is an endpoint of
  /// some construction interval (a rational with denominator 3^m).
  std::optional<Rational> sample(const IntervalQ& open_interval) const;

  bool member(const Rational& x) const;

 private:
  PerfectSetKind kind_;
};

/// Finite union of open intervals realizing an open set inside [0,1].
/// Overlapping pieces are merged on construction; pieces that merely touch
/// stay separate because the shared endpoint is not in the set.
class DenseOpenSet {
 public:
  explicit DenseOpenSet(std::vector<IntervalQ> pieces, bool dense = true);

  /// [0,1] minus one rational point, as (-1, r) and (r, 2).
  static DenseOpenSet punctured(const Rational& r);

  const std::vector<IntervalQ>& pieces() const noexcept { return pieces_; }
  bool density_promise() const noexcept { return dense_; }
  bool contains(const Rational& x) const;

 private:
  std::vector<IntervalQ> pieces_;
  bool dense_;
};

}  // namespace dforge
