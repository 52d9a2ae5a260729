#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dforge/interval.hpp"

namespace dforge {

/// Upper bound on the width of the n-th link (1-based), with a label for
/// reports ("3^-n", "2^-n").
struct WidthSchedule {
  std::string label;
  std::function<Rational(std::size_t)> bound;
};

/// A constructed real as a finite chain of closed intervals
/// I_1 ⊇ I_2 ⊇ ... ⊇ I_N. Construction verifies every link exactly.
class NestedReal {
 public:
  /// Throws nesting_violation naming the first bad link (1-based: link n
  /// joins I_n and I_{n+1}), or if a width exceeds the schedule.
  explicit NestedReal(std::vector<IntervalQ> chain,
                      std::optional<WidthSchedule> schedule = std::nullopt);

  const std::vector<IntervalQ>& chain() const noexcept { return chain_; }
  std::size_t depth() const noexcept { return chain_.size(); }
  const std::optional<WidthSchedule>& schedule() const noexcept { return schedule_; }
  const IntervalQ& last() const;

  /// I_k, 1-based.
  const IntervalQ& refine(std::size_t k) const;

 private:
  std::vector<IntervalQ> chain_;
  std::optional<WidthSchedule> schedule_;
};

/// Index of the first link where I_{n+1} is not inside I_n, or nullopt.
std::optional<std::size_t> first_nesting_violation(const std::vector<IntervalQ>& chain);

}  // namespace dforge
