#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "dforge/enumeration.hpp"
#include "dforge/interval.hpp"
#include "dforge/rational.hpp"

namespace dforge {

/// A closed target and open pieces in caller order. Pieces are never sorted
/// or merged; index order decides the greedy scan.
struct Cover {
  IntervalQ target = IntervalQ::unit();
  std::vector<IntervalQ> pieces;

  /// Validates that every piece is open.
  Cover(IntervalQ target_interval, std::vector<IntervalQ> open_pieces);
  /// One "(lo,hi)" per line; blank lines skipped.
  static Cover parse(IntervalQ target_interval, std::string_view text);
};

struct LengthLedger {
  std::vector<std::pair<std::size_t, Rational>> terms;
  Rational total;
};

/// 1-based indices of a finite subcover: first the lowest index whose piece
/// holds target.lo, then repeatedly the lowest index whose piece holds the
/// previous piece's right end. Throws not_a_cover with the uncovered point.
std::vector<std::size_t> heine_borel_subcover(const Cover& c);

/// Independent check that the indexed pieces form the endpoint chain
/// a_1 < lo, a_{k+1} < b_k < b_{k+1}, hi < b_p.
bool is_subcover_chain(const Cover& c, const std::vector<std::size_t>& indices);

/// Largest left endpoint of a nested chain of closed intervals.
Rational nested_witness(const std::vector<IntervalQ>& chain);

/// I_j = (x_j - eps/2^(j+2), x_j + eps/2^(j+2)), j = 1..n. Irrational x_j is
/// centered at a rational within eps/2^(j+3), so x_j stays inside I_j.
std::pair<Cover, LengthLedger> measure_zero_cover(const Enumeration& e, const Rational& epsilon, std::size_t n);

struct LengthBound {
  std::vector<std::size_t> chain;
  Rational bound;
};

/// Sum of piece lengths along the greedy subcover chain; exceeds |target|.
LengthBound cover_length_lower_bound(const Cover& c);

struct Located {
  IntervalQ interval;
  /// depth exceeds floor(log2 M): the counts no longer mean much.
  bool under_resolved = false;
};

/// Bisect [a,b] depth times, keeping the closed half that holds at least as
/// many of the first m terms as the other half (ties go left).
Located bw_locate(const std::function<Rational(std::size_t)>& seq, std::size_t m, std::size_t depth,
                  const IntervalQ& range = IntervalQ::unit());

}  // namespace dforge
