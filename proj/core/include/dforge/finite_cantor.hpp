#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dforge/digits.hpp"
#include "dforge/rational.hpp"

namespace dforge {

/// At most 12 distinct tokens, in a fixed order.
class FiniteSet {
 public:
  static constexpr std::size_t max_size = 12;

  explicit FiniteSet(std::vector<std::string> elements);
  /// {x1, ..., xn}.
  static FiniteSet of_size(std::size_t n);

  const std::vector<std::string>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  /// Bit i stands for element i.
  std::uint32_t mask_of(const std::vector<std::string>& subset) const;
  std::vector<std::string> subset_of(std::uint32_t mask) const;

 private:
  std::vector<std::string> elements_;
};

/// Y = {x : x not in f(x)} as a mask, checked to have no preimage. f[i] is
/// the mask of f(element i).
std::uint32_t powerset_witness(std::size_t size, const std::vector<std::uint32_t>& f);

/// Same on named elements; a subset naming a non-element is a domain error.
std::vector<std::string> powerset_check(const FiniteSet& x,
                                        const std::map<std::string, std::vector<std::string>>& f);

using BinaryMatrix = std::vector<std::vector<std::uint8_t>>;

/// b(i) = 1 - M[i][i]; M must be square and binary.
std::vector<std::uint8_t> diagonal_row(const BinaryMatrix& m);

/// 2^-I with I the first 1-based position where two base-2 prefixes
/// disagree; 0 for equal prefixes of equal length.
Rational cantor_metric(const DigitStream& x, const DigitStream& y);

}  // namespace dforge
