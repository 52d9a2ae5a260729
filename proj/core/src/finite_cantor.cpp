#include "dforge/finite_cantor.hpp"

#include <algorithm>
#include <set>

#include "dforge/error.hpp"

namespace dforge {

FiniteSet::FiniteSet(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.size() > max_size) {
    throw Error(ErrorCode::domain, "finite sets hold at most 12 elements, got " + std::to_string(elements_.size()));
  }
  std::set<std::string> seen(elements_.begin(), elements_.end());
  if (seen.size() != elements_.size()) throw Error(ErrorCode::domain, "finite set elements must be distinct");
}

FiniteSet FiniteSet::of_size(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return FiniteSet(std::move(names));
}

std::uint32_t FiniteSet::mask_of(const std::vector<std::string>& subset) const {
  std::uint32_t mask = 0;
  for (const auto& name : subset) {
    const auto it = std::find(elements_.begin(), elements_.end(), name);
    if (it == elements_.end()) throw Error(ErrorCode::domain, "'" + name + "' is not an element of X", name);
    mask |= std::uint32_t{1} << (it - elements_.begin());
  }
  return mask;
}

std::vector<std::string> FiniteSet::subset_of(std::uint32_t mask) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (mask >> i & 1u) out.push_back(elements_[i]);
  }
  return out;
}

std::uint32_t powerset_witness(std::size_t size, const std::vector<std::uint32_t>& f) {
  if (size > FiniteSet::max_size || f.size() != size) {
    throw Error(ErrorCode::domain, "f must assign a subset to each of the " + std::to_string(size) + " elements");
  }
  const std::uint32_t all = (std::uint32_t{1} << size) - 1;
  std::uint32_t y = 0;
  for (std::size_t i = 0; i < size; ++i) {
    if (f[i] & ~all) throw Error(ErrorCode::domain, "f(x" + std::to_string(i + 1) + ") is not a subset of X");
    if (!(f[i] >> i & 1u)) y |= std::uint32_t{1} << i;
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (f[i] == y) throw Error(ErrorCode::oracle_violation, "Y has a preimage");
  }
  return y;
}

std::vector<std::string> powerset_check(const FiniteSet& x,
                                        const std::map<std::string, std::vector<std::string>>& f) {
  std::vector<std::uint32_t> masks;
  for (const auto& name : x.elements()) {
    const auto it = f.find(name);
    if (it == f.end()) throw Error(ErrorCode::domain, "f is not defined at '" + name + "'", name);
    masks.push_back(x.mask_of(it->second));
  }
  if (f.size() != x.size()) throw Error(ErrorCode::domain, "f is defined outside X");
  return x.subset_of(powerset_witness(x.size(), masks));
}

std::vector<std::uint8_t> diagonal_row(const BinaryMatrix& m) {
  std::vector<std::uint8_t> b;
  b.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw Error(ErrorCode::domain, "matrix is not square at row " + std::to_string(i + 1));
    for (auto v : m[i]) {
      if (v > 1) throw Error(ErrorCode::domain, "matrix entries must be 0 or 1");
    }
    b.push_back(static_cast<std::uint8_t>(1 - m[i][i]));
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (b[i] == m[i][i]) throw Error(ErrorCode::oracle_violation, "row " + std::to_string(i + 1) + " matches b");
  }
  return b;
}

Rational cantor_metric(const DigitStream& x, const DigitStream& y) {
  if (x.base() != 2 || y.base() != 2) throw Error(ErrorCode::domain, "the Cantor metric compares base-2 streams");
  const std::size_t common = std::min(x.size(), y.size());
  for (std::size_t i = 1; i <= common; ++i) {
    if (x.digit(i) != y.digit(i)) return Rational::pow2(-static_cast<long>(i));
  }
  if (x.size() != y.size()) {
    throw Error(ErrorCode::insufficient_prefix,
                "prefixes agree on all " + std::to_string(common) + " shared digits but differ in length");
  }
  return Rational(0);
}

}  // namespace dforge
