#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dforge/certificate.hpp"
#include "dforge/rational.hpp"
#include "dforge/surd.hpp"

namespace dforge {

/// Finite prefix a(1..c) of a rational Cauchy sequence carrying the declared
/// modulus |a(m) - a(n)| <= 2^-(3 min(m,n) + 2).
class CauchyReal {
 public:
  /// Throws modulus_violation naming the first bad pair (m, n).
  explicit CauchyReal(std::vector<Rational> terms);

  /// Stores terms as given; wenner_escape checks them and names the input.
  static CauchyReal unchecked(std::vector<Rational> terms);
  /// Rational approximations within 2^-(3n+4) of x.
  static CauchyReal from_point(const Point& x, std::size_t count);
  static Rational modulus(std::size_t k) { return Rational::pow2(-static_cast<long>(3 * k + 2)); }

  std::size_t capacity() const noexcept { return terms_.size(); }
  /// a(n), 1-based.
  const Rational& term(std::size_t n) const;
  const std::vector<Rational>& terms() const noexcept { return terms_; }

 private:
  CauchyReal() = default;
  std::vector<Rational> terms_;
};

/// First stored pair (m, n), m > n, with |a(m) - a(n)| > 2^-(3n+2).
std::optional<std::pair<std::size_t, std::size_t>> first_modulus_violation(const std::vector<Rational>& terms);

struct WennerRound {
  std::size_t k = 0;
  /// Level-k index of input k.
  std::size_t n_k = 0;
  /// a_k(N_k).
  Rational anchor;
  Rational b;
};

struct WennerCertificate {
  std::vector<WennerRound> rounds;
};

using WennerOutput = std::pair<CauchyReal, WennerCertificate>;

/// b_1 = a_1(N_1) + 1/16; b_k = b_{k-1} +- 3 * 2^-(3k+2), stepping away from
/// a_k(N_k) (a tie steps up). N_k is the least index above N_{k-1} after which
/// the stored terms of input k stay within 2^-(3k+2) of each other.
WennerOutput wenner_escape(const std::vector<CauchyReal>& inputs, std::size_t n);

/// Exact recheck of the step bound, the separation bound and the floor
/// |b_n - a_k(n)| > (3/28) 2^-3k for stored N_k <= n.
VerifyReport verify_wenner(const CauchyReal& b, const WennerCertificate& cert,
                           const std::vector<CauchyReal>& inputs);

}  // namespace dforge
