#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dforge/certificate.hpp"
#include "dforge/enumeration.hpp"
#include "dforge/perfect_set.hpp"

namespace dforge {

using ConstructionOutput = std::pair<Construction, ExclusionCertificate>;

struct Cantor1874Options {
  /// Highest enumeration index the interior scan may examine. Unbounded
  /// sources need a budget; finite lists also stop at their length.
  std::size_t scan_limit = 2048;
};

/// Nested intervals whose endpoints are the next-indexed pair of values
/// strictly inside the previous interval. Stops after `pairs` intervals or
/// when the scan runs out; the certificate covers every scanned index.
/// The enclosure is the middle half of the last open interval, first halved
/// away from an unpaired scanned value if there is one; eta is its midpoint.
ConstructionOutput cantor1874(const Enumeration& e, const IntervalQ& bounds, std::size_t pairs,
                              const Cantor1874Options& options = {});

/// Split into closed thirds and keep the leftmost third missing omega_n.
/// Chain I_0 = [0,1], ..., I_N with |I_n| = 3^-n.
ConstructionOutput trisect(const Enumeration& e, std::size_t depth);

/// Diagonal digit n differs from digit n of omega_n. Base 2 complements;
/// base 3 uses 1 (or 2 when the row digit is 1); bases >= 4 use
/// min(5, base-2) or one less, never 0 or base-1, so the output's expansion
/// is unique and every excluded row is excluded as a real number too.
ConstructionOutput diagonal(const Enumeration& e, unsigned base, std::size_t depth);

/// Shrinking balls around points of P, each closure inside the previous ball
/// and missing omega_n. B_0 = (-1, 2); radius of B_n is the minimum of half
/// the distance to the nearer end of B_{n-1}, half the distance to omega_n
/// and 2^-(n-1). eta is the center of the last ball, a point of P.
ConstructionOutput perfect_escape(const PerfectSetOracle& p, const Enumeration& e, std::size_t depth);

/// Balls with closures inside B ∩ G_1 ∩ ... ∩ G_n; each radius is at most
/// half the previous one. Rounds record the open piece of G_n holding the
/// closure of B_n.
ConstructionOutput baire_point(const std::vector<DenseOpenSet>& g, const IntervalQ& b, std::size_t depth);

/// G_n = [0,1] minus omega_n for n <= depth. Irrational points are removed
/// with a tiny rational bracket, which keeps G_n open (density is then only
/// promised away from that bracket).
std::vector<DenseOpenSet> punctured_sets(const Enumeration& e, std::size_t depth);

/// Checks refine(result, n) ⊆ the recorded piece of G_n, that the piece is a
/// piece of G_n, and that the enclosure lies in B.
VerifyReport verify_containment(const Construction& result, const ExclusionCertificate& cert,
                                const std::vector<DenseOpenSet>& g, const IntervalQ& b);

}  // namespace dforge
