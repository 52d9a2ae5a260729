#include <doctest.h>

#include "dforge/cauchy.hpp"
#include "dforge/error.hpp"
#include "gen.hpp"

using namespace dforge;
using dforge::testing::Gen;

namespace {

Rational p2(long e) { return Rational::pow2(e); }

std::vector<CauchyReal> constants(std::initializer_list<long long> values, std::size_t count) {
  std::vector<CauchyReal> out;
  for (auto v : values) out.emplace_back(std::vector<Rational>(count, Rational(v)));
  return out;
}

// Terms within 2^-(3n+3) of a random centre respect the modulus 2^-(3n+2).
CauchyReal random_real(Gen& g, std::size_t count) {
  const Rational centre = g.unit_rational(64);
  std::vector<Rational> terms;
  for (std::size_t n = 1; n <= count; ++n) {
    const Rational wobble = p2(-static_cast<long>(3 * n + 3)) * Rational(g.integer(-64, 64), 64);
    terms.push_back(centre + wobble);
  }
  return CauchyReal(std::move(terms));
}

}  // namespace

TEST_CASE("constant inputs") {
  const auto inputs = constants({0, 1}, 8);
  auto [b, cert] = wenner_escape(inputs, 2);
  CHECK(b.term(1) == Rational(1, 16));
  CHECK(cert.rounds[0].n_k == 1);
  CHECK((b.term(2) - b.term(1)).abs() == Rational(3) * p2(-8));
  CHECK((b.term(2) - b.term(1)).abs() < p2(-6));
  CHECK(verify_wenner(b, cert, inputs).ok);
  CHECK(Rational(3, 28) * p2(-3) == Rational(3, 224));
}

TEST_CASE("the three inequalities hold on random families") {
  Gen g(31);
  for (int family = 0; family < 30; ++family) {
    std::vector<CauchyReal> inputs;
    for (int i = 0; i < 8; ++i) inputs.push_back(random_real(g, 16));
    auto [b, cert] = wenner_escape(inputs, 8);
    for (std::size_t k = 1; k <= 8; ++k) {
      const Rational level = p2(-static_cast<long>(3 * k));
      const std::size_t nk = cert.rounds[k - 1].n_k;
      if (k > 1) {
        CHECK(nk > cert.rounds[k - 2].n_k);
        CHECK((b.term(k) - b.term(k - 1)).abs() < level);
      }
      CHECK(level / Rational(2) <= (b.term(k) - inputs[k - 1].term(nk)).abs());
      for (std::size_t n = nk; n <= 8; ++n) {
        CHECK(Rational(3, 28) * level < (b.term(n) - inputs[k - 1].term(n)).abs());
      }
    }
    // Telescoping bound.
    for (std::size_t n = 1; n <= 8; ++n) {
      Rational tail(0);
      for (std::size_t m = n + 1; m <= 8; ++m) {
        tail += p2(-static_cast<long>(3 * m));
        CHECK((b.term(m) - b.term(n)).abs() <= tail);
      }
    }
    CHECK(verify_wenner(b, cert, inputs).ok);
  }
}

TEST_CASE("modulus violations name the input and the pair") {
  CHECK_THROWS_AS(CauchyReal({Rational(0), Rational(1)}), Error);
  std::vector<CauchyReal> inputs = constants({0}, 4);
  inputs.push_back(CauchyReal::unchecked({Rational(0), Rational(0), Rational(1, 2)}));
  try {
    wenner_escape(inputs, 2);
    FAIL("expected a modulus violation");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::modulus_violation);
    CHECK(err.witness() == std::optional<std::string>("2:(3,1)"));
  }
}

TEST_CASE("short inputs and tampering") {
  CHECK_THROWS_AS(wenner_escape(constants({0}, 4), 2), Error);
  auto inputs = constants({0, 1, 0}, 2);
  CHECK_THROWS_AS(wenner_escape(inputs, 3), Error);  // N_3 would need a third term

  const auto ok_inputs = constants({0, 1, 1, 0}, 6);
  auto [b, cert] = wenner_escape(ok_inputs, 4);
  WennerCertificate bad = cert;
  bad.rounds[2].anchor = Rational(7);
  const VerifyReport report = verify_wenner(b, bad, ok_inputs);
  CHECK_FALSE(report.ok);
  CHECK(report.failed_round == std::optional<std::size_t>(3));
}

TEST_CASE("approximating points") {
  const CauchyReal r = CauchyReal::from_point(Point(QuadraticSurd::parse("sqrt(2)-1")), 10);
  CHECK(r.capacity() == 10);
  const Point x = QuadraticSurd::parse("sqrt(2)-1");
  for (std::size_t n = 1; n <= 10; ++n) {
    auto [lo, hi] = bracket(x, 200);
    CHECK((r.term(n) - lo).abs() <= p2(-static_cast<long>(3 * n + 4)) + (hi - lo));
  }
  CHECK(CauchyReal::from_point(Point(Rational(1, 3)), 3).terms() == std::vector<Rational>(3, Rational(1, 3)));
}
