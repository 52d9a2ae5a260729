#include <doctest.h>

#include <algorithm>

#include "dforge/covers.hpp"
#include "dforge/error.hpp"
#include "gen.hpp"

using namespace dforge;
using dforge::testing::Gen;

namespace {

IntervalQ iv(const char* text) { return IntervalQ::parse(text); }

Cover cover(std::initializer_list<const char*> pieces) {
  std::vector<IntervalQ> p;
  for (auto s : pieces) p.push_back(iv(s));
  return Cover(IntervalQ::unit(), p);
}

// Sort-and-sweep oracle: the first point of [lo,hi] not inside any open piece.
std::optional<Rational> first_gap(const Cover& c) {
  std::vector<IntervalQ> p = c.pieces;
  std::sort(p.begin(), p.end(), [](const IntervalQ& a, const IntervalQ& b) { return a.lo() < b.lo(); });
  Rational x = c.target.lo();
  while (true) {
    std::optional<Rational> reach;
    for (const auto& piece : p) {
      if (piece.lo() < x && x < piece.hi()) reach = reach ? max(*reach, piece.hi()) : piece.hi();
    }
    if (!reach) return x;
    if (c.target.hi() < *reach) return std::nullopt;
    x = *reach;
  }
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::domain;
}

}  // namespace

TEST_CASE("greedy subcover examples") {
  CHECK(heine_borel_subcover(cover({"(-1/10,6/10)", "(4/10,11/10)"})) == std::vector<std::size_t>{1, 2});
  CHECK(heine_borel_subcover(cover({"(-1/10,6/10)", "(1/2,11/10)", "(4/10,11/10)"})) ==
        std::vector<std::size_t>{1, 2});
  try {
    heine_borel_subcover(cover({"(-1/10,1/2)", "(1/2,11/10)"}));
    FAIL("expected not_a_cover");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::not_a_cover);
    CHECK(err.witness() == std::optional<std::string>("1/2"));
  }
  CHECK(code_of([] { Cover(IntervalQ::unit(), {IntervalQ::closed(Rational(0), Rational(1))}); }) ==
        ErrorCode::domain);
}

TEST_CASE("greedy subcover on random covers agrees with a sweep oracle") {
  Gen g(41);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<IntervalQ> pieces;
    const auto n = g.integer(1, 40);
    for (int i = 0; i < n; ++i) {
      const Rational a = Rational(g.integer(-4, 40), 40);
      pieces.push_back(IntervalQ::open(a, a + Rational(g.integer(1, 16), 40)));
    }
    const Cover c(IntervalQ::unit(), pieces);
    const auto gap = first_gap(c);
    if (gap) {
      try {
        heine_borel_subcover(c);
        FAIL("expected not_a_cover");
      } catch (const Error& err) {
        REQUIRE(err.witness());
        const Rational w = Rational::parse(*err.witness());
        CHECK(c.target.contains(w));
        for (const auto& p : pieces) CHECK_FALSE(p.contains(w));
      }
    } else {
      const auto idx = heine_borel_subcover(c);
      CHECK(is_subcover_chain(c, idx));
      // Each index is the lowest eligible at its step.
      Rational frontier = c.target.lo();
      for (auto i : idx) {
        for (std::size_t j = 1; j < i; ++j) CHECK_FALSE(pieces[j - 1].contains(frontier));
        CHECK(pieces[i - 1].contains(frontier));
        frontier = pieces[i - 1].hi();
      }
    }
  }
}

TEST_CASE("nested witness") {
  CHECK(nested_witness({iv("[0,1]"), iv("[1/4,3/4]"), iv("[1/2,3/4]")}) == Rational(1, 2));
  CHECK(nested_witness({iv("[0,1]")}) == Rational(0));
  try {
    nested_witness({iv("[0,1]"), iv("[2,3]")});
    FAIL("expected nesting violation");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::nesting_violation);
    CHECK(err.witness() == std::optional<std::string>("1"));
  }
}

TEST_CASE("measure-zero covers") {
  const Enumeration q = Enumeration::rationals_01();
  CHECK(measure_zero_cover(q, Rational(1), 3).second.total == Rational(7, 16));
  CHECK(measure_zero_cover(q, Rational(1), 1).first.pieces[0].width() == Rational(1, 4));
  for (const Rational eps : {Rational(1), Rational(1, 2), Rational(1, 7), Rational(2)}) {
    for (std::size_t n = 1; n <= 64; n += 7) {
      auto [c, ledger] = measure_zero_cover(q, eps, n);
      // Oracle: add the terms directly.
      Rational sum(0);
      for (std::size_t j = 1; j <= n; ++j) sum += eps / Rational::pow2(static_cast<long>(j + 1));
      CHECK(ledger.total == sum);
      CHECK(ledger.total == eps * (Rational(1) - Rational::pow2(-static_cast<long>(n))) / Rational(2));
      CHECK(ledger.total < eps);
      for (std::size_t j = 1; j <= n; ++j) CHECK(c.pieces[j - 1].contains(rationals_01(j)));
    }
  }
  const Enumeration s = Enumeration::surds_bounded();
  auto [sc, sl] = measure_zero_cover(s, Rational(1, 2), 30);
  for (std::size_t j = 1; j <= 30; ++j) CHECK(sc.pieces[j - 1].contains(*s.at(j).point()));
  CHECK(code_of([&] { measure_zero_cover(q, Rational(0), 3); }) == ErrorCode::domain);
}

TEST_CASE("cover length lower bound") {
  auto two = cover_length_lower_bound(cover({"(-1/10,6/10)", "(4/10,11/10)"}));
  CHECK(two.chain == std::vector<std::size_t>{1, 2});
  CHECK(two.bound == Rational(7, 5));
  CHECK(cover_length_lower_bound(cover({"(-1/10,11/10)"})).bound == Rational(6, 5));
  CHECK(code_of([] { cover_length_lower_bound(cover({"(-1/10,1/2)", "(1/2,11/10)"})); }) == ErrorCode::not_a_cover);
}

TEST_CASE("a measure-zero cover of the rationals does not cover [0,1]") {
  const Enumeration q = Enumeration::rationals_01();
  for (std::size_t n : {1u, 8u, 64u, 200u}) {
    auto [c, ledger] = measure_zero_cover(q, Rational(1, 2), n);
    CHECK(ledger.total < Rational(1, 2));
    CHECK(code_of([&] { cover_length_lower_bound(c); }) == ErrorCode::not_a_cover);
  }
}

TEST_CASE("bw_locate") {
  auto third = bw_locate([](std::size_t) { return Rational(1, 3); }, 100, 5);
  CHECK(third.interval.contains(Rational(1, 3)));
  CHECK(third.interval.width() == Rational(1, 32));
  auto alt = bw_locate([](std::size_t k) { return Rational(k % 2 == 1 ? 0 : 1); }, 100, 1);
  CHECK(alt.interval == IntervalQ::closed(Rational(0), Rational(1, 2)));
  auto harmonic = bw_locate([](std::size_t k) { return Rational(1, static_cast<long long>(k)); }, 1000, 6);
  CHECK(harmonic.interval.contains(Rational(0)));
  CHECK_FALSE(harmonic.under_resolved);
  CHECK(bw_locate([](std::size_t) { return Rational(0); }, 4, 3).under_resolved);
  CHECK(code_of([] { bw_locate([](std::size_t) { return Rational(2); }, 4, 1); }) == ErrorCode::domain);
}
