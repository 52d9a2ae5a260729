#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dforge/cauchy.hpp"
#include "dforge/constructors.hpp"
#include "dforge/covers.hpp"
#include "dforge/finite_cantor.hpp"
#include "dforge/games.hpp"
#include "dforge/service/sessions.hpp"
#include "dforge/service/wire.hpp"
#include "gen.hpp"

using namespace dforge;
using dforge::testing::Gen;
using service::json;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string str(std::size_t n) { return std::to_string(n); }

std::vector<Enumeration> builtins() {
  return {Enumeration::rationals_01(), Enumeration::dyadics_both_reps(), Enumeration::surds_bounded()};
}

Rational pow_int(long base, std::size_t n) {
  Rational r(1);
  for (std::size_t i = 0; i < n; ++i) r *= Rational(base);
  return r;
}

// Exclusion sweep

void exclusion_sweep() {
  const std::size_t depth = 64;
  const PerfectSetOracle unit(PerfectSetKind::unit_interval);
  const PerfectSetOracle cantor(PerfectSetKind::cantor_middle_thirds);
  const IntervalQ ball = IntervalQ::open(Rational(0), Rational(1));
  for (const Enumeration& e : builtins()) {
    const std::string kind(to_string(e.kind()));
    std::vector<std::pair<std::string, ConstructionOutput>> runs;
    runs.emplace_back("cantor1874", cantor1874(e, IntervalQ::unit(), depth));
    runs.emplace_back("trisect", trisect(e, depth));
    runs.emplace_back("diagonal", diagonal(e, 10, depth));
    runs.emplace_back("perfect_escape", perfect_escape(unit, e, depth));
    runs.emplace_back("perfect_escape/cantor", perfect_escape(cantor, e, depth));
    const auto g = punctured_sets(e, depth);
    runs.emplace_back("baire_point", baire_point(g, ball, depth));
    for (const auto& [name, out] : runs) {
      const auto& [result, cert] = out;
      const std::string tag = name + " over " + kind;
      expect(cert.covered() >= depth, tag + ": certificate covers " + str(cert.covered()) + " < 64 indices");
      const VerifyReport report = verify_certificate(result, cert, e);
      expect(report.ok, tag + ": " + report.message);
      for (std::size_t k = 1; k <= depth; ++k) {
        const Point omega = require_point(e, k);
        expect(!result.enclosure.contains(omega), tag + ": omega_" + str(k) + " = " + to_string(omega) +
                                                      " lies in the enclosure " + result.enclosure.to_string());
      }
      if (name == "baire_point") expect(verify_containment(result, cert, g, ball).ok, tag + ": containment");
      if (name == "perfect_escape/cantor") expect(cantor.member(result.eta), tag + ": eta not in the Cantor set");
    }
  }
}

// Trisect width law

void trisect_width() {
  for (const Enumeration& e : builtins()) {
    const auto [result, cert] = trisect(e, 40);
    const auto& chain = result.value.chain();
    expect(chain.size() == 41, "chain length " + str(chain.size()));
    for (std::size_t n = 0; n <= 40; ++n) {
      const Rational expected = Rational(1) / pow_int(3, n);
      expect(chain[n].width() == expected, "|I_" + str(n) + "| = " + chain[n].width().to_string());
    }
    // 3^40 does not fit in 64 bits; the exact denominator must still be there.
    const Rational w = chain[40].width();
    expect(w.to_string() == "1/12157665459056928801", "bignum width " + w.to_string());
    expect(verify_certificate(result, cert, e).ok, "trisect certificate");
  }
}

// Diagonal positional law

Rational prefix_oracle(const DigitStream& s, std::size_t n) {
  Rational value(0);
  Rational place(1);
  for (std::size_t i = 0; i < n; ++i) {
    place /= Rational(static_cast<long>(s.base()));
    value += Rational(static_cast<long>(s.digits()[i])) * place;
  }
  return value;
}

void diagonal_law() {
  Gen gen(2024);
  const std::size_t rows = 1000;
  for (unsigned base : {2u, 10u}) {
    std::vector<DigitStream> grid;
    for (std::size_t i = 0; i < rows; ++i) grid.push_back(gen.stream(base, rows));
    const Enumeration e = Enumeration::digit_grid(grid);
    const auto [result, cert] = diagonal(e, base, rows);
    expect(result.digits && result.digits->size() == rows, "output has " + str(rows) + " digits");
    for (std::size_t n = 1; n <= rows; ++n) {
      expect(result.digits->digit(n) != grid[n - 1].digit(n), "base " + str(base) + ": digit " + str(n) + " matches");
    }
    expect(verify_certificate(result, cert, e).ok, "base " + str(base) + " certificate");
  }

  const std::size_t n = 64;
  const Enumeration dy = Enumeration::dyadics_both_reps(n);
  const auto [result, cert] = diagonal(dy, 2, n);
  const Rational out = prefix_oracle(*result.digits, n);
  const Rational unit = Rational(1) / pow_int(2, n);
  std::size_t claims = 0;
  for (const auto& round : cert.rounds) {
    const DigitStream row = dy.at(round.index).stream() ? *dy.at(round.index).stream() : DigitStream(2, {});
    expect(result.digits->digit(round.index) != row.digit(round.index), "dyadic row " + str(round.index));
    if (!round.value_separated) continue;
    ++claims;
    const Rational gap = (out - prefix_oracle(row, n)).abs();
    expect(unit < gap, "dyadic row " + str(round.index) + ": claimed separation but gap " + gap.to_string());
  }
  expect(claims > 0, "no separation claims to check");
  expect(verify_certificate(result, cert, dy).ok, "dyadics certificate");
}

// Wenner ladder

std::vector<CauchyReal> wenner_family(Gen& gen) {
  std::vector<CauchyReal> family;
  for (int i = 0; i < 8; ++i) {
    const Rational x = gen.unit_rational(1 << 20);
    const std::size_t cap = static_cast<std::size_t>(gen.integer(12, 30));
    std::vector<Rational> terms;
    for (std::size_t n = 1; n <= cap; ++n) {
      // |a(n) - x| <= 2^-(3n+3), so pairs stay within 2^-(3 min + 2).
      const Rational radius = Rational(1) / pow_int(2, 3 * n + 3);
      terms.push_back(x + radius * Rational(gen.integer(-1000, 1000), 1000));
    }
    family.emplace_back(std::move(terms));
  }
  return family;
}

void wenner_ladder() {
  Gen gen(8);
  for (int f = 0; f < 20; ++f) {
    const auto inputs = wenner_family(gen);
    const auto [b, cert] = wenner_escape(inputs, 8);
    expect(cert.rounds.size() == 8, "family " + str(f) + ": rounds");
    std::size_t previous = 0;
    for (std::size_t k = 1; k <= 8; ++k) {
      const std::string where = "family " + str(f) + ", k = " + str(k) + ": ";
      const WennerRound& r = cert.rounds[k - 1];
      const CauchyReal& a = inputs[k - 1];
      const Rational two3k = Rational(1) / pow_int(2, 3 * k);
      expect(r.n_k > previous && r.n_k <= a.capacity(), where + "N_k out of order");
      for (std::size_t m = r.n_k; m <= a.capacity(); ++m) {
        for (std::size_t n = r.n_k; n < m; ++n) {
          expect((a.term(m) - a.term(n)).abs() < Rational(1) / pow_int(2, 3 * k + 2), where + "spread after N_k");
        }
      }
      expect(r.anchor == a.term(r.n_k), where + "anchor");
      expect(b.term(k) == r.b, where + "b");
      if (k > 1) expect((b.term(k) - b.term(k - 1)).abs() < two3k, where + "step bound");
      expect((b.term(k) - r.anchor).abs() >= two3k / Rational(2), where + "separation");
      const std::size_t top = std::min(b.capacity(), a.capacity());
      for (std::size_t m = r.n_k; m <= top; ++m) {
        expect((b.term(m) - a.term(m)).abs() > Rational(3, 28) * two3k, where + "floor at n = " + str(m));
      }
      previous = r.n_k;
    }
    expect(verify_wenner(b, cert, inputs).ok, "family " + str(f) + ": audit");
  }
}

// Heine-Borel greedy

// A point is covered when some open piece has lo < x < hi; extend the reach
// with the widest piece that covers it until the target's right end is passed.
bool sweep_covers(const Cover& c, const std::vector<std::size_t>& indices) {
  Rational reach = c.target.lo();
  while (true) {
    std::optional<Rational> best;
    for (auto i : indices) {
      const IntervalQ& p = c.pieces.at(i - 1);
      if (p.lo() < reach && reach < p.hi() && (!best || *best < p.hi())) best = p.hi();
    }
    if (!best) return false;
    reach = *best;
    if (c.target.hi() < reach) return true;
  }
}

Cover random_cover(Gen& gen, std::size_t size) {
  const std::size_t spine = static_cast<std::size_t>(gen.integer(1, static_cast<std::int64_t>(std::min<std::size_t>(size, 24))));
  std::vector<Rational> cuts{Rational(0), Rational(1)};
  for (std::size_t i = 1; i < spine; ++i) cuts.push_back(gen.unit_rational(1 << 16));
  std::sort(cuts.begin(), cuts.end());
  std::vector<IntervalQ> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational pad(1, gen.integer(100, 100000));
    pieces.push_back(IntervalQ::open(cuts[i] - pad, cuts[i + 1] + pad));
  }
  while (pieces.size() < size) {
    const Rational lo = gen.unit_rational(1 << 16) - Rational(1, 8);
    pieces.push_back(IntervalQ::open(lo, lo + Rational(gen.integer(1, 1000), 4000)));
  }
  for (std::size_t i = pieces.size(); i > 1; --i) std::swap(pieces[i - 1], pieces[gen.integer(0, static_cast<std::int64_t>(i - 1))]);
  return Cover(IntervalQ::unit(), pieces);
}

Cover random_non_cover(Gen& gen, std::size_t size, Rational& hole) {
  hole = Rational(gen.integer(1, 99998), 99999);
  std::vector<IntervalQ> pieces;
  while (pieces.size() < size) {
    if (gen.coin()) {
      const Rational lo = hole - Rational(gen.integer(1, 2000), 1000);
      pieces.push_back(IntervalQ::open(lo, gen.coin() ? hole : gen.between(lo, hole)));
    } else {
      const Rational hi = hole + Rational(gen.integer(1, 2000), 1000);
      pieces.push_back(IntervalQ::open(gen.coin() ? hole : gen.between(hole, hi), hi));
    }
  }
  return Cover(IntervalQ::unit(), pieces);
}

std::vector<Cover> verified_covers;

void heine_borel() {
  Gen gen(1874);
  for (int i = 0; i < 1000; ++i) {
    const Cover c = random_cover(gen, static_cast<std::size_t>(gen.integer(1, 1000)));
    const auto indices = heine_borel_subcover(c);
    expect(is_subcover_chain(c, indices), "cover " + str(i) + ": chain check");
    expect(sweep_covers(c, indices), "cover " + str(i) + ": sweep oracle disagrees");
    verified_covers.push_back(c);
  }
  for (int i = 0; i < 1000; ++i) {
    Rational hole;
    const Cover c = random_non_cover(gen, static_cast<std::size_t>(gen.integer(1, 1000)), hole);
    try {
      heine_borel_subcover(c);
      expect(false, "non-cover " + str(i) + ": no error");
    } catch (const Error& err) {
      expect(err.code() == ErrorCode::not_a_cover && err.witness(), "non-cover " + str(i) + ": wrong error");
      const Rational w = Rational::parse(*err.witness());
      expect(c.target.contains(w), "non-cover " + str(i) + ": witness outside target");
      for (const auto& p : c.pieces) expect(!p.contains(w), "non-cover " + str(i) + ": witness " + w.to_string() + " covered");
    }
  }
}

// Measure pairing

void measure_pairing() {
  const Enumeration q = Enumeration::rationals_01();
  for (const Rational eps : {Rational(1), Rational(1, 2), Rational(1, 7)}) {
    for (std::size_t n = 1; n <= 64; ++n) {
      const auto [cover, ledger] = measure_zero_cover(q, eps, n);
      const Rational expected = eps * (Rational(1) - Rational(1) / pow_int(2, n)) / Rational(2);
      expect(ledger.total == expected, "eps " + eps.to_string() + ", N " + str(n) + ": total " + ledger.total.to_string());
      Rational sum(0);
      for (const auto& p : cover.pieces) sum += p.width();
      expect(sum == expected && sum < eps, "eps " + eps.to_string() + ", N " + str(n) + ": piece lengths");
      for (std::size_t j = 1; j <= n; ++j) expect(cover.pieces[j - 1].contains(rationals_01(j)), "x_j outside I_j");
    }
  }
  expect(!verified_covers.empty(), "no covers from the subcover suite");
  for (std::size_t i = 0; i < verified_covers.size(); ++i) {
    const Cover& c = verified_covers[i];
    const LengthBound lb = cover_length_lower_bound(c);
    Rational sum(0);
    for (auto j : lb.chain) sum += c.pieces[j - 1].width();
    expect(sum == lb.bound, "cover " + str(i) + ": bound is not the chain length");
    expect(Rational(1) < lb.bound, "cover " + str(i) + ": bound " + lb.bound.to_string() + " <= 1");
  }
  for (std::size_t n : {1u, 8u, 64u}) {
    const auto [cover, ledger] = measure_zero_cover(q, Rational(1, 2), n);
    try {
      heine_borel_subcover(Cover(IntervalQ::unit(), cover.pieces));
      expect(false, "eps = 1/2 cover of the rationals covers [0,1]");
    } catch (const Error& err) {
      expect(err.code() == ErrorCode::not_a_cover, "duality: wrong error");
      const Rational w = Rational::parse(*err.witness());
      for (const auto& p : cover.pieces) expect(!p.contains(w), "duality: witness covered");
    }
  }
}

// Game strategy soundness

std::vector<AlicePolicy> alices() {
  std::vector<AlicePolicy> out{AlicePolicy::parse("midpoint"), AlicePolicy::parse("greedy:1/3"),
                               AlicePolicy::parse("greedy:5/7")};
  for (int seed = 1; seed <= 100; ++seed) out.push_back(AlicePolicy::parse("random:" + std::to_string(seed)));
  return out;
}

Enumeration random_list(Gen& gen, std::size_t size) {
  std::ostringstream text;
  for (std::size_t i = 0; i < size; ++i) {
    if (i % 5 == 4) {
      static const char* surds[] = {"sqrt(2)-1", "sqrt(3)-1", "sqrt(5)-2", "sqrt(7)-2"};
      text << surds[i % 4] << '\n';
    } else {
      text << gen.unit_rational(500).to_string() << '\n';
    }
  }
  return Enumeration::parse_lines(text.str());
}

void games() {
  Gen gen(64);
  const std::size_t rounds = 64;
  std::vector<Enumeration> sets{Enumeration::rationals_01(), random_list(gen, 80), random_list(gen, 40)};
  for (const Enumeration& s : sets) {
    for (const AlicePolicy& alice : alices()) {
      const std::string tag = alice.to_string() + " over " + std::string(to_string(s.kind()));
      IntervalGame g(s, alice, BobPolicy::strategy, rounds);
      expect(g.status() == GameStatus::closed && g.completed() == rounds, tag + ": game did not finish");
      const ExclusionCertificate cert = g.round_certificate();
      const std::size_t expected = std::min(rounds, s.capacity().value_or(rounds));
      expect(cert.covered() == expected, tag + ": covered " + str(cert.covered()));
      for (std::size_t k = 1; k <= expected; ++k) {
        const IntervalQ played = IntervalQ::open(g.a()[k - 1], g.b()[k - 1]);
        expect(!played.contains(require_point(s, k)), tag + ": s_" + str(k) + " inside (a_k, b_k)");
      }
      const Construction c = g.as_construction();
      const NestedReal rebuilt(c.value.chain());
      expect(rebuilt.depth() == rounds + 1, tag + ": chain depth");
      expect(verify_certificate(c, cert, s).ok, tag + ": verify_certificate");

      DiagonalGame d(s, alice, BobPolicy::strategy, rounds);
      const ExclusionCertificate dcert = d.round_certificate();
      expect(dcert.covered() == expected, tag + ": digit rounds " + str(dcert.covered()));
      for (std::size_t k = 1; k <= expected; ++k) {
        const unsigned row = digits_of(s.at(k), 10, k).digit(k);
        expect(d.z()[k - 1] != row && d.z()[k - 1] == (d.a()[k - 1] + d.b()[k - 1]) % 10, tag + ": z_" + str(k));
      }
      expect(verify_certificate(d.as_construction(), dcert, s).ok, tag + ": digit certificate");
    }
  }
}

// Finite oracles

void finite_oracles() {
  for (std::size_t size = 0; size <= 3; ++size) {
    const FiniteSet x = FiniteSet::of_size(size);
    const std::uint32_t subsets = 1u << size;
    std::vector<std::uint32_t> f(size, 0);
    std::size_t count = 0;
    while (true) {
      std::map<std::string, std::vector<std::string>> named;
      std::uint32_t diag = 0;
      for (std::size_t i = 0; i < size; ++i) {
        named[x.elements()[i]] = x.subset_of(f[i]);
        if (!(f[i] >> i & 1u)) diag |= 1u << i;
      }
      const auto y = powerset_check(x, named);
      expect(x.mask_of(y) == diag, "|X| = " + str(size) + ": wrong diagonal set");
      for (std::size_t i = 0; i < size; ++i) expect(f[i] != diag, "|X| = " + str(size) + ": witness has a preimage");
      ++count;
      std::size_t i = 0;
      while (i < size && ++f[i] == subsets) f[i++] = 0;
      if (i == size) break;
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < size; ++i) total *= subsets;
    expect(count == total, "not every function visited");
  }

  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::uint32_t bits = 0; bits < (1u << (k * k)); ++bits) {
      BinaryMatrix m(k, std::vector<std::uint8_t>(k));
      for (std::size_t i = 0; i < k * k; ++i) m[i / k][i % k] = static_cast<std::uint8_t>(bits >> i & 1u);
      const auto row = diagonal_row(m);
      for (std::size_t i = 0; i < k; ++i) expect(row != m[i], "k = " + str(k) + ": row repeats row " + str(i));
    }
  }

  auto metric_oracle = [](const DigitStream& x, const DigitStream& y) {
    for (std::size_t i = 1; i <= x.size(); ++i) {
      if (x.digit(i) != y.digit(i)) return Rational(1) / pow_int(2, i);
    }
    return Rational(0);
  };
  auto word = [](std::uint32_t bits, std::size_t n) {
    std::vector<std::uint8_t> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<std::uint8_t>(bits >> i & 1u);
    return DigitStream(2, d);
  };
  auto check_triple = [&](const DigitStream& x, const DigitStream& y, const DigitStream& z) {
    const Rational xy = cantor_metric(x, y);
    const Rational yz = cantor_metric(y, z);
    const Rational xz = cantor_metric(x, z);
    expect(xy == metric_oracle(x, y) && xy == cantor_metric(y, x), "metric value");
    expect((xy == Rational(0)) == (x == y), "identity of indiscernibles");
    expect(xz <= std::max(xy, yz), "ultrametric inequality at " + x.to_string() + ", " + y.to_string() + ", " + z.to_string());
  };
  std::vector<DigitStream> words;
  for (std::uint32_t b = 0; b < 32; ++b) words.push_back(word(b, 5));
  for (const auto& x : words) {
    for (const auto& y : words) {
      for (const auto& z : words) check_triple(x, y, z);
    }
  }
  Gen gen(10);
  for (int i = 0; i < 100000; ++i) {
    check_triple(word(static_cast<std::uint32_t>(gen.integer(0, 1023)), 10),
                 word(static_cast<std::uint32_t>(gen.integer(0, 1023)), 10),
                 word(static_cast<std::uint32_t>(gen.integer(0, 1023)), 10));
  }
}

// Wire exactness

void wire_exactness() {
  Gen gen(99);
  for (int i = 0; i < 10000; ++i) {
    Rational r;
    switch (i % 3) {
      case 0: r = gen.rational(1000); break;
      case 1:
        r = Rational(gen.integer(-1'000'000'000'000'000'000, 1'000'000'000'000'000'000),
                     gen.integer(1, 1'000'000'000'000'000'000));
        break;
      default:
        r = Rational(gen.integer(-1'000'000'000, 1'000'000'000)) * pow_int(10, 25) /
            (pow_int(7, static_cast<std::size_t>(gen.integer(20, 40))) + Rational(1));
    }
    const json doc = {{"value", service::encode(r)}};
    const Rational back = service::decode_rational(json::parse(doc.dump()).at("value"), "value");
    expect(back == r && back.to_string() == r.to_string(), "rational " + r.to_string() + " changed on the wire");
  }

  const auto path = std::filesystem::temp_directory_path() / "dforge_acceptance_sessions.jsonl";
  std::filesystem::remove(path);
  std::vector<std::pair<std::string, std::string>> states;
  {
    service::SessionStore store(path);
    for (int t = 0; t < 30; ++t) {
      const bool interval = t % 2 == 0;
      const json config = {{"kind", interval ? "interval" : "diagonal"},
                           {"enum", t % 3 == 0 ? json("rationals") : json{{"kind", "file_list"}, {"values", {"1/3", "sqrt(2)-1", "3/4"}}}},
                           {"alice", "human"},
                           {"bob", t % 4 == 1 ? "human" : "strategy"},
                           {"rounds", 6}};
      const std::string id = store.create_game(config).at("id");
      json state = store.game(id).at("state");
      while (state.at("status") != "closed") {
        const std::string role = state.at("status") == "awaiting_alice" ? "alice" : "bob";
        json move;
        if (interval) {
          const IntervalQ legal = IntervalQ::parse(state.at("legal_interval").get<std::string>());
          move = {{"role", role}, {"value", gen.between(legal.lo(), legal.hi()).to_string()}};
        } else {
          move = {{"role", role}, {"value", std::to_string(gen.integer(0, 9))}};
        }
        state = store.submit_move(id, move);
      }
      const json record = store.game(id);
      const std::string replayed =
          service::GameReplay::replay(record.at("session").at("config"), record.at("session").at("moves")).state().dump();
      expect(replayed == state.dump(), "session " + id + ": in-memory replay differs");
      states.emplace_back(id, state.dump());
    }
  }
  service::SessionStore reloaded(path);
  for (const auto& [id, dump] : states) {
    expect(reloaded.game(id).at("state").dump() == dump, "session " + id + ": log replay differs");
  }
  std::filesystem::remove(path);
}

struct Criterion {
  std::string name;
  std::function<void()> run;
  double budget_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"exclusion soundness sweep (5 constructors x 3 enumerations, N = 64)", exclusion_sweep, 5.0},
      {"trisect width law |I_n| = 3^-n, n <= 40", trisect_width, 0.0},
      {"diagonal positional law (1000 rows, bases 2 and 10; dyadic separation)", diagonal_law, 0.0},
      {"Wenner ladder (20 families x 8 inputs, k <= 8)", wenner_ladder, 1.0},
      {"Heine-Borel greedy (1000 covers, 1000 non-covers)", heine_borel, 3.0},
      {"measure pairing (eps in {1, 1/2, 1/7}, N <= 64; length bound; duality)", measure_pairing, 0.0},
      {"game strategy soundness (64 rounds, midpoint/greedy/random 1-100)", games, 0.0},
      {"finite oracles (powerset, diagonal_row, ultrametric)", finite_oracles, 0.0},
      {"wire exactness (10^4 rationals; move-log replay)", wire_exactness, 0.0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
      ok = false;
      std::ostringstream msg;
      msg << "took longer than " << c.budget_seconds << " s";
      detail = msg.str();
    }
    std::cout << (ok ? "PASS " : "FAIL ") << c.name << " [" << std::fixed << std::setprecision(2) << seconds << " s]";
    if (!ok) std::cout << ": " << detail;
    std::cout << std::endl;
    failed += ok ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
