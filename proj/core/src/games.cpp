#include "dforge/games.hpp"

#include <charconv>
#include <random>

#include "dforge/error.hpp"

namespace dforge {

std::string_view to_string(GameKind k) noexcept { return k == GameKind::interval ? "interval" : "diagonal"; }

std::string_view to_string(GameStatus s) noexcept {
  switch (s) {
    case GameStatus::awaiting_alice: return "awaiting_alice";
    case GameStatus::awaiting_bob: return "awaiting_bob";
    case GameStatus::closed: return "closed";
  }
  return "closed";
}

std::string_view to_string(Role r) noexcept { return r == Role::alice ? "alice" : "bob"; }

GameKind parse_game_kind(std::string_view text) {
  if (text == "interval") return GameKind::interval;
  if (text == "diagonal") return GameKind::diagonal;
  throw Error(ErrorCode::validation, "unknown game kind '" + std::string(text) + "'");
}

Role parse_role(std::string_view text) {
  if (text == "alice") return Role::alice;
  if (text == "bob") return Role::bob;
  throw Error(ErrorCode::validation, "unknown role '" + std::string(text) + "'");
}

AlicePolicy AlicePolicy::parse(std::string_view text) {
  AlicePolicy p;
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "human") {
    p.kind = Kind::human;
  } else if (head == "midpoint") {
    p.kind = Kind::midpoint;
  } else if (head == "adversarial") {
    p.kind = Kind::adversarial;
  } else if (head == "greedy") {
    p.kind = Kind::greedy;
    if (arg.empty()) throw Error(ErrorCode::validation, "greedy needs a target, as greedy:p/q");
    p.target = Rational::parse(arg);
  } else if (head == "random") {
    p.kind = Kind::random;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), p.seed);
    if (arg.empty() || ec != std::errc{} || ptr != arg.data() + arg.size()) {
      throw Error(ErrorCode::validation, "random needs a seed, as random:7");
    }
  } else {
    throw Error(ErrorCode::validation, "unknown Alice policy '" + std::string(text) + "'");
  }
  return p;
}

std::string AlicePolicy::to_string() const {
  switch (kind) {
    case Kind::human: return "human";
    case Kind::midpoint: return "midpoint";
    case Kind::adversarial: return "adversarial";
    case Kind::greedy: return "greedy:" + target.to_string();
    case Kind::random: return "random:" + std::to_string(seed);
  }
  return "human";
}

BobPolicy parse_bob_policy(std::string_view text) {
  if (text == "strategy") return BobPolicy::strategy;
  if (text == "human") return BobPolicy::human;
  throw Error(ErrorCode::validation, "unknown Bob policy '" + std::string(text) + "'");
}

std::string_view to_string(BobPolicy b) noexcept { return b == BobPolicy::strategy ? "strategy" : "human"; }

namespace {

std::uint64_t draw(std::uint64_t seed, std::size_t round) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(round)};
  std::mt19937_64 engine(seq);
  return engine();
}

void require_turn(GameStatus status, Role role) {
  if (status == GameStatus::closed) throw Error(ErrorCode::turn, "the game is closed");
  const Role expected = status == GameStatus::awaiting_alice ? Role::alice : Role::bob;
  if (role != expected) {
    throw Error(ErrorCode::turn, "it is " + std::string(to_string(expected)) + "'s turn, not " +
                                     std::string(to_string(role)) + "'s");
  }
}

std::string sub(char name, std::size_t n) { return std::string(1, name) + "_" + std::to_string(n); }

}  // namespace

// ---------------------------------------------------------------------------

IntervalGame::IntervalGame(std::optional<Enumeration> s, AlicePolicy alice, BobPolicy bob, std::size_t rounds)
    : s_(std::move(s)), alice_(std::move(alice)), bob_(bob), rounds_(rounds) {
  if (s_ && s_->kind() == EnumerationKind::digit_grid) {
    throw Error(ErrorCode::configuration, "the interval game needs points, not a digit grid");
  }
  if (rounds_ == 0) status_ = GameStatus::closed;
  advance();
}

IntervalQ IntervalGame::legal_interval() const {
  const Rational lo = status_ == GameStatus::awaiting_bob ? a_.back() : (a_.empty() ? Rational(0) : a_.back());
  const Rational hi = b_.empty() ? Rational(1) : b_.back();
  return IntervalQ::open(lo, hi);
}

void IntervalGame::alice_move(const Rational& value) {
  require_turn(status_, Role::alice);
  const std::size_t n = a_.size() + 1;
  const Rational lo = a_.empty() ? Rational(0) : a_.back();
  const Rational hi = b_.empty() ? Rational(1) : b_.back();
  const std::string lo_name = n == 1 ? "0" : sub('a', n - 1);
  const std::string hi_name = n == 1 ? "1" : sub('b', n - 1);
  const std::string where = sub('a', n) + " = " + value.to_string() + " must lie in (" + lo_name + ", " + hi_name +
                            ") = (" + lo.to_string() + ", " + hi.to_string() + ")";
  if (!(lo < value)) throw Error(ErrorCode::illegal_move, where + ": needs " + sub('a', n) + " > " + lo_name);
  if (!(value < hi)) throw Error(ErrorCode::illegal_move, where + ": needs " + sub('a', n) + " < " + hi_name);
  a_.push_back(value);
  status_ = GameStatus::awaiting_bob;
  if (!advancing_) advance();
}

void IntervalGame::bob_move(const Rational& value) {
  require_turn(status_, Role::bob);
  const std::size_t n = a_.size();
  const Rational& lo = a_.back();
  const Rational hi = b_.empty() ? Rational(1) : b_.back();
  const std::string hi_name = n == 1 ? "1" : sub('b', n - 1);
  const std::string where = sub('b', n) + " = " + value.to_string() + " must lie in (" + sub('a', n) + ", " +
                            hi_name + ") = (" + lo.to_string() + ", " + hi.to_string() + ")";
  if (!(lo < value)) throw Error(ErrorCode::illegal_move, where + ": needs " + sub('b', n) + " > " + sub('a', n));
  if (!(value < hi)) throw Error(ErrorCode::illegal_move, where + ": needs " + sub('b', n) + " < " + hi_name);
  b_.push_back(value);
  status_ = b_.size() >= rounds_ ? GameStatus::closed : GameStatus::awaiting_alice;
  if (!advancing_) advance();
}

void IntervalGame::move(Role role, const Rational& value) {
  if (role == Role::alice) {
    alice_move(value);
  } else {
    bob_move(value);
  }
}

Rational IntervalGame::bob_strategy() const {
  if (status_ != GameStatus::awaiting_bob) throw Error(ErrorCode::turn, "Bob is not to move");
  const std::size_t n = a_.size();
  const IntervalQ legal = legal_interval();
  if (s_ && s_->has(n)) {
    const Point s = require_point(*s_, n);
    if (legal.contains(s)) {
      if (const auto* r = std::get_if<Rational>(&s)) return *r;
      return rational_between(legal.lo(), s);
    }
  }
  return legal.midpoint();
}

Rational IntervalGame::alice_policy_move() const {
  if (status_ != GameStatus::awaiting_alice) throw Error(ErrorCode::turn, "Alice is not to move");
  const IntervalQ legal = legal_interval();
  const std::size_t n = a_.size() + 1;
  switch (alice_.kind) {
    case AlicePolicy::Kind::greedy:
      if (legal.contains(alice_.target)) return midpoint(legal.lo(), alice_.target);
      return legal.midpoint();
    case AlicePolicy::Kind::random: {
      const auto v = static_cast<long long>(draw(alice_.seed, n) >> 54);
      return legal.lo() + legal.width() * Rational(v + 1, 1025);
    }
    case AlicePolicy::Kind::adversarial:
      if (s_ && s_->has(n)) {
        const Point s = require_point(*s_, n);
        if (legal.contains(s)) {
          if (const auto* r = std::get_if<Rational>(&s)) return midpoint(legal.lo(), *r);
          return rational_between(legal.lo(), s);
        }
      }
      return legal.midpoint();
    case AlicePolicy::Kind::midpoint:
    case AlicePolicy::Kind::human:
      break;
  }
  return legal.midpoint();
}

void IntervalGame::advance() {
  advancing_ = true;
  struct Reset {
    bool& flag;
    ~Reset() { flag = false; }
  } reset{advancing_};
  while (true) {
    if (status_ == GameStatus::awaiting_alice && alice_.kind != AlicePolicy::Kind::human) {
      alice_move(alice_policy_move());
    } else if (status_ == GameStatus::awaiting_bob && bob_ == BobPolicy::strategy) {
      bob_move(bob_strategy());
    } else {
      break;
    }
  }
}

ExclusionCertificate IntervalGame::round_certificate() const {
  ExclusionCertificate cert;
  cert.method = "interval_game";
  if (!s_) return cert;
  for (std::size_t k = 1; k <= b_.size() && s_->has(k); ++k) {
    cert.rounds.push_back({k, ExclusionReason::outside_interval, IntervalQ::open(a_[k - 1], b_[k - 1]),
                           std::nullopt, false});
  }
  return cert;
}

Construction IntervalGame::as_construction() const {
  Construction c;
  c.method = "interval_game";
  std::vector<IntervalQ> chain{IntervalQ::unit()};
  for (std::size_t k = 0; k < b_.size(); ++k) chain.push_back(IntervalQ::closed(a_[k], b_[k]));
  c.enclosure = b_.empty() ? IntervalQ::open(Rational(0), Rational(1)) : IntervalQ::open(a_[b_.size() - 1], b_.back());
  c.eta = c.enclosure.midpoint();
  c.scanned = b_.size();
  c.value = NestedReal(std::move(chain));
  return c;
}

VerifyReport IntervalGame::audit() const {
  if (!s_) {
    VerifyReport r;
    r.message = "certificate OK (0/0 rounds)";
    return r;
  }
  return verify_certificate(as_construction(), round_certificate(), *s_);
}

std::optional<std::string> IntervalGame::verdict() const {
  if (s_) return std::nullopt;
  return "Alice wins trivially: enclosure ⊆ S";
}

// ---------------------------------------------------------------------------

DiagonalGame::DiagonalGame(Enumeration s, AlicePolicy alice, BobPolicy bob, std::size_t rounds)
    : s_(std::move(s)), alice_(std::move(alice)), bob_(bob), rounds_(rounds) {
  if (s_.kind() == EnumerationKind::dyadics_both_reps) {
    throw Error(ErrorCode::configuration, "the diagonal game is played in base 10; dyadic streams are base 2");
  }
  if (s_.has(1)) {
    if (const DigitStream* row = s_.at(1).stream(); row && row->base() != 10) {
      throw Error(ErrorCode::configuration, "the diagonal game needs base-10 rows, got " + row->to_string());
    }
  }
  if (rounds_ == 0) status_ = GameStatus::closed;
  advance();
}

std::optional<unsigned> DiagonalGame::diagonal_digit(std::size_t n) const {
  if (!s_.has(n)) return std::nullopt;
  return digits_of(s_.at(n), 10, n).digit(n);
}

unsigned DiagonalGame::bob_strategy() const {
  if (status_ != GameStatus::awaiting_bob) throw Error(ErrorCode::turn, "Bob is not to move");
  const std::size_t n = a_.size();
  unsigned z = 1;
  if (auto s = diagonal_digit(n)) {
    z = (*s + 1) % 10;
    if (z == 0) z = (*s + 2) % 10;
  }
  return (z + 10 - a_.back()) % 10;
}

unsigned DiagonalGame::alice_policy_move() const {
  if (status_ != GameStatus::awaiting_alice) throw Error(ErrorCode::turn, "Alice is not to move");
  const std::size_t n = a_.size() + 1;
  switch (alice_.kind) {
    case AlicePolicy::Kind::greedy:
      if (Rational(0) <= alice_.target && alice_.target <= Rational(1)) {
        return to_digits(alice_.target, 10, n).digit(n);
      }
      return 5;
    case AlicePolicy::Kind::random: return static_cast<unsigned>(draw(alice_.seed, n) % 10);
    case AlicePolicy::Kind::adversarial:
      if (auto s = diagonal_digit(n)) return *s;
      return 5;
    case AlicePolicy::Kind::midpoint:
    case AlicePolicy::Kind::human:
      break;
  }
  return 5;
}

void DiagonalGame::alice_move(unsigned digit) {
  require_turn(status_, Role::alice);
  if (digit > 9) {
    throw Error(ErrorCode::illegal_move, sub('a', a_.size() + 1) + " = " + std::to_string(digit) +
                                             " must be a digit 0..9");
  }
  a_.push_back(digit);
  status_ = GameStatus::awaiting_bob;
  if (!advancing_) advance();
}

void DiagonalGame::bob_move(unsigned digit) {
  require_turn(status_, Role::bob);
  if (digit > 9) {
    throw Error(ErrorCode::illegal_move, sub('b', a_.size()) + " = " + std::to_string(digit) +
                                             " must be a digit 0..9");
  }
  b_.push_back(digit);
  z_.push_back((a_.back() + digit) % 10);
  status_ = b_.size() >= rounds_ ? GameStatus::closed : GameStatus::awaiting_alice;
  if (!advancing_) advance();
}

void DiagonalGame::move(Role role, unsigned digit) {
  if (role == Role::alice) {
    alice_move(digit);
  } else {
    bob_move(digit);
  }
}

void DiagonalGame::advance() {
  advancing_ = true;
  struct Reset {
    bool& flag;
    ~Reset() { flag = false; }
  } reset{advancing_};
  while (true) {
    if (status_ == GameStatus::awaiting_alice && alice_.kind != AlicePolicy::Kind::human) {
      alice_move(alice_policy_move());
    } else if (status_ == GameStatus::awaiting_bob && bob_ == BobPolicy::strategy) {
      bob_move(bob_strategy());
    } else {
      break;
    }
  }
}

ExclusionCertificate DiagonalGame::round_certificate() const {
  ExclusionCertificate cert;
  cert.method = "diagonal_game";
  for (std::size_t k = 1; k <= z_.size() && s_.has(k); ++k) {
    cert.rounds.push_back({k, ExclusionReason::digit_mismatch, std::nullopt, k, false});
  }
  return cert;
}

Construction DiagonalGame::as_construction() const {
  Construction c;
  c.method = "diagonal_game";
  std::vector<std::uint8_t> digits(z_.begin(), z_.end());
  DigitStream z(10, digits, TailConvention::unnormalized);
  c.enclosure = z.cell();
  c.eta = c.enclosure.midpoint();
  c.digits = std::move(z);
  c.scanned = z_.size();
  return c;
}

VerifyReport DiagonalGame::audit() const { return verify_certificate(as_construction(), round_certificate(), s_); }

}  // namespace dforge
