#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dforge/certificate.hpp"
#include "dforge/enumeration.hpp"
#include "dforge/rational.hpp"

namespace dforge {

enum class GameKind { interval, diagonal };
enum class GameStatus { awaiting_alice, awaiting_bob, closed };
enum class Role { alice, bob };

std::string_view to_string(GameKind k) noexcept;
std::string_view to_string(GameStatus s) noexcept;
std::string_view to_string(Role r) noexcept;
GameKind parse_game_kind(std::string_view text);
Role parse_role(std::string_view text);

/// Alice's side: a human, or a scripted policy.
///   midpoint     the middle of the legal interval (digit 5 in the diagonal game)
///   greedy:T     halfway from the left end toward T (digit n of T)
///   random:SEED  a draw seeded by SEED and the round number
///   adversarial  just below s_n when s_n is legal (digit s_nn)
struct AlicePolicy {
  enum class Kind { human, midpoint, greedy, random, adversarial };
  Kind kind = Kind::human;
  Rational target;
  std::uint64_t seed = 0;

  static AlicePolicy parse(std::string_view text);
  std::string to_string() const;
};

enum class BobPolicy { strategy, human };
BobPolicy parse_bob_policy(std::string_view text);
std::string_view to_string(BobPolicy b) noexcept;

/// Alice plays a_n in (a_{n-1}, b_{n-1}), then Bob plays b_n in (a_n, b_{n-1}),
/// with a_0 = 0 and b_0 = 1. S is an enumeration of points, or all of [0,1]
/// when absent.
class IntervalGame {
 public:
  IntervalGame(std::optional<Enumeration> s, AlicePolicy alice, BobPolicy bob, std::size_t rounds);

  GameStatus status() const noexcept { return status_; }
  /// Round being played, 1-based; rounds played so far once closed.
  std::size_t round() const noexcept { return a_.size() + (status_ == GameStatus::awaiting_alice ? 1 : 0); }
  std::size_t completed() const noexcept { return b_.size(); }
  std::size_t max_rounds() const noexcept { return rounds_; }
  const std::vector<Rational>& a() const noexcept { return a_; }
  const std::vector<Rational>& b() const noexcept { return b_; }
  const std::optional<Enumeration>& target_set() const noexcept { return s_; }
  const AlicePolicy& alice() const noexcept { return alice_; }
  BobPolicy bob() const noexcept { return bob_; }

  /// Open interval the next move must lie in.
  IntervalQ legal_interval() const;

  void alice_move(const Rational& value);
  void bob_move(const Rational& value);
  /// Generic entry point; the role must match the turn.
  void move(Role role, const Rational& value);

  /// b_n = s_n when s_n lies in (a_n, b_{n-1}) (a rational just below an
  /// irrational s_n), else the midpoint of (a_n, b_{n-1}).
  Rational bob_strategy() const;
  Rational alice_policy_move() const;

  /// Rounds k <= completed for which s_k exists: s_k outside (a_k, b_k).
  ExclusionCertificate round_certificate() const;
  /// Chain [0,1], [a_1,b_1], ...; enclosure (a_n, b_n).
  Construction as_construction() const;
  VerifyReport audit() const;
  /// Set-level verdict, only when S is all of [0,1].
  std::optional<std::string> verdict() const;

 private:
  void advance();

  std::optional<Enumeration> s_;
  AlicePolicy alice_;
  BobPolicy bob_;
  std::size_t rounds_;
  std::vector<Rational> a_;
  std::vector<Rational> b_;
  GameStatus status_ = GameStatus::awaiting_alice;
  bool advancing_ = false;
};

/// Base-10 digit game: z_n = (a_n + b_n) mod 10 against the diagonal digits s_nn.
class DiagonalGame {
 public:
  DiagonalGame(Enumeration s, AlicePolicy alice, BobPolicy bob, std::size_t rounds);

  GameStatus status() const noexcept { return status_; }
  std::size_t round() const noexcept { return a_.size() + (status_ == GameStatus::awaiting_alice ? 1 : 0); }
  std::size_t completed() const noexcept { return b_.size(); }
  std::size_t max_rounds() const noexcept { return rounds_; }
  const std::vector<unsigned>& a() const noexcept { return a_; }
  const std::vector<unsigned>& b() const noexcept { return b_; }
  const std::vector<unsigned>& z() const noexcept { return z_; }
  const Enumeration& target_set() const noexcept { return s_; }
  const AlicePolicy& alice() const noexcept { return alice_; }
  BobPolicy bob() const noexcept { return bob_; }

  void alice_move(unsigned digit);
  void bob_move(unsigned digit);
  void move(Role role, unsigned digit);

  /// s_nn, when S has an n-th row.
  std::optional<unsigned> diagonal_digit(std::size_t n) const;
  /// Chooses b_n so that z_n = s_nn + 1 (mod 10), or s_nn + 2 when that is 0.
  unsigned bob_strategy() const;
  unsigned alice_policy_move() const;

  ExclusionCertificate round_certificate() const;
  Construction as_construction() const;
  VerifyReport audit() const;

 private:
  void advance();

  Enumeration s_;
  AlicePolicy alice_;
  BobPolicy bob_;
  std::size_t rounds_;
  std::vector<unsigned> a_;
  std::vector<unsigned> b_;
  std::vector<unsigned> z_;
  GameStatus status_ = GameStatus::awaiting_alice;
  bool advancing_ = false;
};

}  // namespace dforge
