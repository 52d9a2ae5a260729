#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <variant>

#include "dforge/games.hpp"
#include "dforge/service/wire.hpp"

namespace dforge::service {

/// A game rebuilt from its config; human moves are the only thing logged,
/// scripted moves follow deterministically.
class GameReplay {
 public:
  /// {kind, enum?, alice?, bob?, rounds?}
  explicit GameReplay(const json& config);

  /// Applies {role, value}; throws without changing state on a bad move.
  void apply(const json& move);
  /// Deterministic state document (no ids, no timestamps).
  json state() const;
  GameKind kind() const;
  GameStatus status() const;

  static GameReplay replay(const json& config, const json& moves);

 private:
  std::variant<IntervalGame, DiagonalGame> game_;
};

struct GameSession {
  std::string id;
  json config;
  json moves = json::array();
  GameReplay game;
  json state;
  std::string created;
  std::string updated;
  std::mutex lock;

  GameSession(std::string id_, json config_, std::string created_);
};

struct RunSession {
  std::string id;
  json run;
  std::string created;
};

/// In-memory sessions with an optional append-only JSON-lines log that is
/// replayed on startup.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> persist = std::nullopt);

  /// {id, status, state}
  json create_game(const json& config);
  json submit_move(const std::string& id, const json& move);
  /// {session: {id, kind, created, updated, moves}, state}
  json game(const std::string& id) const;

  /// {id, run}
  json create_run(const json& request);
  json run(const std::string& id) const;
  json verify(const std::string& id) const;

  const std::optional<std::filesystem::path>& persist_path() const noexcept { return persist_; }

 private:
  std::shared_ptr<GameSession> find_game(const std::string& id) const;
  std::string next_id(char prefix);
  void append(const json& record);
  void load();

  std::optional<std::filesystem::path> persist_;
  mutable std::shared_mutex map_lock_;
  std::mutex file_lock_;
  std::map<std::string, std::shared_ptr<GameSession>> games_;
  std::map<std::string, std::shared_ptr<const RunSession>> runs_;
  std::uint64_t counter_ = 0;
  std::uint64_t salt_ = 0;
};

/// DIAGONAL_FORGE_PERSIST when set, else the flag value.
std::optional<std::filesystem::path> resolve_persist(const std::optional<std::string>& flag);

std::string utc_now();

}  // namespace dforge::service
