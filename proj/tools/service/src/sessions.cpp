#include "dforge/service/sessions.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <random>

#include "dforge/service/runs.hpp"

namespace dforge::service {
namespace {

std::variant<IntervalGame, DiagonalGame> build(const json& config) {
  if (!config.is_object()) throw Error(ErrorCode::validation, "game config must be a JSON object");
  const GameKind kind = parse_game_kind(require_string(config, "kind"));
  const AlicePolicy alice = AlicePolicy::parse(config.contains("alice") ? require_string(config, "alice") : "midpoint");
  const BobPolicy bob = parse_bob_policy(config.contains("bob") ? require_string(config, "bob") : "strategy");
  const std::size_t rounds = config.contains("rounds") ? require_count(config, "rounds") : 8;
  std::optional<Enumeration> s;
  if (config.contains("enum") && !config.at("enum").is_null()) s = decode_enumeration(config.at("enum"));
  if (kind == GameKind::interval) return IntervalGame(std::move(s), alice, bob, rounds);
  if (!s) throw Error(ErrorCode::validation, "the diagonal game needs an enumeration", "enum");
  return DiagonalGame(std::move(*s), alice, bob, rounds);
}

unsigned parse_digit(const json& value) {
  if (value.is_number_unsigned()) return value.get<unsigned>();
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    if (text.size() == 1 && text[0] >= '0' && text[0] <= '9') return static_cast<unsigned>(text[0] - '0');
  }
  throw Error(ErrorCode::validation, "digit move must be a single digit 0-9", "value");
}

json interval_state(const IntervalGame& g) {
  json j;
  j["kind"] = "interval";
  j["status"] = std::string(to_string(g.status()));
  j["round"] = g.round();
  j["completed"] = g.completed();
  j["max_rounds"] = g.max_rounds();
  j["alice"] = g.alice().to_string();
  j["bob"] = std::string(to_string(g.bob()));
  j["enum"] = g.target_set() ? encode_enumeration(*g.target_set()) : json(nullptr);
  j["legal_interval"] = g.status() == GameStatus::closed ? json(nullptr) : json(g.legal_interval().to_string());
  const ExclusionCertificate cert = g.round_certificate();
  json history = json::array();
  for (std::size_t n = 1; n <= g.a().size(); ++n) {
    json h;
    h["round"] = n;
    h["a"] = encode(g.a()[n - 1]);
    h["b"] = n <= g.b().size() ? json(encode(g.b()[n - 1])) : json(nullptr);
    h["s"] = g.target_set() && g.target_set()->has(n) ? json(g.target_set()->at(n).to_string()) : json(nullptr);
    h["excluded"] = n <= cert.rounds.size();
    history.push_back(std::move(h));
  }
  j["history"] = std::move(history);
  j["certificate"] = encode_certificate(cert);
  j["audit"] = encode_report(g.audit());
  j["verdict"] = g.verdict() ? json(*g.verdict()) : json(nullptr);
  json approx;
  if (!g.b().empty()) {
    approx["a"] = g.a()[g.b().size() - 1].approx(12);
    approx["b"] = g.b().back().approx(12);
  }
  j["approx"] = approx.is_null() ? json::object() : approx;
  return j;
}

json diagonal_state(const DiagonalGame& g) {
  json j;
  j["kind"] = "diagonal";
  j["status"] = std::string(to_string(g.status()));
  j["round"] = g.round();
  j["completed"] = g.completed();
  j["max_rounds"] = g.max_rounds();
  j["alice"] = g.alice().to_string();
  j["bob"] = std::string(to_string(g.bob()));
  j["enum"] = encode_enumeration(g.target_set());
  json history = json::array();
  for (std::size_t n = 1; n <= g.a().size(); ++n) {
    json h;
    h["round"] = n;
    h["a"] = g.a()[n - 1];
    h["b"] = n <= g.b().size() ? json(g.b()[n - 1]) : json(nullptr);
    h["z"] = n <= g.z().size() ? json(g.z()[n - 1]) : json(nullptr);
    const auto s = g.diagonal_digit(n);
    h["s_nn"] = s ? json(*s) : json(nullptr);
    history.push_back(std::move(h));
  }
  j["history"] = std::move(history);
  j["z"] = g.z().empty() ? json(nullptr) : json(DigitStream(10, {g.z().begin(), g.z().end()}).to_string());
  j["certificate"] = encode_certificate(g.round_certificate());
  j["audit"] = encode_report(g.audit());
  return j;
}

std::uint64_t fresh_salt() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace

GameReplay::GameReplay(const json& config) : game_(build(config)) {}

void GameReplay::apply(const json& move) {
  if (!move.is_object()) throw Error(ErrorCode::validation, "move must be a JSON object");
  const Role role = parse_role(require_string(move, "role"));
  const json& value = require(move, "value");
  if (auto* g = std::get_if<IntervalGame>(&game_)) {
    g->move(role, decode_rational(value, "value"));
  } else {
    std::get<DiagonalGame>(game_).move(role, parse_digit(value));
  }
}

json GameReplay::state() const {
  return std::visit(
      [](const auto& g) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, IntervalGame>) {
          return interval_state(g);
        } else {
          return diagonal_state(g);
        }
      },
      game_);
}

GameKind GameReplay::kind() const {
  return std::holds_alternative<IntervalGame>(game_) ? GameKind::interval : GameKind::diagonal;
}

GameStatus GameReplay::status() const {
  return std::visit([](const auto& g) { return g.status(); }, game_);
}

GameReplay GameReplay::replay(const json& config, const json& moves) {
  GameReplay g(config);
  for (const auto& m : moves) g.apply(m);
  return g;
}

GameSession::GameSession(std::string id_, json config_, std::string created_)
    : id(std::move(id_)), config(std::move(config_)), game(config), state(game.state()),
      created(created_), updated(std::move(created_)) {}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

std::optional<std::filesystem::path> resolve_persist(const std::optional<std::string>& flag) {
  if (const char* env = std::getenv("DIAGONAL_FORGE_PERSIST"); env && *env) return std::filesystem::path(env);
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  return std::nullopt;
}

SessionStore::SessionStore(std::optional<std::filesystem::path> persist)
    : persist_(std::move(persist)), salt_(fresh_salt()) {
  if (persist_) load();
}

std::string SessionStore::next_id(char prefix) {
  std::mt19937_64 mix(salt_ ^ ++counter_);
  char buffer[24];
  std::snprintf(buffer, sizeof buffer, "%c%016llx", prefix, static_cast<unsigned long long>(mix()));
  return buffer;
}

void SessionStore::append(const json& record) {
  if (!persist_) return;
  std::lock_guard guard(file_lock_);
  std::ofstream out(*persist_, std::ios::app);
  if (!out) throw Error(ErrorCode::configuration, "cannot append to " + persist_->string());
  out << record.dump() << '\n';
}

void SessionStore::load() {
  std::ifstream in(*persist_);
  if (!in) return;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::parse, "persist file line " + std::to_string(number) + ": " + e.what(),
                  std::to_string(number));
    }
    const std::string type = require_string(record, "type");
    const std::string id = require_string(record, "id");
    if (type == "game") {
      games_[id] = std::make_shared<GameSession>(id, require(record, "config"), require_string(record, "created"));
    } else if (type == "move") {
      auto it = games_.find(id);
      if (it == games_.end()) continue;
      GameSession& s = *it->second;
      s.game.apply(require(record, "move"));
      s.moves.push_back(record.at("move"));
      s.state = s.game.state();
      s.updated = require_string(record, "at");
    } else if (type == "run") {
      runs_[id] = std::make_shared<const RunSession>(RunSession{id, require(record, "run"), require_string(record, "created")});
    }
  }
}

json SessionStore::create_game(const json& config) {
  const std::string created = utc_now();
  std::unique_lock guard(map_lock_);
  const std::string id = next_id('g');
  auto session = std::make_shared<GameSession>(id, config, created);
  append({{"type", "game"}, {"id", id}, {"config", config}, {"created", created}});
  games_[id] = session;
  return {{"id", id}, {"status", session->state.at("status")}, {"state", session->state}};
}

std::shared_ptr<GameSession> SessionStore::find_game(const std::string& id) const {
  std::shared_lock guard(map_lock_);
  auto it = games_.find(id);
  if (it == games_.end()) throw Error(ErrorCode::not_found, "no game session '" + id + "'", id);
  return it->second;
}

json SessionStore::submit_move(const std::string& id, const json& move) {
  auto session = find_game(id);
  std::lock_guard guard(session->lock);
  session->game.apply(move);
  const json logged = {{"role", move.at("role")}, {"value", move.at("value")}};
  const std::string at = utc_now();
  session->moves.push_back(logged);
  session->state = session->game.state();
  session->updated = at;
  append({{"type", "move"}, {"id", id}, {"move", logged}, {"at", at}});
  return session->state;
}

json SessionStore::game(const std::string& id) const {
  auto session = find_game(id);
  std::lock_guard guard(session->lock);
  json meta = {{"id", session->id},
               {"kind", session->config.at("kind")},
               {"config", session->config},
               {"created", session->created},
               {"updated", session->updated},
               {"moves", session->moves}};
  return {{"session", std::move(meta)}, {"state", session->state}};
}

json SessionStore::create_run(const json& request) {
  json run = execute(RunRequest::from_json(request));
  const std::string created = utc_now();
  std::unique_lock guard(map_lock_);
  const std::string id = next_id('r');
  append({{"type", "run"}, {"id", id}, {"run", run}, {"created", created}});
  runs_[id] = std::make_shared<const RunSession>(RunSession{id, run, created});
  return {{"id", id}, {"run", std::move(run)}};
}

json SessionStore::run(const std::string& id) const {
  std::shared_lock guard(map_lock_);
  auto it = runs_.find(id);
  if (it == runs_.end()) throw Error(ErrorCode::not_found, "no construction run '" + id + "'", id);
  return it->second->run;
}

json SessionStore::verify(const std::string& id) const {
  return encode_report(verify_run(run(id)));
}

}  // namespace dforge::service
