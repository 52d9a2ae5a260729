#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include <httplib.h>

#include "dforge/enumeration.hpp"
#include "dforge/service/runs.hpp"
#include "dforge/service/service.hpp"
#include "dforge/service/sessions.hpp"
#include "gen.hpp"

using namespace dforge;
using namespace dforge::service;

namespace {

json body_of(const Response& r) { return r.body; }

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("dforge_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("rationals survive the wire") {
  testing::Gen gen(11);
  for (int i = 0; i < 2000; ++i) {
    const Rational r(gen.integer(-1'000'000'000'000'000'000, 1'000'000'000'000'000'000),
                     gen.integer(1, 1'000'000'000'000'000'000));
    const json j = encode(r);
    CHECK(decode_rational(json::parse(j.dump()), "x") == r);
  }
  const Rational big = Rational::pow(3, 200) / (Rational::pow(2, 150) + Rational(1));
  CHECK(decode_rational(json(encode(big)), "x") == big);
  CHECK_THROWS_AS(decode_rational(json(0.5), "x"), Error);
}

TEST_CASE("enumerations round trip through JSON") {
  const Enumeration list = Enumeration::parse_lines("1/3\nsqrt(2)-1\n0.25\n");
  const Enumeration back = decode_enumeration(encode_enumeration(list));
  REQUIRE(back.capacity() == std::optional<std::size_t>(3));
  for (std::size_t k = 1; k <= 3; ++k) CHECK(back.at(k).to_string() == list.at(k).to_string());
  CHECK(decode_enumeration(json("rationals")).kind() == EnumerationKind::rationals_01);
  CHECK(decode_enumeration(json{{"kind", "dyadics"}, {"prefix_len", 12}}).prefix_len() == 12);
}

TEST_CASE("error codes map to HTTP statuses") {
  CHECK(http_status(ErrorCode::not_found) == 404);
  CHECK(http_status(ErrorCode::validation) == 400);
  CHECK(http_status(ErrorCode::parse) == 400);
  CHECK(http_status(ErrorCode::illegal_move) == 409);
  CHECK(http_status(ErrorCode::turn) == 409);
  CHECK(http_status(ErrorCode::not_a_cover) == 422);
  const json e = encode_error(Error(ErrorCode::illegal_move, "bad", "2"));
  CHECK(e.at("code") == "illegal_move");
  CHECK(e.at("witness") == "2");
}

TEST_CASE("trisect run over the service") {
  SessionStore store;
  const Service service(store);
  const Response created =
      service.handle("POST", "/construct", R"({"method":"trisect","enum":"rationals_01","depth":8})");
  REQUIRE(created.status == 201);
  const json run = created.body.at("run");
  const json& chain = run.at("result").at("chain");
  REQUIRE(chain.size() == 9);
  Rational width(1);
  for (const auto& link : chain) {
    CHECK(IntervalQ::parse(link.get<std::string>()).width() == width);
    width /= Rational(3);
  }
  const std::string id = created.body.at("id");
  CHECK(service.handle("GET", "/construct/" + id, "").body == run);
  const Response audit = service.handle("GET", "/construct/" + id + "/verify", "");
  CHECK(audit.body.at("ok") == true);
  CHECK(audit.body.at("message") == "certificate OK (8/8 rounds)");
}

TEST_CASE("every method produces a run that re-verifies") {
  for (const std::string method : {"cantor1874", "trisect", "diagonal", "perfect", "baire", "wenner"}) {
    CAPTURE(method);
    RunRequest r;
    r.method = method;
    r.enumeration = json("rationals");
    r.depth = 12;
    const json run = execute(r);
    CHECK(run.at("audit").at("ok") == true);
    const json reparsed = json::parse(run.dump());
    CHECK(verify_run(reparsed).ok);
  }
  RunRequest inline_list = RunRequest::from_json(json::parse(R"({"method":"trisect","values":["0","1/3","1/2"],"depth":3})"));
  CHECK(verify_run(execute(inline_list)).ok);
}

TEST_CASE("tampered runs are reported invalid") {
  RunRequest r;
  r.method = "trisect";
  r.enumeration = json("rationals");
  r.depth = 8;
  const json run = execute(r);

  json bad = run;
  bad["certificate"]["rounds"][4]["excluded_by"] = "[0,1]";
  VerifyReport report = verify_run(bad);
  CHECK_FALSE(report.ok);
  CHECK(report.failed_round == std::optional<std::size_t>(5));
  CHECK(encode_report(report).at("message").get<std::string>().rfind("certificate INVALID at round 5", 0) == 0);

  json moved = run;
  moved["result"]["enclosure"] = "[0,1/6561]";
  moved["result"]["eta"] = "0";
  CHECK_FALSE(verify_run(moved).ok);

  r.method = "wenner";
  json w = execute(r);
  w["result"]["b"][3] = "1/2";
  CHECK_FALSE(verify_run(w).ok);

  SessionStore store;
  const Service service(store);
  const Response posted = service.handle("POST", "/verify", bad.dump());
  CHECK(posted.status == 200);
  CHECK(posted.body.at("ok") == false);
}

TEST_CASE("interval game session: Bob answers with the strategy reply") {
  SessionStore store;
  const Service service(store);
  const Response created = service.handle(
      "POST", "/games", R"({"kind":"interval","enum":"rationals_01","alice":"human","bob":"strategy","rounds":6})");
  REQUIRE(created.status == 201);
  CHECK(created.body.at("status") == "awaiting_alice");
  const std::string id = created.body.at("id");

  testing::Gen gen(5);
  const Enumeration s = Enumeration::rationals_01();
  Rational lo(0);
  Rational hi(1);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Rational a = gen.between(lo, hi);
    const Response moved = service.handle("POST", "/games/" + id + "/moves",
                                          json{{"role", "alice"}, {"value", a.to_string()}}.dump());
    REQUIRE(moved.status == 200);
    // Oracle: s_n itself when strictly inside (a_n, b_{n-1}), else the midpoint.
    const Rational sn = rationals_01(n);
    const Rational expected = (a < sn && sn < hi) ? sn : (a + hi) / Rational(2);
    const json& h = moved.body.at("history").at(n - 1);
    CHECK(h.at("a") == a.to_string());
    CHECK(h.at("b") == expected.to_string());
    lo = a;
    hi = expected;
  }
  const Response got = service.handle("GET", "/games/" + id, "");
  CHECK(got.body.at("state").at("status") == "closed");
  CHECK(got.body.at("state").at("audit").at("ok") == true);
  CHECK(got.body.at("session").at("moves").size() == 6);
}

TEST_CASE("session errors") {
  SessionStore store;
  const Service service(store);
  CHECK(service.handle("GET", "/games/nope", "").status == 404);
  CHECK(service.handle("GET", "/construct/nope/verify", "").status == 404);
  CHECK(service.handle("POST", "/games", "{not json").status == 400);
  CHECK(service.handle("POST", "/games", R"({"kind":"checkers"})").status == 400);
  CHECK(service.handle("POST", "/construct", R"({"method":"trisect"})").status == 400);

  const json created = body_of(service.handle("POST", "/games", R"({"kind":"interval","alice":"human"})"));
  const std::string id = created.at("id");
  const Response out_of_range =
      service.handle("POST", "/games/" + id + "/moves", R"({"role":"alice","value":"3/2"})");
  CHECK(out_of_range.status == 409);
  CHECK(out_of_range.body.at("code") == "illegal_move");
  CHECK(out_of_range.body.at("message").get<std::string>().find("(0, 1)") != std::string::npos);
  const Response wrong_turn = service.handle("POST", "/games/" + id + "/moves", R"({"role":"bob","value":"1/2"})");
  CHECK(wrong_turn.status == 409);
  CHECK(service.handle("POST", "/games/" + id + "/moves", R"({"role":"alice","value":0.5})").status == 400);
  CHECK(body_of(service.handle("GET", "/games/" + id, "")).at("session").at("moves").empty());
}

TEST_CASE("replaying a move log reproduces the state byte for byte") {
  testing::Gen gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    const bool interval = gen.coin();
    json config = {{"kind", interval ? "interval" : "diagonal"},
                   {"enum", "rationals"},
                   {"alice", "human"},
                   {"bob", gen.coin() ? "human" : "strategy"},
                   {"rounds", 5}};
    GameReplay live(config);
    json log = json::array();
    Rational lo(0);
    Rational hi(1);
    while (live.status() != GameStatus::closed) {
      const json state = live.state();
      const std::string role = state.at("status") == "awaiting_alice" ? "alice" : "bob";
      json move;
      if (interval) {
        const IntervalQ legal = IntervalQ::parse(state.at("legal_interval").get<std::string>());
        move = {{"role", role}, {"value", gen.between(legal.lo(), legal.hi()).to_string()}};
      } else {
        move = {{"role", role}, {"value", std::to_string(gen.integer(0, 9))}};
      }
      live.apply(move);
      log.push_back(move);
    }
    CHECK(GameReplay::replay(config, json::parse(log.dump())).state().dump() == live.state().dump());
  }
}

TEST_CASE("persisted sessions reload from the JSON-lines log") {
  const auto path = temp_file("persist");
  std::string game_id;
  std::string run_id;
  json state;
  {
    SessionStore store(path);
    game_id = store.create_game(json::parse(R"({"kind":"interval","enum":"rationals","alice":"human","rounds":3})"))
                  .at("id");
    store.submit_move(game_id, json::parse(R"({"role":"alice","value":"1/3"})"));
    state = store.submit_move(game_id, json::parse(R"({"role":"alice","value":"2/5"})"));
    run_id = store.create_run(json::parse(R"({"method":"diagonal","enum":"dyadics","depth":6,"base":2})")).at("id");
  }
  SessionStore reloaded(path);
  CHECK(reloaded.game(game_id).at("state").dump() == state.dump());
  CHECK(reloaded.verify(run_id).at("ok") == true);
  std::filesystem::remove(path);

  ::setenv("DIAGONAL_FORGE_PERSIST", "/tmp/from_env.jsonl", 1);
  CHECK(resolve_persist(std::string("/tmp/flag.jsonl")) == std::filesystem::path("/tmp/from_env.jsonl"));
  ::unsetenv("DIAGONAL_FORGE_PERSIST");
  CHECK(resolve_persist(std::string("/tmp/flag.jsonl")) == std::filesystem::path("/tmp/flag.jsonl"));
  CHECK_FALSE(resolve_persist(std::nullopt).has_value());
}

TEST_CASE("HTTP round trip on an ephemeral port") {
  SessionStore store;
  HttpServer server(store);
  const int port = server.bind("127.0.0.1", 0);
  std::thread worker([&] { server.listen(); });
  httplib::Client client("127.0.0.1", port);
  for (int i = 0; i < 100 && !client.Get("/health"); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(10));

  auto created = client.Post("/games", R"({"kind":"interval","enum":"rationals","alice":"human"})", "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  CHECK(created->get_header_value("Access-Control-Allow-Origin") == "*");
  const std::string id = json::parse(created->body).at("id");
  auto moved = client.Post("/games/" + id + "/moves", R"({"role":"alice","value":"1/2"})", "application/json");
  REQUIRE(moved);
  CHECK(json::parse(moved->body).at("history").at(0).at("b") == "3/4");
  auto missing = client.Get("/games/absent");
  REQUIRE(missing);
  CHECK(missing->status == 404);
  CHECK(json::parse(missing->body).at("code") == "not_found");

  server.stop();
  worker.join();
}
