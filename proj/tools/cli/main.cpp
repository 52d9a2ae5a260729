#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dforge/covers.hpp"
#include "dforge/finite_cantor.hpp"
#include "dforge/games.hpp"
#include "dforge/service/runs.hpp"
#include "dforge/service/service.hpp"
#include "dforge/service/sessions.hpp"

namespace {

using dforge::Error;
using dforge::ErrorCode;
using dforge::Rational;
using dforge::service::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::not_found, "cannot open " + path, path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Source {
  std::string kind;
  std::string file;
  unsigned base = 10;

  void add(CLI::App* app) {
    auto* k = app->add_option("--enum", kind, "built-in enumeration (rationals, dyadics, surds)");
    auto* f = app->add_option("--file", file, "one value per line")->check(CLI::ExistingFile);
    k->excludes(f);
    f->excludes(k);
  }
  bool given() const { return !kind.empty() || !file.empty(); }
  dforge::Enumeration load() const {
    if (!file.empty()) return dforge::Enumeration::load_file(file, base);
    if (kind.empty()) throw CLI::RequiredError("--enum or --file");
    return dforge::Enumeration::builtin(dforge::parse_enumeration_kind(kind));
  }
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// construct

struct ConstructArgs {
  std::string method;
  Source source;
  std::size_t depth = 16;
  unsigned base = 10;
  std::string perfect = "unit_interval";
  std::string output;
  bool as_json = false;
};

int run_construct(const ConstructArgs& a) {
  dforge::service::RunRequest request;
  request.method = a.method;
  request.enumeration = dforge::service::encode_enumeration(a.source.load());
  request.depth = a.depth;
  request.base = a.base;
  request.perfect = a.perfect;
  const json run = dforge::service::execute(request);
  if (!a.output.empty()) {
    std::ofstream out(a.output);
    out << run.dump(2) << '\n';
  }
  if (a.as_json) {
    print_json(run);
  } else {
    const json& r = run.at("result");
    std::cout << "method: " << a.method << '\n';
    if (a.method == "wenner") {
      std::cout << "b: " << r.at("b").back().get<std::string>() << " (~" << run.at("approx").at("b").get<std::string>()
                << ")\n";
    } else {
      std::cout << "links: " << r.at("chain").size() << '\n';
      std::cout << "enclosure: " << r.at("enclosure").get<std::string>() << '\n';
      std::cout << "eta: " << r.at("eta").get<std::string>() << " (~" << run.at("approx").at("eta").get<std::string>()
                << ")\n";
      if (!r.at("digits").is_null()) std::cout << "digits: " << r.at("digits").get<std::string>() << '\n';
      if (r.at("early_termination").get<bool>()) std::cout << "early termination\n";
    }
    std::cout << "covered: " << run.at("certificate").at("covered") << '\n';
    std::cout << run.at("audit").at("message").get<std::string>() << '\n';
  }
  return run.at("audit").at("ok").get<bool>() ? 0 : 1;
}

// verify

int run_verify(const std::string& input, bool as_json) {
  json run;
  try {
    run = json::parse(slurp(input));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, input + ": " + e.what());
  }
  const json report = dforge::service::encode_report(dforge::service::verify_run(run));
  if (as_json) {
    print_json(report);
  } else {
    std::cout << report.at("message").get<std::string>() << '\n';
  }
  return report.at("ok").get<bool>() ? 0 : 1;
}

// cover

struct CoverArgs {
  std::string target = "[0,1]";
  Source source;
  std::string epsilon = "1";
  std::size_t count = 16;
  bool as_json = false;
};

dforge::Cover load_cover(const CoverArgs& a) {
  if (a.source.file.empty()) throw CLI::RequiredError("--file");
  return dforge::Cover::parse(dforge::IntervalQ::parse(a.target), slurp(a.source.file));
}

json indices_json(const std::vector<std::size_t>& v) { return json(v); }

int run_subcover(const CoverArgs& a) {
  const dforge::Cover c = load_cover(a);
  const auto indices = dforge::heine_borel_subcover(c);
  if (a.as_json) {
    json pieces = json::array();
    for (auto i : indices) pieces.push_back(c.pieces[i - 1].to_string());
    print_json({{"target", c.target.to_string()}, {"indices", indices_json(indices)}, {"pieces", pieces},
                {"verified", dforge::is_subcover_chain(c, indices)}});
  } else {
    std::cout << "subcover:";
    for (auto i : indices) std::cout << ' ' << i;
    std::cout << '\n';
    for (auto i : indices) std::cout << "  " << i << ": " << c.pieces[i - 1].to_string() << '\n';
  }
  return 0;
}

int run_lowerbound(const CoverArgs& a) {
  const dforge::Cover c = load_cover(a);
  const auto bound = dforge::cover_length_lower_bound(c);
  const bool exceeds = bound.bound > c.target.width();
  if (a.as_json) {
    print_json({{"target", c.target.to_string()}, {"chain", indices_json(bound.chain)}, {"bound", bound.bound.to_string()},
                {"exceeds_target", exceeds}, {"approx", {{"bound", bound.bound.approx(12)}}}});
  } else {
    std::cout << "length along subcover: " << bound.bound.to_string() << " (~" << bound.bound.approx(12) << ")\n";
    std::cout << (exceeds ? "exceeds " : "does not exceed ") << c.target.width().to_string() << '\n';
  }
  return 0;
}

int run_epsilon(const CoverArgs& a) {
  const Rational eps = Rational::parse(a.epsilon);
  auto [c, ledger] = dforge::measure_zero_cover(a.source.load(), eps, a.count);
  if (a.as_json) {
    json pieces = json::array();
    for (const auto& p : c.pieces) pieces.push_back(p.to_string());
    json terms = json::array();
    for (const auto& [j, len] : ledger.terms) terms.push_back({{"j", j}, {"length", len.to_string()}});
    print_json({{"epsilon", eps.to_string()}, {"pieces", pieces}, {"terms", terms}, {"total", ledger.total.to_string()},
                {"approx", {{"total", ledger.total.approx(12)}}}});
  } else {
    for (std::size_t j = 0; j < c.pieces.size(); ++j) std::cout << "  " << j + 1 << ": " << c.pieces[j].to_string() << '\n';
    std::cout << "total length: " << ledger.total.to_string() << " < " << eps.to_string() << '\n';
  }
  return 0;
}

// game

struct GameArgs {
  std::string kind;
  Source source;
  std::string alice = "midpoint";
  std::string bob = "strategy";
  std::size_t rounds = 8;
  bool as_json = false;
};

std::optional<dforge::Role> human_turn(const json& state) {
  const std::string status = state.at("status").get<std::string>();
  if (status == "awaiting_alice" && state.at("alice") == "human") return dforge::Role::alice;
  if (status == "awaiting_bob" && state.at("bob") == "human") return dforge::Role::bob;
  return std::nullopt;
}

void print_board(const json& state) {
  for (const auto& h : state.at("history")) {
    std::cout << "round " << h.at("round") << ": a = " << (h.at("a").is_string() ? h.at("a").get<std::string>() : h.at("a").dump())
              << ", b = " << (h.at("b").is_string() ? h.at("b").get<std::string>() : h.at("b").dump());
    if (state.at("kind") == "diagonal") std::cout << ", z = " << h.at("z").dump() << ", s_nn = " << h.at("s_nn").dump();
    std::cout << '\n';
  }
}

int run_game(const GameArgs& a) {
  json config = {{"kind", a.kind}, {"alice", a.alice}, {"bob", a.bob}, {"rounds", a.rounds}};
  if (a.source.given()) {
    config["enum"] = dforge::service::encode_enumeration(a.source.load());
  } else {
    config["enum"] = nullptr;
  }
  dforge::service::GameReplay game(config);
  json state = game.state();
  while (auto role = human_turn(state)) {
    const std::string who = *role == dforge::Role::alice ? "a" : "b";
    if (state.contains("legal_interval") && !state.at("legal_interval").is_null()) {
      std::cout << who << "_" << state.at("round") << " in " << state.at("legal_interval").get<std::string>() << ": "
                << std::flush;
    } else {
      std::cout << who << "_" << state.at("round") << " (digit 0-9): " << std::flush;
    }
    std::string line;
    if (!std::getline(std::cin, line)) throw Error(ErrorCode::validation, "input ended before the game closed");
    try {
      game.apply({{"role", std::string(dforge::to_string(*role))}, {"value", line}});
    } catch (const Error& e) {
      std::cout << "rejected: " << e.what() << '\n';
      continue;
    }
    state = game.state();
  }
  if (a.as_json) {
    print_json(state);
  } else {
    print_board(state);
    if (state.contains("z") && !state.at("z").is_null()) std::cout << "z = " << state.at("z").get<std::string>() << '\n';
    std::cout << "excluded rounds: " << state.at("certificate").at("covered") << '\n';
    if (state.contains("verdict") && !state.at("verdict").is_null()) {
      std::cout << state.at("verdict").get<std::string>() << '\n';
    }
    std::cout << state.at("audit").at("message").get<std::string>() << '\n';
  }
  return 0;
}

// enum

int run_enum_list(const Source& s, std::size_t count, bool as_json) {
  const dforge::Enumeration e = s.load();
  json values = json::array();
  for (std::size_t k = 1; k <= count && e.has(k); ++k) values.push_back(e.at(k).to_string());
  if (as_json) {
    print_json({{"kind", std::string(dforge::to_string(e.kind()))}, {"values", values}});
  } else {
    for (const auto& v : values) std::cout << v.get<std::string>() << '\n';
  }
  return 0;
}

// oracle

int run_oracle_powerset(std::size_t size, bool as_json) {
  if (size > 4) throw Error(ErrorCode::domain, "exhaustive powerset check is limited to |X| <= 4", std::to_string(size));
  const std::uint32_t subsets = 1u << size;
  std::uint64_t functions = 0;
  std::vector<std::uint32_t> f(size, 0);
  while (true) {
    dforge::powerset_witness(size, f);
    ++functions;
    std::size_t i = 0;
    while (i < size && ++f[i] == subsets) f[i++] = 0;
    if (i == size) break;
  }
  if (as_json) {
    print_json({{"size", size}, {"functions", functions}, {"surjective", 0}});
  } else {
    std::cout << "checked " << functions << " functions X -> P(X) with |X| = " << size
              << "; each misses its set {x : x not in f(x)}\n";
  }
  return 0;
}

int run_oracle_diagonal(const std::string& path, bool as_json) {
  dforge::BinaryMatrix m;
  std::istringstream in(slurp(path));
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::vector<std::uint8_t> row;
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        row.push_back(static_cast<std::uint8_t>(ch - '0'));
      } else if (ch != ' ' && ch != '\t' && ch != '\r') {
        throw Error(ErrorCode::parse, "line " + std::to_string(number) + ": expected 0 or 1", std::to_string(number));
      }
    }
    if (!row.empty()) m.push_back(std::move(row));
  }
  const auto b = dforge::diagonal_row(m);
  std::string bits;
  for (auto d : b) bits.push_back(static_cast<char>('0' + d));
  if (as_json) {
    print_json({{"row", bits}});
  } else {
    std::cout << bits << '\n';
  }
  return 0;
}

dforge::DigitStream bits_of(const std::string& text) {
  if (text.rfind("0.", 0) == 0) return dforge::DigitStream::parse(text, 2);
  return dforge::DigitStream::parse("0." + text, 2);
}

int run_oracle_metric(const std::string& x, const std::string& y, bool as_json) {
  const Rational d = dforge::cantor_metric(bits_of(x), bits_of(y));
  if (as_json) {
    print_json({{"distance", d.to_string()}});
  } else {
    std::cout << d.to_string() << '\n';
  }
  return 0;
}

int run_serve(const std::string& host, int port, const std::optional<std::string>& persist) {
  dforge::service::SessionStore store(dforge::service::resolve_persist(persist));
  dforge::service::HttpServer server(store);
  const int bound = server.bind(host, port);
  std::cout << "listening on http://" << host << ":" << bound << std::endl;
  if (store.persist_path()) std::cout << "persisting to " << store.persist_path()->string() << std::endl;
  server.listen();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dforge: certified escapes from enumerations of reals"};
  app.require_subcommand(1);
  int code = 0;

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "build a real missing every enumerated value");
  c->add_option("--method", construct.method)
      ->required()
      ->check(CLI::IsMember({"cantor1874", "trisect", "diagonal", "perfect", "baire", "wenner"}));
  construct.source.add(c);
  c->add_option("--depth", construct.depth)->check(CLI::PositiveNumber);
  c->add_option("--base", construct.base)->check(CLI::Range(2, 36));
  c->add_option("--perfect", construct.perfect)->check(CLI::IsMember({"unit_interval", "cantor_middle_thirds"}));
  c->add_option("--output", construct.output, "also write the run JSON here");
  c->add_flag("--json", construct.as_json);
  c->callback([&] {
    construct.source.base = construct.base;
    code = run_construct(construct);
  });

  std::string verify_input;
  bool verify_json = false;
  auto* v = app.add_subcommand("verify", "re-audit a stored run");
  v->add_option("--input", verify_input)->required()->check(CLI::ExistingFile);
  v->add_flag("--json", verify_json);
  v->callback([&] { code = run_verify(verify_input, verify_json); });

  CoverArgs cover;
  auto* cv = app.add_subcommand("cover", "finite covers and length bounds");
  cv->require_subcommand(1);
  auto add_cover_options = [&cover](CLI::App* sub) {
    sub->add_option("--target", cover.target);
    cover.source.add(sub);
    sub->add_option("--epsilon", cover.epsilon);
    sub->add_option("--count", cover.count);
    sub->add_flag("--json", cover.as_json);
  };
  auto* subcover = cv->add_subcommand("subcover", "greedy finite subcover");
  add_cover_options(subcover);
  subcover->callback([&] { code = run_subcover(cover); });
  auto* lowerbound = cv->add_subcommand("lowerbound", "length of the subcover chain");
  add_cover_options(lowerbound);
  lowerbound->callback([&] { code = run_lowerbound(cover); });
  auto* epsilon = cv->add_subcommand("epsilon", "small cover of an enumeration");
  add_cover_options(epsilon);
  epsilon->callback([&] { code = run_epsilon(cover); });

  GameArgs game;
  auto* g = app.add_subcommand("game", "interval or digit game");
  g->add_option("kind", game.kind)->required()->check(CLI::IsMember({"interval", "diagonal"}));
  game.source.add(g);
  g->add_option("--alice", game.alice, "human, midpoint, greedy:T, random:SEED or adversarial");
  g->add_option("--bob", game.bob)->check(CLI::IsMember({"strategy", "human"}));
  g->add_option("--rounds", game.rounds)->check(CLI::PositiveNumber);
  g->add_flag("--json", game.as_json);
  g->callback([&] { code = run_game(game); });

  Source listed;
  std::size_t list_count = 10;
  bool list_json = false;
  auto* en = app.add_subcommand("enum", "enumerations");
  en->require_subcommand(1);
  auto* list = en->add_subcommand("list", "print the first values");
  list->add_option("--kind", listed.kind);
  list->add_option("--file", listed.file)->check(CLI::ExistingFile);
  list->add_option("--count", list_count);
  list->add_flag("--json", list_json);
  list->callback([&] { code = run_enum_list(listed, list_count, list_json); });

  auto* o = app.add_subcommand("oracle", "finite diagonal checks");
  o->require_subcommand(1);
  std::size_t ps_size = 3;
  std::string matrix_file;
  std::string mx;
  std::string my;
  bool oracle_json = false;
  auto* ps = o->add_subcommand("powerset", "every f: X -> P(X) misses a subset");
  ps->add_option("--size", ps_size)->required();
  ps->add_flag("--json", oracle_json);
  ps->callback([&] { code = run_oracle_powerset(ps_size, oracle_json); });
  auto* dg = o->add_subcommand("diagonal", "row missing from a binary matrix");
  dg->add_option("--matrix", matrix_file)->required()->check(CLI::ExistingFile);
  dg->add_flag("--json", oracle_json);
  dg->callback([&] { code = run_oracle_diagonal(matrix_file, oracle_json); });
  auto* mt = o->add_subcommand("metric", "distance of two bit strings");
  mt->add_option("--x", mx)->required();
  mt->add_option("--y", my)->required();
  mt->add_flag("--json", oracle_json);
  mt->callback([&] { code = run_oracle_metric(mx, my, oracle_json); });

  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::string> persist;
  auto* s = app.add_subcommand("serve", "JSON session service");
  s->add_option("--host", host);
  s->add_option("--port", port)->check(CLI::Range(0, 65535));
  s->add_option("--persist", persist, "append-only JSON-lines session log");
  s->callback([&] { code = run_serve(host, port, persist); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error[" << dforge::to_string(e.code()) << "]: " << e.what() << '\n';
    if (e.witness()) std::cerr << "witness: " << *e.witness() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error[validation]: " << e.what() << '\n';
    return 1;
  }
  return code;
}
