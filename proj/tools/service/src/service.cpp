#include "dforge/service/service.hpp"

#include <regex>

#include <httplib.h>

#include "dforge/service/runs.hpp"

namespace dforge::service {
namespace {

json parse_body(const std::string& body) {
  try {
    return json::parse(body.empty() ? std::string("{}") : body);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::validation, std::string("malformed JSON body: ") + e.what());
  }
}

Response route(SessionStore& store, const std::string& method, const std::string& path, const std::string& body) {
  static const std::regex game_path(R"(^/games/([A-Za-z0-9]+)$)");
  static const std::regex move_path(R"(^/games/([A-Za-z0-9]+)/moves$)");
  static const std::regex run_path(R"(^/construct/([A-Za-z0-9]+)$)");
  static const std::regex verify_path(R"(^/construct/([A-Za-z0-9]+)/verify$)");
  std::smatch m;
  if (method == "GET" && path == "/health") return {200, {{"status", "ok"}}};
  if (method == "POST" && path == "/games") return {201, store.create_game(parse_body(body))};
  if (method == "POST" && std::regex_match(path, m, move_path)) return {200, store.submit_move(m[1], parse_body(body))};
  if (method == "GET" && std::regex_match(path, m, game_path)) return {200, store.game(m[1])};
  if (method == "POST" && path == "/construct") return {201, store.create_run(parse_body(body))};
  if (method == "GET" && std::regex_match(path, m, run_path)) return {200, store.run(m[1])};
  if (method == "GET" && std::regex_match(path, m, verify_path)) return {200, store.verify(m[1])};
  if (method == "POST" && path == "/verify") return {200, encode_report(verify_run(parse_body(body)))};
  throw Error(ErrorCode::not_found, "no route " + method + " " + path, path);
}

}  // namespace

Response Service::handle(const std::string& method, const std::string& path, const std::string& body) const {
  try {
    return route(store_, method, path, body);
  } catch (const Error& e) {
    return {http_status(e.code()), encode_error(e)};
  } catch (const json::exception& e) {
    return {400, {{"code", "validation"}, {"message", e.what()}}};
  } catch (const std::exception& e) {
    return {500, {{"code", "internal"}, {"message", e.what()}}};
  }
}

struct HttpServer::Impl {
  explicit Impl(SessionStore& store) : service(store) {}
  Service service;
  httplib::Server server;
};

HttpServer::HttpServer(SessionStore& store) : impl_(std::make_unique<Impl>(store)) {
  auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
    const Response r = impl_->service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  httplib::Server& server = impl_->server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Get(R"(/.*)", dispatch);
  server.Post(R"(/.*)", dispatch);
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw Error(ErrorCode::configuration, "cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace dforge::service
