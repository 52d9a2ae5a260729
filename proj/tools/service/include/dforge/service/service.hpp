#pragma once

#include <memory>
#include <string>

#include "dforge/service/sessions.hpp"

namespace dforge::service {

struct Response {
  int status = 200;
  json body;
};

/// Routing without sockets; the HTTP server is a thin shell around this.
class Service {
 public:
  explicit Service(SessionStore& store) : store_(store) {}

  Response handle(const std::string& method, const std::string& path, const std::string& body) const;

 private:
  SessionStore& store_;
};

/// HTTP shell over Service with permissive CORS headers.
class HttpServer {
 public:
  explicit HttpServer(SessionStore& store);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Returns the bound port; 0 picks an ephemeral one.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace dforge::service
