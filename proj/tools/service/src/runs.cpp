#include "dforge/service/runs.hpp"

#include <vector>

#include "dforge/cauchy.hpp"
#include "dforge/constructors.hpp"
#include "dforge/perfect_set.hpp"

namespace dforge::service {
namespace {

const IntervalQ baire_ball = IntervalQ::open(Rational(0), Rational(1));

json strings(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(encode(v));
  return out;
}

json encode_construction(const Construction& c) {
  json chain = json::array();
  for (const auto& link : c.value.chain()) chain.push_back(link.to_string());
  json j;
  j["chain"] = std::move(chain);
  j["schedule"] = c.value.schedule() ? json(c.value.schedule()->label) : json(nullptr);
  j["enclosure"] = c.enclosure.to_string();
  j["eta"] = encode(c.eta);
  j["digits"] = c.digits ? json(c.digits->to_string()) : json(nullptr);
  j["early_termination"] = c.early_termination;
  j["scanned"] = c.scanned;
  json endpoints = json::array();
  for (const auto& [lo, hi] : c.endpoints) endpoints.push_back(json::array({to_string(lo), to_string(hi)}));
  j["endpoints"] = std::move(endpoints);
  json indices = json::array();
  for (const auto& [lo, hi] : c.endpoint_indices) indices.push_back(json::array({lo, hi}));
  j["endpoint_indices"] = std::move(indices);
  return j;
}

Construction decode_construction(const json& j, const std::string& method) {
  Construction c;
  c.method = method;
  std::vector<IntervalQ> chain;
  const json& links = require(j, "chain");
  if (!links.is_array()) throw Error(ErrorCode::validation, "field 'chain' must be an array", "chain");
  for (const auto& link : links) chain.push_back(decode_interval(link, "chain"));
  c.value = NestedReal(std::move(chain));
  c.enclosure = decode_interval(require(j, "enclosure"), "enclosure");
  c.eta = decode_rational(require(j, "eta"), "eta");
  if (j.contains("digits") && !j.at("digits").is_null()) c.digits = DigitStream::parse(require_string(j, "digits"));
  c.early_termination = j.value("early_termination", false);
  c.scanned = j.contains("scanned") ? require_count(j, "scanned") : 0;
  return c;
}

json approx_block(const Construction& c) {
  json j;
  j["eta"] = c.eta.approx(12);
  j["enclosure_width"] = c.enclosure.width().approx(12);
  return j;
}

std::vector<CauchyReal> wenner_inputs(const Enumeration& e, std::size_t depth) {
  std::vector<CauchyReal> inputs;
  for (std::size_t k = 1; k <= depth; ++k) inputs.push_back(CauchyReal::from_point(require_point(e, k), depth + 2));
  return inputs;
}

ConstructionOutput run_method(const RunRequest& r, const Enumeration& e) {
  if (r.method == "cantor1874") return cantor1874(e, IntervalQ::unit(), r.depth);
  if (r.method == "trisect") return trisect(e, r.depth);
  if (r.method == "diagonal") return diagonal(e, r.base, r.depth);
  if (r.method == "perfect") return perfect_escape(PerfectSetOracle(parse_perfect_set_kind(r.perfect)), e, r.depth);
  if (r.method == "baire") return baire_point(punctured_sets(e, r.depth), baire_ball, r.depth);
  throw Error(ErrorCode::validation, "unknown method '" + r.method + "'", r.method);
}

json request_json(const RunRequest& r, const Enumeration& e) {
  json j;
  j["method"] = r.method;
  j["enum"] = encode_enumeration(e);
  j["depth"] = r.depth;
  if (r.method == "diagonal") j["base"] = r.base;
  if (r.method == "perfect") j["perfect"] = r.perfect;
  return j;
}

}  // namespace

RunRequest RunRequest::from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::validation, "run request must be a JSON object");
  RunRequest r;
  r.method = require_string(j, "method");
  if (j.contains("enum")) {
    r.enumeration = j.at("enum");
  } else if (j.contains("values")) {
    r.enumeration = json{{"kind", "file_list"}, {"values", j.at("values")}};
  } else {
    throw Error(ErrorCode::validation, "missing field 'enum'", "enum");
  }
  if (j.contains("depth")) r.depth = require_count(j, "depth");
  if (j.contains("base")) {
    r.base = static_cast<unsigned>(require_count(j, "base"));
    if (r.base < 2 || r.base > 36) throw Error(ErrorCode::validation, "base must lie in [2, 36]", "base");
  }
  if (j.contains("perfect")) r.perfect = require_string(j, "perfect");
  if (r.depth == 0) throw Error(ErrorCode::validation, "depth must be positive", "depth");
  return r;
}

json execute(const RunRequest& request) {
  const Enumeration e = decode_enumeration(request.enumeration);
  json run = request_json(request, e);
  if (request.method == "wenner") {
    auto [b, cert] = wenner_escape(wenner_inputs(e, request.depth), request.depth);
    json rounds = json::array();
    for (const auto& r : cert.rounds) {
      rounds.push_back({{"k", r.k}, {"n_k", r.n_k}, {"anchor", encode(r.anchor)}, {"b", encode(r.b)}});
    }
    run["result"] = {{"b", strings(b.terms())}};
    run["certificate"] = {{"method", "wenner"}, {"covered", cert.rounds.size()}, {"rounds", std::move(rounds)}};
    run["audit"] = encode_report(verify_wenner(b, cert, wenner_inputs(e, request.depth)));
    run["approx"] = {{"b", b.terms().back().approx(12)}};
    return run;
  }
  auto [result, cert] = run_method(request, e);
  VerifyReport report = verify_certificate(result, cert, e);
  if (report.ok && request.method == "baire") {
    report = verify_containment(result, cert, punctured_sets(e, request.depth), baire_ball);
  }
  run["result"] = encode_construction(result);
  run["certificate"] = encode_certificate(cert);
  run["audit"] = encode_report(report);
  run["approx"] = approx_block(result);
  return run;
}

VerifyReport verify_run(const json& run) {
  if (!run.is_object()) throw Error(ErrorCode::validation, "run must be a JSON object");
  const std::string method = require_string(run, "method");
  const Enumeration e = decode_enumeration(require(run, "enum"));
  const json& result = require(run, "result");
  const json& certificate = require(run, "certificate");
  if (method == "wenner") {
    std::vector<Rational> b;
    for (const auto& t : require(result, "b")) b.push_back(decode_rational(t, "b"));
    WennerCertificate cert;
    for (const auto& r : require(certificate, "rounds")) {
      cert.rounds.push_back({require_count(r, "k"), require_count(r, "n_k"), decode_rational(require(r, "anchor"), "anchor"),
                             decode_rational(require(r, "b"), "b")});
    }
    const std::size_t depth = require_count(run, "depth");
    return verify_wenner(CauchyReal::unchecked(std::move(b)), cert, wenner_inputs(e, depth));
  }
  Construction c;
  try {
    c = decode_construction(result, method);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::nesting_violation) throw;
    return VerifyReport{false, 0, std::nullopt, err.what()};
  }
  const ExclusionCertificate cert = decode_certificate(certificate);
  VerifyReport report = verify_certificate(c, cert, e);
  if (report.ok && method == "baire") {
    report = verify_containment(c, cert, punctured_sets(e, require_count(run, "depth")), baire_ball);
  }
  return report;
}

}  // namespace dforge::service
