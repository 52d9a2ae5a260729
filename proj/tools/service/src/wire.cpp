#include "dforge/service/wire.hpp"

namespace dforge::service {

std::string encode(const Rational& r) { return r.to_string(); }

const json& require(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains(field)) throw Error(ErrorCode::validation, "missing field '" + field + "'", field);
  return j.at(field);
}

std::string require_string(const json& j, const std::string& field) {
  const json& v = require(j, field);
  if (!v.is_string()) throw Error(ErrorCode::validation, "field '" + field + "' must be a string", field);
  return v.get<std::string>();
}

std::size_t require_count(const json& j, const std::string& field) {
  const json& v = require(j, field);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw Error(ErrorCode::validation, "field '" + field + "' must be a non-negative integer", field);
  }
  return v.get<std::size_t>();
}

Rational decode_rational(const json& j, const std::string& field) {
  if (!j.is_string()) throw Error(ErrorCode::validation, "field '" + field + "' must be a \"p/q\" string", field);
  return Rational::parse(j.get<std::string>());
}

IntervalQ decode_interval(const json& j, const std::string& field) {
  if (!j.is_string()) throw Error(ErrorCode::validation, "field '" + field + "' must be an interval string", field);
  return IntervalQ::parse(j.get<std::string>());
}

Enumeration decode_enumeration(const json& source) {
  if (source.is_string()) return Enumeration::builtin(parse_enumeration_kind(source.get<std::string>()));
  const EnumerationKind kind = parse_enumeration_kind(require_string(source, "kind"));
  if (kind == EnumerationKind::file_list || kind == EnumerationKind::digit_grid) {
    const json& values = require(source, "values");
    if (!values.is_array()) throw Error(ErrorCode::validation, "field 'values' must be an array", "values");
    const unsigned base = source.contains("base") ? source.at("base").get<unsigned>() : 10;
    std::vector<Element> elements;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!values[i].is_string()) {
        throw Error(ErrorCode::validation, "value " + std::to_string(i + 1) + " must be a string", "values");
      }
      elements.push_back(Element::parse(values[i].get<std::string>(), base));
    }
    if (kind == EnumerationKind::file_list) return Enumeration::file_list(std::move(elements));
    std::vector<DigitStream> rows;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const DigitStream* s = elements[i].stream();
      if (!s) throw Error(ErrorCode::validation, "digit_grid value " + std::to_string(i + 1) + " is not a digit string");
      rows.push_back(*s);
    }
    return Enumeration::digit_grid(std::move(rows));
  }
  const std::size_t prefix = source.contains("prefix_len") ? require_count(source, "prefix_len") : 64;
  return Enumeration::builtin(kind, prefix);
}

json encode_enumeration(const Enumeration& e) {
  json j;
  j["kind"] = std::string(to_string(e.kind()));
  if (e.kind() == EnumerationKind::dyadics_both_reps) j["prefix_len"] = e.prefix_len();
  if (auto cap = e.capacity()) {
    json values = json::array();
    for (std::size_t k = 1; k <= *cap; ++k) values.push_back(e.at(k).to_string());
    j["values"] = std::move(values);
  }
  return j;
}

json encode_certificate(const ExclusionCertificate& cert) {
  json rounds = json::array();
  for (const auto& r : cert.rounds) {
    json round;
    round["k"] = r.index;
    round["reason"] = std::string(to_string(r.reason));
    round["excluded_by"] = r.excluded_by ? json(r.excluded_by->to_string()) : json(nullptr);
    round["position"] = r.position ? json(*r.position) : json(nullptr);
    round["value_separated"] = r.value_separated;
    rounds.push_back(std::move(round));
  }
  json j;
  j["method"] = cert.method;
  j["covered"] = cert.covered();
  j["rounds"] = std::move(rounds);
  return j;
}

ExclusionCertificate decode_certificate(const json& j) {
  ExclusionCertificate cert;
  cert.method = j.contains("method") ? j.at("method").get<std::string>() : "";
  const json& rounds = require(j, "rounds");
  if (!rounds.is_array()) throw Error(ErrorCode::validation, "field 'rounds' must be an array", "rounds");
  for (const auto& r : rounds) {
    ExclusionRound round;
    round.index = require_count(r, "k");
    round.reason = parse_exclusion_reason(require_string(r, "reason"));
    if (r.contains("excluded_by") && !r.at("excluded_by").is_null()) {
      round.excluded_by = decode_interval(r.at("excluded_by"), "excluded_by");
    }
    if (r.contains("position") && !r.at("position").is_null()) round.position = require_count(r, "position");
    round.value_separated = r.value("value_separated", false);
    cert.rounds.push_back(std::move(round));
  }
  return cert;
}

json encode_report(const VerifyReport& r) {
  json j;
  j["ok"] = r.ok;
  j["rounds_checked"] = r.rounds_checked;
  j["failure"] = r.ok ? json(nullptr) : json{{"round", r.failed_round ? json(*r.failed_round) : json(nullptr)},
                                              {"message", r.message}};
  j["message"] = r.ok ? r.message
                      : "certificate INVALID" +
                            (r.failed_round ? " at round " + std::to_string(*r.failed_round) : std::string()) + ": " +
                            r.message;
  return j;
}

json encode_error(const Error& e) {
  json j;
  j["code"] = std::string(to_string(e.code()));
  j["message"] = e.what();
  if (e.witness()) j["witness"] = *e.witness();
  return j;
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_found: return 404;
    case ErrorCode::parse:
    case ErrorCode::validation:
    case ErrorCode::configuration: return 400;
    case ErrorCode::turn:
    case ErrorCode::illegal_move: return 409;
    default: return 422;
  }
}

}  // namespace dforge::service
