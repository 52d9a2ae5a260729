#pragma once

#include <string>

#include <json.hpp>

#include "dforge/certificate.hpp"
#include "dforge/enumeration.hpp"
#include "dforge/error.hpp"
#include "dforge/interval.hpp"
#include "dforge/rational.hpp"

namespace dforge::service {

using json = nlohmann::ordered_json;

/// Canonical text forms on the wire; decimals only ever appear under "approx".
std::string encode(const Rational& r);
Rational decode_rational(const json& j, const std::string& field);
IntervalQ decode_interval(const json& j, const std::string& field);

/// {"kind": "rationals_01"} for built-ins, {"kind": "file_list", "values": [...]}
/// for lists. A bare string names a built-in kind.
Enumeration decode_enumeration(const json& source);
json encode_enumeration(const Enumeration& e);

json encode_certificate(const ExclusionCertificate& cert);
ExclusionCertificate decode_certificate(const json& j);
json encode_report(const VerifyReport& r);

/// {code, message, witness?}
json encode_error(const Error& e);
int http_status(ErrorCode code);

/// Field access that raises validation errors naming the field.
const json& require(const json& j, const std::string& field);
std::string require_string(const json& j, const std::string& field);
std::size_t require_count(const json& j, const std::string& field);

}  // namespace dforge::service
