#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dforge/service/wire.hpp"

namespace dforge::service {

/// cantor1874, trisect, diagonal, perfect, baire or wenner.
struct RunRequest {
  std::string method;
  json enumeration;
  std::size_t depth = 16;
  unsigned base = 10;
  std::string perfect = "unit_interval";

  /// {method, enum | values, depth, base?, perfect?}
  static RunRequest from_json(const json& j);
};

/// Self-contained run document: request, result, certificate and audit.
/// List enumerations are inlined so the run can be re-audited anywhere.
json execute(const RunRequest& request);

/// Rebuilds the enumeration and the construction from a run document and
/// audits the certificate again. Malformed documents raise validation errors;
/// a wrong certificate is reported, never thrown.
VerifyReport verify_run(const json& run);

}  // namespace dforge::service
