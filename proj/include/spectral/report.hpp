#pragma once

#include <string>
#include <utility>

#include "json.hpp"

namespace spectral {

using Json = nlohmann::json;

enum class Verdict { pass, fail, skipped };

std::string to_string(Verdict v);

/// Outcome of one property check on one instance. A failing report always
/// carries a witness; `instance` is filled in by the suite runner so the
/// report can be replayed.
struct CheckReport {
  std::string property;
  Json instance;
  Verdict verdict = Verdict::pass;
  std::string reason;
  Json witness;

  bool ok() const { return verdict != Verdict::fail; }

  static CheckReport passed(std::string property) { return {std::move(property), {}, Verdict::pass, {}, {}}; }
  static CheckReport failed(std::string property, std::string reason, Json witness) {
    return {std::move(property), {}, Verdict::fail, std::move(reason), std::move(witness)};
  }
  static CheckReport skipped(std::string property, std::string reason) {
    return {std::move(property), {}, Verdict::skipped, std::move(reason), {}};
  }
};

/// One structured record per report.
Json to_json(const CheckReport& r);
CheckReport report_from_json(const Json& j);

}  // namespace spectral
