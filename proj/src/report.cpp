#include "spectral/report.hpp"

#include "spectral/errors.hpp"

namespace spectral {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "unknown";
}

Json to_json(const CheckReport& r) {
  Json j = {{"property", r.property}, {"verdict", to_string(r.verdict)}, {"instance", r.instance}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

CheckReport report_from_json(const Json& j) {
  CheckReport r;
  r.property = j.at("property").get<std::string>();
  const auto v = j.at("verdict").get<std::string>();
  if (v == "pass") r.verdict = Verdict::pass;
  else if (v == "fail") r.verdict = Verdict::fail;
  else if (v == "skipped") r.verdict = Verdict::skipped;
  else throw FormatError("unknown verdict '" + v + "'");
  r.instance = j.value("instance", Json());
  r.reason = j.value("reason", std::string());
  r.witness = j.value("witness", Json());
  return r;
}

}  // namespace spectral
