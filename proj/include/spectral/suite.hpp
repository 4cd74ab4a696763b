#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spectral/document.hpp"
#include "spectral/report.hpp"

namespace spectral {

struct SuiteScope {
  enum class Kind { exhaustive, fixtures, random };
  Kind kind = Kind::fixtures;
  std::size_t n = 3;          // exhaustive: every poset on 1..n elements
  std::size_t count = 100;    // random
  std::size_t size = 6;       // random
  std::uint64_t seed = 1;     // random

  static SuiteScope exhaustive(std::size_t n) { return {Kind::exhaustive, n, 0, 0, 0}; }
  static SuiteScope fixture_set() { return {}; }
  static SuiteScope random(std::size_t count, std::size_t size, std::uint64_t seed) {
    return {Kind::random, 0, count, size, seed};
  }
};

/// Groups of properties, selectable from the command line.
struct SuiteSelection {
  bool embedding = true;
  bool functor = true;
  bool sigma = true;

  static SuiteSelection all() { return {}; }
  /// "embedding", "functor", "sigma" or "all"; throws FormatError otherwise.
  static SuiteSelection parse(const std::string& name);
};

/// Bound on enumerated extensions per check; larger searches are reported as skipped.
inline constexpr std::size_t kSuiteExtensionLimit = 20000;

/// Runs one property on a serialized instance. Unexpected library errors
/// become failing reports, so the result is always replayable.
CheckReport run_property(const std::string& property, const Json& instance,
                         std::size_t limit = kSuiteExtensionLimit);

/// Re-runs the property recorded in `report` on its instance.
CheckReport replay(const CheckReport& report);

/// Every selected property on one poset document: topology and powerdomain
/// checks, expectations from the document, endomap functor and minimality
/// checks, homeomorphism lifting, and completion checks where defined.
std::vector<CheckReport> check_document(const PosetDocument& doc, SuiteSelection sel = SuiteSelection::all(),
                                        std::size_t limit = kSuiteExtensionLimit);

/// Deterministic: the same scope and selection yield the same report list.
std::vector<CheckReport> run_suite(const SuiteScope& scope, SuiteSelection sel = SuiteSelection::all(),
                                   std::size_t limit = kSuiteExtensionLimit);

}  // namespace spectral
