#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "spectral/poset.hpp"
#include "spectral/powerdomain.hpp"
#include "spectral/report.hpp"

namespace spectral {

/// On-disk form of a poset: {"n": int, "labels": [str], "covers": [[i, j], ...]}.
/// Pairs may be covers or arbitrary relations; closure is applied on load.
/// An optional "expect" object records known facts about the powerdomain
/// ("points": brace strings, "size": int, "dimension": int) that `check` verifies.
struct PosetDocument {
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::vector<Relation> covers;
  Json expect;
};

/// Throws FormatError on schema violations.
PosetDocument parse_document(const Json& j);
PosetDocument load_document(const std::filesystem::path& path);
Json to_json(const PosetDocument& doc);
void save_document(const std::filesystem::path& path, const PosetDocument& doc);

/// Throws CycleError or RangeError as FinitePoset does.
FinitePoset to_poset(const PosetDocument& doc);
/// Cover pairs and labels of p.
PosetDocument document_of(const FinitePoset& p);

/// Hasse diagram in DOT: edge i -> j for each cover with i below j.
std::string hasse_dot(const FinitePoset& p, const std::string& name = "poset");
/// Hasse diagram of the inclusion order, nodes labelled in brace notation.
std::string powerdomain_dot(const PowerdomainSpace& pd, const std::string& name = "powerdomain");

}  // namespace spectral
