#include "spectral/document.hpp"

#include <fstream>
#include <sstream>

#include "spectral/errors.hpp"

namespace spectral {

PosetDocument parse_document(const Json& j) {
  if (!j.is_object()) throw FormatError("poset document must be an object");
  PosetDocument doc;
  try {
    doc.n = j.at("n").get<std::size_t>();
    if (j.contains("labels")) doc.labels = j.at("labels").get<std::vector<std::string>>();
    for (const auto& pair : j.at("covers")) {
      if (!pair.is_array() || pair.size() != 2) throw FormatError("each cover must be a pair [i, j]");
      doc.covers.emplace_back(pair[0].get<std::size_t>(), pair[1].get<std::size_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed poset document: ") + e.what());
  }
  if (!doc.labels.empty() && doc.labels.size() != doc.n) throw FormatError("labels must match n");
  for (const auto& [key, _] : j.items()) {
    if (key != "n" && key != "labels" && key != "covers" && key != "expect") {
      throw FormatError("unknown key '" + key + "'");
    }
  }
  if (j.contains("expect")) {
    doc.expect = j.at("expect");
    if (!doc.expect.is_object()) throw FormatError("expect must be an object");
  }
  return doc;
}

PosetDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return parse_document(j);
}

Json to_json(const PosetDocument& doc) {
  Json j = {{"n", doc.n}, {"covers", Json::array()}};
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  for (const auto& [a, b] : doc.covers) j["covers"].push_back({a, b});
  if (!doc.expect.is_null()) j["expect"] = doc.expect;
  return j;
}

void save_document(const std::filesystem::path& path, const PosetDocument& doc) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << to_json(doc).dump(2) << '\n';
}

FinitePoset to_poset(const PosetDocument& doc) {
  return FinitePoset::from_cover_relations(doc.n, std::span<const Relation>(doc.covers), doc.labels);
}

PosetDocument document_of(const FinitePoset& p) {
  return {p.size(), p.labels(), p.covers(), {}};
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string hasse_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) os << "  n" << i << " [label=" << quoted(p.label(i)) << "];\n";
  for (const auto& [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string powerdomain_dot(const PowerdomainSpace& pd, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < pd.size(); ++i) os << "  n" << i << " [label=" << quoted(pd.point_label(i)) << "];\n";
  for (std::size_t j = 0; j < pd.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Subset lo = pd.point(i);
      const Subset hi = pd.point(j);
      if (!lo.is_subset_of(hi) || lo == hi) continue;
      bool cover = true;
      for (std::size_t k = i + 1; k < j && cover; ++k) {
        const Subset mid = pd.point(k);
        cover = !(lo.is_subset_of(mid) && mid.is_subset_of(hi) && mid != lo && mid != hi);
      }
      if (cover) os << "  n" << i << " -> n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace spectral
