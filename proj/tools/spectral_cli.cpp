// spectral: command-line front end for the powerdomain toolkit.
//
// Exit status: 0 when every check passes, 1 when any check fails, 2 on usage
// errors, malformed input or exceeded capacity.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "spectral/document.hpp"
#include "spectral/errors.hpp"
#include "spectral/generators.hpp"
#include "spectral/ideals.hpp"
#include "spectral/maps.hpp"
#include "spectral/powerdomain.hpp"
#include "spectral/suite.hpp"

namespace {

using namespace spectral;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

std::vector<std::size_t> parse_assignment(const std::string& spec, std::size_t n) {
  std::vector<std::optional<std::size_t>> slots(n);
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw FormatError("assignment '" + item + "' is not i:j");
    std::size_t i = 0;
    std::size_t j = 0;
    try {
      i = std::stoul(item.substr(0, colon));
      j = std::stoul(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw FormatError("assignment '" + item + "' is not i:j");
    }
    if (i >= n) throw RangeError("source element " + std::to_string(i) + " out of range");
    if (slots[i]) throw FormatError("element " + std::to_string(i) + " assigned twice");
    slots[i] = j;
  }
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!slots[i]) throw FormatError("element " + std::to_string(i) + " has no image");
    image[i] = *slots[i];
  }
  return image;
}

Json points_json(const PowerdomainSpace& pd) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < pd.size(); ++i) pts.push_back(pd.point_label(i));
  return pts;
}

int cmd_powerdomain(const std::string& file, bool hat, bool inverse, const std::string& dot) {
  const auto p = to_poset(load_document(file));
  const auto base = inverse ? order_dual(p) : p;
  const auto capacity = default_capacity();
  const auto pd = hat ? hat_powerdomain(base, capacity) : build_powerdomain(base, capacity);
  Json phi = Json::object();
  for (std::size_t x = 0; x < base.size(); ++x) phi[base.label(x)] = pd.point_label(pd.phi(x));
  Json out = {{"size", pd.size()}, {"points", points_json(pd)}, {"phi", phi},
              {"dimension", powerdomain_dimension(pd)}};
  std::cout << out.dump() << '\n';
  if (!dot.empty()) write_file(dot, powerdomain_dot(pd));
  return 0;
}

int cmd_map_apply(const std::string& src_file, const std::string& dst_file, const std::string& assign) {
  const auto src = to_poset(load_document(src_file));
  const auto dst = to_poset(load_document(dst_file));
  const MonotoneMap f(src, dst, parse_assignment(assign, src.size()));
  const auto pd1 = build_powerdomain(src, default_capacity());
  const auto pd2 = build_powerdomain(dst, default_capacity());
  const auto big = powerdomain_map(f, pd1, pd2);
  Json images = Json::object();
  for (std::size_t c = 0; c < pd1.size(); ++c) images[pd1.point_label(c)] = pd2.point_label(big(c));
  std::cout << Json{{"map", images}}.dump() << '\n';
  return 0;
}

int cmd_check(const std::string& file, const std::string& suite) {
  const auto sel = SuiteSelection::parse(suite);
  const auto reports = check_document(load_document(file), sel);
  bool failed = false;
  for (const auto& r : reports) {
    std::cout << to_json(r).dump() << '\n';
    failed = failed || !r.ok();
  }
  return failed ? kExitFail : 0;
}

int cmd_enumerate(std::size_t n) {
  std::size_t count = 0;
  for_each_poset(n, [&](const FinitePoset& p) {
    std::cout << to_json(document_of(p)).dump() << '\n';
    ++count;
  });
  std::cerr << count << " posets\n";
  return 0;
}

int cmd_iterate(const std::string& file, std::size_t k, std::size_t capacity) {
  const auto result = iterate_sizes(to_poset(load_document(file)), k, capacity);
  Json out = {{"sizes", result.sizes}, {"capacity_hit", result.capacity_hit}};
  if (result.capacity_hit) out["message"] = result.message;
  std::cout << out.dump() << '\n';
  return result.capacity_hit ? kExitUsage : 0;
}

int cmd_stats(const std::string& file, const std::string& dot) {
  const auto p = to_poset(load_document(file));
  Json out = {{"n", p.size()},
              {"covers", p.covers().size()},
              {"chain", p.is_chain()},
              {"dimension", dimension(p)},
              {"minimal", minimal_elements(p, p.all()).size()},
              {"maximal", maximal_elements(p, p.all()).size()}};
  const auto pd = build_powerdomain(p, default_capacity());
  out["powerdomain_size"] = pd.size();
  out["powerdomain_dimension"] = powerdomain_dimension(pd);
  out["phi_surjective"] = is_phi_surjective(pd);
  std::cout << out.dump() << '\n';
  if (!dot.empty()) write_file(dot, hasse_dot(p));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Powerdomains of finite spectral spaces"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  std::string dot;
  std::string assign;
  std::string suite = "all";
  bool hat = false;
  bool inverse = false;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t capacity = spectral::default_capacity();

  auto* pd_cmd = app.add_subcommand("powerdomain", "List the points of the powerdomain");
  pd_cmd->add_option("file", file, "Poset document")->required();
  pd_cmd->add_flag("--hat", hat, "Include the empty set");
  pd_cmd->add_flag("--inverse", inverse, "Use the inverse topology");
  pd_cmd->add_option("--dot", dot, "Write the inclusion Hasse diagram");

  auto* map_cmd = app.add_subcommand("map", "Monotone maps");
  map_cmd->require_subcommand(1);
  auto* apply_cmd = map_cmd->add_subcommand("apply", "Print the induced map between powerdomains");
  apply_cmd->add_option("src", file, "Source poset document")->required();
  apply_cmd->add_option("dst", file2, "Target poset document")->required();
  apply_cmd->add_option("--assign", assign, "Images as i:j,...")->required();

  auto* check_cmd = app.add_subcommand("check", "Run property checks on a poset");
  check_cmd->add_option("file", file, "Poset document")->required();
  check_cmd->add_option("--suite", suite, "embedding, functor, sigma or all")
      ->check(CLI::IsMember({"embedding", "functor", "sigma", "all"}));

  auto* enum_cmd = app.add_subcommand("enumerate-posets", "Print every labeled poset on n elements");
  enum_cmd->add_option("--n", n, "Element count")->required();

  auto* iter_cmd = app.add_subcommand("iterate", "Sizes of iterated powerdomains");
  iter_cmd->add_option("file", file, "Poset document")->required();
  iter_cmd->add_option("--k", k, "Number of iterations")->required();
  iter_cmd->add_option("--capacity", capacity, "Point-count limit per stage");

  auto* stats_cmd = app.add_subcommand("stats", "Summary of a poset and its powerdomain");
  stats_cmd->add_option("file", file, "Poset document")->required();
  stats_cmd->add_option("--dot", dot, "Write the Hasse diagram");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*pd_cmd) return cmd_powerdomain(file, hat, inverse, dot);
    if (*apply_cmd) return cmd_map_apply(file, file2, assign);
    if (*check_cmd) return cmd_check(file, suite);
    if (*enum_cmd) return cmd_enumerate(n);
    if (*iter_cmd) return cmd_iterate(file, k, capacity);
    if (*stats_cmd) return cmd_stats(file, dot);
  } catch (const spectral::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
