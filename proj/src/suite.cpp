#include "spectral/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "spectral/completion.hpp"
#include "spectral/errors.hpp"
#include "spectral/generators.hpp"
#include "spectral/maps.hpp"
#include "spectral/topology.hpp"

namespace spectral {

SuiteSelection SuiteSelection::parse(const std::string& name) {
  if (name == "all") return all();
  if (name == "embedding") return {true, false, false};
  if (name == "functor") return {false, true, false};
  if (name == "sigma") return {false, false, true};
  throw FormatError("unknown suite '" + name + "'");
}

namespace {

using Property = std::function<CheckReport(const Json&, std::size_t)>;

PosetRef poset_at(const Json& instance, const char* key) {
  return std::make_shared<const FinitePoset>(to_poset(parse_document(instance.at(key))));
}

MonotoneMap map_at(const Json& instance, const char* key, PosetRef src, PosetRef dst) {
  return MonotoneMap(std::move(src), std::move(dst), instance.at(key).get<std::vector<std::size_t>>());
}

Json poset_json(const FinitePoset& p) { return to_json(document_of(p)); }

// Properties on {"poset": doc}.

CheckReport topology_round_trip(const Json& inst, std::size_t) {
  const std::string property = "topology_round_trip";
  const auto p = poset_at(inst, "poset");
  const auto back = poset_of_topology(open_sets(*p));
  if (!(back == *p)) {
    return CheckReport::failed(property, "poset of open sets differs from the input", {{"recovered", poset_json(back)}});
  }
  if (p->size() <= 12) {
    const auto dual = order_dual(*p);
    for (Subset::Word m = 0; m < (Subset::Word{1} << p->size()); ++m) {
      const Subset s(m);
      if (inverse_closure(*p, s) != closure(dual, s) ||
          inverse_closure(*p, s) != down_closure(*p, constructible_closure(*p, s))) {
        return CheckReport::failed(property, "inverse closure differs from closure in the dual order",
                                   {{"set", to_brace_string(s, p->labels())}});
      }
    }
  }
  return CheckReport::passed(property);
}

CheckReport irreducible_bijection(const Json& inst, std::size_t) {
  const std::string property = "irreducible_bijection";
  const auto p = poset_at(inst, "poset");
  const auto irr = irreducible_inverse_closed(*p);
  if (irr.size() != p->size()) {
    return CheckReport::failed(property, "irreducible sets not in bijection with points", {{"count", irr.size()}});
  }
  for (const auto& c : irr) {
    if (c.set != p->down_set(c.generic_point)) {
      return CheckReport::failed(property, "irreducible set is not the closure of its generic point",
                                 {{"set", to_brace_string(c.set, p->labels())}});
    }
  }
  for (auto c : enumerate_down_sets(*p)) {
    const bool principal = generic_point(*p, c).has_value();
    if (is_irreducible_inverse_closed(*p, c) != principal) {
      return CheckReport::failed(property, "irreducibility disagrees with having a generic point",
                                 {{"set", to_brace_string(c, p->labels())}, {"principal", principal}});
    }
  }
  return CheckReport::passed(property);
}

CheckReport embedding_theorem(const Json& inst, std::size_t) {
  return check_embedding_theorem(build_powerdomain(*poset_at(inst, "poset")));
}

CheckReport dimension_law(const Json& inst, std::size_t) {
  const auto p = poset_at(inst, "poset");
  const auto dim = powerdomain_dimension(build_powerdomain(*p));
  if (dim != p->size() - 1) {
    return CheckReport::failed("dimension_law", "powerdomain dimension differs from |X| - 1",
                               {{"dimension", dim}, {"size", p->size()}});
  }
  return CheckReport::passed("dimension_law");
}

CheckReport homeo_equivalence(const Json& inst, std::size_t) {
  const auto p = poset_at(inst, "poset");
  const bool surjective = is_phi_surjective(build_powerdomain(*p));
  if (surjective != p->is_chain()) {
    return CheckReport::failed("homeo_equivalence", "phi surjective disagrees with X being a chain",
                               {{"phi_surjective", surjective}, {"chain", p->is_chain()}});
  }
  return CheckReport::passed("homeo_equivalence");
}

CheckReport vietoris_equality(const Json& inst, std::size_t) {
  const auto p = poset_at(inst, "poset");
  const auto pd = build_powerdomain(*p);
  const auto opens = open_sets(*p);
  for (auto u : opens.opens) {
    if (vietoris_open(pd, opens, u) != basic_open(pd, u)) {
      return CheckReport::failed("vietoris_equality", "upper Vietoris open differs from U(open)",
                                 {{"open", to_brace_string(u, p->labels())}});
    }
  }
  return CheckReport::passed("vietoris_equality");
}

CheckReport fixture_expectations(const Json& inst, std::size_t) {
  const std::string property = "fixture_expectations";
  const auto doc = parse_document(inst.at("poset"));
  const auto p = to_poset(doc);
  const auto pd = build_powerdomain(p);
  const Json& expect = doc.expect;
  if (expect.contains("size") && expect["size"].get<std::size_t>() != pd.size()) {
    return CheckReport::failed(property, "point count differs from expectation",
                               {{"expected", expect["size"]}, {"actual", pd.size()}});
  }
  if (expect.contains("dimension") && expect["dimension"].get<std::size_t>() != powerdomain_dimension(pd)) {
    return CheckReport::failed(property, "dimension differs from expectation",
                               {{"expected", expect["dimension"]}, {"actual", powerdomain_dimension(pd)}});
  }
  if (expect.contains("points")) {
    const auto wanted = expect["points"].get<std::set<std::string>>();
    std::set<std::string> actual;
    for (std::size_t i = 0; i < pd.size(); ++i) actual.insert(pd.point_label(i));
    if (wanted != actual) {
      Json missing = Json::array();
      Json unexpected = Json::array();
      for (const auto& s : wanted) {
        if (!actual.count(s)) missing.push_back(s);
      }
      for (const auto& s : actual) {
        if (!wanted.count(s)) unexpected.push_back(s);
      }
      return CheckReport::failed(property, "points differ from expectation",
                                 {{"missing", missing}, {"unexpected", unexpected}});
    }
  }
  return CheckReport::passed(property);
}

CheckReport sigma_retraction(const Json& inst, std::size_t) {
  const auto p = poset_at(inst, "poset");
  try {
    return check_retraction(*p);
  } catch (const SigmaUndefinedError& e) {
    return CheckReport::skipped("sigma_retraction", e.what());
  }
}

// {"p": doc, "q": doc}: P and Q are isomorphic iff their powerdomain orders
// are, and lifting round-trips isomorphisms both ways.
CheckReport homeomorphism_lift(const Json& inst, std::size_t limit) {
  const std::string property = "homeomorphism_lift";
  const auto p = poset_at(inst, "p");
  const auto q = poset_at(inst, "q");
  const auto pd_p = build_powerdomain(*p);
  const auto pd_q = build_powerdomain(*q);
  const bool base_iso = find_isomorphism(*p, *q).has_value();
  const bool pd_iso = find_isomorphism(pd_p.order(), pd_q.order()).has_value();
  if (base_iso != pd_iso) {
    return CheckReport::failed(property, "isomorphism of spaces disagrees with isomorphism of powerdomains",
                               {{"spaces", base_iso}, {"powerdomains", pd_iso}});
  }
  const auto order_p = std::make_shared<const FinitePoset>(pd_p.order());
  const auto order_q = std::make_shared<const FinitePoset>(pd_q.order());
  CheckReport out = CheckReport::passed(property);
  std::size_t visited = 0;
  for_each_isomorphism(*p, *q, [&](const Bijection& b) {
    const MonotoneMap psi(p, q, b);
    const auto lifted = lift_homeomorphism(powerdomain_map(psi, pd_p, pd_q), pd_p, pd_q);
    if (lifted.image() != b) {
      out = CheckReport::failed(property, "lifting X(psi) does not recover psi", {{"psi", b}, {"lifted", lifted.image()}});
      return false;
    }
    return ++visited < limit;
  });
  if (!out.ok()) return out;
  visited = 0;
  for_each_isomorphism(*order_p, *order_q, [&](const Bijection& b) {
    const MonotoneMap big(order_p, order_q, b);
    const auto psi = lift_homeomorphism(big, pd_p, pd_q);
    if (powerdomain_map(psi, pd_p, pd_q).image() != b) {
      out = CheckReport::failed(property, "X(lift(Psi)) differs from Psi", {{"big_psi", b}, {"psi", psi.image()}});
      return false;
    }
    return ++visited < limit;
  });
  return out;
}

// {"p1", "p2", "p3": docs, "f": p1 -> p2, "g": p2 -> p3}.
CheckReport functor_laws(const Json& inst, std::size_t) {
  const auto p1 = poset_at(inst, "p1");
  const auto p2 = poset_at(inst, "p2");
  const auto p3 = poset_at(inst, "p3");
  return check_functor_laws(map_at(inst, "f", p1, p2), map_at(inst, "g", p2, p3));
}

// {"p1", "p2": docs, "f": p1 -> p2}.
CheckReport extension_minimality(const Json& inst, std::size_t limit) {
  const auto p1 = poset_at(inst, "p1");
  const auto p2 = poset_at(inst, "p2");
  return check_minimality(map_at(inst, "f", p1, p2), limit);
}

// {"x", "z": docs, "lambda": x -> z}.
SupExtensionProblem problem_at(const Json& inst) {
  const auto x = poset_at(inst, "x");
  const auto z = poset_at(inst, "z");
  return SupExtensionProblem(map_at(inst, "lambda", x, z));
}

CheckReport sigma_theorem(const Json& inst, std::size_t limit) { return check_sigma_theorem(problem_at(inst), limit); }

CheckReport injective_sigma(const Json& inst, std::size_t limit) {
  return check_injective_sigma_prop(problem_at(inst), limit);
}

std::vector<std::string> point_labels(const PowerdomainSpace& pd) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < pd.size(); ++i) out.push_back(pd.point_label(i));
  return out;
}

CheckReport collapse_example(const Json&, std::size_t limit) {
  const std::string property = "collapse_example";
  const auto psi = fixtures::collapse_psi();
  const auto pd1 = build_powerdomain(psi.source());
  const auto pd2 = build_powerdomain(psi.target());
  const std::set<std::string> want1{"{a1}", "{a2}", "{a1,a2}", "{a1,a2,b}"};
  const std::set<std::string> want2{"{c1}", "{c1,c2}"};
  const auto got1 = point_labels(pd1);
  const auto got2 = point_labels(pd2);
  if (std::set<std::string>(got1.begin(), got1.end()) != want1 || got1.size() != want1.size()) {
    return CheckReport::failed(property, "X(X1) differs from the listed points", {{"points", got1}});
  }
  if (std::set<std::string>(got2.begin(), got2.end()) != want2 || got2.size() != want2.size()) {
    return CheckReport::failed(property, "X(X2) differs from the listed points", {{"points", got2}});
  }
  const auto natural = powerdomain_map(psi, pd1, pd2);
  const auto a12 = *pd1.index_of(Subset::of({0, 1}));
  if (pd2.point(natural(a12)) != Subset::of({0})) {
    return CheckReport::failed(property, "X(psi)({a1,a2}) is not {c1}", {{"value", pd2.point_label(natural(a12))}});
  }
  const auto big = fixtures::collapse_big_psi();
  const auto extensions = enumerate_extensions(psi, pd1, pd2, limit);
  const bool listed = std::any_of(extensions.begin(), extensions.end(), [&](const auto& e) { return e == big; });
  if (!listed || big == natural || pd2.point(big(a12)) != Subset::of({0, 1})) {
    return CheckReport::failed(property, "the extension Psi with Psi({a1,a2}) = {c1,c2} is missing",
                               {{"extensions", extensions.size()}});
  }
  auto minimal = check_minimality(psi, pd1, pd2, limit);
  if (!minimal.ok()) return minimal;
  return CheckReport::passed(property);
}

CheckReport non_sup_extension(const Json&, std::size_t) {
  const std::string property = "non_sup_extension";
  const auto big = fixtures::non_sup_lambda();
  const auto pd = build_powerdomain(fixtures::discrete3());
  for (std::size_t x = 0; x < pd.base().size(); ++x) {
    if (big(pd.phi(x)) != pd.phi(x)) {
      return CheckReport::failed(property, "Lambda does not extend phi", {{"x", pd.base().label(x)}});
    }
  }
  if (!is_spectral(big)) return CheckReport::failed(property, "Lambda is not spectral", {{"image", big.image()}});
  if (big == MonotoneMap::identity(big.source_ref())) {
    return CheckReport::failed(property, "Lambda equals the identity", {{"image", big.image()}});
  }
  if (is_sup_preserving(big)) {
    return CheckReport::failed(property, "Lambda preserves sups", {{"image", big.image()}});
  }
  const auto order = std::make_shared<const FinitePoset>(pd.order());
  const SupExtensionProblem prob(MonotoneMap(std::make_shared<const FinitePoset>(pd.base()), order, [&] {
    std::vector<std::size_t> img(pd.base().size());
    for (std::size_t x = 0; x < img.size(); ++x) img[x] = pd.phi(x);
    return img;
  }()));
  const auto sharp = lambda_sharp(prob);
  if (!(sharp == MonotoneMap::identity(order))) {
    return CheckReport::failed(property, "lambda_sharp for lambda = phi is not the identity", {{"image", sharp.image()}});
  }
  return CheckReport::passed(property);
}

const std::map<std::string, Property>& registry() {
  static const std::map<std::string, Property> table = {
      {"topology_round_trip", topology_round_trip},
      {"irreducible_bijection", irreducible_bijection},
      {"embedding_theorem", embedding_theorem},
      {"dimension_law", dimension_law},
      {"homeo_equivalence", homeo_equivalence},
      {"vietoris_equality", vietoris_equality},
      {"fixture_expectations", fixture_expectations},
      {"sigma_retraction", sigma_retraction},
      {"homeomorphism_lift", homeomorphism_lift},
      {"functor_laws", functor_laws},
      {"extension_minimality", extension_minimality},
      {"sigma_theorem", sigma_theorem},
      {"injective_sigma", injective_sigma},
      {"collapse_example", collapse_example},
      {"non_sup_extension", non_sup_extension},
  };
  return table;
}

Json map_instance(const MonotoneMap& f) { return f.image(); }

// Q with element i of P renamed to n-1-i.
FinitePoset reversed_labels(const FinitePoset& p) {
  const auto n = p.size();
  std::vector<Subset> up(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.up_set(i).for_each([&](std::size_t j) { up[n - 1 - i].insert(n - 1 - j); });
    labels[n - 1 - i] = p.label(i);
  }
  return FinitePoset::from_up_sets(std::move(up), std::move(labels));
}

}  // namespace

CheckReport run_property(const std::string& property, const Json& instance, std::size_t limit) {
  CheckReport r;
  const auto it = registry().find(property);
  if (it == registry().end()) {
    r = CheckReport::failed(property, "unknown property", {{"property", property}});
  } else {
    try {
      r = it->second(instance, limit);
    } catch (const CapacityError& e) {
      r = CheckReport::skipped(property, e.what());
    } catch (const std::exception& e) {
      r = CheckReport::failed(property, std::string("error: ") + e.what(), {{"error", e.what()}});
    }
  }
  r.property = property;
  r.instance = instance;
  return r;
}

CheckReport replay(const CheckReport& report) { return run_property(report.property, report.instance); }

std::vector<CheckReport> check_document(const PosetDocument& doc, SuiteSelection sel, std::size_t limit) {
  std::vector<CheckReport> out;
  const auto p = to_poset(doc);
  const Json single = {{"poset", to_json(doc)}};
  auto run = [&](const std::string& property, const Json& inst) { out.push_back(run_property(property, inst, limit)); };

  if (sel.embedding) {
    for (const char* property : {"topology_round_trip", "irreducible_bijection", "embedding_theorem", "dimension_law",
                                 "homeo_equivalence", "vietoris_equality"}) {
      run(property, single);
    }
    if (!doc.expect.is_null()) run("fixture_expectations", single);
  }

  const Json pj = to_json(doc);
  std::vector<MonotoneMap> endo;
  if (sel.functor || sel.sigma) {
    try {
      endo = all_monotone_maps(p, p, limit);
    } catch (const CapacityError& e) {
      out.push_back(CheckReport::skipped("functor_laws", e.what()));
      out.back().instance = single;
    }
  }
  const std::size_t last = endo.empty() ? 0 : endo.size() - 1;
  const std::size_t mid = endo.size() / 2;

  if (sel.functor) {
    if (!endo.empty()) {
      for (auto [a, b] : {std::pair{std::size_t{0}, last}, std::pair{last, mid}, std::pair{mid, std::size_t{0}}}) {
        run("functor_laws", {{"p1", pj}, {"p2", pj}, {"p3", pj}, {"f", map_instance(endo[a])}, {"g", map_instance(endo[b])}});
      }
      for (auto i : std::set<std::size_t>{last, mid}) {
        run("extension_minimality", {{"p1", pj}, {"p2", pj}, {"f", map_instance(endo[i])}});
      }
    }
    run("homeomorphism_lift", {{"p", pj}, {"q", poset_json(reversed_labels(p))}});
  }

  if (sel.sigma) {
    run("sigma_retraction", single);
    std::vector<std::pair<Json, Json>> problems;  // (z, lambda)
    std::vector<std::size_t> id(p.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    problems.emplace_back(pj, id);
    if (!endo.empty()) problems.emplace_back(pj, map_instance(endo[mid]));
    try {
      const auto pd = build_powerdomain(p);
      if (pd.has_order()) {
        std::vector<std::size_t> phi(p.size());
        for (std::size_t x = 0; x < phi.size(); ++x) phi[x] = pd.phi(x);
        problems.emplace_back(poset_json(pd.order()), phi);
      }
    } catch (const CapacityError&) {
    }
    for (const auto& [z, lambda] : problems) {
      const Json inst = {{"x", pj}, {"z", z}, {"lambda", lambda}};
      run("sigma_theorem", inst);
      run("injective_sigma", inst);
    }
  }
  return out;
}

namespace {

PosetDocument with_expect(const FinitePoset& p, Json expect) {
  auto doc = document_of(p);
  doc.expect = std::move(expect);
  return doc;
}

}  // namespace

std::vector<CheckReport> run_suite(const SuiteScope& scope, SuiteSelection sel, std::size_t limit) {
  struct Instance {
    PosetDocument doc;
    std::optional<Json> problem;
  };
  std::vector<Instance> instances;
  std::vector<CheckReport> prefix;

  switch (scope.kind) {
    case SuiteScope::Kind::exhaustive:
      for (std::size_t n = 1; n <= scope.n; ++n) {
        for_each_poset(n, [&](const FinitePoset& p) { instances.push_back({document_of(p), std::nullopt}); });
      }
      break;
    case SuiteScope::Kind::fixtures: {
      prefix.push_back(run_property("collapse_example", Json::object(), limit));
      prefix.push_back(run_property("non_sup_extension", Json::object(), limit));
      const Json x1 = to_json(document_of(fixtures::collapse_x1()));
      const Json x2 = to_json(document_of(fixtures::collapse_x2()));
      prefix.push_back(run_property("extension_minimality", {{"p1", x1}, {"p2", x2}, {"f", {0, 0, 1}}}, limit));
      instances.push_back({with_expect(fixtures::collapse_x1(),
                                       {{"points", {"{a1}", "{a2}", "{a1,a2}", "{a1,a2,b}"}}, {"size", 4}}),
                           std::nullopt});
      instances.push_back({with_expect(fixtures::collapse_x2(), {{"points", {"{c1}", "{c1,c2}"}}, {"size", 2}}),
                           std::nullopt});
      instances.push_back({with_expect(fixtures::discrete3(), {{"size", 7}, {"dimension", 2}}), std::nullopt});
      instances.push_back({with_expect(fixtures::chain(4), {{"size", 4}, {"dimension", 3}}), std::nullopt});
      instances.push_back({with_expect(fixtures::grid(2, 3), {{"size", 9}}), std::nullopt});
      instances.push_back({with_expect(fixtures::boolean_lattice(2), {{"size", 5}}), std::nullopt});
      break;
    }
    case SuiteScope::Kind::random: {
      std::mt19937_64 rng(scope.seed);
      for (std::size_t i = 0; i < scope.count; ++i) {
        const auto poset_seed = rng();
        const auto problem_seed = rng();
        Instance inst{document_of(random_poset(scope.size, poset_seed)), std::nullopt};
        if (sel.sigma) {
          const auto prob = random_sup_problem(4, 5, problem_seed);
          inst.problem = Json{{"x", poset_json(prob.lambda.source())},
                              {"z", poset_json(prob.target())},
                              {"lambda", prob.lambda.image()}};
        }
        instances.push_back(std::move(inst));
      }
      break;
    }
  }

  std::vector<std::vector<CheckReport>> per(instances.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < instances.size(); ++i) {
    per[i] = check_document(instances[i].doc, sel, limit);
    if (instances[i].problem) {
      per[i].push_back(run_property("sigma_theorem", *instances[i].problem, limit));
      per[i].push_back(run_property("injective_sigma", *instances[i].problem, limit));
    }
  }
  for (auto& reports : per) prefix.insert(prefix.end(), reports.begin(), reports.end());
  return prefix;
}

}  // namespace spectral
