#include "spectral/completion.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "spectral/errors.hpp"
#include "spectral/ideals.hpp"

namespace spectral {

bool SigmaTable::total() const {
  return std::all_of(values.begin(), values.end(), [](const auto& v) { return v.has_value(); });
}

bool SigmaTable::injective() const {
  std::vector<std::size_t> seen;
  for (const auto& v : values) {
    if (!v) continue;
    if (std::find(seen.begin(), seen.end(), *v) != seen.end()) return false;
    seen.push_back(*v);
  }
  return true;
}

std::optional<Subset> SigmaTable::first_undefined() const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) return points[i];
  }
  return std::nullopt;
}

std::optional<std::size_t> SigmaTable::index_of(Subset c) const {
  const auto it = std::lower_bound(points.begin(), points.end(), c, CanonicalLess{});
  if (it == points.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

SigmaTable sigma_map(const FinitePoset& z, Subset y, std::size_t capacity) {
  if (y.empty() || !y.is_subset_of(z.all())) throw RangeError("sup map needs a nonempty subset of Z");
  const auto members = y.elements();
  const auto sub = induced_subposet(z, y);
  SigmaTable t;
  t.domain = y;
  for (auto local : enumerate_down_sets(sub, {.include_empty = false, .capacity = capacity})) {
    Subset c;
    local.for_each([&](std::size_t k) { c.insert(members[k]); });
    t.points.push_back(c);
  }
  std::sort(t.points.begin(), t.points.end(), CanonicalLess{});
  t.values.reserve(t.points.size());
  for (auto c : t.points) t.values.push_back(sup(z, c));
  return t;
}

bool principal_local_basis_check(const FinitePoset& z) {
  for (auto u : enumerate_down_sets(z, {.include_empty = false})) {
    bool ok = true;
    u.for_each([&](std::size_t point) {
      bool found = false;
      for (std::size_t w = 0; w < z.size() && !found; ++w) {
        found = z.down_set(w).contains(point) && z.down_set(w).is_subset_of(u);
      }
      ok = ok && found;
    });
    if (!ok) return false;
  }
  return true;
}

SupExtensionProblem::SupExtensionProblem(MonotoneMap l)
    : lambda(std::move(l)), pd(build_powerdomain(lambda.source())) {}

SupExtensionProblem::SupExtensionProblem(MonotoneMap l, PowerdomainSpace p) : lambda(std::move(l)), pd(std::move(p)) {
  if (!(pd.base() == lambda.source())) throw CompositionMismatchError("powerdomain not built over lambda's source");
}

namespace {

Subset image_of_space(const MonotoneMap& f) { return f.apply(f.source().all()); }

std::string brace(const FinitePoset& p, Subset s) { return to_brace_string(s, p.labels()); }

}  // namespace

MonotoneMap lambda_sharp(const SupExtensionProblem& prob) {
  const auto& z = prob.target();
  const auto table = sigma_map(z, image_of_space(prob.lambda));
  if (const auto bad = table.first_undefined()) {
    throw SigmaUndefinedError("no supremum in Z for " + brace(z, *bad));
  }
  std::vector<std::size_t> image(prob.pd.size());
  for (std::size_t i = 0; i < prob.pd.size(); ++i) {
    const auto s = sup(z, down_closure(z, prob.lambda.apply(prob.pd.point(i))));
    if (!s) throw std::logic_error("sup of lambda(C)^gen missing although the sup map is total");
    image[i] = *s;
  }
  return MonotoneMap(std::make_shared<const FinitePoset>(prob.pd.order()), prob.target_ref(), std::move(image));
}

namespace {

// Depth-first walk over the antichains of `f.source()` whose least element is
// `first`, in lexicographic order of increasing index lists.
class AntichainScan {
public:
  AntichainScan(const MonotoneMap& f, std::atomic<std::size_t>& visited, std::size_t max_families)
      : f_(f), visited_(visited), max_families_(max_families) {}

  std::optional<Subset> from(std::size_t first) {
    const auto& p = f_.source();
    Subset open;
    for (std::size_t j = first + 1; j < p.size(); ++j) {
      if (!p.comparable(first, j)) open.insert(j);
    }
    return walk(Subset::singleton(first), open);
  }

  bool overflowed() const { return overflow_; }

private:
  std::optional<Subset> walk(Subset family, Subset open) {
    if (visited_.fetch_add(1, std::memory_order_relaxed) >= max_families_) {
      overflow_ = true;
      return std::nullopt;
    }
    if (violates(family)) return family;
    const auto& p = f_.source();
    for (Subset rest = open; !rest.empty() && !overflow_;) {
      const auto next = rest.first();
      rest.erase(next);
      const Subset narrowed = rest - (p.up_set(next) | p.down_set(next));
      if (auto bad = walk(family | Subset::singleton(next), narrowed)) return bad;
    }
    return std::nullopt;
  }

  bool violates(Subset family) const {
    const auto s = sup(f_.source(), family);
    if (!s) return false;
    const auto t = sup(f_.target(), f_.apply(family));
    return !t || *t != f_(*s);
  }

  const MonotoneMap& f_;
  std::atomic<std::size_t>& visited_;
  std::size_t max_families_;
  bool overflow_ = false;
};

}  // namespace

std::optional<Subset> find_sup_violation(const MonotoneMap& f, std::size_t max_families) {
  // sup F = sup max(F), and a monotone f has the same upper bounds on f(F)
  // and f(max F), so antichains suffice.
  const auto n = static_cast<long long>(f.source().size());
  std::vector<std::optional<Subset>> found(f.source().size());
  std::atomic<std::size_t> visited{0};
  std::atomic<bool> overflow{false};
  std::atomic<long long> first_bad{n};
#pragma omp parallel for schedule(dynamic, 1)
  for (long long first = 0; first < n; ++first) {
    if (first > first_bad.load() || overflow.load()) continue;
    AntichainScan scan(f, visited, max_families);
    found[first] = scan.from(static_cast<std::size_t>(first));
    if (scan.overflowed()) overflow = true;
    if (found[first]) {
      long long cur = first_bad.load();
      while (first < cur && !first_bad.compare_exchange_weak(cur, first)) {
      }
    }
  }
  if (overflow) {
    throw CapacityError("sup-preservation scan exceeds " + std::to_string(max_families) + " antichains");
  }
  if (first_bad.load() == n) return std::nullopt;
  return found[static_cast<std::size_t>(first_bad.load())];
}

bool is_sup_preserving(const MonotoneMap& f, std::size_t max_families) {
  return !find_sup_violation(f, max_families).has_value();
}

namespace {

Json map_json(const MonotoneMap& f) {
  Json j = Json::object();
  for (std::size_t x = 0; x < f.source().size(); ++x) j[f.source().label(x)] = f.target().label(f(x));
  return j;
}

std::vector<MonotoneMap> sup_extensions(const SupExtensionProblem& prob, std::size_t limit) {
  const auto& pd = prob.pd;
  std::vector<std::optional<std::size_t>> fixed(pd.size());
  for (std::size_t x = 0; x < pd.base().size(); ++x) fixed[pd.phi(x)] = prob.lambda(x);
  std::vector<std::size_t> order;
  for (std::size_t i = pd.size(); i-- > 0;) {
    if (!fixed[i]) order.push_back(i);
  }
  const auto src = std::make_shared<const FinitePoset>(pd.order());
  std::vector<MonotoneMap> out;
  for (auto& img : enumerate_monotone_extensions(*src, prob.target(), fixed, order, limit)) {
    out.emplace_back(src, prob.target_ref(), std::move(img));
  }
  return out;
}

}  // namespace

CheckReport check_sigma_theorem(const SupExtensionProblem& prob, std::size_t limit) {
  const std::string property = "sigma_theorem";
  const auto& z = prob.target();
  const auto& pd = prob.pd;
  const Subset lambda_x = image_of_space(prob.lambda);
  const auto table = sigma_map(z, lambda_x);
  if (const auto bad = table.first_undefined()) {
    return CheckReport::skipped(property, "sup map undefined at " + brace(z, *bad));
  }
  for (std::size_t i = 0; i < table.points.size(); ++i) {
    for (std::size_t j = 0; j < table.points.size(); ++j) {
      if (table.points[i].is_subset_of(table.points[j]) && !z.leq(*table.values[i], *table.values[j])) {
        return CheckReport::failed(property, "sup map is not monotone",
                                   {{"c1", brace(z, table.points[i])}, {"c2", brace(z, table.points[j])}});
      }
    }
  }

  const auto sharp = lambda_sharp(prob);
  for (std::size_t x = 0; x < pd.base().size(); ++x) {
    if (sharp(pd.phi(x)) != prob.lambda(x)) {
      return CheckReport::failed(property, "lambda_sharp o phi differs from lambda", {{"x", pd.base().label(x)}});
    }
  }
  // Factorization through X(lambda) corestricted to lambda(X), then Sigma.
  for (std::size_t c = 0; c < pd.size(); ++c) {
    const Subset pushed = down_closure(z, prob.lambda.apply(pd.point(c))) & lambda_x;
    const auto idx = table.index_of(pushed);
    if (!idx || *table.values[*idx] != sharp(c)) {
      return CheckReport::failed(property, "lambda_sharp differs from Sigma o X(lambda)",
                                 {{"point", pd.point_label(c)}, {"pushed", brace(z, pushed)}});
    }
  }
  if (!is_spectral(sharp)) {
    return CheckReport::failed(property, "lambda_sharp is not spectral", {{"map", map_json(sharp)}});
  }
  if (const auto bad = find_sup_violation(sharp)) {
    Json family = Json::array();
    bad->for_each([&](std::size_t c) { family.push_back(pd.point_label(c)); });
    return CheckReport::failed(property, "lambda_sharp is not sup-preserving", {{"family", family}});
  }

  std::vector<MonotoneMap> extensions;
  try {
    extensions = sup_extensions(prob, limit);
  } catch (const CapacityError& e) {
    return CheckReport::skipped(property, std::string("extension enumeration: ") + e.what());
  }
  bool sharp_listed = false;
  for (const auto& ext : extensions) {
    const bool equal = ext.image() == sharp.image();
    sharp_listed = sharp_listed || equal;
    for (std::size_t c = 0; c < pd.size(); ++c) {
      if (!z.leq(sharp(c), ext(c))) {
        return CheckReport::failed(property, "extension below lambda_sharp",
                                   {{"point", pd.point_label(c)}, {"extension", map_json(ext)}});
      }
    }
    if (is_sup_preserving(ext) != equal) {
      return CheckReport::failed(property, "sup-preserving extension differs from lambda_sharp",
                                 {{"extension", map_json(ext)}, {"equal_to_sharp", equal}});
    }
  }
  if (!sharp_listed) {
    return CheckReport::failed(property, "lambda_sharp missing from enumerated extensions",
                               {{"extensions", extensions.size()}});
  }
  return CheckReport::passed(property);
}

CheckReport check_retraction(const FinitePoset& z) {
  const std::string property = "sigma_retraction";
  const auto table = sigma_map(z, z.all());
  if (const auto bad = table.first_undefined()) {
    throw SigmaUndefinedError("no supremum in Z for " + brace(z, *bad));
  }
  for (std::size_t w = 0; w < z.size(); ++w) {
    const auto idx = table.index_of(z.down_set(w));
    if (!idx || *table.values[*idx] != w) {
      return CheckReport::failed(property, "Sigma(phi(z)) differs from z", {{"z", z.label(w)}});
    }
  }
  return CheckReport::passed(property);
}

CheckReport check_injective_sigma_prop(const SupExtensionProblem& prob, std::size_t limit) {
  const std::string property = "injective_sigma";
  const auto& z = prob.target();
  const auto& lambda = prob.lambda;
  const auto table = sigma_map(z, image_of_space(lambda));
  if (const auto bad = table.first_undefined()) {
    return CheckReport::skipped(property, "sup map undefined at " + brace(z, *bad));
  }
  if (!table.injective()) return CheckReport::skipped(property, "sup map on X(lambda(X)) is not injective");
  if (!is_order_embedding(lambda)) {
    return CheckReport::skipped(property, "lambda is not an order embedding, so lambda_sharp need not be one");
  }
  const auto sharp = lambda_sharp(prob);
  if (!is_order_embedding(sharp)) {
    return CheckReport::failed(property, "lambda_sharp is not an order embedding", {{"map", map_json(sharp)}});
  }

  bool sup_condition = true;
  for (std::size_t w = 0; w < z.size() && sup_condition; ++w) {
    const Subset below = lambda.apply(lambda.preimage(z.down_set(w)));
    const auto s = sup(z, below);
    sup_condition = s && *s == w;
  }
  if (!sup_condition) return CheckReport::passed(property);

  std::vector<MonotoneMap> extensions;
  try {
    extensions = sup_extensions(prob, limit);
  } catch (const CapacityError& e) {
    return CheckReport::skipped(property, std::string("extension enumeration: ") + e.what());
  }
  for (const auto& ext : extensions) {
    if (is_order_embedding(ext) && !(ext.image() == sharp.image())) {
      return CheckReport::failed(property, "embedding extension differs from lambda_sharp",
                                 {{"extension", map_json(ext)}});
    }
  }
  return CheckReport::passed(property);
}

}  // namespace spectral
