#include "spectral/generators.hpp"

#include <random>

#include "spectral/errors.hpp"
#include "spectral/ideals.hpp"

namespace spectral {

namespace {

void extend(const FinitePoset& p, std::size_t n, const std::function<void(const FinitePoset&)>& visit) {
  const std::size_t k = p.size();
  if (k == n) {
    visit(p);
    return;
  }
  const auto downs = enumerate_down_sets(p, {.include_empty = true});
  const auto dual = order_dual(p);
  const auto ups = enumerate_down_sets(dual, {.include_empty = true});
  for (auto d : downs) {
    // Every element of U must lie above all of D.
    Subset above = p.all();
    d.for_each([&](std::size_t x) { above &= p.up_set(x); });
    for (auto u : ups) {
      if (u.intersects(d) || !u.is_subset_of(above)) continue;
      std::vector<Subset> rows(k + 1);
      for (std::size_t i = 0; i < k; ++i) {
        rows[i] = p.up_set(i);
        if (d.contains(i)) rows[i] = rows[i] | u | Subset::singleton(k);
      }
      rows[k] = u | Subset::singleton(k);
      extend(FinitePoset::from_up_sets(std::move(rows)), n, visit);
    }
  }
}

}  // namespace

void for_each_poset(std::size_t n, const std::function<void(const FinitePoset&)>& visit, std::size_t max_n) {
  if (n > max_n) throw CapacityError("exhaustive poset enumeration limited to n <= " + std::to_string(max_n));
  if (n == 0) throw RangeError("posets need at least one element");
  extend(FinitePoset::from_cover_relations(1, std::span<const Relation>{}), n, visit);
}

std::vector<FinitePoset> all_posets(std::size_t n, std::size_t max_n) {
  std::vector<FinitePoset> out;
  for_each_poset(n, [&](const FinitePoset& p) { out.push_back(p); }, max_n);
  return out;
}

FinitePoset random_poset(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Relation> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() & 1) edges.emplace_back(i, j);
    }
  }
  return FinitePoset::from_cover_relations(n, std::span<const Relation>(edges));
}

std::vector<MonotoneMap> all_monotone_maps(const FinitePoset& p, const FinitePoset& q, std::size_t limit) {
  const auto src = std::make_shared<const FinitePoset>(p);
  const auto dst = std::make_shared<const FinitePoset>(q);
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) order[i] = i;
  std::vector<MonotoneMap> out;
  for (auto& img : enumerate_monotone_extensions(p, q, std::vector<std::optional<std::size_t>>(p.size()), order, limit)) {
    out.emplace_back(src, dst, std::move(img));
  }
  return out;
}

SupExtensionProblem random_sup_problem(std::size_t max_x, std::size_t max_z, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    const std::size_t nx = 1 + rng() % max_x;
    const std::size_t nz = 1 + rng() % max_z;
    const auto x = std::make_shared<const FinitePoset>(random_poset(nx, rng()));
    const auto z = std::make_shared<const FinitePoset>(random_poset(nz, rng()));
    // Random monotone map: assign along a linear extension, each value drawn
    // from those above the values of all predecessors.
    std::vector<std::size_t> image(nx);
    bool stuck = false;
    for (auto i : linear_extension(*x)) {
      Subset allowed = z->all();
      (x->down_set(i) - Subset::singleton(i)).for_each([&](std::size_t j) { allowed &= z->up_set(image[j]); });
      if (allowed.empty()) {
        stuck = true;
        break;
      }
      const auto options = allowed.elements();
      image[i] = options[rng() % options.size()];
    }
    if (stuck) continue;
    MonotoneMap lambda(x, z, std::move(image));
    if (!sigma_map(*z, lambda.apply(x->all())).total()) continue;
    return SupExtensionProblem(std::move(lambda));
  }
}

namespace fixtures {

FinitePoset chain(std::size_t n) {
  std::vector<Relation> r;
  for (std::size_t i = 0; i + 1 < n; ++i) r.emplace_back(i, i + 1);
  return FinitePoset::from_cover_relations(n, std::span<const Relation>(r));
}

FinitePoset antichain(std::size_t n) { return FinitePoset::from_cover_relations(n, std::span<const Relation>{}); }

FinitePoset grid(std::size_t rows, std::size_t cols) {
  std::vector<Relation> r;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto e = i * cols + j;
      if (i + 1 < rows) r.emplace_back(e, e + cols);
      if (j + 1 < cols) r.emplace_back(e, e + 1);
    }
  }
  return FinitePoset::from_cover_relations(rows * cols, std::span<const Relation>(r));
}

FinitePoset boolean_lattice(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<Relation> r;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!(m >> b & 1)) r.emplace_back(m, m | std::size_t{1} << b);
    }
  }
  return FinitePoset::from_cover_relations(n, std::span<const Relation>(r));
}

FinitePoset collapse_x1() { return FinitePoset::from_cover_relations(3, {{0, 2}, {1, 2}}, {"a1", "a2", "b"}); }

FinitePoset collapse_x2() { return FinitePoset::from_cover_relations(2, {{0, 1}}, {"c1", "c2"}); }

MonotoneMap collapse_psi() { return MonotoneMap(collapse_x1(), collapse_x2(), {0, 0, 1}); }

MonotoneMap collapse_big_psi() {
  const auto pd1 = build_powerdomain(collapse_x1());
  const auto pd2 = build_powerdomain(collapse_x2());
  const auto small = *pd2.index_of(Subset::of({0}));
  const auto big = *pd2.index_of(Subset::of({0, 1}));
  std::vector<std::size_t> image(pd1.size());
  for (std::size_t i = 0; i < pd1.size(); ++i) image[i] = pd1.point(i).size() == 1 ? small : big;
  return MonotoneMap(pd1.order(), pd2.order(), std::move(image));
}

FinitePoset discrete3() { return FinitePoset::from_cover_relations(3, std::span<const Relation>{}, {"a", "b", "c"}); }

MonotoneMap non_sup_lambda() {
  const auto pd = build_powerdomain(discrete3());
  const auto order = std::make_shared<const FinitePoset>(pd.order());
  std::vector<std::size_t> image(pd.size());
  for (std::size_t i = 0; i < pd.size(); ++i) image[i] = i;
  image[*pd.index_of(Subset::of({0, 1}))] = *pd.index_of(pd.base().all());
  return MonotoneMap(order, order, std::move(image));
}

}  // namespace fixtures

}  // namespace spectral
