#include "spectral/powerdomain.hpp"

#include <algorithm>
#include <stdexcept>

#include "spectral/errors.hpp"

namespace spectral {

PowerdomainSpace::PowerdomainSpace(FinitePoset base, std::vector<Subset> points, bool with_empty)
    : base_(std::move(base)), points_(std::move(points)), with_empty_(with_empty) {
  std::sort(points_.begin(), points_.end(), CanonicalLess{});
  phi_.reserve(base_.size());
  for (std::size_t x = 0; x < base_.size(); ++x) {
    const auto idx = index_of(base_.down_set(x));
    if (!idx) throw std::logic_error("principal down-set missing from powerdomain");
    phi_.push_back(*idx);
  }
  if (points_.size() <= kMaxElements) {
    std::vector<Subset> up(points_.size());
    std::vector<std::string> labels(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      for (std::size_t j = 0; j < points_.size(); ++j) {
        if (leq(i, j)) up[i].insert(j);
      }
      labels[i] = point_label(i);
    }
    order_ = FinitePoset::from_up_sets(std::move(up), std::move(labels));
  }
}

const FinitePoset& PowerdomainSpace::order() const {
  if (!order_) {
    throw CapacityError("powerdomain has " + std::to_string(points_.size()) + " points; order poset limited to " +
                        std::to_string(kMaxElements));
  }
  return *order_;
}

std::size_t PowerdomainSpace::phi(std::size_t x) const {
  if (x >= phi_.size()) throw RangeError("element " + std::to_string(x) + " not in base");
  return phi_[x];
}

std::optional<std::size_t> PowerdomainSpace::index_of(Subset s) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), s, CanonicalLess{});
  if (it == points_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

PowerdomainSpace build_powerdomain(const FinitePoset& p, std::size_t capacity) {
  return {p, enumerate_down_sets(p, {.include_empty = false, .capacity = capacity}), false};
}

PowerdomainSpace hat_powerdomain(const FinitePoset& p, std::size_t capacity) {
  PowerdomainSpace hat(p, enumerate_down_sets(p, {.include_empty = true, .capacity = capacity}), true);
  // U(empty) = {empty} is open; its complement, the nonempty points, must be closed (an up-set).
  const auto bottom = basic_open(hat, Subset{});
  if (bottom != PointSet{0} || !hat.point(0).empty()) throw std::logic_error("U(empty) is not {empty}");
  for (std::size_t i = 1; i < hat.size(); ++i) {
    if (hat.leq(i, 0)) throw std::logic_error("nonempty part of hat powerdomain is not closed");
  }
  return hat;
}

PowerdomainSpace inverse_powerdomain(const FinitePoset& p, std::size_t capacity) {
  return build_powerdomain(order_dual(p), capacity);
}

PointSet basic_open(const PowerdomainSpace& pd, Subset omega) {
  if (!omega.is_subset_of(pd.base().all()) || !is_down_set(pd.base(), omega)) {
    throw NotOpenError(to_brace_string(omega, pd.base().labels()) + " is not open");
  }
  PointSet out;
  for (std::size_t i = 0; i < pd.size(); ++i) {
    if (pd.point(i).is_subset_of(omega)) out.push_back(i);
  }
  return out;
}

PointSet vietoris_open(const PowerdomainSpace& pd, Subset u) {
  return vietoris_open(pd, open_sets(pd.base()), u);
}

PointSet vietoris_open(const PowerdomainSpace& pd, const OpenFamily& opens, Subset u) {
  if (std::find(opens.opens.begin(), opens.opens.end(), u) == opens.opens.end()) {
    throw NotOpenError(to_brace_string(u, pd.base().labels()) + " is not open");
  }
  PointSet out;
  for (std::size_t i = 0; i < pd.size(); ++i) {
    const Subset q = pd.point(i);
    if (!q.is_subset_of(u)) continue;
    Subset saturation = pd.base().all();
    for (auto v : opens.opens) {
      if (q.is_subset_of(v)) saturation &= v;
    }
    if (saturation == q) out.push_back(i);
  }
  return out;
}

bool is_phi_surjective(const PowerdomainSpace& pd) {
  return std::all_of(pd.points().begin(), pd.points().end(),
                     [&](Subset c) { return generic_point(pd.base(), c).has_value(); });
}

std::size_t powerdomain_dimension(const PowerdomainSpace& pd) {
  // Canonical order lists every proper subset before its superset.
  std::vector<std::size_t> height(pd.size(), 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < pd.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (pd.point(j) != pd.point(i) && pd.leq(j, i)) height[i] = std::max(height[i], height[j] + 1);
    }
    best = std::max(best, height[i]);
  }
  return best;
}

namespace {

Json point_json(const PowerdomainSpace& pd, std::size_t i) { return pd.point_label(i); }

}  // namespace

CheckReport check_embedding_theorem(const PowerdomainSpace& pd) {
  const std::string property = "embedding_theorem";
  const FinitePoset& base = pd.base();
  const std::size_t n = base.size();
  const auto opens = open_sets(base);

  // (1) points are distinct nonempty down-sets; inclusion is then a partial order.
  for (std::size_t i = 0; i < pd.size(); ++i) {
    if (pd.point(i).empty() || !is_down_set(base, pd.point(i))) {
      return CheckReport::failed(property, "point is not a nonempty down-set", {{"point", point_json(pd, i)}});
    }
    if (i > 0 && pd.point(i - 1) == pd.point(i)) {
      return CheckReport::failed(property, "duplicate point", {{"point", point_json(pd, i)}});
    }
  }

  std::vector<PointSet> basis;
  basis.reserve(opens.opens.size());
  for (auto omega : opens.opens) basis.push_back(basic_open(pd, omega));

  // (1) the basic opens are closed under intersection: U(A) n U(B) = U(A n B).
  for (std::size_t a = 0; a < opens.opens.size(); ++a) {
    for (std::size_t b = a; b < opens.opens.size(); ++b) {
      PointSet meet;
      std::set_intersection(basis[a].begin(), basis[a].end(), basis[b].begin(), basis[b].end(),
                            std::back_inserter(meet));
      if (meet != basic_open(pd, opens.opens[a] & opens.opens[b])) {
        return CheckReport::failed(property, "basic opens not closed under intersection",
                                   {{"omega", to_brace_string(opens.opens[a], base.labels())},
                                    {"omega_prime", to_brace_string(opens.opens[b], base.labels())}});
      }
    }
  }
  if (basis.back().size() != pd.size()) {
    return CheckReport::failed(property, "U(X) does not cover the space", {{"covered", basis.back().size()}});
  }

  // (1)+(2) specialization order of the Zariski topology: Y1 <= Y2 iff every basic open holding Y2 holds Y1.
  std::vector<std::vector<bool>> member(opens.opens.size(), std::vector<bool>(pd.size(), false));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (auto i : basis[a]) member[a][i] = true;
  }
  for (std::size_t i = 0; i < pd.size(); ++i) {
    for (std::size_t j = 0; j < pd.size(); ++j) {
      bool specializes = true;
      for (std::size_t a = 0; a < basis.size() && specializes; ++a) {
        if (member[a][j] && !member[a][i]) specializes = false;
      }
      if (specializes != pd.leq(i, j)) {
        return CheckReport::failed(property, "Zariski order differs from inclusion",
                                   {{"y1", point_json(pd, i)}, {"y2", point_json(pd, j)},
                                    {"zariski_leq", specializes}, {"inclusion", pd.leq(i, j)}});
      }
    }
  }

  // (3) phi is injective, reflects and preserves order, and is continuous.
  for (std::size_t x = 0; x < n; ++x) {
    if (pd.point(pd.phi(x)) != base.down_set(x)) {
      return CheckReport::failed(property, "phi(x) is not {x}^gen", {{"x", base.label(x)}});
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && pd.phi(x) == pd.phi(y)) {
        return CheckReport::failed(property, "phi not injective", {{"x", base.label(x)}, {"y", base.label(y)}});
      }
      if (base.leq(x, y) != pd.leq(pd.phi(x), pd.phi(y))) {
        return CheckReport::failed(property, "phi not an order embedding", {{"x", base.label(x)}, {"y", base.label(y)}});
      }
    }
  }
  for (std::size_t a = 0; a < basis.size(); ++a) {
    Subset preimage;
    for (std::size_t x = 0; x < n; ++x) {
      if (member[a][pd.phi(x)]) preimage.insert(x);
    }
    if (!is_down_set(base, preimage) || preimage != opens.opens[a]) {
      return CheckReport::failed(property, "phi preimage of a basic open is not that open",
                                 {{"omega", to_brace_string(opens.opens[a], base.labels())},
                                  {"preimage", to_brace_string(preimage, base.labels())}});
    }
  }

  // (4) unique maximal point, the whole space.
  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < pd.size(); ++i) {
    bool is_max = true;
    for (std::size_t j = 0; j < pd.size() && is_max; ++j) {
      if (i != j && pd.leq(i, j)) is_max = false;
    }
    if (is_max) maximal.push_back(i);
  }
  if (maximal.size() != 1 || pd.point(maximal.front()) != base.all()) {
    Json w = Json::array();
    for (auto i : maximal) w.push_back(point_json(pd, i));
    return CheckReport::failed(property, "maximal point is not unique or not X", {{"maximal", w}});
  }

  // phi(X) is dense: every nonempty basic open meets it.
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].empty()) continue;
    bool meets = false;
    for (std::size_t x = 0; x < n && !meets; ++x) meets = member[a][pd.phi(x)];
    if (!meets) {
      return CheckReport::failed(property, "phi(X) misses a nonempty basic open",
                                 {{"omega", to_brace_string(opens.opens[a], base.labels())}});
    }
  }

  // Zariski = upper Vietoris on every open.
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (vietoris_open(pd, opens, opens.opens[a]) != basis[a]) {
      return CheckReport::failed(property, "Zariski and upper-Vietoris opens differ",
                                 {{"open", to_brace_string(opens.opens[a], base.labels())}});
    }
  }
  return CheckReport::passed(property);
}

IterationResult iterate_sizes(const FinitePoset& p, std::size_t k, std::size_t capacity) {
  IterationResult out;
  out.sizes.push_back(p.size());
  FinitePoset stage = p;
  for (std::size_t i = 1; i <= k; ++i) {
    try {
      auto pd = build_powerdomain(stage, capacity);
      out.sizes.push_back(pd.size());
      if (i == k) break;
      stage = pd.order();
    } catch (const CapacityError& e) {
      out.capacity_hit = true;
      out.message = "stage " + std::to_string(i) + ": " + e.what();
      break;
    }
  }
  return out;
}

}  // namespace spectral
