#include "spectral/maps.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "spectral/errors.hpp"
#include "spectral/ideals.hpp"

namespace spectral {

MonotoneMap::MonotoneMap(PosetRef source, PosetRef target, std::vector<std::size_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_->size()) throw RangeError("map image has the wrong length");
  for (auto v : image_) {
    if (v >= target_->size()) throw RangeError("map value " + std::to_string(v) + " outside target");
  }
  if (!is_monotone(*source_, *target_, image_)) throw NotSpectralError("assignment is not monotone");
}

MonotoneMap MonotoneMap::identity(PosetRef p) {
  std::vector<std::size_t> image(p->size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return MonotoneMap(p, p, std::move(image));
}

Subset MonotoneMap::apply(Subset s) const {
  Subset out;
  s.for_each([&](std::size_t x) { out.insert(image_[x]); });
  return out;
}

Subset MonotoneMap::preimage(Subset s) const {
  Subset out;
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (s.contains(image_[x])) out.insert(x);
  }
  return out;
}

bool MonotoneMap::operator==(const MonotoneMap& other) const {
  const bool same_source = source_ == other.source_ || *source_ == *other.source_;
  const bool same_target = target_ == other.target_ || *target_ == *other.target_;
  return same_source && same_target && image_ == other.image_;
}

bool is_monotone(const FinitePoset& source, const FinitePoset& target, std::span<const std::size_t> image) {
  for (std::size_t x = 0; x < source.size(); ++x) {
    bool ok = true;
    source.up_set(x).for_each([&](std::size_t y) { ok = ok && target.leq(image[x], image[y]); });
    if (!ok) return false;
  }
  return true;
}

bool is_spectral(const FinitePoset& source, const FinitePoset& target, std::span<const std::size_t> image) {
  if (image.size() != source.size()) return false;
  for (auto omega : enumerate_down_sets(target, {.include_empty = true})) {
    Subset pre;
    for (std::size_t x = 0; x < source.size(); ++x) {
      if (omega.contains(image[x])) pre.insert(x);
    }
    if (!is_down_set(source, pre)) return false;
  }
  return true;
}

bool is_spectral(const MonotoneMap& f) { return is_spectral(f.source(), f.target(), f.image()); }

bool is_order_embedding(const MonotoneMap& f) {
  const auto n = f.source().size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (f.source().leq(x, y) != f.target().leq(f(x), f(y))) return false;
    }
  }
  return true;  // reflecting order on a poset forces injectivity
}

bool is_order_isomorphism(const MonotoneMap& f) {
  return f.source().size() == f.target().size() && is_order_embedding(f);
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.target() == g.source())) throw CompositionMismatchError("target of f differs from source of g");
  std::vector<std::size_t> image(f.source().size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = g(f(x));
  return MonotoneMap(f.source_ref(), g.target_ref(), std::move(image));
}

namespace {

PosetRef order_ref(const PowerdomainSpace& pd) { return std::make_shared<const FinitePoset>(pd.order()); }

void require_base(const MonotoneMap& f, const PowerdomainSpace& source_pd, const PowerdomainSpace& target_pd) {
  if (!(f.source() == source_pd.base()) || !(f.target() == target_pd.base())) {
    throw CompositionMismatchError("powerdomains are not built over the map's source and target");
  }
}

std::vector<std::size_t> induced_image(const MonotoneMap& f, const PowerdomainSpace& source_pd,
                                       const PowerdomainSpace& target_pd) {
  std::vector<std::size_t> image(source_pd.size());
  for (std::size_t i = 0; i < source_pd.size(); ++i) {
    const Subset c = down_closure(f.target(), f.apply(source_pd.point(i)));
    const auto idx = target_pd.index_of(c);
    if (!idx) throw std::logic_error("f(C)^gen is not a point of the target powerdomain");
    image[i] = *idx;
  }
  return image;
}

// Principal points are pinned to phi2(f(x)); the rest are free, largest first.
struct ExtensionSetup {
  std::vector<std::optional<std::size_t>> fixed;
  std::vector<std::size_t> order;
};

ExtensionSetup extension_setup(const PowerdomainSpace& source_pd,
                               const std::vector<std::optional<std::size_t>>& principal_values) {
  ExtensionSetup s;
  s.fixed.assign(source_pd.size(), std::nullopt);
  for (std::size_t x = 0; x < source_pd.base().size(); ++x) s.fixed[source_pd.phi(x)] = principal_values[x];
  for (std::size_t i = source_pd.size(); i-- > 0;) {
    if (!s.fixed[i]) s.order.push_back(i);
  }
  return s;
}

class ExtensionSearch {
public:
  ExtensionSearch(const FinitePoset& domain, const FinitePoset& target, std::span<const std::size_t> order,
                  std::size_t limit, std::atomic<std::size_t>& count, std::atomic<bool>& overflow)
      : domain_(domain), target_(target), order_(order), limit_(limit), count_(count), overflow_(overflow) {}

  // Values for `d` compatible with everything in `assigned`.
  Subset candidates(std::size_t d, const std::vector<std::optional<std::size_t>>& assigned) const {
    Subset c = target_.all();
    for (std::size_t e = 0; e < domain_.size(); ++e) {
      if (!assigned[e] || e == d) continue;
      if (domain_.leq(e, d)) c &= target_.up_set(*assigned[e]);
      if (domain_.leq(d, e)) c &= target_.down_set(*assigned[e]);
    }
    return c;
  }

  void run(std::size_t depth, std::vector<std::optional<std::size_t>>& assigned,
           std::vector<std::vector<std::size_t>>& out) {
    if (overflow_.load(std::memory_order_relaxed)) return;
    if (depth == order_.size()) {
      if (count_.fetch_add(1, std::memory_order_relaxed) >= limit_) {
        overflow_.store(true, std::memory_order_relaxed);
        return;
      }
      std::vector<std::size_t> image(assigned.size());
      for (std::size_t i = 0; i < assigned.size(); ++i) image[i] = *assigned[i];
      out.push_back(std::move(image));
      return;
    }
    const auto d = order_[depth];
    candidates(d, assigned).for_each([&](std::size_t v) {
      assigned[d] = v;
      run(depth + 1, assigned, out);
    });
    assigned[d].reset();
  }

private:
  const FinitePoset& domain_;
  const FinitePoset& target_;
  std::span<const std::size_t> order_;
  std::size_t limit_;
  std::atomic<std::size_t>& count_;
  std::atomic<bool>& overflow_;
};

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_monotone_extensions(const FinitePoset& domain,
                                                                    const FinitePoset& target,
                                                                    const std::vector<std::optional<std::size_t>>& fixed,
                                                                    std::span<const std::size_t> assign_order,
                                                                    std::size_t limit) {
  if (fixed.size() != domain.size()) throw RangeError("fixed assignment has the wrong length");
  for (std::size_t d = 0; d < domain.size(); ++d) {
    if (fixed[d] && *fixed[d] >= target.size()) throw RangeError("fixed value outside target");
    const bool listed = std::find(assign_order.begin(), assign_order.end(), d) != assign_order.end();
    if (fixed[d].has_value() == listed) throw RangeError("assign order must list exactly the free elements");
  }
  // The pinned values must already be monotone among themselves.
  for (std::size_t a = 0; a < domain.size(); ++a) {
    for (std::size_t b = 0; b < domain.size(); ++b) {
      if (fixed[a] && fixed[b] && domain.leq(a, b) && !target.leq(*fixed[a], *fixed[b])) return {};
    }
  }

  std::atomic<std::size_t> count{0};
  std::atomic<bool> overflow{false};
  ExtensionSearch search(domain, target, assign_order, limit, count, overflow);
  std::vector<std::vector<std::size_t>> out;
  if (assign_order.empty()) {
    auto assigned = fixed;
    search.run(0, assigned, out);
  } else {
    // Fan out over the values of the first free element; concatenating in value order keeps the serial order.
    const auto first = assign_order.front();
    const auto roots = search.candidates(first, fixed).elements();
    std::vector<std::vector<std::vector<std::size_t>>> parts(roots.size());
    const auto tasks = static_cast<long long>(roots.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long t = 0; t < tasks; ++t) {
      auto assigned = fixed;
      assigned[first] = roots[static_cast<std::size_t>(t)];
      search.run(1, assigned, parts[static_cast<std::size_t>(t)]);
    }
    for (auto& part : parts) {
      for (auto& img : part) out.push_back(std::move(img));
    }
  }
  if (overflow) throw CapacityError("extension count exceeds limit " + std::to_string(limit));
  return out;
}

MonotoneMap powerdomain_map(const MonotoneMap& f) {
  return powerdomain_map(f, build_powerdomain(f.source()), build_powerdomain(f.target()));
}

MonotoneMap powerdomain_map(const MonotoneMap& f, const PowerdomainSpace& source_pd,
                            const PowerdomainSpace& target_pd) {
  require_base(f, source_pd, target_pd);
  return MonotoneMap(order_ref(source_pd), order_ref(target_pd), induced_image(f, source_pd, target_pd));
}

std::vector<MonotoneMap> enumerate_extensions(const MonotoneMap& f, std::size_t limit) {
  return enumerate_extensions(f, build_powerdomain(f.source()), build_powerdomain(f.target()), limit);
}

std::vector<MonotoneMap> enumerate_extensions(const MonotoneMap& f, const PowerdomainSpace& source_pd,
                                              const PowerdomainSpace& target_pd, std::size_t limit) {
  require_base(f, source_pd, target_pd);
  std::vector<std::optional<std::size_t>> principal(f.source().size());
  for (std::size_t x = 0; x < principal.size(); ++x) principal[x] = target_pd.phi(f(x));
  const auto setup = extension_setup(source_pd, principal);
  const auto src = order_ref(source_pd);
  const auto dst = order_ref(target_pd);
  std::vector<MonotoneMap> out;
  for (auto& img : enumerate_monotone_extensions(*src, *dst, setup.fixed, setup.order, limit)) {
    out.emplace_back(src, dst, std::move(img));
  }
  return out;
}

CheckReport check_functor_laws(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.target() == g.source())) throw CompositionMismatchError("target of f differs from source of g");
  return check_functor_laws(f, g, build_powerdomain(f.source()), build_powerdomain(f.target()),
                            build_powerdomain(g.target()));
}

CheckReport check_functor_laws(const MonotoneMap& f, const MonotoneMap& g, const PowerdomainSpace& pd1,
                               const PowerdomainSpace& pd2, const PowerdomainSpace& pd3) {
  const std::string property = "functor_laws";
  const auto gf = compose(g, f);
  const auto direct = induced_image(gf, pd1, pd3);
  const auto xf = induced_image(f, pd1, pd2);
  const auto xg = induced_image(g, pd2, pd3);
  for (std::size_t c = 0; c < pd1.size(); ++c) {
    if (direct[c] != xg[xf[c]]) {
      return CheckReport::failed(property, "X(g o f) differs from X(g) o X(f)",
                                 {{"point", pd1.point_label(c)},
                                  {"x_gf", pd3.point_label(direct[c])},
                                  {"x_g_x_f", pd3.point_label(xg[xf[c]])}});
    }
  }
  for (const auto* pd : {&pd1, &pd2}) {
    const auto id = MonotoneMap::identity(pd->base());
    const auto xid = induced_image(id, *pd, *pd);
    for (std::size_t c = 0; c < pd->size(); ++c) {
      if (xid[c] != c) {
        return CheckReport::failed(property, "X(id) is not the identity", {{"point", pd->point_label(c)}});
      }
    }
  }
  return CheckReport::passed(property);
}

CheckReport check_minimality(const MonotoneMap& f, std::size_t limit) {
  return check_minimality(f, build_powerdomain(f.source()), build_powerdomain(f.target()), limit);
}

CheckReport check_minimality(const MonotoneMap& f, const PowerdomainSpace& source_pd,
                             const PowerdomainSpace& target_pd, std::size_t limit) {
  const std::string property = "extension_minimality";
  const auto natural = induced_image(f, source_pd, target_pd);
  const auto extensions = enumerate_extensions(f, source_pd, target_pd, limit);
  bool natural_listed = false;
  for (const auto& psi : extensions) {
    natural_listed = natural_listed || psi.image() == natural;
    for (std::size_t c = 0; c < source_pd.size(); ++c) {
      if (!target_pd.leq(natural[c], psi(c))) {
        Json images = Json::array();
        for (auto v : psi.image()) images.push_back(target_pd.point_label(v));
        return CheckReport::failed(property, "X(f)(C) not contained in Psi(C)",
                                   {{"point", source_pd.point_label(c)},
                                    {"natural", target_pd.point_label(natural[c])},
                                    {"extension", images}});
      }
    }
  }
  if (!natural_listed) {
    return CheckReport::failed(property, "X(f) missing from the enumerated extensions",
                               {{"extensions", extensions.size()}});
  }
  return CheckReport::passed(property);
}

MonotoneMap lift_homeomorphism(const MonotoneMap& psi_hat, const PowerdomainSpace& source_pd,
                               const PowerdomainSpace& target_pd) {
  if (!(psi_hat.source() == source_pd.order()) || !(psi_hat.target() == target_pd.order())) {
    throw NotIsomorphismError("map is not between the given powerdomain orders");
  }
  if (!is_order_isomorphism(psi_hat)) throw NotIsomorphismError("map is not an order-isomorphism");
  const auto& base2 = target_pd.base();
  std::vector<std::size_t> image(source_pd.base().size());
  for (std::size_t x = 0; x < image.size(); ++x) {
    const Subset c = target_pd.point(psi_hat(source_pd.phi(x)));
    if (!is_irreducible_inverse_closed(base2, c)) {
      throw IrreducibilityError("principal point of " + source_pd.base().label(x) + " sent to reducible " +
                                to_brace_string(c, base2.labels()));
    }
    image[x] = *generic_point(base2, c);
  }
  MonotoneMap psi(std::make_shared<const FinitePoset>(source_pd.base()),
                  std::make_shared<const FinitePoset>(base2), std::move(image));
  if (!is_order_isomorphism(psi)) throw NotIsomorphismError("lifted map is not an isomorphism");
  return psi;
}

}  // namespace spectral
