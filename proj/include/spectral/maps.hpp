#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "spectral/poset.hpp"
#include "spectral/powerdomain.hpp"
#include "spectral/report.hpp"

namespace spectral {

using PosetRef = std::shared_ptr<const FinitePoset>;

/// A monotone (equivalently, spectral) map between finite spectral spaces,
/// stored pointwise. Construction rejects non-monotone assignments.
class MonotoneMap {
public:
  /// Throws RangeError on size or index mismatches and NotSpectralError when not monotone.
  MonotoneMap(PosetRef source, PosetRef target, std::vector<std::size_t> image);
  MonotoneMap(const FinitePoset& source, const FinitePoset& target, std::vector<std::size_t> image)
      : MonotoneMap(std::make_shared<const FinitePoset>(source), std::make_shared<const FinitePoset>(target),
                    std::move(image)) {}

  static MonotoneMap identity(PosetRef p);
  static MonotoneMap identity(const FinitePoset& p) { return identity(std::make_shared<const FinitePoset>(p)); }

  const FinitePoset& source() const { return *source_; }
  const FinitePoset& target() const { return *target_; }
  const PosetRef& source_ref() const { return source_; }
  const PosetRef& target_ref() const { return target_; }
  const std::vector<std::size_t>& image() const { return image_; }

  std::size_t operator()(std::size_t x) const { return image_[x]; }
  Subset apply(Subset s) const;
  Subset preimage(Subset s) const;

  /// Same source and target orders and the same values pointwise.
  bool operator==(const MonotoneMap& other) const;

private:
  PosetRef source_;
  PosetRef target_;
  std::vector<std::size_t> image_;
};

bool is_monotone(const FinitePoset& source, const FinitePoset& target, std::span<const std::size_t> image);

/// Spectrality from the definition: the preimage of every open (down-set) of
/// the target is open in the source.
bool is_spectral(const FinitePoset& source, const FinitePoset& target, std::span<const std::size_t> image);
bool is_spectral(const MonotoneMap& f);

bool is_order_embedding(const MonotoneMap& f);
bool is_order_isomorphism(const MonotoneMap& f);

/// g o f. Throws CompositionMismatchError unless f's target is g's source.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// The induced map C -> f(C)^gen between powerdomain orders.
MonotoneMap powerdomain_map(const MonotoneMap& f);
MonotoneMap powerdomain_map(const MonotoneMap& f, const PowerdomainSpace& source_pd, const PowerdomainSpace& target_pd);

/// Monotone maps from `domain` to `target` agreeing with `fixed` wherever it
/// holds a value. Free elements are assigned in `assign_order`, each drawing
/// from the values compatible with every element assigned so far. Results
/// come out in lexicographic order of (assign_order, value). Throws
/// CapacityError past `limit` results.
std::vector<std::vector<std::size_t>> enumerate_monotone_extensions(const FinitePoset& domain,
                                                                    const FinitePoset& target,
                                                                    const std::vector<std::optional<std::size_t>>& fixed,
                                                                    std::span<const std::size_t> assign_order,
                                                                    std::size_t limit);

/// All spectral Psi between the powerdomains with Psi o phi1 = phi2 o f.
std::vector<MonotoneMap> enumerate_extensions(const MonotoneMap& f, std::size_t limit = kDefaultCapacity);
std::vector<MonotoneMap> enumerate_extensions(const MonotoneMap& f, const PowerdomainSpace& source_pd,
                                              const PowerdomainSpace& target_pd, std::size_t limit = kDefaultCapacity);

/// X(g o f) = X(g) o X(f) and X(id) = id.
CheckReport check_functor_laws(const MonotoneMap& f, const MonotoneMap& g);
CheckReport check_functor_laws(const MonotoneMap& f, const MonotoneMap& g, const PowerdomainSpace& pd1,
                               const PowerdomainSpace& pd2, const PowerdomainSpace& pd3);

/// X(f)(C) is contained in Psi(C) for every extension Psi and point C, and X(f) is itself an extension.
CheckReport check_minimality(const MonotoneMap& f, std::size_t limit = kDefaultCapacity);
CheckReport check_minimality(const MonotoneMap& f, const PowerdomainSpace& source_pd,
                             const PowerdomainSpace& target_pd, std::size_t limit = kDefaultCapacity);

/// Recover the homeomorphism psi with Psi = X(psi) from an order-isomorphism
/// Psi between two powerdomain orders. Each principal point is sent to an
/// irreducible one, whose generic point defines psi. Throws
/// NotIsomorphismError when Psi is not an isomorphism between these spaces
/// and IrreducibilityError when a principal point lands on a reducible one.
MonotoneMap lift_homeomorphism(const MonotoneMap& psi_hat, const PowerdomainSpace& source_pd,
                               const PowerdomainSpace& target_pd);

}  // namespace spectral
