#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spectral/ideals.hpp"
#include "spectral/poset.hpp"
#include "spectral/report.hpp"
#include "spectral/topology.hpp"

namespace spectral {

/// Sorted indices into PowerdomainSpace::points().
using PointSet = std::vector<std::size_t>;

/// The space of nonempty inverse-closed subsets of a finite spectral space
/// (optionally with the empty set added), ordered by inclusion.
///
/// Points are kept in canonical order, so the full base set is always the
/// last point and the empty set, when present, the first. The inclusion order
/// is also materialized as a FinitePoset when there are at most kMaxElements
/// points; larger spaces answer `leq` directly from the masks.
class PowerdomainSpace {
public:
  PowerdomainSpace(FinitePoset base, std::vector<Subset> points, bool with_empty);

  const FinitePoset& base() const { return base_; }
  const std::vector<Subset>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  Subset point(std::size_t i) const { return points_[i]; }
  bool includes_empty() const { return with_empty_; }

  /// Zariski order, which is inclusion.
  bool leq(std::size_t i, std::size_t j) const { return points_[i].is_subset_of(points_[j]); }

  bool has_order() const { return order_.has_value(); }
  /// Inclusion order as a poset on point indices. Throws CapacityError past kMaxElements points.
  const FinitePoset& order() const;

  /// Index of the principal down-set {x}^gen. Throws RangeError.
  std::size_t phi(std::size_t x) const;
  std::optional<std::size_t> index_of(Subset s) const;
  /// Index of the full base set.
  std::size_t top() const { return points_.size() - 1; }

  std::string point_label(std::size_t i) const { return to_brace_string(points_[i], base_.labels()); }

private:
  FinitePoset base_;
  std::vector<Subset> points_;
  bool with_empty_;
  std::vector<std::size_t> phi_;
  std::optional<FinitePoset> order_;
};

/// All nonempty down-sets of p. Throws CapacityError when there are more than `capacity`.
PowerdomainSpace build_powerdomain(const FinitePoset& p, std::size_t capacity = kDefaultCapacity);

/// build_powerdomain plus the empty set as a new bottom point. The empty set
/// is an isolated open point and the nonempty part is its closed complement.
PowerdomainSpace hat_powerdomain(const FinitePoset& p, std::size_t capacity = kDefaultCapacity);

/// build_powerdomain of the dual order: the nonempty closed (up-)sets of p.
PowerdomainSpace inverse_powerdomain(const FinitePoset& p, std::size_t capacity = kDefaultCapacity);

/// Points contained in the open omega. Throws NotOpenError unless omega is a down-set.
PointSet basic_open(const PowerdomainSpace& pd, Subset omega);

/// The upper-Vietoris open U^+: points that are saturated (equal to the
/// intersection of the opens containing them) and lie inside u. Computed from
/// the open family, not from the down-set test, so agreement with basic_open
/// is a real check.
PointSet vietoris_open(const PowerdomainSpace& pd, Subset u);
PointSet vietoris_open(const PowerdomainSpace& pd, const OpenFamily& opens, Subset u);

/// Every point is principal. Equivalent to the base being a chain.
bool is_phi_surjective(const PowerdomainSpace& pd);

/// Longest chain of points under inclusion.
std::size_t powerdomain_dimension(const PowerdomainSpace& pd);

/// Verifies, on a space from build_powerdomain: the basic opens form a basis
/// closed under intersection and give a T0 topology whose specialization
/// order is inclusion; phi is an order embedding that is continuous and
/// dense; the full set is the unique maximal point; Zariski and upper-Vietoris
/// opens coincide.
CheckReport check_embedding_theorem(const PowerdomainSpace& pd);

struct IterationResult {
  std::vector<std::size_t> sizes;
  bool capacity_hit = false;
  std::string message;
};

/// Point counts of X^0(p) = p, X^1(p), ..., X^k(p). Stops early, with the
/// partial sequence, when a stage exceeds `capacity` or kMaxElements points.
IterationResult iterate_sizes(const FinitePoset& p, std::size_t k, std::size_t capacity = kDefaultCapacity);

}  // namespace spectral
