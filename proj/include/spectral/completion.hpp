#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spectral/maps.hpp"
#include "spectral/powerdomain.hpp"
#include "spectral/report.hpp"

namespace spectral {

/// The sup map on the powerdomain of a sub-poset Y of Z: each nonempty
/// down-set C of Y (under the order induced from Z) with its supremum in Z.
/// Missing suprema are kept as empty values rather than raised.
struct SigmaTable {
  Subset domain;
  std::vector<Subset> points;  // canonical order, as subsets of Z
  std::vector<std::optional<std::size_t>> values;

  bool total() const;
  bool injective() const;
  /// First point (canonical order) without a supremum.
  std::optional<Subset> first_undefined() const;
  std::optional<std::size_t> index_of(Subset c) const;
};

/// Throws RangeError when y is empty or not inside z.
SigmaTable sigma_map(const FinitePoset& z, Subset y, std::size_t capacity = kDefaultCapacity);

/// Every point z has a local basis of principal down-sets: for each open U
/// holding z there is an omega with z in {omega}^gen inside U. Scans all opens.
bool principal_local_basis_check(const FinitePoset& z);

/// A spectral map lambda: X -> Z together with the powerdomain of X.
struct SupExtensionProblem {
  MonotoneMap lambda;
  PowerdomainSpace pd;

  explicit SupExtensionProblem(MonotoneMap l);
  SupExtensionProblem(MonotoneMap l, PowerdomainSpace p);

  const FinitePoset& target() const { return lambda.target(); }
  const PosetRef& target_ref() const { return lambda.target_ref(); }
};

/// C -> sup_Z(lambda(C)^gen) as a map from the powerdomain order to Z.
/// Throws SigmaUndefinedError, naming the offending set, when the sup map on
/// the powerdomain of lambda(X) is not total.
MonotoneMap lambda_sharp(const SupExtensionProblem& prob);

/// A nonempty F (as a subset of the source) whose supremum exists but is not
/// carried to the supremum of its image. Only antichains are scanned, which
/// is enough for monotone maps; the result is the first violating antichain
/// in order of least element, then lexicographic. Throws CapacityError past
/// `max_families` visited antichains.
inline constexpr std::size_t kMaxSupFamilies = std::size_t{1} << 24;
std::optional<Subset> find_sup_violation(const MonotoneMap& f, std::size_t max_families = kMaxSupFamilies);
bool is_sup_preserving(const MonotoneMap& f, std::size_t max_families = kMaxSupFamilies);

/// lambda_sharp extends lambda, factors through the sup map, preserves sups,
/// lies below every spectral extension, and is the only sup-preserving one.
CheckReport check_sigma_theorem(const SupExtensionProblem& prob, std::size_t limit = kDefaultCapacity);

/// Sigma(phi(z)) = z for all z. Throws SigmaUndefinedError when Sigma_Z is not total.
CheckReport check_retraction(const FinitePoset& z);

/// With an injective sup map and lambda an order embedding: lambda_sharp is
/// an order embedding, and when every z is the sup of the lambda-values below
/// it, lambda_sharp is the only embedding among the extensions.
CheckReport check_injective_sigma_prop(const SupExtensionProblem& prob, std::size_t limit = kDefaultCapacity);

}  // namespace spectral
