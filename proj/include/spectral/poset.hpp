#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spectral/subset.hpp"

namespace spectral {

/// (i, j) meaning i <= j.
using Relation = std::pair<std::size_t, std::size_t>;

/// A finite spectral space presented by its specialization order.
///
/// x <= y means y lies in the closure of {x}; open sets are down-sets. The
/// relation is kept twice: row i of `up_` is the principal up-set of i and
/// row i of `down_` is the principal down-set of i, so both closures are
/// OR-folds over rows. Values are immutable after construction.
class FinitePoset {
public:
  /// Reflexive-transitive closure of `pairs` (each (i, j) meaning i <= j).
  /// Throws RangeError on n == 0, n > kMaxElements or bad indices, CycleError
  /// when the closure is not antisymmetric.
  static FinitePoset from_cover_relations(std::size_t n, std::span<const Relation> pairs,
                                          std::vector<std::string> labels = {});
  static FinitePoset from_cover_relations(std::size_t n, std::initializer_list<Relation> pairs,
                                          std::vector<std::string> labels = {}) {
    const std::vector<Relation> v(pairs);
    return from_cover_relations(n, std::span<const Relation>(v), std::move(labels));
  }

  /// Build from principal up-sets that already form a partial order. Validates all invariants.
  static FinitePoset from_up_sets(std::vector<Subset> up, std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }
  Subset all() const { return Subset::full(size()); }

  bool leq(std::size_t i, std::size_t j) const { return up_[i].contains(j); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  Subset up_set(std::size_t i) const { return up_[i]; }
  Subset down_set(std::size_t i) const { return down_[i]; }

  const std::vector<std::string>& labels() const { return labels_; }
  /// Display label of element i, or its index when unlabeled.
  std::string label(std::size_t i) const;

  /// Pairs (i, j) with i covered by j.
  std::vector<Relation> covers() const;

  bool is_chain() const;

  /// Order equality; labels are not compared.
  bool operator==(const FinitePoset& other) const { return up_ == other.up_; }

private:
  FinitePoset(std::vector<Subset> up, std::vector<std::string> labels);

  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<std::string> labels_;
};

/// Bijection given as image indices, or nothing.
using Bijection = std::vector<std::size_t>;

// Generization closure: every element below some member of s.
Subset down_closure(const FinitePoset& p, Subset s);
// Specialization closure: every element above some member of s.
Subset up_closure(const FinitePoset& p, Subset s);

bool is_down_set(const FinitePoset& p, Subset s);
bool is_up_set(const FinitePoset& p, Subset s);

/// Maximal / minimal members of s under the order of p.
Subset maximal_elements(const FinitePoset& p, Subset s);
Subset minimal_elements(const FinitePoset& p, Subset s);

/// Same elements, opposite order. Involutive.
FinitePoset order_dual(const FinitePoset& p);

/// Sub-poset induced on the members of `selection`; element k of the result
/// is the k-th smallest member.
FinitePoset induced_subposet(const FinitePoset& p, Subset selection);

/// Length of the longest strict chain (Krull dimension).
std::size_t dimension(const FinitePoset& p);

/// Least upper bound of s, or nothing when s is empty, has no upper bound,
/// or its upper bounds have no minimum.
std::optional<std::size_t> sup(const FinitePoset& p, Subset s);

/// Permutation x_1..x_n where no later element is strictly below an earlier
/// one; ties broken by smallest index.
std::vector<std::size_t> linear_extension(const FinitePoset& p);

/// An order-isomorphism p -> q as image indices, if one exists.
std::optional<Bijection> find_isomorphism(const FinitePoset& p, const FinitePoset& q);

/// Calls `visit` on every order-isomorphism p -> q until it returns false.
/// Returns the number of isomorphisms visited.
std::size_t for_each_isomorphism(const FinitePoset& p, const FinitePoset& q,
                                 const std::function<bool(const Bijection&)>& visit);

}  // namespace spectral
