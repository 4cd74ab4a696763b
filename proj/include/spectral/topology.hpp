#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spectral/ideals.hpp"
#include "spectral/poset.hpp"

namespace spectral {

/// The open sets of a finite space, in canonical order. In the finite case
/// every open is quasi-compact and the opens of a poset are its down-sets.
struct OpenFamily {
  std::size_t element_count = 0;
  std::vector<Subset> opens;
  std::vector<std::string> labels;
};

/// All down-sets of p, including the empty set and the whole space.
OpenFamily open_sets(const FinitePoset& p, std::size_t capacity = kDefaultCapacity);

/// Topological closure: the specialization closure.
Subset closure(const FinitePoset& p, Subset s);

/// Closure in the constructible (patch) topology. A finite spectral space has
/// the discrete patch topology: each {x} equals U \ V with U = {x}^gen and
/// V = {x}^gen \ {x}, both open. So this returns s unchanged.
Subset constructible_closure(const FinitePoset& p, Subset s);

/// Closure in the inverse topology, computed as the generization closure of
/// the constructible closure.
Subset inverse_closure(const FinitePoset& p, Subset s);

/// Closed in the inverse topology, i.e. a down-set (saturated; quasi-compactness is automatic).
bool is_inverse_closed(const FinitePoset& p, Subset s);

/// True when the inverse-closed set c is not a union of two strictly smaller inverse-closed sets.
bool is_irreducible_inverse_closed(const FinitePoset& p, Subset c);

/// The point x with {x}^gen == c, if any.
std::optional<std::size_t> generic_point(const FinitePoset& p, Subset c);

struct IrreducibleSet {
  Subset set;
  std::size_t generic_point;
  bool operator==(const IrreducibleSet&) const = default;
};

/// All irreducible inverse-closed sets, each with its unique generic point,
/// ordered by generic point. Every nonempty down-set is examined; a
/// non-principal irreducible one would be a logic error.
std::vector<IrreducibleSet> irreducible_inverse_closed(const FinitePoset& p,
                                                       std::size_t capacity = kDefaultCapacity);

/// Recover the specialization order from a family of opens: x <= y iff every
/// open containing y contains x. Throws MalformedFamilyError unless the family
/// contains the empty and full sets, is closed under binary union and
/// intersection, and is T0.
FinitePoset poset_of_topology(const OpenFamily& family);

}  // namespace spectral
