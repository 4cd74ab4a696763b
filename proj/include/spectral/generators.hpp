#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "spectral/completion.hpp"
#include "spectral/maps.hpp"
#include "spectral/poset.hpp"

namespace spectral {

inline constexpr std::size_t kMaxExhaustive = 5;

/// Visits every labeled poset on elements 0..n-1 exactly once. Element k is
/// added to each poset on 0..k-1 with a down-set D below it and a disjoint
/// up-set U above it, where every member of D already lies below every member
/// of U. Throws CapacityError when n > max_n.
void for_each_poset(std::size_t n, const std::function<void(const FinitePoset&)>& visit,
                    std::size_t max_n = kMaxExhaustive);
std::vector<FinitePoset> all_posets(std::size_t n, std::size_t max_n = kMaxExhaustive);

/// Coin flip on every pair i < j, then transitive closure. Deterministic in (n, seed).
FinitePoset random_poset(std::size_t n, std::uint64_t seed);

/// Every monotone map p -> q, in lexicographic order of images.
std::vector<MonotoneMap> all_monotone_maps(const FinitePoset& p, const FinitePoset& q,
                                           std::size_t limit = kDefaultCapacity);

/// A random well-posed completion problem: lambda: X -> Z monotone with the
/// sup map total on the powerdomain of lambda(X). Deterministic in the arguments.
SupExtensionProblem random_sup_problem(std::size_t max_x, std::size_t max_z, std::uint64_t seed);

namespace fixtures {

FinitePoset chain(std::size_t n);
FinitePoset antichain(std::size_t n);
/// rows x cols product of chains; element r*cols + c.
FinitePoset grid(std::size_t rows, std::size_t cols);
/// Subsets of a k-set under inclusion; element m is the subset with mask m.
FinitePoset boolean_lattice(std::size_t k);

/// a1, a2 < b.
FinitePoset collapse_x1();
/// c1 < c2.
FinitePoset collapse_x2();
/// a1, a2 -> c1 and b -> c2.
MonotoneMap collapse_psi();
/// The extension sending {a1,a2} and {a1,a2,b} to {c1,c2}, singletons to {c1}.
MonotoneMap collapse_big_psi();

/// Discrete space {a, b, c}.
FinitePoset discrete3();
/// Identity on the powerdomain of discrete3 except {a,b} -> {a,b,c}.
MonotoneMap non_sup_lambda();

}  // namespace fixtures

}  // namespace spectral
