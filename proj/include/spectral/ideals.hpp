#pragma once

#include <cstddef>
#include <vector>

#include "spectral/poset.hpp"

namespace spectral {

/// Default limit on enumerated points (2^20). See default_capacity().
inline constexpr std::size_t kDefaultCapacity = std::size_t{1} << 20;

/// kDefaultCapacity unless the SPECTRAL_CAPACITY environment variable holds a positive integer.
std::size_t default_capacity();

/// Largest element count the mask-filter kernels accept (they scan all 2^n masks).
inline constexpr std::size_t kMaxFilterElements = 30;
/// Below this element count `enumerate_down_sets` uses the mask filter.
inline constexpr std::size_t kFilterCutoff = 20;

struct IdealQuery {
  bool include_empty = false;
  std::size_t capacity = kDefaultCapacity;
};

// Every kernel returns the down-sets of `p` in canonical order (popcount,
// then mask) and throws CapacityError when more than `capacity` would be
// returned. The serial filter is the reference the others are tested against.

std::vector<Subset> down_sets_filter_serial(const FinitePoset& p, IdealQuery q = {});
std::vector<Subset> down_sets_filter_parallel(const FinitePoset& p, IdealQuery q = {});

/// Output-sensitive enumeration: walk a linear extension, branching on
/// "include x" (all predecessors are already in) or "exclude x" (forbid its up-set).
std::vector<Subset> down_sets_extension_serial(const FinitePoset& p, IdealQuery q = {});
/// Same walk, with the top of the search tree split into independent subtrees.
std::vector<Subset> down_sets_extension_parallel(const FinitePoset& p, IdealQuery q = {});

/// Dispatch: parallel filter for n <= kFilterCutoff, parallel extension above.
std::vector<Subset> enumerate_down_sets(const FinitePoset& p, IdealQuery q = {});

}  // namespace spectral
