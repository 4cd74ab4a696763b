#pragma once

// Brute-force reference implementations. They read a poset only through
// leq(i, j) and scan whole subset or map spaces, so they share no code path
// with the library kernels they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "spectral/poset.hpp"

namespace oracle {

using spectral::FinitePoset;
using spectral::Subset;

inline bool is_down(const FinitePoset& p, std::uint64_t m) {
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!(m >> j & 1)) continue;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p.leq(i, j) && !(m >> i & 1)) return false;
    }
  }
  return true;
}

inline bool is_up(const FinitePoset& p, std::uint64_t m) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(m >> i & 1)) continue;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.leq(i, j) && !(m >> j & 1)) return false;
    }
  }
  return true;
}

/// Down-sets as plain masks, in increasing mask order.
inline std::vector<std::uint64_t> down_sets(const FinitePoset& p, bool include_empty) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = include_empty ? 0 : 1; m < (std::uint64_t{1} << p.size()); ++m) {
    if (is_down(p, m)) out.push_back(m);
  }
  return out;
}

inline std::vector<std::uint64_t> up_sets(const FinitePoset& p, bool include_empty) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = include_empty ? 0 : 1; m < (std::uint64_t{1} << p.size()); ++m) {
    if (is_up(p, m)) out.push_back(m);
  }
  return out;
}

inline std::uint64_t down_closure(const FinitePoset& p, std::uint64_t s) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if ((s >> j & 1) && p.leq(i, j)) out |= std::uint64_t{1} << i;
    }
  }
  return out;
}

/// Labeled posets on n elements: strict relations over the n(n-1) ordered
/// pairs that are antisymmetric and transitive.
inline std::size_t poset_count(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::size_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (m >> b & 1) r[pairs[b].first][pairs[b].second] = true;
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (r[i][j] && r[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k) {
          if (r[i][j] && r[j][k] && !r[i][k] && i != k) ok = false;
        }
      }
    }
    count += ok;
  }
  return count;
}

/// Minimum of the common upper bounds.
inline std::optional<std::size_t> sup(const FinitePoset& p, std::uint64_t s) {
  if (s == 0) return std::nullopt;
  std::vector<std::size_t> bounds;
  for (std::size_t u = 0; u < p.size(); ++u) {
    bool bound = true;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if ((s >> x & 1) && !p.leq(x, u)) bound = false;
    }
    if (bound) bounds.push_back(u);
  }
  for (auto u : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(), [&](std::size_t v) { return p.leq(u, v); })) return u;
  }
  return std::nullopt;
}

/// A down-set is irreducible when it is nonempty and not the union of two
/// strictly smaller down-sets.
inline bool is_irreducible(const FinitePoset& p, std::uint64_t c) {
  if (c == 0 || !is_down(p, c)) return false;
  const auto downs = down_sets(p, true);
  for (auto a : downs) {
    for (auto b : downs) {
      if ((a | b) == c && a != c && b != c) return false;
    }
  }
  return true;
}

inline std::size_t longest_chain(const FinitePoset& p) {
  std::size_t best = 0;
  auto dfs = [&](auto&& self, std::size_t x, std::size_t len) -> void {
    best = std::max(best, len);
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (y != x && p.leq(x, y)) self(self, y, len + 1);
    }
  };
  for (std::size_t x = 0; x < p.size(); ++x) dfs(dfs, x, 0);
  return best;
}

/// Closure of s in the topology generated by the sets U union (X \ V), U and V open.
inline std::uint64_t patch_closure(const FinitePoset& p, std::uint64_t s) {
  const auto opens = down_sets(p, true);
  const std::uint64_t all = (std::uint64_t{1} << p.size()) - 1;
  std::uint64_t out = all;
  for (auto u : opens) {
    for (auto v : opens) {
      const std::uint64_t closed = u | (all & ~v);
      if ((s & ~closed) == 0) out &= closed;
    }
  }
  return out;
}

inline bool is_monotone(const FinitePoset& p, const FinitePoset& q, const std::vector<std::size_t>& f) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.leq(i, j) && !q.leq(f[i], f[j])) return false;
    }
  }
  return true;
}

/// All functions p -> q, filtered by monotonicity.
inline std::vector<std::vector<std::size_t>> monotone_maps(const FinitePoset& p, const FinitePoset& q) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(p.size(), 0);
  for (;;) {
    if (is_monotone(p, q, f)) out.push_back(f);
    std::size_t k = 0;
    while (k < f.size() && ++f[k] == q.size()) f[k++] = 0;
    if (k == f.size()) break;
  }
  return out;
}

/// Any permutation preserving and reflecting the order.
inline bool isomorphic(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return false;
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) {
      for (std::size_t j = 0; j < p.size() && ok; ++j) ok = p.leq(i, j) == q.leq(perm[i], perm[j]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
