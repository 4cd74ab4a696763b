#pragma once

#include <vector>

#include "doctest.h"
#include "spectral/generators.hpp"

namespace testing_corpus {

/// Every labeled poset on 1..max_n elements plus a few seeded random ones.
inline const std::vector<spectral::FinitePoset>& small_posets(std::size_t max_n = 4) {
  static std::vector<std::vector<spectral::FinitePoset>> cache(6);
  auto& out = cache[max_n];
  if (out.empty()) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      auto batch = spectral::all_posets(n);
      out.insert(out.end(), batch.begin(), batch.end());
    }
  }
  return out;
}

}  // namespace testing_corpus
