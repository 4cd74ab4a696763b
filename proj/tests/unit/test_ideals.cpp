#include <algorithm>

#include "../oracles.hpp"
#include "common.hpp"
#include "spectral/errors.hpp"
#include "spectral/ideals.hpp"

using namespace spectral;

namespace {

std::vector<std::uint64_t> masks(const std::vector<Subset>& v) {
  std::vector<std::uint64_t> out;
  for (auto s : v) out.push_back(s.mask());
  return out;
}

void check_kernels(const FinitePoset& p) {
  for (bool empty : {false, true}) {
    auto want = oracle::down_sets(p, empty);
    const IdealQuery q{.include_empty = empty};
    const auto reference = down_sets_filter_serial(p, q);
    CHECK(std::is_sorted(reference.begin(), reference.end(), CanonicalLess{}));
    auto got = masks(reference);
    std::sort(got.begin(), got.end());
    CHECK(got == want);
    CHECK(down_sets_filter_parallel(p, q) == reference);
    CHECK(down_sets_extension_serial(p, q) == reference);
    CHECK(down_sets_extension_parallel(p, q) == reference);
    CHECK(enumerate_down_sets(p, q) == reference);
  }
}

}  // namespace

TEST_SUITE("ideals") {
  TEST_CASE("kernels agree with the oracle on every poset up to 4 elements") {
    for (const auto& p : testing_corpus::small_posets(4)) check_kernels(p);
  }

  TEST_CASE("kernels agree on random posets") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) check_kernels(random_poset(3 + seed % 10, seed));
  }

  TEST_CASE("known counts") {
    CHECK(enumerate_down_sets(fixtures::grid(4, 4), {.include_empty = true}).size() == 70);
    CHECK(enumerate_down_sets(fixtures::boolean_lattice(4), {.include_empty = true}).size() == 168);
    CHECK(enumerate_down_sets(fixtures::antichain(10)).size() == 1023);
    CHECK(enumerate_down_sets(fixtures::chain(40)).size() == 40);
    CHECK(down_sets_extension_parallel(fixtures::grid(5, 5), {.include_empty = true}).size() == 252);
  }

  TEST_CASE("large posets use the extension walk") {
    const auto p = fixtures::chain(64);
    const auto all = enumerate_down_sets(p);
    CHECK(all.size() == 64);
    CHECK(all.back() == p.all());
    CHECK_THROWS_AS(down_sets_filter_serial(p), CapacityError);
  }

  TEST_CASE("capacity is enforced") {
    const auto p = fixtures::antichain(8);
    CHECK_THROWS_AS(enumerate_down_sets(p, {.capacity = 100}), CapacityError);
    CHECK_THROWS_AS(down_sets_filter_serial(p, {.capacity = 100}), CapacityError);
    CHECK_THROWS_AS(down_sets_extension_serial(p, {.capacity = 100}), CapacityError);
    CHECK_THROWS_AS(down_sets_extension_parallel(p, {.capacity = 100}), CapacityError);
    CHECK(enumerate_down_sets(p, {.capacity = 255}).size() == 255);
  }
}
