#include <algorithm>

#include "../oracles.hpp"
#include "common.hpp"
#include "spectral/errors.hpp"
#include "spectral/maps.hpp"

using namespace spectral;

TEST_SUITE("spectral_maps") {
  TEST_CASE("construction validates monotonicity") {
    const auto c2 = fixtures::chain(2);
    CHECK_THROWS_AS(MonotoneMap(c2, c2, {1, 0}), NotSpectralError);
    CHECK_THROWS_AS(MonotoneMap(c2, c2, {0}), RangeError);
    CHECK_THROWS_AS(MonotoneMap(c2, c2, {0, 2}), RangeError);
    CHECK_FALSE(is_spectral(c2, c2, std::vector<std::size_t>{1, 0}));
  }

  TEST_CASE("is_spectral") {
    CHECK(is_spectral(fixtures::collapse_psi()));
    CHECK(is_spectral(MonotoneMap::identity(fixtures::collapse_x1())));
  }

  TEST_CASE("powerdomain map") {
    const auto psi = fixtures::collapse_psi();
    const auto pd1 = build_powerdomain(psi.source());
    const auto pd2 = build_powerdomain(psi.target());
    const auto big = powerdomain_map(psi, pd1, pd2);
    CHECK(pd2.point_label(big(*pd1.index_of(Subset::of({0, 1})))) == "{c1}");
    CHECK(big == powerdomain_map(psi));

    const auto id = MonotoneMap::identity(fixtures::collapse_x1());
    CHECK(powerdomain_map(id) == MonotoneMap::identity(pd1.order()));

    const auto c3 = fixtures::chain(3);
    const MonotoneMap top(c3, c3, {2, 2, 2});
    const auto pd3 = build_powerdomain(c3);
    const auto x_top = powerdomain_map(top, pd3, pd3);
    for (std::size_t c = 0; c < pd3.size(); ++c) CHECK(x_top(c) == pd3.phi(2));

    CHECK_THROWS_AS(powerdomain_map(psi, pd2, pd1), CompositionMismatchError);
  }

  TEST_CASE("composition") {
    const auto psi = fixtures::collapse_psi();
    const auto collapse = MonotoneMap(fixtures::collapse_x2(), fixtures::chain(1), {0, 0});
    const auto gf = compose(collapse, psi);
    CHECK(gf.image() == std::vector<std::size_t>{0, 0, 0});
    CHECK_THROWS_AS(compose(psi, psi), CompositionMismatchError);
    CHECK(check_functor_laws(psi, collapse).ok());
    CHECK(check_functor_laws(MonotoneMap::identity(psi.source()), MonotoneMap::identity(psi.source())).ok());
    CHECK_THROWS_AS(check_functor_laws(psi, psi), CompositionMismatchError);
  }

  TEST_CASE("extensions of the example map") {
    const auto psi = fixtures::collapse_psi();
    const auto extensions = enumerate_extensions(psi);
    CHECK(extensions.size() >= 2);
    const auto natural = powerdomain_map(psi);
    const auto big = fixtures::collapse_big_psi();
    CHECK(std::find(extensions.begin(), extensions.end(), natural) != extensions.end());
    CHECK(std::find(extensions.begin(), extensions.end(), big) != extensions.end());
    CHECK_FALSE(big == natural);
    CHECK(check_minimality(psi).ok());
  }

  TEST_CASE("extensions of the identity on a discrete space include a non-sup-preserving map") {
    const auto id = MonotoneMap::identity(fixtures::discrete3());
    const auto extensions = enumerate_extensions(id);
    const auto lambda = fixtures::non_sup_lambda();
    CHECK(std::find(extensions.begin(), extensions.end(), lambda) != extensions.end());
    CHECK(check_minimality(id).ok());
  }

  TEST_CASE("chains have a single extension") {
    const auto f = MonotoneMap(fixtures::chain(3), fixtures::chain(4), {0, 2, 2});
    const auto extensions = enumerate_extensions(f);
    REQUIRE(extensions.size() == 1);
    CHECK(extensions.front() == powerdomain_map(f));
  }

  TEST_CASE("extension limit") {
    const auto id = MonotoneMap::identity(fixtures::antichain(4));
    CHECK_THROWS_AS(enumerate_extensions(id, 10), CapacityError);
  }

  TEST_CASE("generic extension kernel matches brute force") {
    const auto p = fixtures::collapse_x1();
    const auto q = fixtures::grid(2, 2);
    const auto want = oracle::monotone_maps(p, q);
    std::vector<std::size_t> order{0, 1, 2};
    auto got = enumerate_monotone_extensions(p, q, std::vector<std::optional<std::size_t>>(3), order, 1000);
    std::sort(got.begin(), got.end());
    auto sorted = want;
    std::sort(sorted.begin(), sorted.end());
    CHECK(got == sorted);
    std::vector<std::optional<std::size_t>> fixed{std::nullopt, 1, std::nullopt};
    std::vector<std::size_t> free{2, 0};
    for (const auto& img : enumerate_monotone_extensions(p, q, fixed, free, 1000)) CHECK(img[1] == 1);
    CHECK_THROWS_AS(enumerate_monotone_extensions(p, q, fixed, order, 1000), RangeError);
  }

  TEST_CASE("homeomorphism lifting") {
    const auto p = fixtures::collapse_x1();
    const auto q = FinitePoset::from_cover_relations(3, {{1, 0}, {2, 0}}, {"b", "a1", "a2"});
    const auto pd_p = build_powerdomain(p);
    const auto pd_q = build_powerdomain(q);
    const MonotoneMap sigma(p, q, {1, 2, 0});
    const auto lifted = lift_homeomorphism(powerdomain_map(sigma, pd_p, pd_q), pd_p, pd_q);
    CHECK(lifted.image() == sigma.image());

    const auto id = MonotoneMap::identity(pd_p.order());
    CHECK(lift_homeomorphism(id, pd_p, pd_p).image() == std::vector<std::size_t>{0, 1, 2});

    // Swapping {a1} and {a2} lifts to swapping a1 and a2.
    const MonotoneMap swap(pd_p.order(), pd_p.order(), {1, 0, 2, 3});
    CHECK(lift_homeomorphism(swap, pd_p, pd_p).image() == std::vector<std::size_t>{1, 0, 2});

    const auto collapse = MonotoneMap(pd_p.order(), pd_p.order(), {0, 0, 2, 3});
    CHECK_THROWS_AS(lift_homeomorphism(collapse, pd_p, pd_p), NotIsomorphismError);
    CHECK_THROWS_AS(lift_homeomorphism(id, pd_p, build_powerdomain(fixtures::chain(4))), NotIsomorphismError);
  }

  TEST_CASE("embeddings") {
    const MonotoneMap f(fixtures::chain(2), fixtures::chain(3), {0, 2});
    CHECK(is_order_embedding(f));
    CHECK_FALSE(is_order_isomorphism(f));
    CHECK(is_order_embedding(powerdomain_map(f)));
    const MonotoneMap g(fixtures::antichain(2), fixtures::chain(2), {0, 1});
    CHECK_FALSE(is_order_embedding(g));
  }

  TEST_CASE("laws over all maps between posets of at most 3 elements") {
    std::vector<FinitePoset> posets;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& p : all_posets(n)) posets.push_back(p);
    }
    for (const auto& p : posets) {
      const auto pd_p = build_powerdomain(p);
      for (const auto& q : posets) {
        const auto maps = all_monotone_maps(p, q);
        CHECK(maps.size() == oracle::monotone_maps(p, q).size());
        const auto pd_q = build_powerdomain(q);
        for (const auto& f : maps) {
          CHECK(is_spectral(f));
          const auto big = powerdomain_map(f, pd_p, pd_q);
          for (std::size_t x = 0; x < p.size(); ++x) CHECK(big(pd_p.phi(x)) == pd_q.phi(f(x)));
          for (auto omega : open_sets(q).opens) {
            PointSet pre;
            for (std::size_t c = 0; c < pd_p.size(); ++c) {
              if (pd_q.point(big(c)).is_subset_of(omega)) pre.push_back(c);
            }
            CHECK(pre == basic_open(pd_p, f.preimage(omega)));
          }
        }
      }
    }
  }
}
