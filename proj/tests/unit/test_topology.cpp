#include "../oracles.hpp"
#include "common.hpp"
#include "spectral/errors.hpp"
#include "spectral/topology.hpp"

using namespace spectral;

TEST_SUITE("topology") {
  TEST_CASE("open sets") {
    const auto p = fixtures::collapse_x1();
    const auto f = open_sets(p);
    CHECK(f.opens == std::vector<Subset>{Subset{}, Subset::of({0}), Subset::of({1}), Subset::of({0, 1}), p.all()});
    CHECK(open_sets(fixtures::antichain(4)).opens.size() == 16);
    CHECK(open_sets(fixtures::chain(5)).opens.size() == 6);
  }

  TEST_CASE("closures") {
    const auto p = fixtures::collapse_x1();
    CHECK(closure(p, Subset::of({0})) == Subset::of({0, 2}));
    CHECK(inverse_closure(p, Subset::of({2})) == p.all());
    CHECK(inverse_closure(p, Subset::of({0, 1})) == Subset::of({0, 1}));
    CHECK(inverse_closure(p, Subset::of({2})) == down_closure(p, Subset::singleton(2)));
    for (Subset::Word m = 0; m < 8; ++m) CHECK(constructible_closure(p, Subset(m)) == Subset(m));
  }

  TEST_CASE("inverse-closed sets") {
    const auto p = fixtures::collapse_x1();
    CHECK(is_inverse_closed(p, Subset::of({0, 1})));
    CHECK_FALSE(is_inverse_closed(p, Subset::of({2})));
    CHECK(is_inverse_closed(p, p.all()));
  }

  TEST_CASE("irreducible inverse-closed sets") {
    const auto p = fixtures::collapse_x1();
    const auto irr = irreducible_inverse_closed(p);
    REQUIRE(irr.size() == 3);
    CHECK(irr[0] == IrreducibleSet{Subset::of({0}), 0});
    CHECK(irr[1] == IrreducibleSet{Subset::of({1}), 1});
    CHECK(irr[2] == IrreducibleSet{p.all(), 2});
    CHECK_FALSE(is_irreducible_inverse_closed(p, Subset::of({0, 1})));

    const auto c = fixtures::chain(4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(irreducible_inverse_closed(c)[i].set == c.down_set(i));

    const auto a = fixtures::antichain(2);
    CHECK(irreducible_inverse_closed(a).size() == 2);
    CHECK_FALSE(is_irreducible_inverse_closed(a, a.all()));
  }

  TEST_CASE("poset of a topology") {
    CHECK(poset_of_topology(open_sets(fixtures::chain(3))) == fixtures::chain(3));
    OpenFamily discrete{3, {}, {}};
    for (Subset::Word m = 0; m < 8; ++m) discrete.opens.push_back(Subset(m));
    CHECK(poset_of_topology(discrete) == fixtures::antichain(3));
    const auto x1 = fixtures::collapse_x1();
    const auto back = poset_of_topology(open_sets(x1));
    CHECK(back == x1);
    CHECK(back.labels() == x1.labels());
  }

  TEST_CASE("malformed families are rejected") {
    // Missing the empty set.
    CHECK_THROWS_AS(poset_of_topology({2, {Subset::of({0}), Subset::of({0, 1})}, {}}), MalformedFamilyError);
    // {0} union {1} missing.
    CHECK_THROWS_AS(poset_of_topology({3, {Subset{}, Subset::of({0}), Subset::of({1}), Subset::of({0, 1, 2})}, {}}),
                    MalformedFamilyError);
    // Indiscrete on two points: not T0.
    CHECK_THROWS_AS(poset_of_topology({2, {Subset{}, Subset::of({0, 1})}, {}}), MalformedFamilyError);
  }

  TEST_CASE("properties over the exhaustive corpus") {
    for (const auto& p : testing_corpus::small_posets(4)) {
      CHECK(poset_of_topology(open_sets(p)) == p);
      const auto dual = order_dual(p);
      for (Subset::Word m = 0; m < (Subset::Word{1} << p.size()); ++m) {
        const Subset s(m);
        CHECK(inverse_closure(p, s) == closure(dual, s));
        CHECK(inverse_closure(p, s) == down_closure(p, constructible_closure(p, s)));
        CHECK(constructible_closure(p, s).mask() == oracle::patch_closure(p, m));
        if (m != 0 && is_down_set(p, s)) {
          CHECK(is_irreducible_inverse_closed(p, s) == oracle::is_irreducible(p, m));
          CHECK(generic_point(p, s).has_value() == oracle::is_irreducible(p, m));
        }
      }
      const auto irr = irreducible_inverse_closed(p);
      REQUIRE(irr.size() == p.size());
      for (std::size_t x = 0; x < p.size(); ++x) CHECK(irr[x] == IrreducibleSet{p.down_set(x), x});
    }
  }
}
