#include <algorithm>
#include <set>

#include "../oracles.hpp"
#include "common.hpp"
#include "spectral/errors.hpp"
#include "spectral/powerdomain.hpp"

using namespace spectral;

namespace {

std::vector<std::string> labels_of(const PowerdomainSpace& pd) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < pd.size(); ++i) out.push_back(pd.point_label(i));
  return out;
}

}  // namespace

TEST_SUITE("powerdomain") {
  TEST_CASE("build reproduces the listed examples") {
    const auto pd1 = build_powerdomain(fixtures::collapse_x1());
    CHECK(labels_of(pd1) == std::vector<std::string>{"{a1}", "{a2}", "{a1,a2}", "{a1,a2,b}"});
    const auto pd2 = build_powerdomain(fixtures::collapse_x2());
    CHECK(labels_of(pd2) == std::vector<std::string>{"{c1}", "{c1,c2}"});
    CHECK(build_powerdomain(fixtures::antichain(5)).size() == 31);
    CHECK(build_powerdomain(FinitePoset::from_cover_relations(1, std::span<const Relation>{})).size() == 1);
  }

  TEST_CASE("4x4 grid") {
    const auto pd = build_powerdomain(fixtures::grid(4, 4));
    CHECK(pd.size() == 69);
    CHECK_FALSE(pd.has_order());
    CHECK_THROWS_AS(pd.order(), CapacityError);
    CHECK(pd.leq(0, pd.top()));
    CHECK(check_embedding_theorem(pd).ok());
    CHECK(powerdomain_dimension(pd) == 15);
  }

  TEST_CASE("phi") {
    const auto pd = build_powerdomain(fixtures::collapse_x1());
    CHECK(pd.point_label(pd.phi(2)) == "{a1,a2,b}");
    CHECK(pd.phi(0) == 0);
    CHECK_THROWS_AS(pd.phi(3), RangeError);
    const auto c = build_powerdomain(fixtures::chain(5));
    std::set<std::size_t> image;
    for (std::size_t x = 0; x < 5; ++x) image.insert(c.phi(x));
    CHECK(image.size() == c.size());
  }

  TEST_CASE("basic and Vietoris opens") {
    const auto pd = build_powerdomain(fixtures::collapse_x1());
    CHECK(basic_open(pd, Subset::of({0, 1})) == PointSet{0, 1, 2});
    CHECK(basic_open(pd, pd.base().all()) == PointSet{0, 1, 2, 3});
    CHECK(basic_open(pd, Subset::of({0})) == PointSet{0});
    CHECK(basic_open(pd, Subset{}).empty());
    CHECK_THROWS_AS(basic_open(pd, Subset::of({2})), NotOpenError);
    CHECK_THROWS_AS(vietoris_open(pd, Subset::of({2})), NotOpenError);
    for (auto u : open_sets(pd.base()).opens) CHECK(vietoris_open(pd, u) == basic_open(pd, u));
  }

  TEST_CASE("embedding theorem checks") {
    CHECK(check_embedding_theorem(build_powerdomain(fixtures::collapse_x1())).ok());
    CHECK(check_embedding_theorem(build_powerdomain(fixtures::chain(1))).ok());
    // Dropping the whole space leaves two maximal points.
    const auto report = check_embedding_theorem(PowerdomainSpace(fixtures::antichain(2),
                                                                 {Subset::of({0}), Subset::of({1})}, false));
    CHECK(report.verdict == Verdict::fail);
    CHECK_FALSE(report.witness.is_null());
  }

  TEST_CASE("phi surjectivity") {
    CHECK(is_phi_surjective(build_powerdomain(fixtures::chain(4))));
    CHECK_FALSE(is_phi_surjective(build_powerdomain(fixtures::collapse_x1())));
    CHECK(is_phi_surjective(build_powerdomain(fixtures::antichain(1))));
  }

  TEST_CASE("dimension") {
    CHECK(powerdomain_dimension(build_powerdomain(fixtures::antichain(3))) == 2);
    CHECK(powerdomain_dimension(build_powerdomain(fixtures::chain(5))) == 4);
    CHECK(powerdomain_dimension(build_powerdomain(fixtures::collapse_x1())) == 2);
  }

  TEST_CASE("hat powerdomain") {
    const auto hat = hat_powerdomain(fixtures::collapse_x1());
    CHECK(hat.size() == 5);
    CHECK(hat.point(0).empty());
    CHECK(hat.includes_empty());
    CHECK(basic_open(hat, Subset{}) == PointSet{0});
    CHECK(hat_powerdomain(fixtures::chain(1)).size() == 2);
    CHECK(hat_powerdomain(fixtures::antichain(4)).size() == 16);
  }

  TEST_CASE("inverse powerdomain") {
    const auto inv = inverse_powerdomain(fixtures::collapse_x1());
    std::vector<Subset> pts = inv.points();
    std::vector<Subset> want{Subset::of({2}), Subset::of({0, 2}), Subset::of({1, 2}), Subset::of({0, 1, 2})};
    CHECK(pts == want);
    CHECK(inverse_powerdomain(fixtures::chain(4)).size() == 4);
    // Self-dual base.
    const auto diamond = fixtures::boolean_lattice(2);
    CHECK(find_isomorphism(inverse_powerdomain(diamond).order(), build_powerdomain(diamond).order()).has_value());
  }

  TEST_CASE("iteration") {
    CHECK(iterate_sizes(fixtures::chain(1), 3).sizes == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(iterate_sizes(fixtures::antichain(2), 2).sizes == std::vector<std::size_t>{2, 3, 4});
    CHECK(iterate_sizes(fixtures::chain(2), 2).sizes == std::vector<std::size_t>{2, 2, 2});
    CHECK(iterate_sizes(fixtures::chain(3), 0).sizes == std::vector<std::size_t>{3});
    const auto big = iterate_sizes(fixtures::antichain(3), 5, 1000);
    CHECK(big.capacity_hit);
    CHECK(big.sizes.front() == 3);
    CHECK(big.sizes.at(1) == 7);
    CHECK_FALSE(big.message.empty());
  }

  TEST_CASE("capacity") {
    CHECK_THROWS_AS(build_powerdomain(fixtures::antichain(12), 1000), CapacityError);
    CHECK_THROWS_AS(hat_powerdomain(fixtures::antichain(12), 1000), CapacityError);
  }

  TEST_CASE("properties over the exhaustive corpus") {
    for (const auto& p : testing_corpus::small_posets(4)) {
      const auto pd = build_powerdomain(p);
      CHECK(pd.size() == oracle::down_sets(p, false).size());
      CHECK(check_embedding_theorem(pd).ok());
      const auto& order = pd.order();
      for (std::size_t i = 0; i < pd.size(); ++i) {
        for (std::size_t j = 0; j < pd.size(); ++j) CHECK(order.leq(i, j) == pd.point(i).is_subset_of(pd.point(j)));
      }
      CHECK(powerdomain_dimension(pd) == p.size() - 1);
      CHECK(powerdomain_dimension(pd) == dimension(order));
      CHECK((powerdomain_dimension(pd) == dimension(p)) == p.is_chain());
      CHECK(is_phi_surjective(pd) == p.is_chain());

      const auto hat = hat_powerdomain(p);
      REQUIRE(hat.size() == pd.size() + 1);
      std::vector<Subset> rest(hat.points().begin() + 1, hat.points().end());
      CHECK(rest == pd.points());

      const auto inv = inverse_powerdomain(p);
      std::vector<std::uint64_t> got;
      for (auto s : inv.points()) got.push_back(s.mask());
      std::sort(got.begin(), got.end());
      CHECK(got == oracle::up_sets(p, false));
    }
  }
}
