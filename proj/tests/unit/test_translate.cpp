#include "fixtures.hpp"

#include "restheory/dist.hpp"
#include "restheory/errors.hpp"
#include "restheory/oracle.hpp"
#include "restheory/translate.hpp"

#include <doctest.h>

using namespace restheory;
using restheory::test::ext;
using restheory::test::names;

TEST_SUITE("translate") {

TEST_CASE("enhancement order on subsets of TRI") {
  const ResourceTheory tri = builtin_theory("TRI");
  const auto ctx = OrderedResources::from_theory(tri);
  CHECK(enh_order(ctx, names(tri, {"e"}), names(tri, {"e", "a"})));
  CHECK(enh_order(ctx, names(tri, {"b"}), tri.empty_set()));
  CHECK(enh_order(ctx, tri.empty_set(), tri.empty_set()));
  CHECK_FALSE(enh_order(ctx, names(tri, {"b"}), names(tri, {"a"})));
}

TEST_CASE("degradation order on subsets of TRI") {
  const ResourceTheory tri = builtin_theory("TRI");
  const auto ctx = OrderedResources::from_theory(tri);
  CHECK(deg_order(ctx, names(tri, {"e"}), names(tri, {"a"})));
  CHECK(deg_order(ctx, tri.empty_set(), names(tri, {"b"})));
  CHECK_FALSE(deg_order(ctx, names(tri, {"b"}), names(tri, {"a"})));
  CHECK_FALSE(deg_order(ctx, names(tri, {"a"}), tri.empty_set()));
}

TEST_CASE("subset orders agree with function-existence oracles on TRI") {
  const ResourceTheory tri = builtin_theory("TRI");
  const auto ctx = OrderedResources::from_theory(tri);
  const oracle::Relation rel = oracle::resource_order(tri);
  for (std::uint64_t s = 0; s < 8; ++s) {
    for (std::uint64_t t = 0; t < 8; ++t) {
      const ResourceSet S = ResourceSet::from_mask(3, s);
      const ResourceSet T = ResourceSet::from_mask(3, t);
      CHECK(enh_order(ctx, S, T) == oracle::enhancement_function_exists(rel, S, T));
      CHECK(deg_order(ctx, S, T) == oracle::degradation_function_exists(rel, S, T));
      CHECK(enh_order(ctx, S, T) == oracle::set_order(tri, S, T));
    }
  }
}

TEST_CASE("the enhancement powerset preorder restricted to singletons is the resource order") {
  const ResourceTheory tri = builtin_theory("TRI");
  const auto ctx = OrderedResources::from_theory(tri);
  const FinitePreorder pp = powerset_preorder(ctx, SubsetOrderKind::enhancement);
  CHECK(pp.size() == 8);
  const FinitePreorder order = resource_order(tri);
  for (ResourceId a = 0; a < 3; ++a) {
    for (ResourceId b = 0; b < 3; ++b) CHECK(pp.geq(1U << a, 1U << b) == order.geq(a, b));
  }
  CHECK_THROWS_AS(powerset_preorder(ctx, SubsetOrderKind::enhancement, 4), Error);
}

TEST_CASE("on a chain the enhancement order compares maxima") {
  const FinitePreorder chain = value_order(ext({0, 3, 1, 2}));
  const auto ctx = OrderedResources::from_preorder(chain);
  const std::vector<int> value = {0, 3, 1, 2};
  for (std::uint64_t s = 1; s < 16; ++s) {
    for (std::uint64_t t = 1; t < 16; ++t) {
      int max_s = -1, max_t = -1, min_s = 9, min_t = 9;
      for (int i = 0; i < 4; ++i) {
        if (s >> i & 1) max_s = std::max(max_s, value[i]), min_s = std::min(min_s, value[i]);
        if (t >> i & 1) max_t = std::max(max_t, value[i]), min_t = std::min(min_t, value[i]);
      }
      CHECK(enh_order(ctx, ResourceSet::from_mask(4, s), ResourceSet::from_mask(4, t)) == (max_s >= max_t));
      CHECK(deg_order(ctx, ResourceSet::from_mask(4, s), ResourceSet::from_mask(4, t)) == (min_s >= min_t));
    }
  }
}

TEST_CASE("copy and augmentation maps") {
  const TheoryPtr tri = test::shared("TRI");
  CHECK(copy_map(tri, 2).image[tri->id("a")] == names(*tri, {"a"}));
  const MediatingMap neutral = aug_map(tri, tri->neutral());
  for (ResourceId r = 0; r < 3; ++r) CHECK(neutral.image[r] == ResourceSet::singleton(3, r));
  CHECK(aug_map(tri, names(*tri, {"b"})).image[tri->id("e")] == names(*tri, {"b"}));
}

TEST_CASE("enhancement certificates") {
  const TheoryPtr tri = test::shared("TRI");
  CHECK(check_enh_mediating(aug_map(tri, names(*tri, {"b"}))).primary());
  const EnhCertificate copy = check_enh_mediating(copy_map(tri, 2));
  CHECK(copy.variant1());
  CHECK(copy.certified());

  const TupleTheory tt = build_k_dist(DeterministicTheory(tri), 2, false);
  const MediatingMap e = tuple_embedding(tt, 0, SubsetOrderKind::enhancement);
  const EnhCertificate cert = check_enh_mediating(e);
  CHECK_FALSE(cert.primary());
  CHECK(mediating_violation(e).has_value());
}

TEST_CASE("degradation certificates") {
  const TheoryPtr tri = test::shared("TRI");
  const TupleTheory tt = build_k_dist(DeterministicTheory(tri), 2, false);
  const MediatingMap inverse = tuple_embedding(tt, 0);
  CHECK(check_deg_mediating(inverse, projection(tt, 0)).certified());

  MediatingMap singleton{tri, tri, {}, SubsetOrderKind::degradation, std::nullopt};
  for (ResourceId r = 0; r < 3; ++r) singleton.image.push_back(ResourceSet::singleton(3, r));
  CHECK(check_deg_mediating(singleton, {0, 1, 2}).certified());

  const std::vector<ResourceId> to_b = {2, 2, 2};
  MediatingMap preimage{tri, tri, {ResourceSet(3), ResourceSet(3), ResourceSet::full(3)},
                        SubsetOrderKind::degradation, to_b};
  const DegCertificate constant = check_deg_mediating(preimage, to_b);
  CHECK(constant.free_failure.has_value());
  CHECK_FALSE(constant.certified());
}

TEST_CASE("restricting a map to a window") {
  const TheoryPtr tri = test::shared("TRI");
  const MediatingMap aug = aug_map(tri, tri->neutral());
  CHECK(restrict_map(aug, tri->full_set()).image == aug.image);
  const MediatingMap none = restrict_map(aug, tri->empty_set());
  for (const ResourceSet& img : none.image) CHECK(img.empty());
  CHECK_FALSE(mediating_violation(none).has_value());
  CHECK_THROWS_AS(restrict_map(aug, names(*tri, {"a"})), Error);
}

TEST_CASE("pulling back through the identity mediation returns the root") {
  const TheoryPtr tri = test::shared("TRI");
  const PartialValuation root = PartialValuation::total(ext({2, 1, 0}));
  const MonotoneFn m = pull_back(aug_map(tri, tri->neutral()), root, Extremum::max);
  CHECK(m.values == root.values);
  CHECK(m.verified());
}

TEST_CASE("pulling back through copying") {
  const TheoryPtr tri = test::shared("TRI");
  const PartialValuation root = PartialValuation::total(ext({1, 1, 5}));
  const MonotoneFn m = pull_back(copy_map(tri, 2), root, Extremum::max);
  CHECK(m.values[tri->id("b")] == ExtRational(5));
  CHECK(m.verified());
}

TEST_CASE("pulling back the difference indicator recovers minimal distinguishability") {
  const TheoryPtr tri = test::shared("TRI");
  const DeterministicTheory base(tri);
  const TupleTheory constrained = build_k_dist(base, 2, true);
  const ResourceSet window = product_set(constrained, {tri->full_set(), tri->free()});
  const MediatingMap e = restrict_map(tuple_embedding(constrained, 0), window);
  const MonotoneFn pulled = pull_back(e, difference_indicator(constrained), Extremum::min);

  const TupleTheory unconstrained = build_k_dist(base, 2, false);
  const auto cert = ContractionCertificate::certify(difference_indicator(unconstrained), unconstrained);
  REQUIRE(cert.has_value());
  CHECK(pulled.values == min_distinguishability(base, *cert, tri->free()).values);
  CHECK(pulled.values == ext({0, 0, 1}));
}

TEST_CASE("an uncertified map is refused unless forced") {
  const TheoryPtr tri = test::shared("TRI");
  // e ↦ {b}, a ↦ {a}, b ↦ {b}: e ≽ a but {b} does not enhance to {a}.
  MediatingMap bad{tri, tri, {names(*tri, {"b"}), names(*tri, {"a"}), names(*tri, {"b"})},
                   SubsetOrderKind::enhancement, std::nullopt};
  const PartialValuation root = PartialValuation::total(ext({2, 1, 0}));
  CHECK_THROWS_AS(pull_back(bad, root, Extremum::max), Error);
  PullbackOptions force;
  force.force = true;
  CHECK(pull_back(bad, root, Extremum::max, force).provenance.params["certified_by"] == "forced");
}

}  // TEST_SUITE
