#include "fixtures.hpp"

#include "restheory/errors.hpp"
#include "restheory/inform.hpp"
#include "restheory/translate.hpp"

#include <doctest.h>

using namespace restheory;
using restheory::test::names;

namespace {

OrderedResources counterexample_order() {
  return OrderedResources::from_preorder(builtin_counterexample().order);
}

// Subset index = bitmask; image of S is the mask of its down-closure.
MapBetweenCarriers down_map(const OrderedResources& ctx) {
  const std::size_t n = ctx.size();
  MapBetweenCarriers f{std::size_t{1} << n, {}};
  for (std::uint64_t mask = 0; mask < f.target_size; ++mask) {
    f.image.push_back(static_cast<ResourceId>(down_closure(ctx, ResourceSet::from_mask(n, mask)).mask()));
  }
  return f;
}

}  // namespace

TEST_SUITE("order") {

TEST_CASE("down and up closures on TRI") {
  const ResourceTheory tri = builtin_theory("TRI");
  const auto ctx = OrderedResources::from_theory(tri);
  CHECK(down_closure(ctx, names(tri, {"e"})) == names(tri, {"e", "a"}));
  CHECK(up_closure(ctx, names(tri, {"a"})) == names(tri, {"e", "a"}));
  CHECK(down_closure(ctx, tri.empty_set()).empty());
  CHECK(is_downward_closed(ctx, names(tri, {"a"})));
  CHECK_FALSE(is_downward_closed(ctx, names(tri, {"e"})));
  CHECK(downward_escape(ctx, names(tri, {"e"})) == ResourceId{1});
  CHECK(is_upward_closed(ctx, names(tri, {"e"})));
}

TEST_CASE("closures on the four-element counterexample order") {
  const auto ctx = counterexample_order();
  CHECK(down_closure(ctx, ResourceSet(4, {0})) == ResourceSet(4, {0, 1}));
  CHECK(up_closure(ctx, ResourceSet(4, {3})) == ResourceSet(4, {2, 3}));
}

TEST_CASE("D-image and D-preimage maps") {
  const ResourceTheory tri = builtin_theory("TRI");
  CHECK(d_image(tri, names(tri, {"a"}), tri.id("b")) == names(tri, {"b"}));
  CHECK(d_preimage(tri, tri.free(), tri.id("a")) == names(tri, {"e", "a"}));
  CHECK(d_image(tri, tri.empty_set(), tri.id("e")).empty());
  CHECK(d_image(tri, tri.free(), names(tri, {"e"})) == names(tri, {"e", "a"}));
}

TEST_CASE("composing image maps agrees with the image of the combined set") {
  const ResourceTheory tri = builtin_theory("TRI");
  CHECK_FALSE(check_compose_images(tri, names(tri, {"a"}), names(tri, {"e"})).has_value());
  for (std::uint64_t s = 0; s < 8; ++s) {
    for (std::uint64_t t = 0; t < 8; ++t) {
      CHECK_FALSE(check_compose_images(tri, ResourceSet::from_mask(3, s), ResourceSet::from_mask(3, t)).has_value());
    }
  }
}

TEST_CASE("order preservation into a value chain") {
  const ResourceTheory tri = builtin_theory("TRI");
  const FinitePreorder source = resource_order(tri);
  const FinitePreorder chain = value_order(test::ext({0, 1, 2}));
  CHECK(is_order_preserving(MapBetweenCarriers{3, {2, 1, 0}}, source, chain));
  const auto violation = order_violation(MapBetweenCarriers{3, {0, 1, 0}}, source, chain);
  REQUIRE(violation.has_value());
  CHECK(*violation == std::pair<ResourceId, ResourceId>{0, 1});
}

TEST_CASE("the kernel of the down-closure map identifies {e} with {e,a}") {
  const ResourceTheory tri = builtin_theory("TRI");
  const auto ctx = OrderedResources::from_theory(tri);
  const MapBetweenCarriers f = down_map(ctx);
  const FinitePreorder by_inclusion = powerset_preorder(ctx, SubsetOrderKind::reverse_inclusion);
  const Partition k = kernel(f, by_inclusion);
  CHECK(k.class_of[0b001] == k.class_of[0b011]);
  CHECK(k.class_of[0b001] != k.class_of[0b010]);
  CHECK(first_isomorphism_check(f, powerset_preorder(ctx, SubsetOrderKind::enhancement), by_inclusion));
}

TEST_CASE("the first isomorphism check refuses maps that are not order-preserving") {
  const ResourceTheory tri = builtin_theory("TRI");
  const FinitePreorder source = resource_order(tri);
  const FinitePreorder chain = value_order(test::ext({0, 1}));
  CHECK_THROWS_AS(first_isomorphism_check(MapBetweenCarriers{2, {0, 1, 0}}, source, chain), Error);
}

TEST_CASE("removing arrows on the counterexample order") {
  const auto ctx = counterexample_order();
  CHECK_FALSE(removing_arrows_check(ctx.preorder(), ResourceSet(4, {3}), ResourceSet(4, {0})).has_value());
  for (std::uint64_t s = 0; s < 16; ++s) {
    for (std::uint64_t t = 0; t < 16; ++t) {
      CHECK_FALSE(
          removing_arrows_check(ctx.preorder(), ResourceSet::from_mask(4, s), ResourceSet::from_mask(4, t)).has_value());
    }
  }
}

TEST_CASE("closed-set enumeration") {
  const auto ctx = counterexample_order();
  // Each chain r1 ≽ r2 contributes the down-sets {}, {r2}, {r1,r2}.
  CHECK(enumerate_downward_closed(ctx).size() == 9);
  CHECK(enumerate_upward_closed(ctx).size() == 9);
  const auto tri = OrderedResources::from_theory(builtin_theory("TRI"));
  for (const ResourceSet& s : enumerate_downward_closed(tri)) CHECK(is_downward_closed(tri, s));
}

TEST_CASE("closures of the empty and full sets") {
  const auto tri = OrderedResources::from_theory(builtin_theory("TRI"));
  CHECK(up_closure(tri, ResourceSet(3)).empty());
  CHECK(is_downward_closed(tri, ResourceSet::full(3)));
  CHECK(is_upward_closed(tri, ResourceSet(3)));
}

}  // TEST_SUITE
