#include "fixtures.hpp"

#include "restheory/dist.hpp"
#include "restheory/errors.hpp"
#include "restheory/oracle.hpp"

#include <doctest.h>

using namespace restheory;
using restheory::test::ext;
using restheory::test::names;

namespace {

// Ground {x}: index 0 is {}, index 1 is {x}.
constexpr ResourceId kEmpty = 0;
constexpr ResourceId kX = 1;

ResourceSet um1_dc(const TupleTheory& tt, std::initializer_list<std::vector<ResourceId>> tuples) {
  ResourceSet out(tt.size());
  for (const auto& t : tuples) out.insert(tt.encode(t));
  return out;
}

}  // namespace

TEST_SUITE("dist") {

TEST_CASE("two-distinguishability over UM1") {
  const DeterministicTheory base(builtin_theory("UM1"));
  const TupleTheory tt = build_k_dist(base, 2, false);
  CHECK(tt.size() == 4);
  CHECK(tt.theory().free() == um1_dc(tt, {{kEmpty, kEmpty}, {kX, kX}}));
  CHECK(validate(tt.theory()).ok());
  CHECK(tt.theory().name(tt.encode({kEmpty, kX})) == "({};{x})");

  const TupleTheory cons = build_k_dist(base, 2, true);
  CHECK(cons.theory().free() == um1_dc(cons, {{kEmpty, kEmpty}}));

  const FinitePreorder order = resource_order(tt.theory());
  CHECK(order.geq(tt.encode({kEmpty, kX}), tt.encode({kX, kX})));
  CHECK_FALSE(order.geq(tt.encode({kX, kX}), tt.encode({kEmpty, kX})));
}

TEST_CASE("tuple order matches the componentwise oracle") {
  for (const char* name : {"TRI", "UM1"}) {
    const DeterministicTheory base(builtin_theory(name));
    for (bool constrained : {false, true}) {
      for (std::size_t k : {2, 3}) {
        const TupleTheory tt = build_k_dist(base, k, constrained);
        const FinitePreorder order = resource_order(tt.theory());
        for (ResourceId t = 0; t < tt.size(); ++t) {
          for (ResourceId u = 0; u < tt.size(); ++u) CHECK(order.geq(t, u) == oracle::tuple_geq(tt, t, u));
        }
      }
    }
  }
}

TEST_CASE("tuple construction preconditions") {
  CHECK_THROWS_AS(DeterministicTheory(builtin_theory("P5")), Error);
  const DeterministicTheory base(builtin_theory("TRI"));
  CHECK_THROWS_AS(build_k_dist(base, 3, false, 26), Error);
  CHECK_THROWS_AS(build_k_dist(base, 1, false), Error);
}

TEST_CASE("the difference indicator is a contraction and the equality indicator is not") {
  const TupleTheory tt = build_k_dist(DeterministicTheory(builtin_theory("UM1")), 2, false);
  CHECK(is_k_contraction(difference_indicator(tt), tt));
  const auto witness = contraction_violation(equality_indicator(tt), tt);
  REQUIRE(witness.has_value());
  CHECK(*witness == OrderPair{tt.encode({kEmpty, kX}), tt.encode({kX, kX})});
  CHECK(is_k_contraction(PartialValuation::total(std::vector<ExtRational>(4, 3)), tt));
}

TEST_CASE("commuting maps") {
  const ResourceTheory um1 = builtin_theory("UM1");
  const DeterministicTheory base(um1);
  CHECK(commuting_map_check(base, {kEmpty, kX}));
  CHECK(commuting_map_check(base, {kX, kX}));
  const DeterministicTheory all_free(um1.with_free(um1.full_set()));
  const auto witness = commuting_violation(all_free, {kX, kEmpty});
  REQUIRE(witness.has_value());
  CHECK(*witness == OrderPair{kX, kEmpty});
}

TEST_CASE("monotones from commuting maps") {
  const DeterministicTheory base(builtin_theory("UM1"));
  const TupleTheory tt = build_k_dist(base, 2, false);
  const auto f = ContractionCertificate::certify(difference_indicator(tt), tt);
  REQUIRE(f.has_value());
  const auto identity = CommutingCertificate::certify({kEmpty, kX}, base);
  REQUIRE(identity.has_value());
  CHECK(monotone_from_commuting(base, *f, *identity).values == ext({0, 0}));
  const auto add_x = CommutingCertificate::certify({kX, kX}, base);
  REQUIRE(add_x.has_value());
  const MonotoneFn m = monotone_from_commuting(base, *f, *add_x);
  CHECK(m.values == ext({1, 0}));
  CHECK(m.verified());
}

TEST_CASE("minimal distinguishability") {
  const DeterministicTheory um1(builtin_theory("UM1"));
  const TupleTheory tt = build_k_dist(um1, 2, false);
  const auto f = ContractionCertificate::certify(difference_indicator(tt), tt);
  REQUIRE(f.has_value());
  CHECK(min_distinguishability(um1, *f, ResourceSet(2, {kEmpty})).values == ext({0, 1}));
  CHECK(min_distinguishability(um1, *f, ResourceSet::full(2)).values == ext({0, 0}));

  const ResourceTheory tri = builtin_theory("TRI");
  const DeterministicTheory tri_base(tri);
  const TupleTheory tri_tt = build_k_dist(tri_base, 2, false);
  const auto g = ContractionCertificate::certify(difference_indicator(tri_tt), tri_tt);
  REQUIRE(g.has_value());
  const MonotoneFn m = min_distinguishability(tri_base, *g, names(tri, {"a"}));
  CHECK(m.values == ext({1, 0, 1}));
  CHECK(m.verified());
  CHECK_THROWS_AS(min_distinguishability(tri_base, *g, names(tri, {"e"})), Error);
}

TEST_CASE("contraction monotones over windows") {
  const ResourceTheory tri = builtin_theory("TRI");
  const DeterministicTheory base(tri);
  const TupleTheory tt = build_k_dist(base, 2, false);
  const TupleTheory cons = build_k_dist(base, 2, true);
  const auto f = ContractionCertificate::certify(difference_indicator(tt), tt);
  REQUIRE(f.has_value());

  const ResourceSet free_window = product_set(cons, {tri.full_set(), tri.free()});
  CHECK(contraction_monotone(base, *f, 0, free_window).values ==
        min_distinguishability(base, *f, tri.free()).values);
  CHECK(contraction_monotone(base, *f, 0, cons.theory().full_set()).values == ext({0, 0, 0}));
  CHECK(contraction_monotone(base, *f, 0, cons.theory().empty_set()).values ==
        std::vector<ExtRational>(3, ExtRational::pos_inf()));
  CHECK_THROWS_AS(contraction_monotone(base, *f, 0, ResourceSet(9, {cons.encode({0, 0})})), Error);
}

TEST_CASE("products of closed sets") {
  const ResourceTheory tri = builtin_theory("TRI");
  const DeterministicTheory base(tri);
  const ProductClosureReport report = product_dc_check(base, {names(tri, {"a"}), tri.free()});
  CHECK(report.dc_premise);
  CHECK(report.dc_conclusion);
  CHECK(report.holds());
  CHECK(product_dc_check(base, {tri.full_set(), tri.full_set()}).holds());

  const TupleTheory cons = build_k_dist(DeterministicTheory(builtin_theory("UM1")), 2, true);
  const ResourceSet constants = um1_dc(cons, {{kEmpty, kEmpty}, {kX, kX}});
  CHECK_FALSE(product_factors(cons, constants).has_value());
  CHECK(product_factors(cons, cons.theory().full_set()).has_value());
}

TEST_CASE("projection inverse is a certified degradation map on every deterministic builtin") {
  for (const char* name : {"TRI", "UM1", "CVX1"}) {
    const DeterministicTheory base(builtin_theory(name));
    for (bool constrained : {false, true}) {
      const TupleTheory tt = build_k_dist(base, 2, constrained);
      CHECK_MESSAGE(check_deg_mediating(tuple_embedding(tt, 0), projection(tt, 0)).certified(), name);
    }
  }
}

}  // TEST_SUITE
