#include "fixtures.hpp"

#include "restheory/errors.hpp"
#include "restheory/inform.hpp"
#include "restheory/monotone.hpp"
#include "restheory/oracle.hpp"

#include <doctest.h>

using namespace restheory;
using restheory::test::ext;
using restheory::test::names;

namespace {

// f(a) = 1, f(b) = 5 on W = {a, b}.
PartialValuation tri_valuation(const ResourceTheory& tri) {
  return PartialValuation::on(names(tri, {"a", "b"}), ext({0, 1, 5}));
}

std::vector<ExtRational> constant(std::size_t n, const ExtRational& v) { return std::vector<ExtRational>(n, v); }

}  // namespace

TEST_SUITE("monotones") {

TEST_CASE("f_max and f_min over the domain intersection") {
  const ResourceTheory tri = builtin_theory("TRI");
  const PartialValuation fw = tri_valuation(tri);
  CHECK(f_max(fw, names(tri, {"e", "a"})) == ExtRational(1));
  CHECK(f_max(fw, tri.full_set()) == ExtRational(5));
  CHECK(f_max(fw, tri.empty_set()) == ExtRational::neg_inf());
  CHECK(f_min(fw, names(tri, {"e"})) == ExtRational::pos_inf());
  CHECK(f_min(fw, tri.full_set()) == ExtRational(1));
}

TEST_CASE("yield and cost on TRI") {
  const ResourceTheory tri = builtin_theory("TRI");
  const auto ctx = OrderedResources::from_theory(tri);
  const MonotoneFn y = yield(ctx, tri_valuation(tri));
  const MonotoneFn c = cost(ctx, tri_valuation(tri));
  CHECK(y.values == ext({1, 1, 5}));
  CHECK(c.values == std::vector<ExtRational>{ExtRational::pos_inf(), 1, 5});
  CHECK(y.verified());
  CHECK(c.verified());
  CHECK(y.provenance.construction == "yield");
}

TEST_CASE("yield and cost of the non-monotone counterexample are constant") {
  const CounterexampleInstance ce = builtin_counterexample();
  const auto ctx = OrderedResources::from_preorder(ce.order);
  CHECK(yield(ctx, ce.valuation).values == constant(4, 1));
  CHECK(cost(ctx, ce.valuation).values == constant(4, 0));
}

TEST_CASE("an empty domain gives the infinite constants") {
  const ResourceTheory tri = builtin_theory("TRI");
  const auto ctx = OrderedResources::from_theory(tri);
  const PartialValuation empty = PartialValuation::on(tri.empty_set(), ext({0, 0, 0}));
  CHECK(yield(ctx, empty).values == constant(3, ExtRational::neg_inf()));
  CHECK(cost(ctx, empty).values == constant(3, ExtRational::pos_inf()));
}

TEST_CASE("yield and cost with an explicit downward-closed D match the oracle") {
  const ResourceTheory tri = builtin_theory("TRI");
  const auto ctx = OrderedResources::from_theory(tri);
  const PartialValuation fw = tri_valuation(tri);
  for (const ResourceSet& d : enumerate_downward_closed(ctx)) {
    const MonotoneFn y = yield(ctx, fw, d);
    const MonotoneFn c = cost(ctx, fw, d);
    for (ResourceId r = 0; r < tri.size(); ++r) {
      CHECK(y.values[r] == oracle::yield(tri, fw, d, r));
      CHECK(c.values[r] == oracle::cost(tri, fw, d, r));
    }
  }
}

TEST_CASE("a D that is not downward closed is rejected") {
  const ResourceTheory tri = builtin_theory("TRI");
  const auto ctx = OrderedResources::from_theory(tri);
  CHECK_THROWS_AS(yield(ctx, tri_valuation(tri), names(tri, {"e"})), Error);
}

TEST_CASE("yield, f and cost coincide on the domain of a monotone") {
  const ResourceTheory tri = builtin_theory("TRI");
  const auto ctx = OrderedResources::from_theory(tri);
  const PartialValuation fw = PartialValuation::on(names(tri, {"e", "a"}), ext({2, 1, 0}));
  CHECK(extension_coincidence_check(ctx, fw));
  const PartialValuation bad = PartialValuation::on(names(tri, {"e", "a"}), ext({1, 2, 0}));
  CHECK_THROWS_AS(extension_coincidence_check(ctx, bad), Error);
}

TEST_CASE("the counterexample valuation is not monotone") {
  const CounterexampleInstance ce = builtin_counterexample();
  CHECK_FALSE(is_monotone(ce.valuation.values, ce.order));
  CHECK(monotonicity_violation(ce.valuation.values, ce.order) == OrderPair{0, 1});
  CHECK(is_monotone(ext({1, 0, 1, 0}), ce.order));
}

TEST_CASE("domain monotonicity ignores pairs outside the domain") {
  const ResourceTheory tri = builtin_theory("TRI");
  const FinitePreorder order = resource_order(tri);
  const PartialValuation fw = PartialValuation::on(names(tri, {"a", "b"}), ext({-7, 1, 5}));
  CHECK_FALSE(domain_monotonicity_violation(fw, order).has_value());
}

}  // TEST_SUITE
