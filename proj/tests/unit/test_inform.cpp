#include "fixtures.hpp"

#include "restheory/errors.hpp"
#include "restheory/inform.hpp"
#include "restheory/translate.hpp"

#include <doctest.h>

using namespace restheory;
using restheory::test::ext;

namespace {

constexpr ResourceId r1 = 0, r2 = 1, s1 = 2, s2 = 3;

std::vector<OrderPair> sorted(std::vector<OrderPair> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("inform") {

TEST_CASE("interesting pairs of total valuations") {
  const CounterexampleInstance ce = builtin_counterexample();
  CHECK(interesting_pairs(ext({2, 2, 2, 2}), ce.order).empty());
  const std::vector<OrderPair> expected = {{r1, r2}, {r1, s2}, {s1, r2}, {s1, s2}};
  CHECK(sorted(interesting_pairs(ce.valuation.values, ce.order).pairs()) == expected);

  const FinitePreorder chain = value_order(ext({1, 0}));
  CHECK(interesting_pairs(ext({5, 3}), chain).pairs() == std::vector<OrderPair>{{1, 0}});
}

TEST_CASE("interesting pairs of partial valuations skip convertible pairs") {
  const CounterexampleInstance ce = builtin_counterexample();
  const std::vector<OrderPair> expected = {{r1, s2}, {s1, r2}};
  CHECK(sorted(interesting_pairs_partial(ce.valuation, ce.order).pairs()) == expected);
  CHECK(sorted(ce.expected_pairs) == expected);
  CHECK(interesting_pairs_partial(PartialValuation::on(ResourceSet(4), ce.valuation.values), ce.order).empty());
}

TEST_CASE("the two interesting relations coincide on monotones") {
  const CounterexampleInstance ce = builtin_counterexample();
  for (const auto& values : enumerate_monotones(ce.order, 3)) {
    CHECK(interesting_pairs(values, ce.order) == interesting_pairs_partial(PartialValuation::total(values), ce.order));
  }
}

TEST_CASE("informativeness is reflexive and tops out at the counterexample") {
  const CounterexampleInstance ce = builtin_counterexample();
  const PartialValuation constant = PartialValuation::total(ext({7, 7, 7, 7}));
  CHECK(more_informative(ce.valuation, ce.valuation, ce.order, InformMode::partial));
  CHECK(more_informative(ce.valuation, constant, ce.order, InformMode::partial));
  const auto monotones = enumerate_monotones(ce.order, 4);
  CHECK(monotones.size() == 100);
  for (const auto& values : monotones) {
    CHECK_FALSE(more_informative(PartialValuation::total(values), ce.valuation, ce.order, InformMode::partial));
  }
}

TEST_CASE("the monotone characterization of informativeness") {
  const CounterexampleInstance ce = builtin_counterexample();
  const auto monotones = enumerate_monotones(ce.order, 3);
  for (const auto& f : monotones) {
    for (const auto& g : monotones) {
      bool by_order = true;
      for (ResourceId a = 0; a < 4; ++a) {
        for (ResourceId b = 0; b < 4; ++b) {
          if (f[a] >= f[b] && !(g[a] >= g[b])) by_order = false;
        }
      }
      CHECK(more_informative(PartialValuation::total(f), PartialValuation::total(g), ce.order, InformMode::monotone) ==
            by_order);
    }
  }
}

TEST_CASE("yield and cost of the counterexample are least informative") {
  const CounterexampleInstance ce = builtin_counterexample();
  const auto ctx = OrderedResources::from_preorder(ce.order);
  const InformReport self = prop_informative_yield_cost_check(ce.valuation, ce.valuation, std::nullopt, ctx);
  CHECK(self.premise);
  CHECK(self.holds());
  for (const RelationCheck& rel : self.relations) CHECK_MESSAGE(rel.holds, rel.name);
  CHECK(ce.expected_yield == ExtRational(1));
  CHECK(ce.expected_cost == ExtRational(0));
}

TEST_CASE("equal-domain monotones satisfy both biconditionals") {
  const ResourceTheory tri = builtin_theory("TRI");
  const auto ctx = OrderedResources::from_theory(tri);
  const InformReport report = prop_informative_yield_cost_check(
      PartialValuation::total(ext({2, 1, 0})), PartialValuation::total(ext({1, 1, 0})), tri.free(), ctx);
  CHECK(report.premise);
  CHECK(report.biconditional_checked);
  CHECK(report.holds());
}

TEST_CASE("the forward implication fails when the domains differ") {
  // With W' ⊊ W, sup over an empty window is -inf for g but not for f.
  const ResourceTheory um1 = builtin_theory("UM1");
  const auto ctx = OrderedResources::from_theory(um1);
  const PartialValuation f = PartialValuation::on(um1.full_set(), ext({5, 0}));
  const PartialValuation g = PartialValuation::on(um1.set_of({"{x}"}), ext({0, 0}));
  const InformReport report = prop_informative_yield_cost_check(f, g, um1.free(), ctx);
  CHECK(report.premise);
  CHECK_FALSE(report.forward_yield);
  CHECK_FALSE(report.holds());
}

TEST_CASE("chains admit a most informative valuation") {
  const FinitePreorder chain = value_order(ext({0, 1, 2}));
  const auto ctx = OrderedResources::from_preorder(chain);
  CHECK(chain_most_informative_check(ctx, ResourceSet::full(3), 50, 7));
  CHECK(chain_most_informative_check(ctx, ResourceSet(3, {1}), 50, 7));
  CHECK(rank_valuation(chain, ResourceSet::full(3)).values == ext({0, 1, 2}));

  const auto ce = OrderedResources::from_preorder(builtin_counterexample().order);
  CHECK_THROWS_AS(chain_most_informative_check(ce, ResourceSet(4, {r1, s1})), Error);
}

}  // TEST_SUITE
