// Seeded property checks. Each property draws its cases from a fixed seed so
// a failure message's seed reproduces the case.

#include "fixtures.hpp"

#include "restheory/convex.hpp"
#include "restheory/dist.hpp"
#include "restheory/inform.hpp"
#include "restheory/oracle.hpp"
#include "restheory/translate.hpp"

#include <doctest.h>

#include <algorithm>

using namespace restheory;

namespace {

constexpr std::uint64_t kSeed = 20241015;

// A theory, its order context and a generator positioned after the draw.
struct Sample {
  std::shared_ptr<const ResourceTheory> theory;
  OrderedResources ctx;
  Rng rng;
};

Sample draw(std::uint64_t index, std::size_t max_carrier) {
  Rng rng(kSeed + index);
  auto theory = std::make_shared<const ResourceTheory>(random_theory(rng.next(), max_carrier));
  auto ctx = OrderedResources::from_theory(theory);
  return Sample{theory, ctx, rng};
}

PartialValuation any_valuation(Sample& s, bool monotone) {
  static const DomainMode modes[] = {DomainMode::full, DomainMode::random_subset, DomainMode::downward_closed,
                                     DomainMode::upward_closed};
  return random_valuation(s.ctx, s.rng.next(), monotone, modes[s.rng.below(4)]);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("generated theories satisfy the axioms and agree with the order oracle") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Sample s = draw(i, 8);
    CAPTURE(i);
    REQUIRE(validate(*s.theory).ok());
    CHECK(oracle::axioms_hold(*s.theory));
    const oracle::Relation rel = oracle::resource_order(*s.theory);
    for (ResourceId a = 0; a < s.ctx.size(); ++a) {
      for (ResourceId b = 0; b < s.ctx.size(); ++b) CHECK(s.ctx.preorder().geq(a, b) == rel[a][b]);
    }
  }
}

TEST_CASE("closures are closure operators and down-sets are exactly free images") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Sample s = draw(i, 5);
    CAPTURE(i);
    const std::size_t n = s.ctx.size();
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<ResourceSet> images;
    for (std::uint64_t m = 0; m < subsets; ++m) {
      const ResourceSet a = ResourceSet::from_mask(n, m);
      const ResourceSet down = down_closure(s.ctx, a);
      const ResourceSet up = up_closure(s.ctx, a);
      CHECK(a.is_subset_of(down));
      CHECK(a.is_subset_of(up));
      CHECK(down_closure(s.ctx, down) == down);
      CHECK(up_closure(s.ctx, up) == up);
      CHECK(down == free_image(*s.theory, a));
      images.push_back(down);
      for (std::uint64_t k = 0; k < subsets; ++k) {
        const ResourceSet b = ResourceSet::from_mask(n, k);
        if (b.is_subset_of(a)) {
          CHECK(down_closure(s.ctx, b).is_subset_of(down));
          CHECK(up_closure(s.ctx, b).is_subset_of(up));
        }
        if (enh_order(s.ctx, a, b)) CHECK(down_closure(s.ctx, b).is_subset_of(down));
        if (deg_order(s.ctx, a, b)) CHECK(up.is_subset_of(up_closure(s.ctx, b)));
      }
    }
    const auto closed = enumerate_downward_closed(s.ctx);
    std::sort(images.begin(), images.end(),
              [](const ResourceSet& x, const ResourceSet& y) { return lex_less(x, y); });
    images.erase(std::unique(images.begin(), images.end()), images.end());
    CHECK(images.size() == closed.size());
    for (const ResourceSet& x : closed) {
      CHECK(std::find(images.begin(), images.end(), x) != images.end());
      for (const ResourceSet& y : closed) {
        CHECK(is_downward_closed(s.ctx, x | y));
        CHECK(is_downward_closed(s.ctx, x & y));
      }
    }
  }
}

TEST_CASE("yield and cost are monotone and match the oracle for every downward-closed D") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Sample s = draw(i, 8);
    CAPTURE(i);
    const PartialValuation fw = any_valuation(s, s.rng.chance(1, 2));
    const ResourceSet d = random_downward_closed(s.ctx, s.rng);
    const MonotoneFn y = yield(s.ctx, fw, d);
    const MonotoneFn c = cost(s.ctx, fw, d);
    CHECK(y.verified());
    CHECK(c.verified());
    for (ResourceId r = 0; r < s.ctx.size(); ++r) {
      CHECK(y.values[r] == oracle::yield(*s.theory, fw, d, r));
      CHECK(c.values[r] == oracle::cost(*s.theory, fw, d, r));
    }
  }
}

TEST_CASE("U-image maps preserve the enhancement order and U-preimage maps the degradation order") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Sample s = draw(i, 6);
    CAPTURE(i);
    const std::size_t n = s.ctx.size();
    const ResourceSet u = random_subset(n, s.rng);
    for (int trial = 0; trial < 20; ++trial) {
      const ResourceSet a = random_subset(n, s.rng);
      const ResourceSet b = random_subset(n, s.rng);
      if (enh_order(s.ctx, a, b)) {
        CHECK(enh_order(s.ctx, d_image(*s.theory, u, a), d_image(*s.theory, u, b)));
      }
      if (deg_order(s.ctx, a, b)) {
        CHECK(deg_order(s.ctx, d_preimage(*s.theory, u, a), d_preimage(*s.theory, u, b)));
      }
    }
  }
}

TEST_CASE("the image of an order-preserving partial function is enhancement-isotone on up-closed domains") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Sample s = draw(i, 6);
    CAPTURE(i);
    const PartialValuation fw = random_valuation(s.ctx, s.rng.next(), true, DomainMode::upward_closed);
    const std::size_t n = s.ctx.size();
    for (int trial = 0; trial < 20; ++trial) {
      const ResourceSet a = random_subset(n, s.rng);
      const ResourceSet b = random_subset(n, s.rng);
      if (enh_order(s.ctx, a, b)) CHECK(f_max(fw, a) >= f_max(fw, b));
    }
  }
}

TEST_CASE("pull-backs through augmentation are monotone") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Sample s = draw(i, 8);
    CAPTURE(i);
    const MediatingMap f = aug_map(s.theory, random_subset(s.ctx.size(), s.rng) | s.theory->neutral());
    const PartialValuation root = random_valuation(s.ctx, s.rng.next(), true, DomainMode::full);
    CHECK(pull_back(f, root, Extremum::max).verified());
  }
}

TEST_CASE("informativeness is a preorder") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    Sample s = draw(i, 6);
    CAPTURE(i);
    std::vector<PartialValuation> family;
    for (int k = 0; k < 6; ++k) family.push_back(any_valuation(s, false));
    const FinitePreorder& pre = s.ctx.preorder();
    for (const auto& f : family) {
      CHECK(more_informative(f, f, pre, InformMode::partial));
      for (const auto& g : family) {
        for (const auto& h : family) {
          if (more_informative(f, g, pre, InformMode::partial) && more_informative(g, h, pre, InformMode::partial)) {
            CHECK(more_informative(f, h, pre, InformMode::partial));
          }
        }
      }
    }
  }
}

TEST_CASE("equal-domain monotones obey the forward implications") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Sample s = draw(i, 8);
    CAPTURE(i);
    PartialValuation f = random_valuation(s.ctx, s.rng.next(), true, DomainMode::random_subset);
    PartialValuation g = random_valuation(s.ctx, s.rng.next(), true, DomainMode::random_subset);
    g.domain = f.domain;
    const ResourceSet d = down_closure(s.ctx, random_subset(s.ctx.size(), s.rng) | s.theory->neutral());
    const InformReport report = prop_informative_yield_cost_check(f, g, d, s.ctx);
    CHECK(report.forward_yield);
    CHECK(report.forward_cost);
  }
}

TEST_CASE("tuple theories over deterministic bases validate and contract") {
  std::size_t built = 0;
  for (std::uint64_t i = 0; built < 40 && i < 400; ++i) {
    Sample s = draw(i, 4);
    if (!s.theory->is_deterministic()) continue;
    CAPTURE(i);
    ++built;
    const DeterministicTheory base(s.theory);
    for (std::size_t k : {2, 3}) {
      const TupleTheory tt = build_k_dist(base, k, false);
      CHECK(validate(tt.theory()).ok());
      CHECK(is_k_contraction(difference_indicator(tt), tt));
      const TupleTheory cons = build_k_dist(base, k, true);
      CHECK(validate(cons.theory()).ok());
    }
  }
  CHECK(built == 40);
}

TEST_CASE("convex alignment stays in the unit interval and contracts") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const ConvexTheory ct = random_convex(kSeed + i);
    CAPTURE(i);
    CHECK(cva_contraction_check(ct));
    for (auto kind : {ConvexMonotoneKind::weight, ConvexMonotoneKind::robustness, ConvexMonotoneKind::free_robustness,
                      ConvexMonotoneKind::non_convexity}) {
      const MonotoneFn m = convex_monotone(ct, kind);
      CHECK(m.verified());
      for (ResourceId r = 0; r < ct.size(); ++r) {
        CHECK(m.values[r] >= ExtRational(0));
        CHECK(m.values[r] <= ExtRational(1));
        if (ct.theory().free().contains(r)) CHECK(m.values[r] == ExtRational(0));
      }
    }
  }
}

}  // TEST_SUITE
