#include "restheory/inform.hpp"

#include "restheory/errors.hpp"
#include "restheory/rng.hpp"

namespace restheory {

std::vector<OrderPair> InterestingRelation::pairs() const {
  std::vector<OrderPair> out;
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<std::uint64_t>::npos; i = bits_.find_next(i)) {
    out.emplace_back(static_cast<ResourceId>(i / n_), static_cast<ResourceId>(i % n_));
  }
  return out;
}

std::optional<OrderPair> InterestingRelation::first_missing(const InterestingRelation& other) const {
  const auto diff = other.bits_ - bits_;
  const auto i = diff.find_first();
  if (i == boost::dynamic_bitset<std::uint64_t>::npos) return std::nullopt;
  return OrderPair{static_cast<ResourceId>(i / n_), static_cast<ResourceId>(i % n_)};
}

InterestingRelation interesting_pairs(const std::vector<ExtRational>& f, const FinitePreorder& pre) {
  const std::size_t n = pre.size();
  InterestingRelation rel(n);
  for (ResourceId a = 0; a < n; ++a) {
    for (ResourceId b = 0; b < n; ++b) {
      if (f[a] < f[b]) rel.insert(a, b);
    }
  }
  return rel;
}

InterestingRelation interesting_pairs_partial(const PartialValuation& fw, const FinitePreorder& pre) {
  InterestingRelation rel(pre.size());
  fw.domain.for_each([&](ResourceId r) {
    fw.domain.for_each([&](ResourceId s) {
      if (fw.at(r) < fw.at(s) && !pre.geq(r, s)) rel.insert(r, s);
    });
  });
  return rel;
}

namespace {

InterestingRelation relation_of(const PartialValuation& f, const FinitePreorder& pre, InformMode mode) {
  if (mode == InformMode::partial) return interesting_pairs_partial(f, pre);
  if (!f.is_total()) throw Error(ErrorKind::BadParameters, "monotone-mode comparison needs total valuations");
  return interesting_pairs(f.values, pre);
}

RelationCheck compare(const std::string& name, const PartialValuation& f, const PartialValuation& g,
                      const FinitePreorder& pre, InformMode mode) {
  RelationCheck c{name, false, informativeness_gap(f, g, pre, mode)};
  c.holds = !c.witness;
  return c;
}

}  // namespace

std::optional<OrderPair> informativeness_gap(const PartialValuation& f, const PartialValuation& g,
                                             const FinitePreorder& pre, InformMode mode) {
  return relation_of(f, pre, mode).first_missing(relation_of(g, pre, mode));
}

bool more_informative(const PartialValuation& f, const PartialValuation& g, const FinitePreorder& pre,
                      InformMode mode) {
  return !informativeness_gap(f, g, pre, mode);
}

InformReport prop_informative_yield_cost_check(const PartialValuation& fw, const PartialValuation& gw,
                                               const std::optional<ResourceSet>& d, const OrderedResources& ctx) {
  const FinitePreorder& pre = ctx.preorder();
  const auto yield_of = [&](const PartialValuation& v) { return d ? yield(ctx, v, *d) : yield(ctx, v); };
  const auto cost_of = [&](const PartialValuation& v) { return d ? cost(ctx, v, *d) : cost(ctx, v); };
  const PartialValuation yf = yield_of(fw).as_valuation();
  const PartialValuation yg = yield_of(gw).as_valuation();
  const PartialValuation cf = cost_of(fw).as_valuation();
  const PartialValuation cg = cost_of(gw).as_valuation();

  InformReport report;
  report.relations.push_back(compare("f>=g", fw, gw, pre, InformMode::partial));
  report.relations.push_back(compare("g>=f", gw, fw, pre, InformMode::partial));
  report.relations.push_back(compare("yield_f>=yield_g", yf, yg, pre, InformMode::monotone));
  report.relations.push_back(compare("cost_f>=cost_g", cf, cg, pre, InformMode::monotone));
  report.premise = report.relations[0].holds;
  report.forward_yield = !report.premise || report.relations[2].holds;
  report.forward_cost = !report.premise || report.relations[3].holds;

  const bool d_is_free = !d || (ctx.theory() && *d == ctx.theory()->free());
  report.biconditional_checked = d_is_free && fw.domain == gw.domain && !domain_monotonicity_violation(fw, pre) &&
                                 !domain_monotonicity_violation(gw, pre);
  if (report.biconditional_checked) {
    report.biconditional_yield = report.premise == report.relations[2].holds;
    report.biconditional_cost = report.premise == report.relations[3].holds;
  }
  return report;
}

CounterexampleInstance builtin_counterexample() {
  // r1 → r2 and s1 → s2, nothing else.
  FinitePreorder order = FinitePreorder::from_pairs({"r1", "r2", "s1", "s2"},
                                                    {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {2, 3}});
  PartialValuation f = PartialValuation::total({0, 1, 0, 1});
  return CounterexampleInstance{std::move(order), std::move(f), {{0, 3}, {2, 1}}, ExtRational(1), ExtRational(0)};
}

std::vector<std::vector<ExtRational>> enumerate_monotones(const FinitePreorder& pre, unsigned levels) {
  const std::size_t n = pre.size();
  std::vector<std::vector<ExtRational>> out;
  std::vector<unsigned> digits(n, 0);
  std::vector<ExtRational> values(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) values[i] = ExtRational(static_cast<long long>(digits[i]));
    if (is_monotone(values, pre)) out.push_back(values);
    std::size_t i = 0;
    while (i < n && ++digits[i] == levels) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

PartialValuation rank_valuation(const FinitePreorder& pre, const ResourceSet& w) {
  std::vector<ExtRational> values(pre.size());
  w.for_each([&](ResourceId r) {
    ResourceSet strictly_below = pre.down(r) - pre.up(r);
    values[r] = ExtRational(static_cast<long long>((strictly_below & w).count()));
  });
  return PartialValuation::on(w, std::move(values));
}

bool chain_most_informative_check(const OrderedResources& ctx, const ResourceSet& w, std::size_t samples,
                                  std::uint64_t seed) {
  const FinitePreorder& pre = ctx.preorder();
  if (!pre.is_chain_on(w)) throw Error(ErrorKind::WNotAChain, "W has incomparable elements");
  const PartialValuation rank = rank_valuation(pre, w);
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<ExtRational> values(pre.size());
    w.for_each([&](ResourceId r) { values[r] = ExtRational(rng.between(-3, 3), rng.between(1, 3)); });
    if (!more_informative(rank, PartialValuation::on(w, std::move(values)), pre, InformMode::partial)) return false;
  }
  return true;
}

}  // namespace restheory
