#include "restheory/monotone.hpp"

#include "restheory/errors.hpp"

namespace restheory {

PartialValuation PartialValuation::total(std::vector<ExtRational> values) {
  const std::size_t n = values.size();
  return PartialValuation{ResourceSet::full(n), std::move(values)};
}

PartialValuation PartialValuation::on(ResourceSet domain, std::vector<ExtRational> values) {
  if (domain.universe() != values.size()) throw Error(ErrorKind::BadParameters, "valuation size mismatch");
  return PartialValuation{std::move(domain), std::move(values)};
}

ExtRational f_max(const PartialValuation& fw, const ResourceSet& s) {
  ExtRational best = ExtRational::neg_inf();
  (s & fw.domain).for_each([&](ResourceId r) {
    if (best < fw.at(r)) best = fw.at(r);
  });
  return best;
}

ExtRational f_min(const PartialValuation& fw, const ResourceSet& s) {
  ExtRational best = ExtRational::pos_inf();
  (s & fw.domain).for_each([&](ResourceId r) {
    if (fw.at(r) < best) best = fw.at(r);
  });
  return best;
}

std::optional<OrderPair> monotonicity_violation(const std::vector<ExtRational>& values, const FinitePreorder& pre) {
  for (ResourceId a = 0; a < pre.size(); ++a) {
    std::optional<ResourceId> bad;
    pre.down(a).for_each([&](ResourceId b) {
      if (!bad && values[a] < values[b]) bad = b;
    });
    if (bad) return OrderPair{a, *bad};
  }
  return std::nullopt;
}

bool is_monotone(const std::vector<ExtRational>& values, const FinitePreorder& pre) {
  return !monotonicity_violation(values, pre);
}

std::optional<OrderPair> domain_monotonicity_violation(const PartialValuation& fw, const FinitePreorder& pre) {
  for (ResourceId a = 0; a < pre.size(); ++a) {
    if (!fw.defined(a)) continue;
    std::optional<ResourceId> bad;
    (pre.down(a) & fw.domain).for_each([&](ResourceId b) {
      if (!bad && fw.at(a) < fw.at(b)) bad = b;
    });
    if (bad) return OrderPair{a, *bad};
  }
  return std::nullopt;
}

void self_check(MonotoneFn& m, const FinitePreorder& pre, bool require) {
  m.checked = true;
  m.violation = monotonicity_violation(m.values, pre);
  if (require && m.violation) {
    throw Error(ErrorKind::NotOrderPreserving, m.provenance.construction + " output fails at (" +
                                                   pre.label(m.violation->first) + ", " +
                                                   pre.label(m.violation->second) + ")");
  }
}

nlohmann::ordered_json names_json(const std::vector<std::string>& labels, const ResourceSet& s) {
  auto out = nlohmann::ordered_json::array();
  s.for_each([&](ResourceId r) { out.push_back(labels[r]); });
  return out;
}

namespace {

enum class Side { Yield, Cost };

MonotoneFn construct(const OrderedResources& ctx, const PartialValuation& fw, const std::optional<ResourceSet>& d,
                     Side side) {
  const std::size_t n = ctx.size();
  if (fw.carrier_size() != n) throw Error(ErrorKind::BadParameters, "valuation carrier differs from context");
  const char* name = side == Side::Yield ? "yield" : "cost";
  // The cached principal down/up sets serve whenever D is the free set.
  const bool use_order = !d || (ctx.theory() && *d == ctx.theory()->free());
  if (d) {
    if (d->universe() != n) throw Error(ErrorKind::BadParameters, "D carrier differs from context");
    if (!use_order) ctx.require_theory("a D-image map with D other than the free set");
    if (auto esc = downward_escape(ctx, *d)) {
      throw Error(ErrorKind::DNotDownwardClosed, "D misses " + ctx.labels()[*esc]);
    }
  }
  MonotoneFn m;
  m.values.reserve(n);
  for (ResourceId r = 0; r < n; ++r) {
    if (side == Side::Yield) {
      m.values.push_back(f_max(fw, use_order ? ctx.down(r) : d_image(*ctx.theory(), *d, r)));
    } else {
      m.values.push_back(f_min(fw, use_order ? ctx.up(r) : d_preimage(*ctx.theory(), *d, r)));
    }
  }
  m.provenance.construction = name;
  m.provenance.params["D"] = d ? names_json(ctx.labels(), *d) : nlohmann::ordered_json("free");
  m.provenance.params["W"] = names_json(ctx.labels(), fw.domain);
  self_check(m, ctx.preorder());
  return m;
}

}  // namespace

MonotoneFn yield(const OrderedResources& ctx, const PartialValuation& fw) {
  return construct(ctx, fw, std::nullopt, Side::Yield);
}

MonotoneFn cost(const OrderedResources& ctx, const PartialValuation& fw) {
  return construct(ctx, fw, std::nullopt, Side::Cost);
}

MonotoneFn yield(const OrderedResources& ctx, const PartialValuation& fw, const ResourceSet& d) {
  return construct(ctx, fw, d, Side::Yield);
}

MonotoneFn cost(const OrderedResources& ctx, const PartialValuation& fw, const ResourceSet& d) {
  return construct(ctx, fw, d, Side::Cost);
}

bool extension_coincidence_check(const OrderedResources& ctx, const PartialValuation& fw) {
  if (auto v = domain_monotonicity_violation(fw, ctx.preorder())) {
    throw Error(ErrorKind::FNotMonotoneOnDomain,
                "at (" + ctx.labels()[v->first] + ", " + ctx.labels()[v->second] + ")");
  }
  const MonotoneFn y = yield(ctx, fw);
  const MonotoneFn c = cost(ctx, fw);
  bool same = true;
  fw.domain.for_each([&](ResourceId r) {
    if (!(y.values[r] == fw.at(r) && c.values[r] == fw.at(r))) same = false;
  });
  return same;
}

}  // namespace restheory
