#include "restheory/dist.hpp"

#include "restheory/errors.hpp"

#include <algorithm>

namespace restheory {

DeterministicTheory::DeterministicTheory(TheoryPtr theory) : theory_(std::move(theory)) {
  const std::size_t n = theory_->size();
  table_.resize(n * n);
  for (ResourceId r = 0; r < n; ++r) {
    for (ResourceId s = 0; s < n; ++s) {
      const ResourceSet c = theory_->combine(r, s);
      if (c.count() != 1) {
        throw Error(ErrorKind::BaseNotDeterministic,
                    theory_->name(r) + " * " + theory_->name(s) + " has " + std::to_string(c.count()) + " elements");
      }
      table_[r * n + s] = c.members().front();
    }
  }
}

DeterministicTheory::DeterministicTheory(const ResourceTheory& theory)
    : DeterministicTheory(std::make_shared<const ResourceTheory>(theory)) {}

std::string tuple_label(const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ";" : "") + names[i];
  return out + ")";
}

ResourceId TupleTheory::encode(const std::vector<ResourceId>& components) const {
  std::size_t code = 0;
  for (ResourceId c : components) code = code * base_.size() + c;
  return static_cast<ResourceId>(code);
}

std::vector<ResourceId> TupleTheory::decode(ResourceId tuple) const {
  std::vector<ResourceId> out(k_);
  std::size_t code = tuple;
  for (std::size_t i = k_; i-- > 0;) {
    out[i] = static_cast<ResourceId>(code % base_.size());
    code /= base_.size();
  }
  return out;
}

ResourceId TupleTheory::component(ResourceId tuple, std::size_t axis) const { return decode(tuple)[axis]; }

ResourceId TupleTheory::constant(ResourceId r) const { return encode(std::vector<ResourceId>(k_, r)); }

TupleTheory build_k_dist(const DeterministicTheory& base, std::size_t k, bool constrained, std::size_t cap) {
  if (k < 2) throw Error(ErrorKind::BadParameters, "k-distinguishability needs k >= 2");
  const std::size_t n = base.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > cap / std::max<std::size_t>(n, 1)) {
      throw Error(ErrorKind::CarrierTooLarge, std::to_string(n) + "^" + std::to_string(k) + " exceeds the cap");
    }
    total *= n;
  }
  if (total > cap) throw Error(ErrorKind::CarrierTooLarge, "tuple carrier exceeds the cap");
  const ValidationReport report = validate(base.theory());
  if (!report.ok()) throw Error(ErrorKind::AxiomViolation, "base theory violates " + report.violations.front().axiom);

  std::vector<std::string> names;
  names.reserve(total);
  std::vector<std::string> parts(k);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = k; i-- > 0;) {
      parts[i] = base.theory().name(static_cast<ResourceId>(c % n));
      c /= n;
    }
    names.push_back(tuple_label(parts));
  }
  const auto constant_code = [&](ResourceId r) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < k; ++i) code = code * n + r;
    return static_cast<ResourceId>(code);
  };
  ResourceSet free(total);
  ResourceSet neutral(total);
  for (ResourceId r = 0; r < n; ++r) {
    if (!constrained || base.theory().free().contains(r)) free.insert(constant_code(r));
    if (base.theory().neutral().contains(r)) neutral.insert(constant_code(r));
  }
  std::vector<TheoryPtr> factors(k, base.ptr());
  auto theory = std::make_shared<const ResourceTheory>(
      ResourceTheory::product(std::move(factors), std::move(names), std::move(free), std::move(neutral)));
  return TupleTheory(base, k, constrained, std::move(theory));
}

namespace {

PartialValuation indicator(const TupleTheory& tt, bool when_equal) {
  std::vector<ExtRational> values;
  values.reserve(tt.size());
  for (ResourceId t = 0; t < tt.size(); ++t) {
    const auto parts = tt.decode(t);
    const bool equal = std::all_of(parts.begin(), parts.end(), [&](ResourceId c) { return c == parts.front(); });
    values.emplace_back(equal == when_equal ? 1 : 0);
  }
  return PartialValuation::total(std::move(values));
}

bool same_base(const DeterministicTheory& a, const DeterministicTheory& b) {
  return a.ptr() == b.ptr() || (a.theory().names() == b.theory().names() && a.theory().free() == b.theory().free());
}

void check_certificate_base(const DeterministicTheory& base, const ContractionCertificate& f) {
  if (!same_base(base, f.tuples().base())) {
    throw Error(ErrorKind::UncertifiedInput, "contraction certificate belongs to a different base");
  }
}

void finish(MonotoneFn& m, const DeterministicTheory& base, bool forced) {
  const FinitePreorder order = resource_order(base.theory());
  self_check(m, order, false);
  if (m.violation) {
    throw Error(forced ? ErrorKind::UncertifiedInput : ErrorKind::NotOrderPreserving,
                m.provenance.construction + " output fails at (" + base.theory().name(m.violation->first) + ", " +
                    base.theory().name(m.violation->second) + ")");
  }
}

}  // namespace

PartialValuation difference_indicator(const TupleTheory& tt) { return indicator(tt, false); }
PartialValuation equality_indicator(const TupleTheory& tt) { return indicator(tt, true); }

std::optional<OrderPair> contraction_violation(const PartialValuation& f, const TupleTheory& tt) {
  if (tt.constrained()) throw Error(ErrorKind::BadParameters, "contractions are defined on the unconstrained theory");
  if (f.carrier_size() != tt.size() || !f.is_total()) {
    throw Error(ErrorKind::BadParameters, "a contraction must be total on the tuple carrier");
  }
  return monotonicity_violation(f.values, resource_order(tt.theory()));
}

bool is_k_contraction(const PartialValuation& f, const TupleTheory& tt) { return !contraction_violation(f, tt); }

std::optional<OrderPair> commuting_violation(const DeterministicTheory& base, const std::vector<ResourceId>& phi) {
  if (phi.size() != base.size()) throw Error(ErrorKind::BadParameters, "map must be total on the carrier");
  for (ResourceId t : base.theory().free().members()) {
    for (ResourceId r = 0; r < base.size(); ++r) {
      if (phi[base.combine(t, r)] != base.combine(t, phi[r])) return OrderPair{t, r};
    }
  }
  return std::nullopt;
}

bool commuting_map_check(const DeterministicTheory& base, const std::vector<ResourceId>& phi) {
  return !commuting_violation(base, phi);
}

std::optional<ContractionCertificate> ContractionCertificate::certify(PartialValuation f, const TupleTheory& tt) {
  if (contraction_violation(f, tt)) return std::nullopt;
  return ContractionCertificate(std::move(f), tt, false);
}

ContractionCertificate ContractionCertificate::force(PartialValuation f, const TupleTheory& tt) {
  if (f.carrier_size() != tt.size()) throw Error(ErrorKind::BadParameters, "valuation carrier differs from tuples");
  return ContractionCertificate(std::move(f), tt, true);
}

std::optional<CommutingCertificate> CommutingCertificate::certify(std::vector<ResourceId> phi,
                                                                  const DeterministicTheory& base) {
  if (commuting_violation(base, phi)) return std::nullopt;
  return CommutingCertificate(std::move(phi), false);
}

CommutingCertificate CommutingCertificate::force(std::vector<ResourceId> phi, const DeterministicTheory& base) {
  if (phi.size() != base.size()) throw Error(ErrorKind::BadParameters, "map must be total on the carrier");
  return CommutingCertificate(std::move(phi), true);
}

MonotoneFn monotone_from_commuting(const DeterministicTheory& base, const ContractionCertificate& f,
                                   const CommutingCertificate& phi) {
  check_certificate_base(base, f);
  if (f.tuples().k() != 2) throw Error(ErrorKind::UncertifiedInput, "needs a 2-contraction");
  if (phi.map().size() != base.size()) throw Error(ErrorKind::UncertifiedInput, "commuting map has wrong size");
  MonotoneFn m;
  for (ResourceId r = 0; r < base.size(); ++r) {
    m.values.push_back(f.function().at(f.tuples().encode({r, phi.map()[r]})));
  }
  m.provenance.construction = "contraction";
  m.provenance.params["scheme"] = "commuting";
  auto map = nlohmann::ordered_json::object();
  for (ResourceId r = 0; r < base.size(); ++r) map[base.theory().name(r)] = base.theory().name(phi.map()[r]);
  m.provenance.params["phi"] = map;
  finish(m, base, f.forced() || phi.forced());
  return m;
}

MonotoneFn min_distinguishability(const DeterministicTheory& base, const ContractionCertificate& f,
                                  const ResourceSet& r_dc) {
  check_certificate_base(base, f);
  if (f.tuples().k() != 2) throw Error(ErrorKind::UncertifiedInput, "needs a 2-contraction");
  const OrderedResources ctx = OrderedResources::from_theory(base.ptr());
  if (auto esc = downward_escape(ctx, r_dc)) {
    throw Error(ErrorKind::DNotDownwardClosed, "R_dc misses " + base.theory().name(*esc));
  }
  MonotoneFn m;
  for (ResourceId r = 0; r < base.size(); ++r) {
    ExtRational best = ExtRational::pos_inf();
    r_dc.for_each([&](ResourceId s) {
      const ExtRational& v = f.function().at(f.tuples().encode({r, s}));
      if (v < best) best = v;
    });
    m.values.push_back(best);
  }
  m.provenance.construction = "contraction";
  m.provenance.params["scheme"] = "min-distinguishability";
  m.provenance.params["R_dc"] = names_json(base.theory().names(), r_dc);
  finish(m, base, f.forced());
  return m;
}

MonotoneFn contraction_monotone(const DeterministicTheory& base, const ContractionCertificate& f, std::size_t axis,
                                const ResourceSet& w_dc) {
  check_certificate_base(base, f);
  const std::size_t k = f.tuples().k();
  if (axis >= k) throw Error(ErrorKind::BadParameters, "axis outside 1.." + std::to_string(k));
  const TupleTheory constrained = build_k_dist(base, k, true);
  if (w_dc.universe() != constrained.size()) throw Error(ErrorKind::BadParameters, "W_dc lives on another carrier");
  const OrderedResources ctx = OrderedResources::from_theory(constrained.ptr());
  if (auto esc = downward_escape(ctx, w_dc)) {
    throw Error(ErrorKind::WdcNotDownwardClosed, "W_dc misses " + constrained.theory().name(*esc));
  }
  MonotoneFn m;
  m.values.assign(base.size(), ExtRational::pos_inf());
  w_dc.for_each([&](ResourceId t) {
    const ResourceId r = constrained.component(t, axis);
    const ExtRational& v = f.function().at(t);
    if (v < m.values[r]) m.values[r] = v;
  });
  m.provenance.construction = "contraction";
  m.provenance.params["scheme"] = "k-contraction";
  m.provenance.params["k"] = k;
  m.provenance.params["axis"] = axis + 1;
  m.provenance.params["W_dc"] = names_json(constrained.theory().names(), w_dc);
  finish(m, base, f.forced());
  return m;
}

ResourceSet product_set(const TupleTheory& tt, const std::vector<ResourceSet>& factors) {
  if (factors.size() != tt.k()) throw Error(ErrorKind::BadParameters, "need one factor per component");
  ResourceSet out(tt.size());
  for (ResourceId t = 0; t < tt.size(); ++t) {
    const auto parts = tt.decode(t);
    bool inside = true;
    for (std::size_t i = 0; i < parts.size() && inside; ++i) inside = factors[i].contains(parts[i]);
    if (inside) out.insert(t);
  }
  return out;
}

std::optional<std::vector<ResourceSet>> product_factors(const TupleTheory& tt, const ResourceSet& set) {
  std::vector<ResourceSet> factors(tt.k(), ResourceSet(tt.base().size()));
  set.for_each([&](ResourceId t) {
    const auto parts = tt.decode(t);
    for (std::size_t i = 0; i < parts.size(); ++i) factors[i].insert(parts[i]);
  });
  if (product_set(tt, factors) != set) return std::nullopt;
  return factors;
}

ProductClosureReport product_dc_check(const DeterministicTheory& base, const std::vector<ResourceSet>& factors) {
  const TupleTheory tt = build_k_dist(base, factors.size(), true);
  const OrderedResources base_ctx = OrderedResources::from_theory(base.ptr());
  const OrderedResources tuple_ctx = OrderedResources::from_theory(tt.ptr());
  const ResourceSet product = product_set(tt, factors);
  ProductClosureReport report;
  report.dc_premise = std::all_of(factors.begin(), factors.end(),
                                  [&](const ResourceSet& s) { return is_downward_closed(base_ctx, s); });
  report.uc_premise = std::all_of(factors.begin(), factors.end(),
                                  [&](const ResourceSet& s) { return is_upward_closed(base_ctx, s); });
  report.dc_conclusion = is_downward_closed(tuple_ctx, product);
  report.uc_conclusion = is_upward_closed(tuple_ctx, product);
  return report;
}

std::vector<ResourceId> projection(const TupleTheory& tt, std::size_t axis) {
  if (axis >= tt.k()) throw Error(ErrorKind::BadParameters, "axis outside the tuple");
  std::vector<ResourceId> g(tt.size());
  for (ResourceId t = 0; t < tt.size(); ++t) g[t] = tt.component(t, axis);
  return g;
}

MediatingMap tuple_embedding(const TupleTheory& tt, std::size_t axis, SubsetOrderKind kind) {
  const std::vector<ResourceId> g = projection(tt, axis);
  MediatingMap f{tt.base().ptr(), tt.ptr(), std::vector<ResourceSet>(tt.base().size(), ResourceSet(tt.size())), kind,
                 g};
  for (ResourceId t = 0; t < tt.size(); ++t) f.image[g[t]].insert(t);
  return f;
}

}  // namespace restheory
