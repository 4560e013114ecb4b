#include "restheory/translate.hpp"

#include "restheory/errors.hpp"

namespace restheory {

std::string_view to_string(SubsetOrderKind kind) {
  switch (kind) {
    case SubsetOrderKind::enhancement: return "enh";
    case SubsetOrderKind::degradation: return "deg";
    case SubsetOrderKind::inclusion: return "incl";
    case SubsetOrderKind::reverse_inclusion: return "revincl";
  }
  return "";
}

std::optional<SubsetOrderKind> parse_subset_order_kind(std::string_view text) {
  if (text == "enh" || text == "enhancement") return SubsetOrderKind::enhancement;
  if (text == "deg" || text == "degradation") return SubsetOrderKind::degradation;
  if (text == "incl" || text == "inclusion") return SubsetOrderKind::inclusion;
  if (text == "revincl" || text == "reverse-inclusion") return SubsetOrderKind::reverse_inclusion;
  return std::nullopt;
}

std::string_view to_string(Extremum mode) { return mode == Extremum::max ? "max" : "min"; }

bool enh_order(const OrderedResources& ctx, const ResourceSet& s, const ResourceSet& t) {
  if (t.empty()) return true;
  return down_closure(ctx, t).is_subset_of(down_closure(ctx, s));
}

bool deg_order(const OrderedResources& ctx, const ResourceSet& s, const ResourceSet& t) {
  if (s.empty()) return true;
  return up_closure(ctx, s).is_subset_of(up_closure(ctx, t));
}

bool subset_geq(const OrderedResources& ctx, SubsetOrderKind kind, const ResourceSet& s, const ResourceSet& t) {
  switch (kind) {
    case SubsetOrderKind::enhancement: return enh_order(ctx, s, t);
    case SubsetOrderKind::degradation: return deg_order(ctx, s, t);
    case SubsetOrderKind::inclusion: return s.is_subset_of(t);
    case SubsetOrderKind::reverse_inclusion: return t.is_subset_of(s);
  }
  return false;
}

std::string subset_label(const std::vector<std::string>& labels, const ResourceSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](ResourceId r) {
    out += (first ? "" : ",") + labels[r];
    first = false;
  });
  return out + "}";
}

FinitePreorder powerset_preorder(const OrderedResources& ctx, SubsetOrderKind kind, std::size_t cap) {
  const std::size_t n = ctx.size();
  if (n >= 63 || (std::size_t{1} << n) > cap) {
    throw Error(ErrorKind::CarrierTooLarge, "powerset of " + std::to_string(n) + " resources exceeds the cap");
  }
  const std::size_t m = std::size_t{1} << n;
  std::vector<ResourceSet> subsets;
  std::vector<std::string> labels;
  subsets.reserve(m);
  for (std::size_t mask = 0; mask < m; ++mask) {
    subsets.push_back(ResourceSet::from_mask(n, mask));
    labels.push_back(subset_label(ctx.labels(), subsets.back()));
  }
  // Closures are computed once so each pair test is a subset test.
  std::vector<ResourceSet> down(m);
  std::vector<ResourceSet> up(m);
  for (std::size_t i = 0; i < m; ++i) {
    down[i] = down_closure(ctx, subsets[i]);
    up[i] = up_closure(ctx, subsets[i]);
  }
  std::vector<ResourceSet> rows(m, ResourceSet(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      bool geq = false;
      switch (kind) {
        case SubsetOrderKind::enhancement: geq = subsets[j].empty() || down[j].is_subset_of(down[i]); break;
        case SubsetOrderKind::degradation: geq = subsets[i].empty() || up[i].is_subset_of(up[j]); break;
        case SubsetOrderKind::inclusion: geq = subsets[i].is_subset_of(subsets[j]); break;
        case SubsetOrderKind::reverse_inclusion: geq = subsets[j].is_subset_of(subsets[i]); break;
      }
      if (geq) rows[i].insert(static_cast<ResourceId>(j));
    }
  }
  return FinitePreorder(std::move(labels), std::move(rows));
}

FinitePreorder value_order(const std::vector<ExtRational>& values) {
  const std::size_t n = values.size();
  std::vector<std::string> labels;
  std::vector<ResourceSet> rows(n, ResourceSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(values[i].str());
    for (std::size_t j = 0; j < n; ++j) {
      if (values[j] <= values[i]) rows[i].insert(static_cast<ResourceId>(j));
    }
  }
  return FinitePreorder(std::move(labels), std::move(rows));
}

ResourceSet MediatingMap::apply(const ResourceSet& s) const {
  ResourceSet out(target->size());
  s.for_each([&](ResourceId r) { out |= image[r]; });
  return out;
}

namespace {

void require_preserving(const MediatingMap& f, const char* what) {
  if (auto v = mediating_violation(f)) {
    throw Error(ErrorKind::NotOrderPreserving,
                std::string(what) + " at (" + f.source->name(v->first) + ", " + f.source->name(v->second) + ")");
  }
}

}  // namespace

MediatingMap copy_map(TheoryPtr theory, unsigned n) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "copy_map needs n >= 1");
  MediatingMap f{theory, theory, {}, SubsetOrderKind::enhancement, std::nullopt};
  const std::size_t size = theory->size();
  for (ResourceId r = 0; r < size; ++r) {
    const ResourceSet single = ResourceSet::singleton(size, r);
    ResourceSet power = single;
    for (unsigned i = 1; i < n; ++i) power = combine_sets(*theory, power, single);
    f.image.push_back(std::move(power));
  }
  require_preserving(f, "copy map");
  return f;
}

MediatingMap aug_map(TheoryPtr theory, const ResourceSet& c) {
  MediatingMap f{theory, theory, {}, SubsetOrderKind::enhancement, std::nullopt};
  for (ResourceId r = 0; r < theory->size(); ++r) f.image.push_back(d_image(*theory, c, r));
  require_preserving(f, "augmentation map");
  return f;
}

std::string EnhCertificate::route() const {
  if (primary()) return "primary";
  if (variant0()) return "star-morphism-0";
  if (variant1()) return "star-morphism-1";
  return "";
}

EnhCertificate check_enh_mediating(const MediatingMap& f) {
  const ResourceTheory& r = *f.source;
  const ResourceTheory& q = *f.target;
  const std::size_t n = r.size();
  EnhCertificate cert;
  for (ResourceId x = 0; x < n && !cert.primary_failure; ++x) {
    const ResourceSet lhs = f.apply(free_image(r, ResourceSet::singleton(n, x)));
    if (!lhs.is_subset_of(free_image(q, f.image[x]))) cert.primary_failure = x;
  }
  for (ResourceId x = 0; x < n; ++x) {
    for (ResourceId y = x; y < n; ++y) {
      const ResourceSet lhs = f.apply(r.combine(x, y));
      const ResourceSet rhs = combine_sets(q, f.image[x], f.image[y]);
      if (!cert.star0_failure && lhs != rhs) cert.star0_failure = OrderPair{x, y};
      if (!cert.star1_failure && !lhs.is_subset_of(rhs)) cert.star1_failure = OrderPair{x, y};
    }
  }
  const ResourceSet free_of_neutral = free_image(q, f.apply(r.neutral()));
  r.free().for_each([&](ResourceId x) {
    if (!cert.free0_failure && !f.image[x].is_subset_of(free_of_neutral)) cert.free0_failure = x;
    if (!cert.free1_failure && !f.image[x].is_subset_of(q.free())) cert.free1_failure = x;
  });
  return cert;
}

DegCertificate check_deg_mediating(const MediatingMap& f, const std::vector<ResourceId>& g) {
  const ResourceTheory& r = *f.source;
  const ResourceTheory& q = *f.target;
  if (g.size() != q.size()) throw Error(ErrorKind::BadParameters, "G must be total on the target carrier");
  DegCertificate cert;
  for (ResourceId x = 0; x < r.size() && !cert.preimage_failure; ++x) {
    ResourceSet pre(q.size());
    for (ResourceId p = 0; p < q.size(); ++p) {
      if (g[p] == x) pre.insert(p);
    }
    if (pre != f.image[x]) cert.preimage_failure = x;
  }
  const auto image_of = [&](const ResourceSet& s) {
    ResourceSet out(r.size());
    s.for_each([&](ResourceId p) { out.insert(g[p]); });
    return out;
  };
  for (ResourceId p = 0; p < q.size() && !cert.star_failure; ++p) {
    for (ResourceId s = p; s < q.size(); ++s) {
      if (!r.combine(g[p], g[s]).is_subset_of(image_of(q.combine(p, s)))) {
        cert.star_failure = OrderPair{p, s};
        break;
      }
    }
  }
  cert.free_failure = r.free().first_not_in(image_of(q.free()));
  return cert;
}

std::optional<OrderPair> mediating_violation(const MediatingMap& f, const OrderedResources& source,
                                             const OrderedResources& target) {
  for (ResourceId a = 0; a < source.size(); ++a) {
    std::optional<ResourceId> bad;
    source.down(a).for_each([&](ResourceId b) {
      if (!bad && !subset_geq(target, f.kind, f.image[a], f.image[b])) bad = b;
    });
    if (bad) return OrderPair{a, *bad};
  }
  return std::nullopt;
}

std::optional<OrderPair> mediating_violation(const MediatingMap& f) {
  return mediating_violation(f, OrderedResources::from_theory(f.source), OrderedResources::from_theory(f.target));
}

MediatingMap restrict_map(const MediatingMap& f, const ResourceSet& window) {
  const OrderedResources target = OrderedResources::from_theory(f.target);
  std::optional<ResourceId> escape;
  if (f.kind == SubsetOrderKind::enhancement) {
    escape = upward_escape(target, window);
  } else if (f.kind == SubsetOrderKind::degradation) {
    escape = downward_escape(target, window);
  }
  if (escape) {
    throw Error(ErrorKind::WindowClosureMismatch,
                "window is not " + std::string(f.kind == SubsetOrderKind::enhancement ? "upward" : "downward") +
                    " closed; it misses " + f.target->name(*escape));
  }
  MediatingMap out = f;
  out.preimage_of.reset();
  for (auto& img : out.image) img &= window;
  return out;
}

MonotoneFn pull_back(const MediatingMap& f, const PartialValuation& root, Extremum mode,
                     const PullbackOptions& options) {
  if (root.carrier_size() != f.target->size()) {
    throw Error(ErrorKind::BadParameters, "root valuation lives on a different carrier");
  }
  const bool max = mode == Extremum::max;
  const SubsetOrderKind closure_kind = max ? SubsetOrderKind::enhancement : SubsetOrderKind::degradation;
  const SubsetOrderKind inclusion_kind = max ? SubsetOrderKind::reverse_inclusion : SubsetOrderKind::inclusion;
  if (f.kind != closure_kind && f.kind != inclusion_kind) {
    throw Error(ErrorKind::BadParameters, "mode " + std::string(to_string(mode)) + " does not pair with kind " +
                                              std::string(to_string(f.kind)));
  }
  const OrderedResources source = OrderedResources::from_theory(f.source);
  const OrderedResources target = OrderedResources::from_theory(f.target);

  std::string route;
  if (f.kind == closure_kind) {
    if (max) {
      route = check_enh_mediating(f).route();
    } else if (f.preimage_of && check_deg_mediating(f, *f.preimage_of).certified()) {
      route = "degradation-lemma";
    }
  }
  if (route.empty() && !mediating_violation(f, source, target)) route = "direct";
  if (route.empty()) {
    if (!options.force) {
      throw Error(ErrorKind::UncertifiedMediatingMap, "no sufficient condition holds and the direct check fails");
    }
    route = "forced";
  }
  if (f.kind == closure_kind && !options.force) {
    const auto escape = max ? upward_escape(target, root.domain) : downward_escape(target, root.domain);
    if (escape) {
      throw Error(ErrorKind::ClosureMismatch, "root domain is not " + std::string(max ? "upward" : "downward") +
                                                  " closed; it misses " + f.target->name(*escape));
    }
    if (auto v = domain_monotonicity_violation(root, target.preorder())) {
      throw Error(ErrorKind::ClosureMismatch, "root is not monotone on its domain at (" +
                                                  f.target->name(v->first) + ", " + f.target->name(v->second) + ")");
    }
  }

  MonotoneFn m;
  for (ResourceId r = 0; r < f.source->size(); ++r) {
    m.values.push_back(max ? f_max(root, f.image[r]) : f_min(root, f.image[r]));
  }
  m.provenance.construction = "pullback";
  m.provenance.params["mode"] = std::string(to_string(mode));
  m.provenance.params["kind"] = std::string(to_string(f.kind));
  m.provenance.params["certified_by"] = route;
  m.provenance.params["W"] = names_json(f.target->names(), root.domain);
  self_check(m, source.preorder(), !options.force);
  return m;
}

}  // namespace restheory
