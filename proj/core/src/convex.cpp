#include "restheory/convex.hpp"

#include "restheory/errors.hpp"

#include <map>

namespace restheory {

ConvexTheory::ConvexTheory(TheoryPtr theory, std::vector<RationalVector> points)
    : det_(std::move(theory)), points_(std::move(points)) {
  if (points_.size() != det_.size()) throw Error(ErrorKind::BadParameters, "one point per resource is required");
  dimension_ = points_.empty() ? 0 : points_.front().size();
  for (ResourceId r = 0; r < points_.size(); ++r) {
    if (points_[r].size() != dimension_) {
      throw Error(ErrorKind::DimensionMismatch, "point of " + det_.theory().name(r) + " has dimension " +
                                                    std::to_string(points_[r].size()));
    }
  }
}

ExtRational cva(const RationalVector& r, const RationalVector& s, const RationalVector& t) {
  if (r.size() != s.size() || s.size() != t.size()) throw Error(ErrorKind::DimensionMismatch, "cva arguments");
  // r - t = λ (s - t)
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Rational d = s[i] - t[i];
    if (d != 0) {
      lambda = Rational((r[i] - t[i]) / d);
      break;
    }
  }
  if (!lambda) {
    return r == t ? ExtRational(0) : ExtRational(1);
  }
  if (*lambda < 0 || *lambda > 1) return ExtRational(1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] - t[i] != *lambda * (s[i] - t[i])) return ExtRational(1);
  }
  return ExtRational(*lambda);
}

ExtRational cva(const ConvexTheory& ct, ResourceId r, ResourceId s, ResourceId t) {
  return cva(ct.point(r), ct.point(s), ct.point(t));
}

namespace {

// Exact decomposition λ when r = λs + (1-λ)t has a solution in [0,1].
std::optional<Rational> decomposition(const ConvexTheory& ct, ResourceId r, ResourceId s, ResourceId t) {
  const ExtRational l = cva(ct, r, s, t);
  if (l < ExtRational(1)) return l.value();
  if (ct.point(r) == ct.point(s)) return Rational(1);
  return std::nullopt;
}

// cva over all triples, row-major (r, s, t).
std::vector<ExtRational> cva_table(const ConvexTheory& ct) {
  const std::size_t n = ct.size();
  std::vector<ExtRational> table(n * n * n);
  for (ResourceId r = 0; r < n; ++r) {
    for (ResourceId s = 0; s < n; ++s) {
      for (ResourceId t = 0; t < n; ++t) table[(r * n + s) * n + t] = cva(ct, r, s, t);
    }
  }
  return table;
}

std::vector<ExtRational> cva_infimum(const ConvexTheory& ct, std::size_t axis, const std::array<ResourceSet, 3>& w) {
  const std::size_t n = ct.size();
  std::vector<ExtRational> values(n, ExtRational::pos_inf());
  for (ResourceId r = 0; r < n; ++r) {
    if (!w[0].contains(r)) continue;
    for (ResourceId s = 0; s < n; ++s) {
      if (!w[1].contains(s)) continue;
      for (ResourceId t = 0; t < n; ++t) {
        if (!w[2].contains(t)) continue;
        const ResourceId x = axis == 1 ? r : (axis == 2 ? s : t);
        ExtRational v = cva(ct, r, s, t);
        if (v < values[x]) values[x] = std::move(v);
      }
    }
  }
  return values;
}

std::array<ResourceSet, 3> named_windows(const ConvexTheory& ct, ConvexMonotoneKind kind, std::size_t& axis) {
  const ResourceSet all = ct.theory().full_set();
  const ResourceSet& free = ct.theory().free();
  switch (kind) {
    case ConvexMonotoneKind::weight: axis = 1; return {all, all, free};
    case ConvexMonotoneKind::robustness: axis = 3; return {free, all, all};
    case ConvexMonotoneKind::free_robustness: axis = 3; return {free, free, all};
    case ConvexMonotoneKind::non_convexity: axis = 1; return {all, free, free};
  }
  axis = 1;
  return {all, all, all};
}

ExtRational named_value(const ConvexTheory& ct, ConvexMonotoneKind kind, ResourceId x) {
  std::size_t axis = 1;
  auto w = named_windows(ct, kind, axis);
  w[axis - 1] = ResourceSet::singleton(ct.size(), x);
  return cva_infimum(ct, axis, w)[x];
}

}  // namespace

ValidationReport validate(const ConvexTheory& ct, const ValidationOptions& options) {
  ValidationReport report = validate(ct.theory(), options);
  const std::size_t n = ct.size();
  bool found = false;
  for (ResourceId r = 0; r < n; ++r) {
    for (ResourceId s = 0; s < n; ++s) {
      for (ResourceId t = 0; t < n; ++t) {
        const auto lambda = decomposition(ct, r, s, t);
        if (!lambda) continue;
        for (ResourceId u = 0; u < n; ++u) {
          const RationalVector& ru = ct.point(ct.combine(r, u));
          const RationalVector& su = ct.point(ct.combine(s, u));
          const RationalVector& tu = ct.point(ct.combine(t, u));
          bool ok = true;
          for (std::size_t i = 0; i < ct.dimension() && ok; ++i) {
            ok = ru[i] == *lambda * su[i] + (1 - *lambda) * tu[i];
          }
          if (!ok && (options.all_witnesses || !found)) {
            report.violations.push_back({axiom::bilinearity, {r, s, t, u}});
            found = true;
          }
        }
      }
    }
  }
  return report;
}

std::optional<std::array<ResourceId, 4>> cva_contraction_violation(const ConvexTheory& ct) {
  const std::size_t n = ct.size();
  const std::vector<ExtRational> table = cva_table(ct);
  const auto at = [&](ResourceId r, ResourceId s, ResourceId t) -> const ExtRational& {
    return table[(r * n + s) * n + t];
  };
  for (ResourceId r = 0; r < n; ++r) {
    for (ResourceId s = 0; s < n; ++s) {
      for (ResourceId t = 0; t < n; ++t) {
        for (ResourceId u = 0; u < n; ++u) {
          if (at(r, s, t) < at(ct.combine(r, u), ct.combine(s, u), ct.combine(t, u))) {
            return std::array<ResourceId, 4>{r, s, t, u};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool cva_contraction_check(const ConvexTheory& ct) { return !cva_contraction_violation(ct); }

std::string to_string(ConvexMonotoneKind kind) {
  switch (kind) {
    case ConvexMonotoneKind::weight: return "weight";
    case ConvexMonotoneKind::robustness: return "robustness";
    case ConvexMonotoneKind::free_robustness: return "free-robustness";
    case ConvexMonotoneKind::non_convexity: return "non-convexity";
  }
  return "";
}

std::optional<ConvexMonotoneKind> parse_convex_monotone_kind(const std::string& text) {
  for (auto kind : {ConvexMonotoneKind::weight, ConvexMonotoneKind::robustness, ConvexMonotoneKind::free_robustness,
                    ConvexMonotoneKind::non_convexity}) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

ExtRational weight(const ConvexTheory& ct, ResourceId r) { return named_value(ct, ConvexMonotoneKind::weight, r); }
ExtRational robustness(const ConvexTheory& ct, ResourceId t) {
  return named_value(ct, ConvexMonotoneKind::robustness, t);
}
ExtRational free_robustness(const ConvexTheory& ct, ResourceId t) {
  return named_value(ct, ConvexMonotoneKind::free_robustness, t);
}
ExtRational non_convexity(const ConvexTheory& ct, ResourceId r) {
  return named_value(ct, ConvexMonotoneKind::non_convexity, r);
}

MonotoneFn convex_monotone(const ConvexTheory& ct, ConvexMonotoneKind kind) {
  std::size_t axis = 1;
  const auto w = named_windows(ct, kind, axis);
  MonotoneFn m = cva_monotone(ct, axis, w[0], w[1], w[2]);
  m.provenance.params["kind"] = to_string(kind);
  return m;
}

MonotoneFn cva_monotone(const ConvexTheory& ct, std::size_t axis, const ResourceSet& s1, const ResourceSet& s2,
                        const ResourceSet& s3) {
  if (axis < 1 || axis > 3) throw Error(ErrorKind::BadParameters, "axis must be 1, 2 or 3");
  const std::array<ResourceSet, 3> w{s1, s2, s3};
  for (const auto& s : w) {
    if (s.universe() != ct.size()) throw Error(ErrorKind::BadParameters, "window lives on another carrier");
  }
  if (!w[axis - 1].is_full()) {
    throw Error(ErrorKind::AxisWindowMismatch, "window " + std::to_string(axis) + " must be the whole carrier");
  }
  const OrderedResources ctx = OrderedResources::from_theory(ct.ptr());
  for (std::size_t j = 0; j < 3; ++j) {
    if (auto esc = downward_escape(ctx, w[j])) {
      throw Error(ErrorKind::SNotDownwardClosed,
                  "window " + std::to_string(j + 1) + " misses " + ct.theory().name(*esc));
    }
  }
  MonotoneFn m;
  m.values = cva_infimum(ct, axis, w);
  m.provenance.construction = "convex";
  m.provenance.params["axis"] = axis;
  auto windows = nlohmann::ordered_json::array();
  for (const auto& s : w) windows.push_back(names_json(ct.theory().names(), s));
  m.provenance.params["windows"] = windows;
  self_check(m, ctx.preorder());
  return m;
}

std::vector<ConstructionClass> classify_constructions(const ConvexTheory& ct) {
  const ResourceSet all = ct.theory().full_set();
  const ResourceSet& free = ct.theory().free();
  const std::map<std::pair<std::size_t, std::array<bool, 3>>, ConvexMonotoneKind> named{
      {{1, {false, false, true}}, ConvexMonotoneKind::weight},
      {{3, {true, false, false}}, ConvexMonotoneKind::robustness},
      {{3, {true, true, false}}, ConvexMonotoneKind::free_robustness},
      {{1, {false, true, true}}, ConvexMonotoneKind::non_convexity},
  };
  std::vector<ConstructionClass> out;
  for (std::size_t axis = 1; axis <= 3; ++axis) {
    for (int choice = 0; choice < 4; ++choice) {
      std::array<bool, 3> is_free{false, false, false};
      std::size_t slot = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j + 1 == axis) continue;
        is_free[j] = ((choice >> (1 - slot)) & 1) != 0;
        ++slot;
      }
      ConstructionClass c;
      c.axis = axis;
      std::array<ResourceSet, 3> w;
      for (std::size_t j = 0; j < 3; ++j) {
        w[j] = is_free[j] ? free : all;
        c.windows[j] = is_free[j] ? "free" : "R";
      }
      c.monotone = cva_monotone(ct, axis, w[0], w[1], w[2]);
      c.constant = std::all_of(c.monotone.values.begin(), c.monotone.values.end(),
                               [&](const ExtRational& v) { return v == c.monotone.values.front(); });
      if (auto it = named.find({axis, is_free}); it != named.end()) c.named = it->second;
      out.push_back(std::move(c));
    }
  }
  return out;
}

bool free_is_convex(const ConvexTheory& ct) {
  const ResourceSet& free = ct.theory().free();
  for (ResourceId r = 0; r < ct.size(); ++r) {
    if (free.contains(r)) continue;
    for (ResourceId s : free.members()) {
      for (ResourceId t : free.members()) {
        if (decomposition(ct, r, s, t)) return false;
      }
    }
  }
  return true;
}

}  // namespace restheory
