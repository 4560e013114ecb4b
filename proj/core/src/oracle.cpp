#include "restheory/oracle.hpp"

#include "restheory/errors.hpp"

#include <functional>

namespace restheory::oracle {

namespace {

std::vector<ResourceId> members(const ResourceSet& s) { return s.members(); }

std::vector<bool> combine_elements(const ResourceTheory& theory, const std::vector<bool>& a,
                                   const std::vector<bool>& b) {
  std::vector<bool> out(theory.size(), false);
  for (ResourceId x = 0; x < theory.size(); ++x) {
    if (!a[x]) continue;
    for (ResourceId y = 0; y < theory.size(); ++y) {
      if (!b[y]) continue;
      for (auto z : members(theory.combine(x, y))) out[z] = true;
    }
  }
  return out;
}

std::vector<bool> point(std::size_t n, ResourceId r) {
  std::vector<bool> v(n, false);
  v[r] = true;
  return v;
}

std::vector<bool> as_bits(const ResourceSet& s) {
  std::vector<bool> v(s.universe(), false);
  for (auto r : members(s)) v[r] = true;
  return v;
}

// Calls visit on every function from `from` to `to` until visit returns true.
bool any_function(const std::vector<ResourceId>& from, const std::vector<ResourceId>& to,
                  const std::function<bool(const std::vector<ResourceId>&)>& visit) {
  if (from.empty()) return visit({});
  if (to.empty()) return false;
  std::vector<std::size_t> digits(from.size(), 0);
  std::vector<ResourceId> image(from.size());
  while (true) {
    for (std::size_t i = 0; i < from.size(); ++i) image[i] = to[digits[i]];
    if (visit(image)) return true;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == to.size()) digits[i++] = 0;
    if (i == digits.size()) return false;
  }
}

}  // namespace

Relation resource_order(const ResourceTheory& theory) {
  const std::size_t n = theory.size();
  Relation rel(n, std::vector<bool>(n, false));
  for (ResourceId a = 0; a < n; ++a) {
    for (ResourceId f = 0; f < n; ++f) {
      if (!theory.free().contains(f)) continue;
      for (auto b : members(theory.combine(f, a))) rel[a][b] = true;
    }
  }
  return rel;
}

bool set_order(const ResourceTheory& theory, const ResourceSet& s, const ResourceSet& t) {
  const auto reach = combine_elements(theory, as_bits(theory.free()), as_bits(s));
  for (auto x : members(t)) {
    if (!reach[x]) return false;
  }
  return true;
}

bool enhancement_function_exists(const Relation& order, const ResourceSet& s, const ResourceSet& t) {
  const auto from = members(t);
  return any_function(from, members(s), [&](const std::vector<ResourceId>& e) {
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (!order[e[i]][from[i]]) return false;
    }
    return true;
  });
}

bool degradation_function_exists(const Relation& order, const ResourceSet& s, const ResourceSet& t) {
  const auto from = members(s);
  return any_function(from, members(t), [&](const std::vector<ResourceId>& d) {
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (!order[from[i]][d[i]]) return false;
    }
    return true;
  });
}

bool associativity_fails(const ResourceTheory& theory, ResourceId r, ResourceId s, ResourceId t) {
  const std::size_t n = theory.size();
  const auto left = combine_elements(theory, combine_elements(theory, point(n, r), point(n, s)), point(n, t));
  const auto right = combine_elements(theory, point(n, r), combine_elements(theory, point(n, s), point(n, t)));
  return left != right;
}

bool axioms_hold(const ResourceTheory& theory) {
  const std::size_t n = theory.size();
  for (ResourceId r = 0; r < n; ++r) {
    for (ResourceId s = 0; s < n; ++s) {
      for (ResourceId t = 0; t < n; ++t) {
        if (associativity_fails(theory, r, s, t)) return false;
      }
    }
  }
  const auto neutral = as_bits(theory.neutral());
  const auto free = as_bits(theory.free());
  bool any_neutral = false;
  bool any_free = false;
  for (ResourceId r = 0; r < n; ++r) {
    any_neutral = any_neutral || neutral[r];
    any_free = any_free || free[r];
    if (neutral[r] && !free[r]) return false;
    if (combine_elements(theory, neutral, point(n, r)) != point(n, r)) return false;
  }
  if (!any_neutral || !any_free) return false;
  const auto ff = combine_elements(theory, free, free);
  for (ResourceId r = 0; r < n; ++r) {
    if (ff[r] && !free[r]) return false;
  }
  return true;
}

bool is_monotone(const std::vector<ExtRational>& values, const Relation& order) {
  for (std::size_t a = 0; a < values.size(); ++a) {
    for (std::size_t b = 0; b < values.size(); ++b) {
      if (order[a][b] && values[a] < values[b]) return false;
    }
  }
  return true;
}

ExtRational yield(const ResourceTheory& theory, const PartialValuation& fw, const ResourceSet& d, ResourceId r) {
  ExtRational best = ExtRational::neg_inf();
  for (auto x : members(d)) {
    for (auto w : members(theory.combine(x, r))) {
      if (fw.defined(w) && fw.at(w) > best) best = fw.at(w);
    }
  }
  return best;
}

ExtRational cost(const ResourceTheory& theory, const PartialValuation& fw, const ResourceSet& d, ResourceId r) {
  ExtRational best = ExtRational::pos_inf();
  for (ResourceId w = 0; w < theory.size(); ++w) {
    if (!fw.defined(w)) continue;
    for (auto x : members(d)) {
      if (theory.combine(x, w).contains(r) && fw.at(w) < best) best = fw.at(w);
    }
  }
  return best;
}

bool tuple_geq(const TupleTheory& tt, ResourceId t, ResourceId u) {
  const auto& base = tt.base();
  const auto tv = tt.decode(t);
  const auto uv = tt.decode(u);
  for (ResourceId g = 0; g < base.size(); ++g) {
    if (tt.constrained() && !base.theory().free().contains(g)) continue;
    bool all = true;
    for (std::size_t i = 0; i < tv.size() && all; ++i) all = base.theory().combine(g, tv[i]).contains(uv[i]);
    if (all) return true;
  }
  return false;
}

ExtRational cva_by_search(const std::vector<Rational>& r, const std::vector<Rational>& s,
                          const std::vector<Rational>& t, unsigned max_den) {
  if (r.size() != s.size() || r.size() != t.size()) throw Error(ErrorKind::DimensionMismatch, "cva oracle");
  std::optional<Rational> best;
  for (unsigned q = 1; q <= max_den; ++q) {
    for (unsigned p = 0; p <= q; ++p) {
      const Rational lambda(p, q);
      bool ok = true;
      for (std::size_t i = 0; i < r.size() && ok; ++i) ok = r[i] == lambda * s[i] + (1 - lambda) * t[i];
      if (ok && (!best || lambda < *best)) best = lambda;
    }
  }
  return best ? ExtRational(*best) : ExtRational(1);
}

std::vector<Relation> all_preorders(std::size_t n) {
  if (n > 4) throw Error(ErrorKind::CarrierTooLarge, "preorder enumeration needs n <= 4");
  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) offdiag.emplace_back(a, b);
    }
  }
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << offdiag.size()); ++mask) {
    Relation rel(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) rel[a][a] = true;
    for (std::size_t i = 0; i < offdiag.size(); ++i) {
      if ((mask >> i) & 1U) rel[offdiag[i].first][offdiag[i].second] = true;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a) {
      for (std::size_t b = 0; b < n && transitive; ++b) {
        for (std::size_t c = 0; c < n && transitive; ++c) {
          if (rel[a][b] && rel[b][c] && !rel[a][c]) transitive = false;
        }
      }
    }
    if (transitive) out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace restheory::oracle
