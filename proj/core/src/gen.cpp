#include "restheory/gen.hpp"

#include "restheory/dist.hpp"
#include "restheory/errors.hpp"
#include "restheory/order.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace restheory {

namespace {

std::vector<std::string> numbered(std::size_t from, std::size_t to) {
  std::vector<std::string> out;
  for (std::size_t i = from; i <= to; ++i) out.push_back(std::to_string(i));
  return out;
}

ResourceSet random_generators(std::size_t n, std::uint64_t seed) {
  Rng rng(seed ^ 0x5EEDF2EEULL);
  ResourceSet g(n);
  for (ResourceId r = 0; r < n; ++r) {
    if (rng.chance(1, 3)) g.insert(r);
  }
  return g;
}

ResourceSet generators_for(const ResourceTheory& t, const FamilySpec& spec, std::uint64_t seed) {
  if (spec.free_generators) return t.set_of(*spec.free_generators);
  return random_generators(t.size(), seed);
}

ResourceTheory finish_free(const ResourceTheory& t, const FamilySpec& spec, std::uint64_t seed) {
  return t.with_free(free_closure(t, generators_for(t, spec, seed)));
}

ResourceTheory deterministic_table(std::vector<std::string> names,
                                   const std::function<ResourceId(ResourceId, ResourceId)>& op, ResourceId neutral) {
  const std::size_t n = names.size();
  ResourceSet z = ResourceSet::singleton(n, neutral);
  return ResourceTheory::from_function(
      std::move(names), [&](ResourceId r, ResourceId s) { return ResourceSet::singleton(n, op(r, s)); }, z, z);
}

ResourceTheory union_monoid(std::size_t ground) {
  static const char* letters = "xyzwvu";
  if (ground < 1 || ground > 6) throw Error(ErrorKind::BadParameters, "union-monoid ground size must be 1..6");
  std::vector<std::string> names;
  for (std::size_t mask = 0; mask < (std::size_t{1} << ground); ++mask) {
    std::string name = "{";
    for (std::size_t i = 0; i < ground; ++i) {
      if ((mask >> i) & 1U) name += letters[i];
    }
    names.push_back(name + "}");
  }
  return deterministic_table(std::move(names), [](ResourceId r, ResourceId s) { return r | s; }, 0);
}

ResourceTheory truncated_addition(std::size_t m) {
  if (m < 1 || m > 64) throw Error(ErrorKind::BadParameters, "truncated-addition bound must be 1..64");
  const auto top = static_cast<ResourceId>(m);
  return deterministic_table(numbered(0, m), [top](ResourceId r, ResourceId s) { return std::min(r + s, top); }, 0);
}

ResourceTheory max_semilattice(std::size_t m) {
  if (m < 1 || m > 64) throw Error(ErrorKind::BadParameters, "max-semilattice bound must be 1..64");
  return deterministic_table(numbered(0, m), [](ResourceId r, ResourceId s) { return std::max(r, s); }, 0);
}

// {0..m, inf}: sums beyond m overflow to the absorbing inf.
ResourceTheory tropical(std::size_t m) {
  if (m > 63) throw Error(ErrorKind::BadParameters, "tropical bound must be 0..63");
  auto names = numbered(0, m);
  names.push_back("inf");
  const auto inf = static_cast<ResourceId>(m + 1);
  return deterministic_table(
      std::move(names), [inf](ResourceId r, ResourceId s) { return r + s >= inf ? inf : r + s; }, 0);
}

ResourceTheory direct_product(const ResourceTheory& a, const ResourceTheory& b) {
  std::vector<std::string> names;
  const std::size_t n = a.size() * b.size();
  ResourceSet free(n);
  ResourceSet neutral(n);
  for (ResourceId i = 0; i < a.size(); ++i) {
    for (ResourceId j = 0; j < b.size(); ++j) {
      const auto code = static_cast<ResourceId>(i * b.size() + j);
      names.push_back(tuple_label({a.name(i), b.name(j)}));
      if (a.free().contains(i) && b.free().contains(j)) free.insert(code);
      if (a.neutral().contains(i) && b.neutral().contains(j)) neutral.insert(code);
    }
  }
  return ResourceTheory::product({std::make_shared<const ResourceTheory>(a), std::make_shared<const ResourceTheory>(b)},
                                 std::move(names), std::move(free), std::move(neutral));
}

ResourceTheory tri() {
  // e identity; a⊠a = a; a⊠b = b⊠b = b
  const ResourceSet free(3, {0, 1});
  const ResourceSet neutral(3, {0});
  return ResourceTheory::from_entries({"e", "a", "b"},
                                      {{{0, 0}, ResourceSet(3, {0})},
                                       {{0, 1}, ResourceSet(3, {1})},
                                       {{0, 2}, ResourceSet(3, {2})},
                                       {{1, 1}, ResourceSet(3, {1})},
                                       {{1, 2}, ResourceSet(3, {2})},
                                       {{2, 2}, ResourceSet(3, {2})}},
                                      free, neutral);
}

ResourceTheory um1() {
  const ResourceSet zero(2, {0});
  return union_monoid(1).with_free(zero);
}

// Realizes r1 ≽ r2, s1 ≽ s2 with a free degrading element d; distinct
// non-free resources are incompatible.
ResourceTheory p5() {
  enum : ResourceId { e, d, r1, r2, s1, s2 };
  const std::size_t n = 6;
  std::map<PairKey, ResourceSet> entries;
  for (ResourceId x = 0; x < n; ++x) entries[{e, x}] = ResourceSet::singleton(n, x);
  entries[{d, d}] = ResourceSet::singleton(n, d);
  entries[{d, r1}] = ResourceSet::singleton(n, r2);
  entries[{d, r2}] = ResourceSet::singleton(n, r2);
  entries[{d, s1}] = ResourceSet::singleton(n, s2);
  entries[{d, s2}] = ResourceSet::singleton(n, s2);
  return ResourceTheory::from_entries({"e", "d", "r1", "r2", "s1", "s2"}, entries, ResourceSet(n, {e, d}),
                                      ResourceSet(n, {e}));
}

// Points in [0,1]^d with bias coordinates 2p-1 in {-1,0,1}, combined by the
// coordinatewise product of biases.
ConvexTheory bias_product(const std::vector<std::vector<int>>& biases, const std::vector<std::size_t>& free_ids) {
  const std::size_t n = biases.size();
  std::vector<std::string> names;
  std::vector<RationalVector> points;
  for (const auto& b : biases) {
    RationalVector p;
    std::string name;
    for (std::size_t i = 0; i < b.size(); ++i) {
      p.push_back(Rational(b[i] + 1, 2));
      name += (i ? ";" : "") + format_rational(p.back());
    }
    names.push_back(b.size() == 1 ? name : "(" + name + ")");
    points.push_back(std::move(p));
  }
  const auto find = [&](const std::vector<int>& b) {
    for (std::size_t i = 0; i < n; ++i) {
      if (biases[i] == b) return static_cast<ResourceId>(i);
    }
    throw Error(ErrorKind::BadParameters, "bias carrier not closed under product");
  };
  std::vector<int> ones(biases.front().size(), 1);
  ResourceSet neutral = ResourceSet::singleton(n, find(ones));
  ResourceSet free(n);
  for (auto i : free_ids) free.insert(static_cast<ResourceId>(i));
  auto theory = ResourceTheory::from_function(
      std::move(names),
      [&](ResourceId r, ResourceId s) {
        std::vector<int> prod(biases[r].size());
        for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = biases[r][i] * biases[s][i];
        return ResourceSet::singleton(n, find(prod));
      },
      free, neutral);
  return ConvexTheory(std::make_shared<const ResourceTheory>(theory.with_free(free_closure(theory, free))),
                      std::move(points));
}

ConvexTheory cvx1() { return bias_product({{-1}, {0}, {1}}, {0, 2}); }

ConvexTheory convex_product(std::size_t dim, std::uint64_t seed, const std::optional<std::vector<std::string>>& gens) {
  if (dim < 1 || dim > 3) throw Error(ErrorKind::BadParameters, "convex-product dimension must be 1..3");
  Rng rng(seed);
  std::vector<std::vector<int>> carrier{std::vector<int>(dim, 1)};
  const std::size_t draws = 1 + rng.below(3);
  for (std::size_t i = 0; i < draws; ++i) {
    std::vector<int> v(dim);
    for (auto& x : v) x = static_cast<int>(rng.between(-1, 1));
    if (std::find(carrier.begin(), carrier.end(), v) == carrier.end()) carrier.push_back(v);
  }
  // Close under the product.
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = carrier;
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        std::vector<int> p(dim);
        for (std::size_t i = 0; i < dim; ++i) p[i] = a[i] * b[i];
        if (std::find(carrier.begin(), carrier.end(), p) == carrier.end()) {
          carrier.push_back(p);
          grew = true;
        }
      }
    }
  }
  std::sort(carrier.begin(), carrier.end());
  const ConvexTheory bare = bias_product(carrier, {});
  ResourceSet generators = gens ? bare.theory().set_of(*gens) : random_generators(carrier.size(), seed);
  std::vector<std::size_t> ids;
  generators.for_each([&](ResourceId r) { ids.push_back(r); });
  return bias_product(carrier, ids);
}

}  // namespace

ResourceSet free_closure(const ResourceTheory& theory, const ResourceSet& generators) {
  ResourceSet closed = generators | theory.neutral();
  while (true) {
    const ResourceSet next = closed | combine_sets(theory, closed, closed);
    if (next == closed) return closed;
    closed = next;
  }
}

ResourceTheory union_of_tables(const ResourceTheory& a, const ResourceTheory& b) {
  if (a.names() != b.names()) throw Error(ErrorKind::BadParameters, "union-of-tables needs equal carriers");
  const ResourceTheory joined = ResourceTheory::from_function(
      a.names(), [&](ResourceId r, ResourceId s) { return a.combine(r, s) | b.combine(r, s); }, a.free(),
      a.neutral());
  const ResourceTheory out = joined.with_free(free_closure(joined, a.free() | b.free()));
  const ValidationReport report = validate(out);
  if (!report.ok()) {
    throw Error(ErrorKind::BadParameters, "union of tables violates " + report.violations.front().axiom);
  }
  return out;
}

ResourceTheory builtin_theory(const std::string& name) {
  if (name == "TRI") return tri();
  if (name == "UM1") return um1();
  if (name == "P5") return p5();
  if (name == "CVX1") return cvx1().theory();
  throw Error(ErrorKind::BadParameters, "unknown builtin: " + name);
}

ConvexTheory builtin_convex(const std::string& name) {
  if (name == "CVX1") return cvx1();
  throw Error(ErrorKind::BadParameters, "unknown convex builtin: " + name);
}

ResourceTheory build(const FamilySpec& spec, std::uint64_t seed) {
  const std::string& f = spec.family;
  if (f == "builtin") return builtin_theory(spec.builtin);
  if (f == "union-monoid") return finish_free(union_monoid(spec.size), spec, seed);
  if (f == "truncated-addition") return finish_free(truncated_addition(spec.size), spec, seed);
  if (f == "max-semilattice") return finish_free(max_semilattice(spec.size), spec, seed);
  if (f == "tropical-min-plus") return finish_free(tropical(spec.size), spec, seed);
  if (f == "convex-product") return build_convex(spec, seed).theory();
  if (f == "direct-product" || f == "union-of-tables") {
    if (spec.factors.size() != 2) throw Error(ErrorKind::BadParameters, f + " needs exactly two factors");
    Rng rng(seed);
    const ResourceTheory a = build(spec.factors[0], rng.next());
    const ResourceTheory b = build(spec.factors[1], rng.next());
    return f == "direct-product" ? direct_product(a, b) : union_of_tables(a, b);
  }
  throw Error(ErrorKind::BadParameters, "unknown family: " + f);
}

ConvexTheory build_convex(const FamilySpec& spec, std::uint64_t seed) {
  if (spec.family == "builtin") return builtin_convex(spec.builtin);
  if (spec.family == "convex-product") return convex_product(spec.size, seed, spec.free_generators);
  throw Error(ErrorKind::BadParameters, "family " + spec.family + " is not convex");
}

std::optional<DomainMode> parse_domain_mode(const std::string& text) {
  if (text == "full") return DomainMode::full;
  if (text == "random-subset") return DomainMode::random_subset;
  if (text == "downward-closed") return DomainMode::downward_closed;
  if (text == "upward-closed") return DomainMode::upward_closed;
  return std::nullopt;
}

ResourceSet random_subset(std::size_t n, Rng& rng) {
  ResourceSet s(n);
  for (ResourceId r = 0; r < n; ++r) {
    if (rng.chance(1, 2)) s.insert(r);
  }
  return s;
}

ResourceSet random_downward_closed(const OrderedResources& ctx, Rng& rng) {
  return down_closure(ctx, random_subset(ctx.size(), rng));
}

PartialValuation random_valuation(const OrderedResources& ctx, std::uint64_t seed, bool monotone, DomainMode mode) {
  const std::size_t n = ctx.size();
  Rng rng(seed);
  ResourceSet domain = ResourceSet::full(n);
  switch (mode) {
    case DomainMode::full: break;
    case DomainMode::random_subset: domain = random_subset(n, rng); break;
    case DomainMode::downward_closed: domain = down_closure(ctx, random_subset(n, rng)); break;
    case DomainMode::upward_closed: domain = up_closure(ctx, random_subset(n, rng)); break;
  }
  std::vector<ExtRational> values(n, ExtRational(0));
  if (monotone) {
    // Value of r = offset + sum of class weights at or below r.
    const Quotient q = quotient(ctx.preorder());
    std::vector<Rational> weight(q.classes.size());
    for (auto& w : weight) w = Rational(rng.between(0, 3), rng.between(1, 2));
    const Rational offset(rng.between(-3, 3));
    for (ResourceId r = 0; r < n; ++r) {
      Rational v = offset;
      q.order.down(q.class_of[r]).for_each([&](ResourceId c) { v += weight[c]; });
      values[r] = ExtRational(v);
    }
  } else {
    for (ResourceId r = 0; r < n; ++r) values[r] = ExtRational(rng.between(-4, 4), rng.between(1, 3));
  }
  return PartialValuation::on(std::move(domain), std::move(values));
}

FamilySpec random_family(Rng& rng, std::size_t max_carrier) {
  if (max_carrier < 2) throw Error(ErrorKind::BadParameters, "max carrier must be at least 2");
  while (true) {
    FamilySpec spec;
    switch (rng.below(8)) {
      case 0: {
        std::size_t g = 1 + rng.below(3);
        while (g > 1 && (std::size_t{1} << g) > max_carrier) --g;
        spec = {"union-monoid", g, "", {}, std::nullopt};
        break;
      }
      case 1: spec = {"truncated-addition", 1 + rng.below(std::min<std::size_t>(max_carrier - 1, 6)), "", {}, {}}; break;
      case 2: spec = {"max-semilattice", 1 + rng.below(std::min<std::size_t>(max_carrier - 1, 6)), "", {}, {}}; break;
      case 3: spec = {"tropical-min-plus", rng.below(std::min<std::size_t>(max_carrier - 1, 6)), "", {}, {}}; break;
      case 4: {
        if (max_carrier < 4) continue;
        const std::size_t a = 1 + rng.below(2);
        const std::size_t b = 1 + rng.below(std::max<std::size_t>(1, std::min<std::size_t>(max_carrier / (a + 1), 4) - 1));
        if ((a + 1) * (b + 1) > max_carrier) continue;
        spec = {"direct-product", 0, "", {{"truncated-addition", a, "", {}, {}}, {"max-semilattice", b, "", {}, {}}}, {}};
        break;
      }
      case 5: {
        const std::size_t m = 1 + rng.below(std::min<std::size_t>(max_carrier - 1, 5));
        spec = {"union-of-tables", 0, "", {{"truncated-addition", m, "", {}, {}}, {"max-semilattice", m, "", {}, {}}},
                {}};
        break;
      }
      case 6: {
        static const char* names[] = {"TRI", "UM1", "P5"};
        spec = {"builtin", 0, names[rng.below(3)], {}, {}};
        if (builtin_theory(spec.builtin).size() > max_carrier) continue;
        break;
      }
      default: {
        const std::size_t g = max_carrier >= 4 ? 2 : 1;
        spec = {"union-monoid", g, "", {}, {}};
        break;
      }
    }
    return spec;
  }
}

ResourceTheory random_theory(std::uint64_t seed, std::size_t max_carrier) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    const FamilySpec spec = random_family(rng, max_carrier);
    try {
      return build(spec, rng.next());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BadParameters) throw;
    }
  }
  return build({"union-monoid", 1, "", {}, {}}, seed);
}

ConvexTheory random_convex(std::uint64_t seed) {
  Rng rng(seed);
  return convex_product(1 + rng.below(2), rng.next(), std::nullopt);
}

}  // namespace restheory
