#include "restheory/order.hpp"

#include "restheory/errors.hpp"

namespace restheory {

OrderedResources OrderedResources::from_theory(TheoryPtr theory) {
  OrderedResources ctx;
  ctx.preorder_ = std::make_shared<const FinitePreorder>(resource_order(*theory));
  ctx.theory_ = std::move(theory);
  return ctx;
}

OrderedResources OrderedResources::from_theory(const ResourceTheory& theory) {
  return from_theory(std::make_shared<const ResourceTheory>(theory));
}

OrderedResources OrderedResources::from_preorder(FinitePreorder preorder) {
  OrderedResources ctx;
  ctx.preorder_ = std::make_shared<const FinitePreorder>(std::move(preorder));
  return ctx;
}

const ResourceTheory& OrderedResources::require_theory(const char* what) const {
  if (!theory_) throw Error(ErrorKind::RequiresTheory, std::string(what) + " needs a theory-backed context");
  return *theory_;
}

std::optional<ResourceSet> OrderedResources::free_set() const {
  if (!theory_) return std::nullopt;
  return theory_->free();
}

ResourceSet down_closure(const FinitePreorder& pre, const ResourceSet& s) {
  ResourceSet out(pre.size());
  s.for_each([&](ResourceId r) { out |= pre.down(r); });
  return out;
}

ResourceSet up_closure(const FinitePreorder& pre, const ResourceSet& s) {
  ResourceSet out(pre.size());
  s.for_each([&](ResourceId r) { out |= pre.up(r); });
  return out;
}

ResourceSet down_closure(const OrderedResources& ctx, const ResourceSet& s) {
  return down_closure(ctx.preorder(), s);
}

ResourceSet up_closure(const OrderedResources& ctx, const ResourceSet& s) { return up_closure(ctx.preorder(), s); }

std::optional<ResourceId> downward_escape(const OrderedResources& ctx, const ResourceSet& s) {
  return down_closure(ctx, s).first_not_in(s);
}

std::optional<ResourceId> upward_escape(const OrderedResources& ctx, const ResourceSet& s) {
  return up_closure(ctx, s).first_not_in(s);
}

bool is_downward_closed(const OrderedResources& ctx, const ResourceSet& s) { return !downward_escape(ctx, s); }
bool is_upward_closed(const OrderedResources& ctx, const ResourceSet& s) { return !upward_escape(ctx, s); }

ResourceSet d_image(const ResourceTheory& theory, const ResourceSet& d, ResourceId r) {
  return combine_sets(theory, d, ResourceSet::singleton(theory.size(), r));
}

ResourceSet d_image(const ResourceTheory& theory, const ResourceSet& d, const ResourceSet& s) {
  return combine_sets(theory, d, s);
}

ResourceSet d_preimage(const ResourceTheory& theory, const ResourceSet& d, const ResourceSet& w) {
  const std::size_t n = theory.size();
  ResourceSet out(n);
  for (ResourceId s = 0; s < n; ++s) {
    if (d_image(theory, d, s).intersects(w)) out.insert(s);
  }
  return out;
}

ResourceSet d_preimage(const ResourceTheory& theory, const ResourceSet& d, ResourceId r) {
  return d_preimage(theory, d, ResourceSet::singleton(theory.size(), r));
}

std::optional<ComposeFailure> check_compose_images(const ResourceTheory& theory, const ResourceSet& s,
                                                   const ResourceSet& t) {
  const ResourceSet st = combine_sets(theory, s, t);
  const ResourceSet ts = combine_sets(theory, t, s);
  for (ResourceId r = 0; r < theory.size(); ++r) {
    if (d_image(theory, s, d_image(theory, t, r)) != d_image(theory, st, r)) return ComposeFailure{"image", r};
  }
  for (ResourceId r = 0; r < theory.size(); ++r) {
    if (d_preimage(theory, s, d_preimage(theory, t, r)) != d_preimage(theory, ts, r)) {
      return ComposeFailure{"preimage", r};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<ResourceId, ResourceId>> order_violation(const MapBetweenCarriers& f,
                                                                 const FinitePreorder& a,
                                                                 const FinitePreorder& b) {
  for (ResourceId x = 0; x < a.size(); ++x) {
    std::optional<ResourceId> bad;
    a.down(x).for_each([&](ResourceId y) {
      if (!bad && !b.geq(f.image[x], f.image[y])) bad = y;
    });
    if (bad) return std::make_pair(x, *bad);
  }
  return std::nullopt;
}

bool is_order_preserving(const MapBetweenCarriers& f, const FinitePreorder& a, const FinitePreorder& b) {
  return !order_violation(f, a, b);
}

Partition kernel(const MapBetweenCarriers& f, const FinitePreorder& b) {
  const std::size_t n = f.image.size();
  Partition p;
  p.class_of.assign(n, 0);
  std::vector<bool> placed(n, false);
  for (ResourceId x = 0; x < n; ++x) {
    if (placed[x]) continue;
    const auto id = static_cast<ResourceId>(p.classes.size());
    std::vector<ResourceId> members;
    for (ResourceId y = x; y < n; ++y) {
      if (!placed[y] && b.equivalent(f.image[x], f.image[y])) {
        placed[y] = true;
        p.class_of[y] = id;
        members.push_back(y);
      }
    }
    p.classes.push_back(std::move(members));
  }
  return p;
}

bool first_isomorphism_check(const MapBetweenCarriers& f, const FinitePreorder& a, const FinitePreorder& b) {
  if (auto v = order_violation(f, a, b)) {
    throw Error(ErrorKind::NotOrderPreserving, "at (" + a.label(v->first) + ", " + a.label(v->second) + ")");
  }
  const Partition k = kernel(f, b);
  const std::size_t m = k.classes.size();
  std::vector<ResourceSet> rows(m, ResourceSet(m));
  for (ResourceId x = 0; x < a.size(); ++x) {
    a.down(x).for_each([&](ResourceId y) { rows[k.class_of[x]].insert(k.class_of[y]); });
  }
  std::vector<std::string> labels(m);
  for (std::size_t c = 0; c < m; ++c) labels[c] = a.label(k.classes[c].front());
  const FinitePreorder source = FinitePreorder::closure_of(std::move(labels), std::move(rows));
  for (ResourceId c = 0; c < m; ++c) {
    for (ResourceId d = 0; d < m; ++d) {
      const bool image_geq = b.geq(f.image[k.classes[c].front()], f.image[k.classes[d].front()]);
      if (source.geq(c, d) != image_geq) return false;
    }
  }
  return true;
}

std::optional<RemovingArrowsFailure> removing_arrows_check(const FinitePreorder& pre, const ResourceSet& s,
                                                           const ResourceSet& t) {
  const ResourceSet up_s = up_closure(pre, s);
  const ResourceSet down_s = down_closure(pre, s);
  const ResourceSet a1 = down_closure(pre, up_s & down_closure(pre, t));
  const ResourceSet b1 = down_closure(pre, up_s & t);
  if (a1 != b1) {
    auto w = a1.first_not_in(b1);
    return RemovingArrowsFailure{"down-up-down", w ? *w : *b1.first_not_in(a1)};
  }
  const ResourceSet a2 = up_closure(pre, down_s & up_closure(pre, t));
  const ResourceSet b2 = up_closure(pre, down_s & t);
  if (a2 != b2) {
    auto w = a2.first_not_in(b2);
    return RemovingArrowsFailure{"up-down-up", w ? *w : *b2.first_not_in(a2)};
  }
  return std::nullopt;
}

namespace {

std::vector<ResourceSet> enumerate_closed(const OrderedResources& ctx, std::size_t cap, bool downward) {
  const std::size_t n = ctx.size();
  if (n > 20) throw Error(ErrorKind::CarrierTooLarge, "closed-set enumeration needs a carrier of at most 20");
  std::vector<std::uint32_t> rows(n);
  for (ResourceId r = 0; r < n; ++r) {
    rows[r] = static_cast<std::uint32_t>((downward ? ctx.down(r) : ctx.up(r)).mask());
  }
  std::vector<ResourceSet> out;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool closed = true;
    for (std::size_t r = 0; r < n && closed; ++r) {
      if (((mask >> r) & 1U) && (rows[r] & ~mask)) closed = false;
    }
    if (!closed) continue;
    if (out.size() == cap) throw Error(ErrorKind::CarrierTooLarge, "closed-set count exceeds the cap");
    out.push_back(ResourceSet::from_mask(n, mask));
  }
  return out;
}

}  // namespace

std::vector<ResourceSet> enumerate_downward_closed(const OrderedResources& ctx, std::size_t cap) {
  return enumerate_closed(ctx, cap, true);
}

std::vector<ResourceSet> enumerate_upward_closed(const OrderedResources& ctx, std::size_t cap) {
  return enumerate_closed(ctx, cap, false);
}

}  // namespace restheory
