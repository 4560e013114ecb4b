#pragma once

#include "restheory/order.hpp"
#include "restheory/rational.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace restheory {

// f_W: values are meaningful only on the domain; entries elsewhere are ignored.
struct PartialValuation {
  ResourceSet domain;
  std::vector<ExtRational> values;

  static PartialValuation total(std::vector<ExtRational> values);
  static PartialValuation on(ResourceSet domain, std::vector<ExtRational> values);

  std::size_t carrier_size() const { return domain.universe(); }
  bool defined(ResourceId r) const { return domain.contains(r); }
  const ExtRational& at(ResourceId r) const { return values[r]; }
  bool is_total() const { return domain.is_full(); }
};

struct Provenance {
  std::string construction;  // yield, cost, pullback, contraction, convex, user, ...
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
};

using OrderPair = std::pair<ResourceId, ResourceId>;

struct MonotoneFn {
  std::vector<ExtRational> values;
  Provenance provenance;
  bool checked = false;
  std::optional<OrderPair> violation;  // first (a, b) with a ≽ b and M(a) < M(b)

  bool verified() const { return checked && !violation; }
  PartialValuation as_valuation() const { return PartialValuation::total(values); }
};

// sup over S ∩ W, with sup ∅ = -inf
ExtRational f_max(const PartialValuation& fw, const ResourceSet& s);
// inf over S ∩ W, with inf ∅ = +inf
ExtRational f_min(const PartialValuation& fw, const ResourceSet& s);

std::optional<OrderPair> monotonicity_violation(const std::vector<ExtRational>& values, const FinitePreorder& pre);
bool is_monotone(const std::vector<ExtRational>& values, const FinitePreorder& pre);
// Violations among pairs inside the domain only.
std::optional<OrderPair> domain_monotonicity_violation(const PartialValuation& fw, const FinitePreorder& pre);

// Runs the order-preservation check and records it on m. Throws
// NotOrderPreserving when `require` is set and the check fails.
void self_check(MonotoneFn& m, const FinitePreorder& pre, bool require = true);

nlohmann::ordered_json names_json(const std::vector<std::string>& labels, const ResourceSet& s);

// D = free.
MonotoneFn yield(const OrderedResources& ctx, const PartialValuation& fw);
MonotoneFn cost(const OrderedResources& ctx, const PartialValuation& fw);
// General downward-closed D; needs a theory unless D is the free set.
MonotoneFn yield(const OrderedResources& ctx, const PartialValuation& fw, const ResourceSet& d);
MonotoneFn cost(const OrderedResources& ctx, const PartialValuation& fw, const ResourceSet& d);

// Yield = f = Cost on W for D = free. Throws FNotMonotoneOnDomain.
bool extension_coincidence_check(const OrderedResources& ctx, const PartialValuation& fw);

}  // namespace restheory
