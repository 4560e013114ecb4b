#pragma once

#include "restheory/convex.hpp"
#include "restheory/monotone.hpp"
#include "restheory/rng.hpp"
#include "restheory/theory.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace restheory {

// families: union-monoid (size = ground set), truncated-addition and
// max-semilattice (carrier {0..size}), tropical-min-plus ({0..size, inf}),
// direct-product and union-of-tables (two factors), convex-product
// (size = dimension), builtin (TRI, UM1, CVX1, P5).
struct FamilySpec {
  std::string family;
  std::size_t size = 1;
  std::string builtin;
  std::vector<FamilySpec> factors;
  // Generators of the free set; drawn from the seed when absent.
  std::optional<std::vector<std::string>> free_generators;
};

// Deterministic per (spec, seed). Throws BadParameters.
ResourceTheory build(const FamilySpec& spec, std::uint64_t seed);
// convex-product or builtin CVX1.
ConvexTheory build_convex(const FamilySpec& spec, std::uint64_t seed);

ResourceTheory builtin_theory(const std::string& name);
ConvexTheory builtin_convex(const std::string& name);

// Smallest combination-closed set containing the generators and the neutral set.
ResourceSet free_closure(const ResourceTheory& theory, const ResourceSet& generators);

// Explicit union of two deterministic tables over the same carrier; the free
// set is the closure of both free sets. Throws BadParameters unless valid.
ResourceTheory union_of_tables(const ResourceTheory& a, const ResourceTheory& b);

enum class DomainMode { full, random_subset, downward_closed, upward_closed };

std::optional<DomainMode> parse_domain_mode(const std::string& text);

PartialValuation random_valuation(const OrderedResources& ctx, std::uint64_t seed, bool monotone, DomainMode mode);

// A family spec drawn at random with carrier at most max_carrier.
FamilySpec random_family(Rng& rng, std::size_t max_carrier);
ResourceTheory random_theory(std::uint64_t seed, std::size_t max_carrier);
ConvexTheory random_convex(std::uint64_t seed);
// Downward closed set free ⊠ S for a random S.
ResourceSet random_downward_closed(const OrderedResources& ctx, Rng& rng);
ResourceSet random_subset(std::size_t n, Rng& rng);

}  // namespace restheory
