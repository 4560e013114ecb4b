#pragma once

// Brute-force reference implementations. They work from the combination table
// and the definitions directly and share no code paths with the library's
// closure-based algorithms; tests cross-check the two.

#include "restheory/dist.hpp"
#include "restheory/monotone.hpp"
#include "restheory/theory.hpp"

#include <optional>
#include <vector>

namespace restheory::oracle {

using Relation = std::vector<std::vector<bool>>;  // rel[a][b] means a ≽ b

// a ≽ b iff b ∈ f ⊠ a for some free f.
Relation resource_order(const ResourceTheory& theory);
// T ⊆ R_free ⊠ S, element by element.
bool set_order(const ResourceTheory& theory, const ResourceSet& s, const ResourceSet& t);
// Some function e : T → S with e(t) ≽ t.
bool enhancement_function_exists(const Relation& order, const ResourceSet& s, const ResourceSet& t);
// Some function d : S → T with s ≽ d(s).
bool degradation_function_exists(const Relation& order, const ResourceSet& s, const ResourceSet& t);

// (r ⊠ s) ⊠ t differs from r ⊠ (s ⊠ t), computed element by element.
bool associativity_fails(const ResourceTheory& theory, ResourceId r, ResourceId s, ResourceId t);
// All core axioms by exhaustive search.
bool axioms_hold(const ResourceTheory& theory);

bool is_monotone(const std::vector<ExtRational>& values, const Relation& order);

ExtRational yield(const ResourceTheory& theory, const PartialValuation& fw, const ResourceSet& d, ResourceId r);
ExtRational cost(const ResourceTheory& theory, const PartialValuation& fw, const ResourceSet& d, ResourceId r);

// t ≽ u in the k-dist theory: u = g ⊠ t componentwise for one base element g
// (free base elements only when constrained).
bool tuple_geq(const TupleTheory& tt, ResourceId t, ResourceId u);

// Least λ = p/q with q ≤ max_den in [0,1] such that r = λs + (1-λ)t; 1 if none.
ExtRational cva_by_search(const std::vector<Rational>& r, const std::vector<Rational>& s,
                          const std::vector<Rational>& t, unsigned max_den = 24);

// Every preorder on n ≤ 4 points.
std::vector<Relation> all_preorders(std::size_t n);

}  // namespace restheory::oracle
