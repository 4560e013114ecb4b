#pragma once

#include "restheory/dist.hpp"
#include "restheory/monotone.hpp"
#include "restheory/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace restheory {

using RationalVector = std::vector<Rational>;

// Deterministic theory whose resources are exact-rational points of a fixed
// dimension.
class ConvexTheory {
 public:
  // Throws BaseNotDeterministic, DimensionMismatch, BadParameters.
  ConvexTheory(TheoryPtr theory, std::vector<RationalVector> points);

  const ResourceTheory& theory() const { return det_.theory(); }
  const TheoryPtr& ptr() const { return det_.ptr(); }
  const DeterministicTheory& deterministic() const { return det_; }
  std::size_t size() const { return points_.size(); }
  std::size_t dimension() const { return dimension_; }
  const std::vector<RationalVector>& points() const { return points_; }
  const RationalVector& point(ResourceId r) const { return points_[r]; }
  ResourceId combine(ResourceId r, ResourceId s) const { return det_.combine(r, s); }

 private:
  DeterministicTheory det_;
  std::vector<RationalVector> points_;
  std::size_t dimension_ = 0;
};

namespace axiom {
inline constexpr const char* bilinearity = "bilinearity";
}

// Core axioms plus bilinearity on collinear carrier triples: for
// r = λs + (1-λ)t and every u, r⊠u = λ(s⊠u) + (1-λ)(t⊠u).
ValidationReport validate(const ConvexTheory& ct, const ValidationOptions& options = {});

// Minimum λ in [0,1] with r = λs + (1-λ)t; 1 if there is none.
ExtRational cva(const RationalVector& r, const RationalVector& s, const RationalVector& t);
ExtRational cva(const ConvexTheory& ct, ResourceId r, ResourceId s, ResourceId t);

// First (r, s, t, u) with cva(r,s,t) < cva(r⊠u, s⊠u, t⊠u).
std::optional<std::array<ResourceId, 4>> cva_contraction_violation(const ConvexTheory& ct);
bool cva_contraction_check(const ConvexTheory& ct);

enum class ConvexMonotoneKind { weight, robustness, free_robustness, non_convexity };

std::string to_string(ConvexMonotoneKind kind);
std::optional<ConvexMonotoneKind> parse_convex_monotone_kind(const std::string& text);

ExtRational weight(const ConvexTheory& ct, ResourceId r);
ExtRational robustness(const ConvexTheory& ct, ResourceId t);
ExtRational free_robustness(const ConvexTheory& ct, ResourceId t);
ExtRational non_convexity(const ConvexTheory& ct, ResourceId r);

MonotoneFn convex_monotone(const ConvexTheory& ct, ConvexMonotoneKind kind);

// M(x) = inf of cva over triples in S1×S2×S3 whose component `axis`
// (1-based) is x. Requires S_axis = carrier and every S_j downward closed.
MonotoneFn cva_monotone(const ConvexTheory& ct, std::size_t axis, const ResourceSet& s1, const ResourceSet& s2,
                        const ResourceSet& s3);

struct ConstructionClass {
  std::size_t axis = 1;
  std::array<std::string, 3> windows;  // "R" or "free"
  MonotoneFn monotone;
  bool constant = false;
  std::optional<ConvexMonotoneKind> named;
};

// The 12 constructions: axis in {1,2,3}, the other two windows in {R, free}.
std::vector<ConstructionClass> classify_constructions(const ConvexTheory& ct);

// No non-free resource lies on a segment between two free resources.
bool free_is_convex(const ConvexTheory& ct);

}  // namespace restheory
