#include "fixtures.hpp"

#include "restheory/errors.hpp"
#include "restheory/oracle.hpp"
#include "restheory/rational.hpp"

#include <doctest.h>

using namespace restheory;
using restheory::test::names;

TEST_SUITE("core") {

TEST_CASE("extended rationals order infinities around every finite value") {
  CHECK(ExtRational::neg_inf() < ExtRational(-1000000));
  CHECK(ExtRational(1000000) < ExtRational::pos_inf());
  CHECK(ExtRational(1, 2) == ExtRational(2, 4));
  CHECK(ExtRational(1, 2).str() == "1/2");
  CHECK(ExtRational::parse("-inf") == ExtRational::neg_inf());
  CHECK(ExtRational::parse("3/6")->str() == "1/2");
  CHECK_FALSE(ExtRational::parse("1/0").has_value());
  CHECK_FALSE(ExtRational::parse("x").has_value());
}

TEST_CASE("combine_sets takes the union of pairwise combinations") {
  const ResourceTheory tri = builtin_theory("TRI");
  CHECK(combine_sets(tri, names(tri, {"e", "a"}), names(tri, {"b"})) == names(tri, {"b"}));
  CHECK(combine_sets(tri, tri.empty_set(), tri.full_set()).empty());
  CHECK(free_image(tri, names(tri, {"e"})) == names(tri, {"e", "a"}));
}

TEST_CASE("builtin theories validate") {
  for (const char* name : {"TRI", "UM1", "P5", "CVX1"}) {
    const ValidationReport report = validate(builtin_theory(name));
    CHECK_MESSAGE(report.ok(), name);
    CHECK(report.exhaustive);
  }
  const ValidationReport tri = validate(builtin_theory("TRI"));
  CHECK(tri.triples_checked == 27);
}

TEST_CASE("a neutral element outside the free set is reported") {
  const ResourceTheory tri = builtin_theory("TRI");
  const ValidationReport report = validate(tri.with_free(names(tri, {"a"})));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].axiom == axiom::neutral_subset_free);
  CHECK(report.violations[0].witness == std::vector<ResourceId>{0});
}

TEST_CASE("a neutral set that moves a resource is reported at that resource") {
  const ResourceTheory tri = builtin_theory("TRI");
  const ValidationReport report = validate(tri.with_neutral(names(tri, {"a"})));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].axiom == axiom::neutral_law);
  CHECK(tri.name(report.violations[0].witness[0]) == "e");
}

TEST_CASE("empty free and neutral sets are rejected") {
  const ResourceTheory tri = builtin_theory("TRI");
  const ValidationReport no_free = validate(tri.with_free(tri.empty_set()).with_neutral(tri.empty_set()));
  bool free_flagged = false;
  bool neutral_flagged = false;
  for (const Violation& v : no_free.violations) {
    free_flagged |= v.axiom == axiom::free_nonempty;
    neutral_flagged |= v.axiom == axiom::neutral_nonempty;
  }
  CHECK(free_flagged);
  CHECK(neutral_flagged);
}

TEST_CASE("a perturbed entry breaks associativity with a checkable witness") {
  const ResourceTheory tri = builtin_theory("TRI");
  const ResourceTheory broken = tri.with_entry(1, 1, names(tri, {"b"}));
  ValidationOptions options;
  options.all_witnesses = true;
  const ValidationReport report = validate(broken, options);
  REQUIRE_FALSE(report.ok());
  for (const Violation& v : report.violations) {
    CHECK(witness_violates(broken, v));
    if (v.axiom == axiom::associativity) {
      CHECK(oracle::associativity_fails(broken, v.witness[0], v.witness[1], v.witness[2]));
    }
  }
}

TEST_CASE("strict validation lists incompatible pairs as warnings") {
  ValidationOptions options;
  options.strict = true;
  const ValidationReport report = validate(builtin_theory("P5"), options);
  CHECK(report.ok());
  CHECK_FALSE(report.warnings.empty());
  CHECK(validate(builtin_theory("TRI"), options).warnings.empty());
}

TEST_CASE("the resource order of TRI has e above a and b isolated") {
  const ResourceTheory tri = builtin_theory("TRI");
  const FinitePreorder order = resource_order(tri);
  const std::vector<std::pair<ResourceId, ResourceId>> expected = {{0, 0}, {0, 1}, {1, 1}, {2, 2}};
  CHECK(order.pairs() == expected);
  CHECK(order.is_partial_order());
  CHECK(quotient(order).classes.size() == 3);
}

TEST_CASE("set_order compares subsets through the free image") {
  const ResourceTheory tri = builtin_theory("TRI");
  CHECK(set_order(tri, names(tri, {"e"}), names(tri, {"a"})));
  CHECK_FALSE(set_order(tri, names(tri, {"a"}), names(tri, {"e"})));
  CHECK(set_order(tri, names(tri, {"b"}), tri.empty_set()));
}

TEST_CASE("resource_order matches the table-driven oracle on the builtins") {
  for (const char* name : {"TRI", "UM1", "P5", "CVX1"}) {
    const ResourceTheory t = builtin_theory(name);
    const FinitePreorder order = resource_order(t);
    const oracle::Relation rel = oracle::resource_order(t);
    for (ResourceId a = 0; a < t.size(); ++a) {
      for (ResourceId b = 0; b < t.size(); ++b) CHECK(order.geq(a, b) == rel[a][b]);
    }
  }
}

TEST_CASE("a non-preorder relation is refused") {
  const std::vector<std::string> labels = {"x", "y", "z"};
  std::vector<ResourceSet> rows = {ResourceSet(3, {0, 1}), ResourceSet(3, {1, 2}), ResourceSet(3, {2})};
  CHECK_THROWS_AS(FinitePreorder(labels, rows), Error);
  const FinitePreorder closed = FinitePreorder::closure_of(labels, rows);
  CHECK(closed.geq(0, 2));
}

TEST_CASE("only P5 among TRI and P5 has set-valued entries") {
  CHECK(builtin_theory("TRI").is_deterministic());
  CHECK_FALSE(builtin_theory("P5").is_deterministic());
}

}  // TEST_SUITE
