#include "fixtures.hpp"

#include "restheory/errors.hpp"
#include "restheory/io.hpp"

#include <doctest.h>

using namespace restheory;

TEST_SUITE("gen") {

TEST_CASE("families build valid theories of the requested size") {
  struct Case {
    const char* family;
    std::size_t size;
    std::size_t carrier;
  };
  for (const Case& c : {Case{"union-monoid", 3, 8}, Case{"truncated-addition", 4, 5}, Case{"max-semilattice", 3, 4},
                        Case{"tropical-min-plus", 2, 4}}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const ResourceTheory t = build(FamilySpec{c.family, c.size, "", {}, std::nullopt}, seed);
      CHECK_MESSAGE(t.size() == c.carrier, c.family);
      CHECK_MESSAGE(validate(t).ok(), c.family);
    }
  }
}

TEST_CASE("generation is a function of the spec and the seed") {
  FamilySpec spec{"union-monoid", 2, "", {}, std::nullopt};
  CHECK(theory_to_json(build(spec, 11)) == theory_to_json(build(spec, 11)));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(theory_to_json(random_theory(seed, 8)) == theory_to_json(random_theory(seed, 8)));
  }
}

TEST_CASE("free sets are closures of their generators") {
  FamilySpec spec{"truncated-addition", 4, "", {}, std::vector<std::string>{"1"}};
  const ResourceTheory t = build(spec, 0);
  CHECK(t.free() == t.full_set());
  spec.free_generators = std::vector<std::string>{"2"};
  const ResourceTheory evens = build(spec, 0);
  CHECK(evens.free() == evens.set_of({"0", "2", "4"}));
  CHECK(free_closure(evens, evens.empty_set()) == evens.neutral());
}

TEST_CASE("composite families") {
  const FamilySpec a{"truncated-addition", 1, "", {}, std::nullopt};
  const FamilySpec b{"max-semilattice", 1, "", {}, std::nullopt};
  const ResourceTheory product = build(FamilySpec{"direct-product", 1, "", {a, b}, std::nullopt}, 3);
  CHECK(product.size() == 4);
  CHECK(validate(product).ok());
  const ResourceTheory joined = build(FamilySpec{"union-of-tables", 1, "", {a, b}, std::nullopt}, 3);
  CHECK(joined.size() == 2);
  CHECK(validate(joined).ok());
  CHECK_THROWS_AS(build(FamilySpec{"no-such-family", 1, "", {}, std::nullopt}, 0), Error);
  CHECK_THROWS_AS(build(FamilySpec{"union-monoid", 9, "", {}, std::nullopt}, 0), Error);
}

TEST_CASE("random valuations honour the domain mode") {
  const auto ctx = OrderedResources::from_theory(builtin_theory("P5"));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const PartialValuation dc = random_valuation(ctx, seed, true, DomainMode::downward_closed);
    CHECK(is_downward_closed(ctx, dc.domain));
    CHECK_FALSE(domain_monotonicity_violation(dc, ctx.preorder()).has_value());
    const PartialValuation uc = random_valuation(ctx, seed, false, DomainMode::upward_closed);
    CHECK(is_upward_closed(ctx, uc.domain));
    CHECK(random_valuation(ctx, seed, true, DomainMode::full).is_total());
  }
  CHECK(parse_domain_mode("random-subset") == DomainMode::random_subset);
  CHECK_FALSE(parse_domain_mode("everything").has_value());
}

TEST_CASE("random convex fixtures are valid") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ConvexTheory ct = random_convex(seed);
    CHECK(validate(ct).ok());
    CHECK(cva_contraction_check(ct));
  }
}

}  // TEST_SUITE

TEST_SUITE("io") {

TEST_CASE("theories round-trip through canonical JSON") {
  for (const char* name : {"TRI", "UM1", "P5"}) {
    const ResourceTheory t = builtin_theory(name);
    const Json j = theory_to_json(t);
    CHECK(theory_to_json(theory_from_json(j)) == j);
  }
  const ConvexTheory ct = builtin_convex("CVX1");
  const Json cj = convex_to_json(ct);
  CHECK(has_points(cj));
  CHECK(convex_to_json(convex_from_json(cj)) == cj);
}

TEST_CASE("reversed combine keys are accepted once") {
  const Json j = parse_json_text(
      R"({"resources": ["e", "x"], "free": ["e"], "neutral": ["e"],
          "combine": {"e,e": ["e"], "x,e": ["x"], "x,x": ["x"]}})",
      "inline");
  const ResourceTheory t = theory_from_json(j);
  CHECK(t.combine(0, 1) == ResourceSet(2, {1}));
}

TEST_CASE("malformed documents name the offending field") {
  const auto message = [](const std::string& text) {
    try {
      theory_from_json(parse_json_text(text, "inline"));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(R"({"resources": ["a", "a"], "free": [], "neutral": []})").find("resources") != std::string::npos);
  CHECK(message(R"({"resources": ["a"], "free": ["b"], "neutral": []})").find("free") != std::string::npos);
  CHECK(message(R"({"resources": ["a"], "free": [], "neutral": [], "colour": 1})").find("colour") !=
        std::string::npos);
  CHECK(message(R"({"resources": ["a"], "free": [], "neutral": [], "combine": {"a": ["a"]}})").find("combine") !=
        std::string::npos);
  CHECK(message("{\"resources\": [\n").find("inline") != std::string::npos);
}

TEST_CASE("valuations accept strings and integers") {
  const std::vector<std::string> labels = {"e", "a", "b"};
  const PartialValuation fw =
      valuation_from_json(parse_json_text(R"({"values": {"a": 1, "b": "-inf"}})", "inline"), labels);
  CHECK(fw.domain == ResourceSet(3, {1, 2}));
  CHECK(fw.at(2) == ExtRational::neg_inf());
  CHECK(valuation_to_json(labels, fw)["values"]["a"] == "1");
  CHECK_THROWS_AS(valuation_from_json(parse_json_text(R"({"values": {"z": 1}})", "inline"), labels), Error);
}

TEST_CASE("family specs round-trip") {
  const FamilySpec spec{"direct-product", 1, "", {{"union-monoid", 1, "", {}, std::nullopt},
                                                  {"truncated-addition", 2, "", {}, std::vector<std::string>{"1"}}},
                        std::nullopt};
  const Json j = family_to_json(spec);
  CHECK(family_to_json(family_from_json(j)) == j);
}

}  // TEST_SUITE
