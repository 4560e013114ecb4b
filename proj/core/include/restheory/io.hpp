#pragma once

#include "restheory/convex.hpp"
#include "restheory/dist.hpp"
#include "restheory/gen.hpp"
#include "restheory/inform.hpp"
#include "restheory/monotone.hpp"
#include "restheory/theory.hpp"
#include "restheory/translate.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace restheory {

using Json = nlohmann::ordered_json;

// Every reader throws ParseError naming the line/column or the offending field.
Json parse_json_text(const std::string& text, const std::string& origin);
Json read_json_file(const std::filesystem::path& path);
// Two-space indent plus a trailing newline.
std::string dump(const Json& j);

// {"resources", "free", "neutral", "combine": {"a,b": [...]}}; keys are
// unordered pairs, absent keys are empty. Output is canonical: index order
// throughout and empty entries omitted.
ResourceTheory theory_from_json(const Json& j);
Json theory_to_json(const ResourceTheory& theory);

// Standard theory fields plus "points": {"name": ["p/q", ...]}.
ConvexTheory convex_from_json(const Json& j);
Json convex_to_json(const ConvexTheory& ct);
bool has_points(const Json& j);

// {"domain": [...], "values": {"name": "p/q" | "inf" | "-inf"}}
PartialValuation valuation_from_json(const Json& j, const std::vector<std::string>& labels);
Json valuation_to_json(const std::vector<std::string>& labels, const PartialValuation& fw);

// Valuation shape over the full carrier plus provenance and the self-check.
Json monotone_to_json(const std::vector<std::string>& labels, const MonotoneFn& m);

// Accepts a JSON array of names or {"set": [...]}.
ResourceSet set_from_json(const Json& j, const ResourceTheory& theory, const std::string& field);

// {"source", "target", "kind", "map": {"r": [...]}, "preimage_of": {"t": "r"}}
// where source and target are inline theories or paths relative to base_dir.
MediatingMap mediating_map_from_json(const Json& j, const std::filesystem::path& base_dir);
Json mediating_map_to_json(const MediatingMap& f);

FamilySpec family_from_json(const Json& j);
Json family_to_json(const FamilySpec& spec);

Json validation_report_to_json(const ResourceTheory& theory, const ValidationReport& report);
Json inform_report_to_json(const std::vector<std::string>& labels, const InformReport& report);
Json tuple_to_json(const TupleTheory& tt, ResourceId t);
// Theory JSON plus "k", "constrained" and "tuples": {"(a;b)": ["a", "b"]}.
Json tuple_theory_to_json(const TupleTheory& tt);
Json order_to_json(const FinitePreorder& pre);

}  // namespace restheory
