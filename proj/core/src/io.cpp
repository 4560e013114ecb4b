#include "restheory/io.hpp"

#include "restheory/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace restheory {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, "field '" + field + "': " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) fail(where.empty() ? it.key() : where + "." + it.key(), "unknown field");
  }
}

std::vector<std::string> string_list(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(field + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

ResourceId lookup(const std::vector<std::string>& labels, const std::string& name, const std::string& field) {
  for (ResourceId r = 0; r < labels.size(); ++r) {
    if (labels[r] == name) return r;
  }
  fail(field, "unknown resource '" + name + "'");
}

ResourceSet names_to_set(const std::vector<std::string>& labels, const Json& j, const std::string& field) {
  ResourceSet out(labels.size());
  for (const auto& name : string_list(j, field)) out.insert(lookup(labels, name, field));
  return out;
}

Json names_of(const std::vector<std::string>& labels, const ResourceSet& s) { return names_json(labels, s); }

Json witness_json(const std::vector<std::string>& labels, const std::vector<ResourceId>& ids) {
  Json out = Json::array();
  for (auto r : ids) out.push_back(labels[r]);
  return out;
}

Json pair_json(const std::vector<std::string>& labels, const std::optional<OrderPair>& p) {
  if (!p) return nullptr;
  return Json::array({labels[p->first], labels[p->second]});
}

Json theory_fields(const ResourceTheory& t) {
  Json j;
  j["resources"] = t.names();
  j["free"] = names_of(t.names(), t.free());
  j["neutral"] = names_of(t.names(), t.neutral());
  Json combine = Json::object();
  for (ResourceId r = 0; r < t.size(); ++r) {
    for (ResourceId s = r; s < t.size(); ++s) {
      const ResourceSet v = t.combine(r, s);
      if (!v.empty()) combine[t.name(r) + "," + t.name(s)] = names_of(t.names(), v);
    }
  }
  j["combine"] = std::move(combine);
  return j;
}

ExtRational value_from_json(const Json& v, const std::string& field) {
  if (v.is_number_integer()) return ExtRational(v.get<long long>());
  if (!v.is_string()) fail(field, "expected \"p/q\", \"inf\" or \"-inf\"");
  auto parsed = ExtRational::parse(v.get<std::string>());
  if (!parsed) fail(field, "malformed value '" + v.get<std::string>() + "'");
  return *parsed;
}

TheoryPtr theory_ref(const Json& j, const std::filesystem::path& base_dir, const std::string& field) {
  if (j.is_string()) {
    std::filesystem::path p(j.get<std::string>());
    if (p.is_relative()) p = base_dir / p;
    const Json loaded = read_json_file(p);
    return std::make_shared<const ResourceTheory>(has_points(loaded) ? convex_from_json(loaded).theory()
                                                                     : theory_from_json(loaded));
  }
  if (j.is_object()) {
    try {
      return std::make_shared<const ResourceTheory>(theory_from_json(j));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, "field '" + field + "': " + e.what());
    }
  }
  fail(field, "expected a path or an inline theory");
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // The library message carries the line and column.
    throw Error(ErrorKind::ParseError, origin + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ResourceTheory theory_from_json(const Json& j) {
  if (!j.is_object()) fail("", "a theory must be a JSON object");
  reject_unknown(j, {"resources", "free", "neutral", "combine", "points"}, "");
  const auto names = string_list(member(j, "resources", ""), "resources");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || n.find(',') != std::string::npos) fail("resources", "invalid name '" + n + "'");
    if (!seen.insert(n).second) fail("resources", "duplicate name '" + n + "'");
  }
  const ResourceSet free = names_to_set(names, member(j, "free", ""), "free");
  const ResourceSet neutral = names_to_set(names, member(j, "neutral", ""), "neutral");
  std::map<PairKey, ResourceSet> entries;
  if (j.contains("combine")) {
    const Json& c = j["combine"];
    if (!c.is_object()) fail("combine", "expected an object keyed by \"a,b\"");
    for (auto it = c.begin(); it != c.end(); ++it) {
      const std::string field = "combine." + it.key();
      const auto comma = it.key().find(',');
      if (comma == std::string::npos || it.key().find(',', comma + 1) != std::string::npos) {
        fail(field, "key must be two names joined by one comma");
      }
      ResourceId a = lookup(names, it.key().substr(0, comma), field);
      ResourceId b = lookup(names, it.key().substr(comma + 1), field);
      if (a > b) std::swap(a, b);
      ResourceSet value = names_to_set(names, it.value(), field);
      auto [slot, inserted] = entries.emplace(PairKey{a, b}, value);
      if (!inserted && slot->second != value) fail(field, "conflicts with the entry for the reversed pair");
    }
  }
  return ResourceTheory::from_entries(names, entries, free, neutral);
}

Json theory_to_json(const ResourceTheory& theory) { return theory_fields(theory); }

bool has_points(const Json& j) { return j.is_object() && j.contains("points"); }

ConvexTheory convex_from_json(const Json& j) {
  ResourceTheory t = theory_from_json(j);
  const Json& pts = member(j, "points", "");
  if (!pts.is_object()) fail("points", "expected an object keyed by resource name");
  std::vector<RationalVector> points(t.size());
  std::vector<bool> given(t.size(), false);
  for (auto it = pts.begin(); it != pts.end(); ++it) {
    const std::string field = "points." + it.key();
    const ResourceId r = lookup(t.names(), it.key(), field);
    if (!it.value().is_array() || it.value().empty()) fail(field, "expected a nonempty array of rationals");
    for (const auto& c : it.value()) {
      const ExtRational v = value_from_json(c, field);
      if (!v.is_finite()) fail(field, "coordinates must be finite");
      points[r].push_back(v.value());
    }
    given[r] = true;
  }
  for (ResourceId r = 0; r < t.size(); ++r) {
    if (!given[r]) fail("points", "missing point for '" + t.name(r) + "'");
  }
  try {
    return ConvexTheory(std::make_shared<const ResourceTheory>(std::move(t)), std::move(points));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DimensionMismatch) fail("points", e.what());
    throw;
  }
}

Json convex_to_json(const ConvexTheory& ct) {
  Json j = theory_fields(ct.theory());
  Json pts = Json::object();
  for (ResourceId r = 0; r < ct.size(); ++r) {
    Json coords = Json::array();
    for (const auto& c : ct.point(r)) coords.push_back(format_rational(c));
    pts[ct.theory().name(r)] = std::move(coords);
  }
  j["points"] = std::move(pts);
  return j;
}

PartialValuation valuation_from_json(const Json& j, const std::vector<std::string>& labels) {
  if (!j.is_object()) fail("", "a valuation must be a JSON object");
  reject_unknown(j, {"domain", "values", "provenance", "monotone_check"}, "");
  const std::size_t n = labels.size();
  const Json& values = member(j, "values", "");
  if (!values.is_object()) fail("values", "expected an object keyed by resource name");
  ResourceSet domain = j.contains("domain") ? names_to_set(labels, j["domain"], "domain") : ResourceSet(n);
  if (!j.contains("domain")) {
    for (auto it = values.begin(); it != values.end(); ++it) domain.insert(lookup(labels, it.key(), "values." + it.key()));
  }
  std::vector<ExtRational> out(n, ExtRational(0));
  ResourceSet valued(n);
  for (auto it = values.begin(); it != values.end(); ++it) {
    const std::string field = "values." + it.key();
    const ResourceId r = lookup(labels, it.key(), field);
    if (!domain.contains(r)) fail(field, "resource outside the domain");
    out[r] = value_from_json(it.value(), field);
    valued.insert(r);
  }
  if (auto missing = domain.first_not_in(valued)) fail("values", "no value for '" + labels[*missing] + "'");
  return PartialValuation::on(std::move(domain), std::move(out));
}

Json valuation_to_json(const std::vector<std::string>& labels, const PartialValuation& fw) {
  Json j;
  j["domain"] = names_of(labels, fw.domain);
  Json values = Json::object();
  fw.domain.for_each([&](ResourceId r) { values[labels[r]] = fw.at(r).str(); });
  j["values"] = std::move(values);
  return j;
}

Json monotone_to_json(const std::vector<std::string>& labels, const MonotoneFn& m) {
  Json j = valuation_to_json(labels, m.as_valuation());
  j["provenance"] = {{"construction", m.provenance.construction}, {"params", m.provenance.params}};
  j["monotone_check"] = {{"checked", m.checked}, {"holds", m.checked && !m.violation},
                         {"violation", pair_json(labels, m.violation)}};
  return j;
}

ResourceSet set_from_json(const Json& j, const ResourceTheory& theory, const std::string& field) {
  if (j.is_object()) return names_to_set(theory.names(), member(j, "set", field), field + ".set");
  return names_to_set(theory.names(), j, field);
}

MediatingMap mediating_map_from_json(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) fail("", "a mediating map must be a JSON object");
  reject_unknown(j, {"source", "target", "kind", "map", "preimage_of"}, "");
  MediatingMap f;
  f.source = theory_ref(member(j, "source", ""), base_dir, "source");
  f.target = theory_ref(member(j, "target", ""), base_dir, "target");
  const Json& kind = member(j, "kind", "");
  if (!kind.is_string()) fail("kind", "expected a string");
  auto parsed = parse_subset_order_kind(kind.get<std::string>());
  if (!parsed) fail("kind", "expected enh, deg, incl or revincl");
  f.kind = *parsed;
  const Json& map = member(j, "map", "");
  if (!map.is_object()) fail("map", "expected an object keyed by source name");
  f.image.assign(f.source->size(), f.target->empty_set());
  for (auto it = map.begin(); it != map.end(); ++it) {
    const std::string field = "map." + it.key();
    f.image[lookup(f.source->names(), it.key(), field)] = names_to_set(f.target->names(), it.value(), field);
  }
  if (j.contains("preimage_of")) {
    const Json& g = j["preimage_of"];
    if (!g.is_object()) fail("preimage_of", "expected an object keyed by target name");
    std::vector<ResourceId> back(f.target->size());
    ResourceSet given(f.target->size());
    for (auto it = g.begin(); it != g.end(); ++it) {
      const std::string field = "preimage_of." + it.key();
      const ResourceId t = lookup(f.target->names(), it.key(), field);
      if (!it.value().is_string()) fail(field, "expected a source name");
      back[t] = lookup(f.source->names(), it.value().get<std::string>(), field);
      given.insert(t);
    }
    if (!given.is_full()) fail("preimage_of", "must be defined on every target resource");
    f.preimage_of = std::move(back);
  }
  return f;
}

Json mediating_map_to_json(const MediatingMap& f) {
  Json j;
  j["source"] = theory_fields(*f.source);
  j["target"] = theory_fields(*f.target);
  j["kind"] = std::string(to_string(f.kind));
  Json map = Json::object();
  for (ResourceId r = 0; r < f.source->size(); ++r) map[f.source->name(r)] = names_of(f.target->names(), f.image[r]);
  j["map"] = std::move(map);
  if (f.preimage_of) {
    Json g = Json::object();
    for (ResourceId t = 0; t < f.target->size(); ++t) g[f.target->name(t)] = f.source->name((*f.preimage_of)[t]);
    j["preimage_of"] = std::move(g);
  }
  return j;
}

FamilySpec family_from_json(const Json& j) {
  if (!j.is_object()) fail("", "a family spec must be a JSON object");
  reject_unknown(j, {"family", "size", "builtin", "factors", "free_generators"}, "");
  FamilySpec spec;
  const Json& fam = member(j, "family", "");
  if (!fam.is_string()) fail("family", "expected a string");
  spec.family = fam.get<std::string>();
  if (j.contains("size")) {
    if (!j["size"].is_number_unsigned()) fail("size", "expected a non-negative integer");
    spec.size = j["size"].get<std::size_t>();
  }
  if (j.contains("builtin")) {
    if (!j["builtin"].is_string()) fail("builtin", "expected a string");
    spec.builtin = j["builtin"].get<std::string>();
  }
  if (j.contains("factors")) {
    if (!j["factors"].is_array()) fail("factors", "expected an array of family specs");
    for (const auto& f : j["factors"]) spec.factors.push_back(family_from_json(f));
  }
  if (j.contains("free_generators")) spec.free_generators = string_list(j["free_generators"], "free_generators");
  return spec;
}

Json family_to_json(const FamilySpec& spec) {
  Json j;
  j["family"] = spec.family;
  if (spec.family == "builtin") {
    j["builtin"] = spec.builtin;
  } else if (!spec.factors.empty()) {
    Json factors = Json::array();
    for (const auto& f : spec.factors) factors.push_back(family_to_json(f));
    j["factors"] = std::move(factors);
  } else {
    j["size"] = spec.size;
  }
  if (spec.free_generators) j["free_generators"] = *spec.free_generators;
  return j;
}

Json validation_report_to_json(const ResourceTheory& theory, const ValidationReport& report) {
  const auto list = [&](const std::vector<Violation>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back({{"axiom", v.axiom}, {"witness", witness_json(theory.names(), v.witness)}});
    return out;
  };
  Json j;
  j["ok"] = report.ok();
  j["exhaustive"] = report.exhaustive;
  j["triples_checked"] = report.triples_checked;
  j["triples_total"] = report.triples_total;
  j["violations"] = list(report.violations);
  j["warnings"] = list(report.warnings);
  return j;
}

Json inform_report_to_json(const std::vector<std::string>& labels, const InformReport& report) {
  Json rel = Json::object();
  for (const auto& r : report.relations) {
    rel[r.name] = {{"holds", r.holds}, {"witness", pair_json(labels, r.witness)}};
  }
  Json j;
  j["relations"] = std::move(rel);
  j["premise"] = report.premise;
  j["forward_yield"] = report.forward_yield;
  j["forward_cost"] = report.forward_cost;
  j["biconditional_checked"] = report.biconditional_checked;
  j["biconditional_yield"] = report.biconditional_yield;
  j["biconditional_cost"] = report.biconditional_cost;
  j["holds"] = report.holds();
  return j;
}

Json tuple_to_json(const TupleTheory& tt, ResourceId t) {
  Json out = Json::array();
  for (auto c : tt.decode(t)) out.push_back(tt.base().theory().name(c));
  return out;
}

Json tuple_theory_to_json(const TupleTheory& tt) {
  Json j;
  j["k"] = tt.k();
  j["constrained"] = tt.constrained();
  j["theory"] = theory_fields(tt.theory());
  Json tuples = Json::object();
  for (ResourceId t = 0; t < tt.size(); ++t) tuples[tt.theory().name(t)] = tuple_to_json(tt, t);
  j["tuples"] = std::move(tuples);
  return j;
}

Json order_to_json(const FinitePreorder& pre) {
  Json j;
  j["resources"] = pre.labels();
  Json down = Json::object();
  for (ResourceId a = 0; a < pre.size(); ++a) down[pre.label(a)] = names_of(pre.labels(), pre.down(a));
  j["down"] = std::move(down);
  const Quotient q = quotient(pre);
  Json classes = Json::array();
  for (const auto& c : q.classes) {
    Json members = Json::array();
    for (auto r : c) members.push_back(pre.label(r));
    classes.push_back(std::move(members));
  }
  j["classes"] = std::move(classes);
  Json hasse = Json::array();
  for (const auto& [hi, lo] : hasse_edges(q.order)) {
    hasse.push_back(Json::array({q.order.label(hi), q.order.label(lo)}));
  }
  j["hasse"] = std::move(hasse);
  j["partial_order"] = pre.is_partial_order();
  return j;
}

}  // namespace restheory
