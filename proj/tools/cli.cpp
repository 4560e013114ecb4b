#include "cli.hpp"

#include "restheory/convex.hpp"
#include "restheory/dist.hpp"
#include "restheory/errors.hpp"
#include "restheory/gen.hpp"
#include "restheory/harness.hpp"
#include "restheory/inform.hpp"
#include "restheory/io.hpp"
#include "restheory/monotone.hpp"
#include "restheory/order.hpp"
#include "restheory/translate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace restheory::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

struct Options {
  std::string theory;
  std::vector<std::string> valuations;
  std::string map;
  std::string d;
  std::size_t k = 2;
  bool constrained = false;
  std::size_t axis = 1;
  std::string mode;
  std::string family;
  std::size_t size = 1;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t cap = 64;
  std::string out;
  std::string format = "json";
  std::string suite = "all";
  bool strict = false;
  bool force = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Result {
  std::string text;
  int code = kOk;
};

Result json_result(const Json& j, bool ok = true) { return {dump(j), ok ? kOk : kDomainFailure}; }

std::filesystem::path parent_of(const std::string& path) { return std::filesystem::path(path).parent_path(); }

Json load(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string(flag) + " is required");
  return read_json_file(path);
}

ResourceTheory load_theory(const Options& o) {
  const Json j = load(o.theory, "--theory");
  return has_points(j) ? convex_from_json(j).theory() : theory_from_json(j);
}

PartialValuation load_valuation(const std::string& path, const std::vector<std::string>& labels) {
  try {
    return valuation_from_json(load(path, "--valuation"), labels);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw Error(ErrorKind::ParseError, path + ": " + e.what());
    throw;
  }
}

// "free", absent, or a file holding a name list.
std::optional<ResourceSet> load_window(const std::string& d, const ResourceTheory& theory) {
  if (d.empty() || d == "free") return std::nullopt;
  return set_from_json(read_json_file(d), theory, "D");
}

void require_json(const Options& o) {
  if (o.format != "json") throw UsageError("--format " + o.format + " is not available for this command");
}

// ------------------------------------------------------------- commands

Result cmd_validate(const Options& o) {
  require_json(o);
  ValidationOptions vo;
  vo.cap = o.cap;
  vo.seed = o.seed;
  vo.strict = o.strict;
  const Json j = load(o.theory, "theory file");
  if (has_points(j)) {
    const ConvexTheory ct = convex_from_json(j);
    const ValidationReport rep = validate(ct, vo);
    return json_result(validation_report_to_json(ct.theory(), rep), rep.ok());
  }
  const ResourceTheory t = theory_from_json(j);
  const ValidationReport rep = validate(t, vo);
  return json_result(validation_report_to_json(t, rep), rep.ok());
}

void require_valid(const ResourceTheory& t) {
  const ValidationReport rep = validate(t);
  if (!rep.ok()) {
    throw Error(ErrorKind::AxiomViolation, "theory violates " + rep.violations.front().axiom);
  }
}

Result cmd_order(const Options& o) {
  const ResourceTheory t = load_theory(o);
  require_valid(t);
  const FinitePreorder pre = resource_order(t);
  if (o.format == "dot") return {to_dot(pre, "order"), kOk};
  require_json(o);
  return json_result(order_to_json(pre));
}

Result cmd_yield_cost(const Options& o, bool is_yield) {
  require_json(o);
  const auto theory = std::make_shared<const ResourceTheory>(load_theory(o));
  require_valid(*theory);
  if (o.valuations.size() != 1) throw UsageError("exactly one --valuation is required");
  const OrderedResources ctx = OrderedResources::from_theory(theory);
  const PartialValuation fw = load_valuation(o.valuations.front(), theory->names());
  const auto d = load_window(o.d, *theory);
  MonotoneFn m = d ? (is_yield ? yield(ctx, fw, *d) : cost(ctx, fw, *d))
                   : (is_yield ? yield(ctx, fw) : cost(ctx, fw));
  return json_result(monotone_to_json(theory->names(), m), m.verified());
}

Result cmd_pullback(const Options& o) {
  require_json(o);
  const MediatingMap f = mediating_map_from_json(load(o.map, "--map"), parent_of(o.map));
  if (o.valuations.size() != 1) throw UsageError("exactly one --valuation is required");
  const PartialValuation root = load_valuation(o.valuations.front(), f.target->names());
  Extremum mode;
  if (o.mode == "max") {
    mode = Extremum::max;
  } else if (o.mode == "min") {
    mode = Extremum::min;
  } else {
    throw UsageError("--mode must be max or min");
  }
  PullbackOptions po;
  po.force = o.force;
  const MonotoneFn m = pull_back(f, root, mode, po);
  return json_result(monotone_to_json(f.source->names(), m), m.verified());
}

Result cmd_contraction(const Options& o) {
  require_json(o);
  const auto theory = std::make_shared<const ResourceTheory>(load_theory(o));
  require_valid(*theory);
  const DeterministicTheory base(theory);
  const TupleTheory tt = build_k_dist(base, o.k, false, std::max<std::size_t>(o.cap, 1000000));
  PartialValuation f = difference_indicator(tt);
  if (o.valuations.size() > 1) throw UsageError("at most one --valuation is allowed");
  if (!o.valuations.empty()) f = load_valuation(o.valuations.front(), tt.theory().names());
  std::optional<ContractionCertificate> cert = ContractionCertificate::certify(f, tt);
  if (!cert) {
    if (!o.force) {
      const auto v = contraction_violation(f, tt);
      std::string where = v ? " at (" + tt.theory().name(v->first) + ", " + tt.theory().name(v->second) + ")" : "";
      throw Error(ErrorKind::UncertifiedInput, "function is not a " + std::to_string(o.k) + "-contraction" + where);
    }
    cert = ContractionCertificate::force(f, tt);
  }
  const std::string mode = o.mode.empty() ? "axis" : o.mode;
  MonotoneFn m;
  if (mode == "min") {
    const auto d = load_window(o.d, *theory);
    m = min_distinguishability(base, *cert, d ? *d : theory->free());
  } else if (mode == "axis") {
    if (o.axis < 1 || o.axis > o.k) throw UsageError("--axis must lie in 1..k");
    const TupleTheory cons = build_k_dist(base, o.k, true);
    ResourceSet w(cons.size());
    if (o.d.empty() || o.d == "free") {
      // Other components free: R on the axis, R_free elsewhere.
      for (ResourceId t = 0; t < cons.size(); ++t) {
        const auto parts = cons.decode(t);
        bool inside = true;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (i + 1 != o.axis) inside = inside && theory->free().contains(parts[i]);
        }
        if (inside) w.insert(t);
      }
    } else {
      w = set_from_json(read_json_file(o.d), cons.theory(), "D");
    }
    m = contraction_monotone(base, *cert, o.axis - 1, w);
  } else {
    throw UsageError("--mode must be axis or min");
  }
  return json_result(monotone_to_json(theory->names(), m), m.verified());
}

Result cmd_convex(const Options& o) {
  require_json(o);
  const ConvexTheory ct = convex_from_json(load(o.theory, "--theory"));
  const ValidationReport rep = validate(ct);
  if (!rep.ok()) throw Error(ErrorKind::AxiomViolation, "theory violates " + rep.violations.front().axiom);
  if (o.mode == "classify") {
    Json rows = Json::array();
    std::size_t constant = 0;
    for (const auto& c : classify_constructions(ct)) {
      Json row;
      row["axis"] = c.axis;
      row["windows"] = c.windows;
      row["constant"] = c.constant;
      row["named"] = c.named ? Json(to_string(*c.named)) : Json(nullptr);
      row["monotone"] = monotone_to_json(ct.theory().names(), c.monotone);
      rows.push_back(std::move(row));
      constant += c.constant ? 1 : 0;
    }
    Json j;
    j["free_is_convex"] = free_is_convex(ct);
    j["constant_count"] = constant;
    j["constructions"] = std::move(rows);
    return json_result(j);
  }
  const auto kind = parse_convex_monotone_kind(o.mode);
  if (!kind) throw UsageError("--mode must be weight, robustness, free-robustness, non-convexity or classify");
  const MonotoneFn m = convex_monotone(ct, *kind);
  return json_result(monotone_to_json(ct.theory().names(), m), m.verified());
}

Result cmd_compare(const Options& o) {
  require_json(o);
  const auto theory = std::make_shared<const ResourceTheory>(load_theory(o));
  require_valid(*theory);
  if (o.valuations.size() != 2) throw UsageError("compare needs two --valuation files");
  const OrderedResources ctx = OrderedResources::from_theory(theory);
  const PartialValuation f = load_valuation(o.valuations[0], theory->names());
  const PartialValuation g = load_valuation(o.valuations[1], theory->names());
  const InformReport rep = prop_informative_yield_cost_check(f, g, load_window(o.d, *theory), ctx);
  return json_result(inform_report_to_json(theory->names(), rep), rep.holds());
}

Result cmd_dist(const Options& o) {
  const auto theory = std::make_shared<const ResourceTheory>(load_theory(o));
  require_valid(*theory);
  const TupleTheory tt = build_k_dist(DeterministicTheory(theory), o.k, o.constrained, std::max<std::size_t>(o.cap, 1));
  if (o.format == "dot") return {to_dot(resource_order(tt.theory()), "dist"), kOk};
  require_json(o);
  Json j = tuple_theory_to_json(tt);
  const ValidationReport rep = validate(tt.theory());
  j["validation"] = validation_report_to_json(tt.theory(), rep);
  return json_result(j, rep.ok());
}

FamilySpec family_of(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  if (o.family.size() > 5 && o.family.substr(o.family.size() - 5) == ".json") {
    return family_from_json(read_json_file(o.family));
  }
  static const std::vector<std::string> builtins{"TRI", "UM1", "CVX1", "P5"};
  if (std::find(builtins.begin(), builtins.end(), o.family) != builtins.end()) {
    return FamilySpec{"builtin", 0, o.family, {}, std::nullopt};
  }
  // Composite families need factors and so only come from spec files.
  static const std::vector<std::string> families{"union-monoid", "truncated-addition", "max-semilattice",
                                                 "tropical-min-plus", "convex-product"};
  if (std::find(families.begin(), families.end(), o.family) == families.end()) {
    throw UsageError("--family must be a family name, a builtin name or a .json spec file");
  }
  return FamilySpec{o.family, o.size, "", {}, std::nullopt};
}

Result cmd_gen(const Options& o) {
  require_json(o);
  const std::string mode = o.mode.empty() ? "theory" : o.mode;
  if (mode == "theory") {
    const FamilySpec spec = family_of(o);
    const bool convex = spec.family == "convex-product" || (spec.family == "builtin" && spec.builtin == "CVX1");
    return json_result(convex ? convex_to_json(build_convex(spec, o.seed)) : theory_to_json(build(spec, o.seed)));
  }
  if (mode == "valuation" || mode == "monotone-valuation") {
    const auto theory = std::make_shared<const ResourceTheory>(load_theory(o));
    require_valid(*theory);
    const auto domain = parse_domain_mode(o.d.empty() ? "full" : o.d);
    if (!domain) throw UsageError("--D must be full, random-subset, downward-closed or upward-closed");
    const OrderedResources ctx = OrderedResources::from_theory(theory);
    return json_result(
        valuation_to_json(theory->names(), random_valuation(ctx, o.seed, mode == "monotone-valuation", *domain)));
  }
  throw UsageError("--mode must be theory, valuation or monotone-valuation");
}

Json criterion_json(const CriterionResult& r) {
  Json j;
  j["id"] = r.id;
  j["suite"] = r.suite;
  j["title"] = r.title;
  j["passed"] = r.passed;
  j["cases"] = r.cases;
  j["failure_count"] = r.failure_count;
  j["failures"] = r.failures;
  j["notes"] = r.notes;
  j["documented_failures"] = r.documented_failures;
  j["unattainable"] = r.unattainable.empty() ? Json(nullptr) : Json(r.unattainable);
  return j;
}

Result cmd_check(const Options& o) {
  require_json(o);
  std::vector<CriterionResult> results;
  if (o.suite == "all") {
    results = run_all(o.trials, o.seed);
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) throw UsageError("unknown suite " + o.suite);
    results.push_back(run_suite(o.suite, o.trials, o.seed));
  }
  Json j;
  j["suite"] = o.suite;
  j["trials"] = o.trials;
  j["seed"] = o.seed;
  bool passed = true;
  Json rows = Json::array();
  for (const auto& r : results) {
    rows.push_back(criterion_json(r));
    passed = passed && r.passed;
  }
  j["criteria"] = std::move(rows);
  j["passed"] = passed;
  return json_result(j, passed);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite resource theories: validation, orders, monotone constructions and checks", "restheory"};
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--cap", o.cap, "Carrier cap for exhaustive work")->capture_default_str();
  app.add_option("--out", o.out, "Write the report to this file instead of standard output");
  app.add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

  const auto common = [&](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };

  CLI::App* validate_cmd = common(app.add_subcommand("validate", "Check the theory axioms"));
  validate_cmd->add_option("theory", o.theory, "Theory JSON file")->required();
  validate_cmd->add_flag("--strict", o.strict, "Warn about incompatible pairs");

  CLI::App* order_cmd = common(app.add_subcommand("order", "Resource preorder as JSON or a DOT Hasse diagram"));
  order_cmd->add_option("--theory", o.theory)->required();

  CLI::App* monotone_cmd = common(app.add_subcommand("monotone", "Construct a monotone"));
  monotone_cmd->require_subcommand(1);
  CLI::App* yield_cmd = common(monotone_cmd->add_subcommand("yield", "Yield construction"));
  CLI::App* cost_cmd = common(monotone_cmd->add_subcommand("cost", "Cost construction"));
  for (CLI::App* sub : {yield_cmd, cost_cmd}) {
    sub->add_option("--theory", o.theory)->required();
    sub->add_option("--valuation", o.valuations)->required();
    sub->add_option("--D", o.d, "free or a file listing a downward closed set");
  }
  CLI::App* pullback_cmd = common(monotone_cmd->add_subcommand("pullback", "Translate a monotone through a mediating map"));
  pullback_cmd->add_option("--map", o.map)->required();
  pullback_cmd->add_option("--valuation", o.valuations, "Root on the target")->required();
  pullback_cmd->add_option("--mode", o.mode, "max or min")->required();
  pullback_cmd->add_flag("--force", o.force, "Skip certification; the monotonicity check still runs");
  CLI::App* contraction_cmd = common(monotone_cmd->add_subcommand("contraction", "Monotone from a k-contraction"));
  contraction_cmd->add_option("--theory", o.theory, "Deterministic base theory")->required();
  contraction_cmd->add_option("--k", o.k)->capture_default_str();
  contraction_cmd->add_option("--valuation", o.valuations, "Contraction over tuple names; default difference indicator");
  contraction_cmd->add_option("--axis", o.axis)->capture_default_str();
  contraction_cmd->add_option("--mode", o.mode, "axis or min");
  contraction_cmd->add_option("--D", o.d, "Window file; tuples for axis mode, base resources for min mode");
  contraction_cmd->add_flag("--force", o.force);
  CLI::App* convex_cmd = common(monotone_cmd->add_subcommand("convex", "Convex-alignment monotones"));
  convex_cmd->add_option("--theory", o.theory, "Convex theory JSON")->required();
  convex_cmd->add_option("--mode", o.mode, "weight, robustness, free-robustness, non-convexity or classify")
      ->required();

  CLI::App* compare_cmd = common(app.add_subcommand("compare", "Compare two valuations by informativeness"));
  compare_cmd->add_option("--theory", o.theory)->required();
  compare_cmd->add_option("--valuation", o.valuations, "Pass twice: f then g")->required();
  compare_cmd->add_option("--D", o.d);

  CLI::App* dist_cmd = common(app.add_subcommand("dist", "Build a k-distinguishability theory"));
  dist_cmd->add_option("--theory", o.theory)->required();
  dist_cmd->add_option("--k", o.k)->capture_default_str();
  dist_cmd->add_flag("--constrained", o.constrained);

  CLI::App* gen_cmd = common(app.add_subcommand("gen", "Generate a theory or a valuation"));
  gen_cmd->add_option("--family", o.family, "Family name, builtin name or spec file");
  gen_cmd->add_option("--size", o.size)->capture_default_str();
  gen_cmd->add_option("--mode", o.mode, "theory, valuation or monotone-valuation");
  gen_cmd->add_option("--theory", o.theory, "Theory for valuation modes");
  gen_cmd->add_option("--D", o.d, "Domain mode for valuations");

  CLI::App* check_cmd = common(app.add_subcommand("check", "Run the property suites"));
  check_cmd->add_option("--suite", o.suite)->capture_default_str();
  check_cmd->add_option("--trials", o.trials, "Seeded cases per suite; 0 selects the defaults")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kOk : kUsage;
  }

  Result result;
  try {
    if (*validate_cmd) result = cmd_validate(o);
    if (*order_cmd) result = cmd_order(o);
    if (*yield_cmd) result = cmd_yield_cost(o, true);
    if (*cost_cmd) result = cmd_yield_cost(o, false);
    if (*pullback_cmd) result = cmd_pullback(o);
    if (*contraction_cmd) result = cmd_contraction(o);
    if (*convex_cmd) result = cmd_convex(o);
    if (*compare_cmd) result = cmd_compare(o);
    if (*dist_cmd) result = cmd_dist(o);
    if (*gen_cmd) result = cmd_gen(o);
    if (*check_cmd) result = cmd_check(o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? kUsage : kDomainFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kUsage;
  }

  if (o.out.empty()) {
    out << result.text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return kUsage;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace restheory::cli
