// One line per acceptance criterion. Exit status is 0 when every failure is
// a documented one (a confirmed counterexample to the claimed property).

#include "cli.hpp"
#include "restheory/harness.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using restheory::CriterionResult;

namespace {

struct GoldenCase {
  std::string name;
  int exit_code = 0;
  std::vector<std::string> args;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<GoldenCase> read_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    const auto p1 = line.find('|');
    const auto p2 = line.find('|', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) throw std::runtime_error("bad manifest line: " + line);
    GoldenCase c;
    c.name = trim(line.substr(0, p1));
    c.exit_code = std::stoi(trim(line.substr(p1 + 1, p2 - p1 - 1)));
    std::istringstream words(line.substr(p2 + 1));
    for (std::string w; words >> w;) c.args.push_back(w);
    cases.push_back(std::move(c));
  }
  return cases;
}

// Standard output, then standard error under a separator when present.
std::string transcript(const std::string& out, const std::string& err) {
  return err.empty() ? out : out + "--- stderr ---\n" + err;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CriterionResult run_golden(const fs::path& data_dir, const fs::path& golden_dir, bool update) {
  CriterionResult r;
  r.id = 11;
  r.suite = "cli-golden";
  r.title = "CLI output is byte-identical to the golden files";
  const auto cases = read_manifest(golden_dir / "cases.txt");
  const fs::path cwd = fs::current_path();
  fs::current_path(data_dir);
  for (const GoldenCase& c : cases) {
    ++r.cases;
    std::ostringstream out, err;
    const int code = restheory::cli::run(c.args, out, err);
    const std::string text = transcript(out.str(), err.str());
    const fs::path file = golden_dir / (c.name + ".out");
    std::string problem;
    if (code != c.exit_code) {
      problem = "exit " + std::to_string(code) + ", expected " + std::to_string(c.exit_code);
    }
    if (update) {
      std::ofstream(file, std::ios::binary) << text;
    } else if (!fs::exists(file)) {
      problem += (problem.empty() ? "" : "; ") + std::string("missing golden file");
    } else if (slurp(file) != text) {
      problem += (problem.empty() ? "" : "; ") + std::string("output differs from golden");
    }
    if (!problem.empty()) {
      ++r.failure_count;
      if (r.failures.size() < 5) r.failures.push_back(c.name + ": " + problem);
    }
    // Determinism: a second run must reproduce the first byte for byte.
    std::ostringstream out2, err2;
    const int code2 = restheory::cli::run(c.args, out2, err2);
    if (code2 != code || transcript(out2.str(), err2.str()) != text) {
      ++r.failure_count;
      if (r.failures.size() < 5) r.failures.push_back(c.name + ": second run differs");
    }
  }
  fs::current_path(cwd);
  if (update) r.notes.push_back("golden files rewritten");
  r.passed = r.failure_count == 0 && r.cases > 0;
  return r;
}

void print(const CriterionResult& r, bool verbose) {
  const char* status = r.passed ? "PASS" : "FAIL";
  std::cout << '[' << status << "] " << r.id << ' ' << r.suite << ": " << r.title << " (" << r.cases << " cases";
  if (r.failure_count) std::cout << ", " << r.failure_count << " failures";
  if (r.documented_failures) std::cout << ", " << r.documented_failures << " documented failures";
  std::cout << ")\n";
  for (const auto& f : r.failures) std::cout << "    failure: " << f << '\n';
  if (!r.unattainable.empty()) std::cout << "    unattainable: " << r.unattainable << '\n';
  if (verbose) {
    for (const auto& n : r.notes) std::cout << "    note: " << n << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::size_t trials = 0;
  std::uint64_t seed = 7;
  std::string data_dir = RESTHEORY_TEST_DATA_DIR;
  std::string golden_dir = RESTHEORY_GOLDEN_DIR;
  bool update = false;
  bool verbose = false;
  app.add_option("--trials", trials, "Seeded cases per suite; 0 selects the defaults");
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--data-dir", data_dir)->capture_default_str();
  app.add_option("--golden-dir", golden_dir)->capture_default_str();
  app.add_flag("--update-golden", update, "Rewrite the golden files from the current output");
  app.add_flag("-v,--verbose", verbose, "Print suite notes");
  CLI11_PARSE(app, argc, argv);

  std::vector<CriterionResult> results = restheory::run_all(trials, seed);
  try {
    results.push_back(run_golden(fs::absolute(data_dir), fs::absolute(golden_dir), update));
  } catch (const std::exception& e) {
    CriterionResult r;
    r.id = 11;
    r.suite = "cli-golden";
    r.title = "CLI output is byte-identical to the golden files";
    r.failure_count = 1;
    r.failures.push_back(e.what());
    results.push_back(r);
  }

  std::size_t passed = 0;
  std::size_t documented = 0;
  std::size_t failed = 0;
  for (const auto& r : results) {
    print(r, verbose);
    if (r.passed) {
      ++passed;
    } else if (r.only_documented_failures()) {
      ++documented;
    } else {
      ++failed;
    }
  }
  std::cout << passed << " passed, " << documented << " failed with documented counterexamples, " << failed
            << " failed\n";
  return failed == 0 ? 0 : 1;
}
