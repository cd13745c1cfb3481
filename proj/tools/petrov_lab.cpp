// petrov-lab: classify pointwise curvature tensors stored in curvature files.
//
// Exit codes: 0 success, 1 analysis error (or a Bianchi violation under
// --strict), 2 usage or parse error.

#include "petrov/catalog.hpp"
#include "petrov/curvature_file.hpp"
#include "petrov/errors.hpp"
#include "petrov/report.hpp"
#include "petrov/sectional.hpp"
#include "petrov/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

using petrov::CurvatureFile;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kAnalysisError = 1;
constexpr int kUsageError = 2;

struct FileOutcome {
  int code = kOk;
  std::string out;
  std::string err;
};

// Reads and parses; on failure fills `outcome` and returns nullopt.
std::optional<CurvatureFile> load(const std::string& path, FileOutcome& outcome) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    outcome.code = kUsageError;
    outcome.err = path + ": cannot open\n";
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return petrov::parse_curvature_file(buf.str());
  } catch (const petrov::ParseError& e) {
    outcome.code = kUsageError;
    outcome.err = path + ": " + e.what() + "\n";
  } catch (const petrov::Error& e) {
    outcome.code = kUsageError;
    outcome.err = path + ": " + e.what() + "\n";
  }
  return std::nullopt;
}

std::string render(json report, const std::string& path, bool as_json) {
  report["input"]["path"] = path;
  return as_json ? report.dump() + "\n" : petrov::to_text(report);
}

FileOutcome classify_one(const std::string& path, const petrov::ClassifyOptions& options,
                         bool strict, bool as_json) {
  FileOutcome outcome;
  const auto file = load(path, outcome);
  if (!file) return outcome;
  try {
    const json report = petrov::classify_report(*file, options);
    outcome.out = render(report, path, as_json);
    if (strict && !report["input"]["bianchi"]["pass"].get<bool>()) {
      outcome.code = kAnalysisError;
      outcome.err = path + ": Bianchi identity violated\n";
    }
  } catch (const petrov::Error& e) {
    outcome.code = kAnalysisError;
    outcome.err = path + ": " + e.what() + "\n";
  }
  return outcome;
}

int run_classify(const std::vector<std::string>& files, const std::string& star, bool strict,
                 bool as_json) {
  petrov::ClassifyOptions options;
  options.tol = petrov::Tolerances::from_env();
  if (star != "all") options.stars = {*petrov::parse_signature(star)};

  std::vector<std::future<FileOutcome>> jobs;
  for (const auto& path : files) {
    jobs.push_back(std::async(std::launch::async, classify_one, path, options, strict, as_json));
  }
  int code = kOk;
  bool first = true;
  for (auto& job : jobs) {
    const FileOutcome o = job.get();
    if (!o.out.empty()) {
      if (!as_json && !first) std::cout << '\n';
      std::cout << o.out;
      first = false;
    }
    std::cerr << o.err;
    code = std::max(code, o.code);
  }
  return code;
}

int run_decompose(const std::string& path, bool as_json) {
  FileOutcome outcome;
  const auto file = load(path, outcome);
  if (!file) {
    std::cerr << outcome.err;
    return outcome.code;
  }
  try {
    std::cout << render(petrov::decompose_report(*file, petrov::Tolerances::from_env()), path,
                        as_json);
  } catch (const petrov::Error& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kAnalysisError;
  }
  return kOk;
}

int run_critical(const std::string& path, const std::string& flavor_name, int starts,
                 std::uint64_t seed, bool as_json) {
  const auto flavor = petrov::parse_flavor(flavor_name);
  FileOutcome outcome;
  const auto file = load(path, outcome);
  if (!file) {
    std::cerr << outcome.err;
    return outcome.code;
  }
  try {
    const json report = petrov::critical_planes_report(*file, *flavor, starts, seed,
                                                       petrov::Tolerances::from_env());
    std::cout << render(report, path, as_json);
  } catch (const petrov::Error& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kAnalysisError;
  }
  return kOk;
}

int run_verify(int seeds) {
  const auto results = petrov::verify::run_all(petrov::verify::Counts{}.capped(seeds));
  bool ok = true;
  for (const auto& r : results) {
    std::cout << petrov::verify::format_line(r) << '\n';
    ok = ok && r.passed;
  }
  return ok ? kOk : kAnalysisError;
}

int run_catalog_list() {
  for (const auto& e : petrov::catalog()) {
    std::cout << e.name;
    for (const auto& p : e.params) std::cout << ' ' << p.name << '=' << p.default_value;
    std::cout << "  " << e.description << '\n';
  }
  return kOk;
}

// Parameters are given positionally ("1 2") or by name ("k2=2").
int run_catalog_emit(const std::vector<std::string>& args) {
  const petrov::CatalogEntry* entry = petrov::find_generator(args.front());
  if (!entry) {
    std::cerr << "unknown generator '" << args.front() << "' (see catalog --list)\n";
    return kUsageError;
  }
  std::vector<double> params = petrov::complete_params(*entry, {});
  std::size_t next = 0;
  for (std::size_t i = 1; i < args.size(); ++i) {
    std::string_view text = args[i];
    std::size_t slot = next;
    if (const auto eq = text.find('='); eq != std::string_view::npos) {
      const auto name = text.substr(0, eq);
      const auto it = std::find_if(entry->params.begin(), entry->params.end(),
                                   [&](const auto& p) { return p.name == name; });
      if (it == entry->params.end()) {
        std::cerr << entry->name << " has no parameter '" << name << "'\n";
        return kUsageError;
      }
      slot = static_cast<std::size_t>(it - entry->params.begin());
      text = text.substr(eq + 1);
    } else {
      ++next;
    }
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (slot >= params.size() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
      std::cerr << "bad parameter '" << args[i] << "' for " << entry->name << '\n';
      return kUsageError;
    }
    params[slot] = value;
  }

  CurvatureFile file = CurvatureFile::from_tensor(entry->make(params));
  file.metadata.emplace_back("name", entry->name);
  std::string listing;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) listing += ' ';
    listing += entry->params[i].name + "=" + petrov::format_double(params[i]);
  }
  file.metadata.emplace_back("params", listing);
  std::cout << petrov::serialize(file);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic classification of pointwise curvature tensors"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string star = "all";
  bool strict = false, as_json = false;
  auto* classify = app.add_subcommand("classify", "classify curvature files");
  classify->add_option("--star", star, "which stars to test")
      ->check(CLI::IsMember({"riemannian", "lorentzian", "split", "all"}));
  classify->add_flag("--strict", strict, "exit 1 on a Bianchi violation");
  classify->add_flag("--json", as_json, "one JSON document per file");
  classify->add_option("files", files, "curvature files")->required();

  std::string path;
  auto* decompose = app.add_subcommand("decompose", "S/A parts, Weyl blocks, Ricci form");
  decompose->add_flag("--json", as_json, "JSON output");
  decompose->add_option("file", path, "curvature file")->required();

  std::string flavor = "gsec";
  int starts = 64;
  std::uint64_t seed = 0;
  auto* critical = app.add_subcommand("critical-planes", "multistart search for critical planes");
  critical->add_option("--flavor", flavor, "gsec, tsec or ssec")
      ->check(CLI::IsMember({"gsec", "tsec", "ssec"}));
  critical->add_option("--starts", starts, "number of random starts")->check(CLI::Range(1, 100000));
  critical->add_option("--seed", seed, "random seed");
  critical->add_flag("--json", as_json, "JSON output");
  critical->add_option("file", path, "curvature file")->required();

  int seeds = 0;
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--seeds", seeds, "cap on instances per check (default: full suite)");

  bool list = false;
  std::vector<std::string> emit;
  auto* cat = app.add_subcommand("catalog", "built-in generators");
  auto* list_opt = cat->add_flag("--list", list, "list generators");
  auto* emit_opt = cat->add_option("--emit", emit, "NAME [PARAMS...]: write a curvature file")
                       ->expected(1, -1);
  list_opt->excludes(emit_opt);
  cat->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsageError;
  }

  if (*classify) return run_classify(files, star, strict, as_json);
  if (*decompose) return run_decompose(path, as_json);
  if (*critical) return run_critical(path, flavor, starts, seed, as_json);
  if (*verify) return run_verify(seeds);
  if (*cat) return list ? run_catalog_list() : run_catalog_emit(emit);
  return kUsageError;
}
