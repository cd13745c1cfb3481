// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include "cli_runner.hpp"
#include "petrov/catalog.hpp"
#include "petrov/report.hpp"
#include "petrov/verify.hpp"

#include <chrono>
#include <iostream>

namespace {

using petrov::verify::CriterionResult;

// catalog --emit → file → classify --star all, through the real binary.
CriterionResult cli_pipeline() {
  CriterionResult r;
  r.id = "cli_pipeline";
  r.description = "catalog --emit → file → classify --star all reproduces the class labels";
  r.threshold = 0.5;
  const auto dir = cli::scratch_dir("acceptance");
  int wrong = 0;
  for (const petrov::CatalogEntry& e : petrov::catalog()) {
    const bool seeded = e.params.back().name == "seed";
    for (int s = 0; s < (seeded ? 3 : 1); ++s) {
      std::vector<double> params = petrov::complete_params(e, {});
      std::string args = "catalog --emit " + e.name;
      if (seeded) {
        params.back() = s;
        args += " seed=" + std::to_string(s);
      }
      const auto path = dir / (e.name + "_" + std::to_string(s) + ".curv");
      const cli::Result emit = cli::run(args);
      cli::write(path, emit.out);
      const cli::Result out = cli::run("classify --star all --json " + path.string());
      ++r.instances;
      if (emit.code != 0 || out.code != 0) {
        ++wrong;
        r.detail += e.name + ": exit code; ";
        continue;
      }
      const auto labels = nlohmann::json::parse(out.out)["labels"];
      const petrov::ClassLabels want = e.expected(params);
      auto check = [&](const char* key, const auto& expected) {
        if (!expected) return;
        const bool ok = labels.contains(key) && labels[key] == *expected;
        if (!ok) {
          ++wrong;
          r.detail += e.name + "(" + std::to_string(s) + ")." + key + "; ";
        }
      };
      check("einstein", want.einstein);
      check("star_l_einstein", want.star_l_einstein);
      check("almost_einstein", want.almost_einstein);
      check("w_plus_equals_w_minus", want.w_plus_equals_w_minus);
      check("star_h_einstein", want.star_h_einstein);
      if (want.petrov_type) {
        const std::optional<std::string> type{std::string(petrov::to_string(*want.petrov_type))};
        check("petrov_type", type);
      }
    }
  }
  r.worst = wrong;
  r.passed = wrong == 0 && r.instances > 0;
  return r;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CriterionResult> results = petrov::verify::run_all();
  results.push_back(cli_pipeline());
  int failed = 0;
  for (const auto& r : results) {
    std::cout << petrov::verify::format_line(r) << '\n';
    failed += r.passed ? 0 : 1;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
            << " criteria passed in " << secs << " s\n";
  return failed == 0 ? 0 : 1;
}
