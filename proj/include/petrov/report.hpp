#pragma once

#include "petrov/catalog.hpp"
#include "petrov/curvature_file.hpp"
#include "petrov/sectional.hpp"
#include "petrov/tolerances.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace petrov {

inline constexpr int kReportVersion = 1;

/// Labels computed from a tensor, in the same shape the catalog promises.
/// Labels that make no sense for the tensor's frame stay unset.
ClassLabels compute_labels(const CurvatureTensor& r, const Tolerances& tol = {});

/// Names of the labels where `expected` and `actual` disagree. Unset
/// expectations are skipped.
std::vector<std::string> label_mismatches(const ClassLabels& expected, const ClassLabels& actual);

struct ClassifyOptions {
  std::vector<Signature> stars{Signature::Riemannian, Signature::Lorentzian, Signature::Split};
  Tolerances tol;
  /// Multistart budget for the gsec critical-plane records (0 disables).
  int critical_starts = 16;
};

/// Classification report for one file. Numeric verdicts are objects
/// {value, tolerance, pass}. Sections per star carry `applicable`; for a
/// Lorentzian-frame tensor only the riemannian star (acting on ĉ_h) applies.
nlohmann::ordered_json classify_report(const CurvatureFile& file, const ClassifyOptions& options);

/// S/A parts, Weyl blocks and Ricci form.
nlohmann::ordered_json decompose_report(const CurvatureFile& file, const Tolerances& tol = {});

nlohmann::ordered_json critical_planes_report(const CurvatureFile& file, Flavor flavor,
                                              int starts, std::uint64_t seed = 0,
                                              const Tolerances& tol = {});

/// Flattened text form: one `key.path: value` line per leaf, array entries
/// as `key[i]`. Carries exactly the content of the JSON form.
std::string to_text(const nlohmann::ordered_json& report);

}  // namespace petrov
