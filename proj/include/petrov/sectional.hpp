#pragma once

#include "petrov/curvature.hpp"
#include "petrov/tolerances.hpp"
#include "petrov/types.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace petrov {

/// Which quadratic form on 2-planes.
enum class Flavor {
  Gsec,  // ⟨𝓡P, P⟩, Riemannian Λ² metric
  Tsec,  // ε_L(P)⟨𝓡P, P⟩_L
  Ssec,  // ε_L(P)⟨SP, P⟩_L, S the ★L-commuting part of 𝓡
};

std::string_view to_string(Flavor flavor);
std::optional<Flavor> parse_flavor(std::string_view text);

// The three forms accept any decomposable P and normalize it in the metric
// they use. They throw NotAPlane for indecomposable input; the L-forms throw
// DegeneratePlane when |⟨P,P⟩_L| < tol · |P|².
double gsec(const CurvatureTensor& r, const Bivector& plane);
double tsec(const CurvatureTensor& r, const Bivector& plane, double degeneracy_tol = 1e-6);
double ssec(const CurvatureTensor& r, const Bivector& plane, double degeneracy_tol = 1e-6);
double sectional(const CurvatureTensor& r, const Bivector& plane, Flavor flavor);

enum class ChartComponent {
  GPlus,   // base plane f3∧f4, ⟨φ,φ⟩ = +1
  GMinus,  // base plane f1∧f2, ⟨φ,φ⟩ = −1 (Lorentzian metric only)
};

/// Local chart of the Grassmannian of nondegenerate 2-planes around a base
/// plane of an orthonormal frame {f1..f4} (columns of base_frame, in
/// coordinates of the fixed frame; f1 timelike for Lorentzian charts).
///
///   G+: φ(x) = (f3 + x3 f1 + x4 f2) ∧ (f4 + x1 f1 + x2 f2) / √|N|
///   G−: φ(x) = (f1 + x3 f3 + x4 f4) ∧ (f2 + x1 f3 + x2 f4) / √|N|
///
/// with N the squared length of the numerator in the chart's metric.
struct GrassmannChart {
  Mat4 base_frame = Mat4::Identity();
  ChartComponent component = ChartComponent::GPlus;
  Signature metric = Signature::Lorentzian;
};

/// Throws ChartDomainExceeded when N changes sign or |N| ≤ domain_tol.
Bivector grassmann_chart_eval(const GrassmannChart& chart, const Vec4& x,
                              double domain_tol = 1e-9);

/// Orthonormal frame adapted to a nondegenerate plane P for the metric of
/// `metric`, with P the base plane of the returned chart (same orientation).
/// When T = e1 lies in P or in its orthogonal complement, e1 is kept as f1.
GrassmannChart adapted_chart(const Bivector& plane, Signature metric);

/// Value, gradient and Hessian of (the flavor's form)∘φ at x.
struct ChartJet {
  double value = 0.0;
  Vec4 gradient = Vec4::Zero();
  Mat4 hessian = Mat4::Zero();
};

ChartJet chart_jet(const CurvatureTensor& r, Flavor flavor, const GrassmannChart& chart,
                   const Vec4& x);

/// The chart metric a flavor lives in.
Signature flavor_metric(Flavor flavor);

enum class TRelation { ContainsT, OrthogonalToT, Generic };
std::string_view to_string(TRelation relation);
TRelation relation_to_t(const Bivector& plane, double tol = 1e-8);

struct CriticalVerdict {
  bool is_critical = false;
  double residual = 0.0;
  double tolerance = 0.0;
  /// Gsec: (a, b) of 𝓡P ≈ aP + b★P, rest zero. L-flavors: the four sums
  /// K_{34ij} + K_{ij34} (G+) or K_{12ij} + K_{ij12} (G−) in the adapted frame.
  std::array<double, 4> conditions{};
  TRelation relation = TRelation::Generic;
  ChartComponent component = ChartComponent::GPlus;
};

/// Closed-form criticality test.
///
/// Gsec: residual = min over a, b of ‖𝓡P − aP − b★P‖.
/// Tsec/Ssec: complete P to an L-orthonormal frame (keeping T = e1 when P
/// contains or is orthogonal to T) and evaluate the component sums
/// K_{34ij} + K_{ij34}, (ij) ∈ {31, 32, 14, 24}, for P = f3∧f4 ∈ G+, or
/// K_{12ij} + K_{ij12}, (ij) ∈ {13, 14, 32, 42}, for P = f1∧f2 ∈ G−, where
/// K_{ijkl} = −⟨X(f_i∧f_j), f_k∧f_l⟩_L and X is 𝓡 (Tsec) or S (Ssec).
/// residual is the Euclidean norm of the four sums.
CriticalVerdict critical_test(const CurvatureTensor& r, const Bivector& plane, Flavor flavor,
                              const Tolerances& tol = {});

struct CriticalPlaneRecord {
  Bivector plane;
  double value = 0.0;
  Flavor flavor = Flavor::Gsec;
  TRelation relation = TRelation::Generic;
  /// Norm of the chart gradient of the flavor at the plane.
  double residual = 0.0;
};

struct CriticalSearch {
  std::vector<CriticalPlaneRecord> records;
  int starts = 0;
  int converged = 0;
  /// Every start was already critical (e.g. constant curvature).
  bool saturated = false;
  /// Some start failed to converge; records hold what was found.
  bool incomplete = false;
};

/// Multistart search for critical planes of a flavor.
///
/// Each start is a random nondegenerate plane. From there a damped
/// Gauss-Newton iteration drives the squared chart gradient to zero, with the
/// chart re-centred on the current plane every step so that iterates stay on
/// the Grassmannian. Converged planes (residual < 1e-7) are deduplicated by
/// min(‖P − Q‖, ‖P + Q‖) < 1e-4 on Euclidean-normalized coordinates. Starts
/// run in parallel; the result does not depend on the thread count.
CriticalSearch find_critical_planes(const CurvatureTensor& r, Flavor flavor, int n_starts,
                                    std::uint64_t seed = 0, const Tolerances& tol = {});

/// Max over n random nondegenerate planes of |F(★P) − F(P)|, where the star
/// and form are paired as ★ → gsec, ★L → tsec, ★h (split) → gsec.
double duality_check(const CurvatureTensor& r, Signature star_kind, int n_samples,
                     std::uint64_t seed = 0);

}  // namespace petrov
