#pragma once

#include "petrov/algebra.hpp"
#include "petrov/curvature.hpp"
#include "petrov/hodge.hpp"
#include "petrov/tolerances.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace petrov {

/// ‖M∘★ − ★∘M‖∞. Zero exactly when M is ★-Einstein.
double star_einstein_residual(const Mat6& m, const StarOperator& star);

enum class PetrovType { I, II, III };
std::string_view to_string(PetrovType type);

enum class PetrovMode {
  /// The operator itself must commute with ★L.
  FullOperator,
  /// Classify the ★L-commuting part S = ½(M − ★L M ★L) of any operator.
  SPart,
};

struct PetrovReport {
  PetrovType type = PetrovType::I;
  PetrovMode mode = PetrovMode::FullOperator;
  std::vector<EigenCluster> clusters;
  /// Commutator of the input (not of S) with ★L.
  double commutation_residual = 0.0;
  double tolerance_margin = 0.0;
};

/// Petrov Type I/II/III from the number (3/2/1) of independent complex
/// eigenvectors of the complexified operator. Throws NotComplexLinear in
/// FullOperator mode when the commutator exceeds tol.identity · ‖M‖∞.
PetrovReport petrov_type(const Mat6& m, PetrovMode mode, const Tolerances& tol = {});
PetrovReport petrov_type(const CurvatureTensor& r, PetrovMode mode, const Tolerances& tol = {});

struct AlmostEinsteinVerdict {
  bool matches = false;
  double lambda = 0.0;
  Vec3 psi = Vec3::Zero();
  /// Largest deviation among entries that must equal λ or vanish.
  double residual = 0.0;
  double tolerance = 0.0;
};

/// Does Ric have the form [[λ, ψᵀ], [ψ, λI₃]] in the e1 = T frame?
AlmostEinsteinVerdict almost_einstein_check(const CurvatureTensor& r, const Tolerances& tol = {});

struct WeylSymmetryVerdict {
  bool holds = false;
  double residual = 0.0;  // ‖W+ − W−‖∞
  double tolerance = 0.0;
};

WeylSymmetryVerdict w_plus_equals_w_minus(const CurvatureTensor& r, const Tolerances& tol = {});

struct NormalForm {
  Vec3 lambdas = Vec3::Zero();
  Vec3 mus = Vec3::Zero();
  /// P_i = (α_i + β_i)/√2 and ★P_i = (α_i − β_i)/√2.
  std::array<Bivector, 3> planes;
  std::array<Bivector, 3> dual_planes;
  /// ‖ĉ_h − Σ_i (λ_i P_i + μ_i ★P_i) P_iᵀ + (μ_i P_i + λ_i ★P_i) ★P_iᵀ‖∞
  double residual = 0.0;
};

/// Normal form of a ★-commuting self-adjoint operator ĉ_h (Lorentzian frame)
/// or 𝓡 (Riemannian frame, the Einstein case), with ★ = [[O,I],[I,O]].
///
/// ĉ_h restricted to self-dual / anti-self-dual 2-vectors is diagonalized;
/// eigenvectors α_i, β_i are paired in descending eigenvalue order. Then
/// ĉ_h P_i = λ_i P_i + μ_i ★P_i with λ_i = (p_i + q_i)/2, μ_i = (p_i − q_i)/2,
/// where p, q are the descending self-dual and anti-self-dual eigenvalues.
/// Throws NotStarEinstein when the commutator exceeds tol.identity.
NormalForm normal_form_lorentzian(const CurvatureTensor& r, const Tolerances& tol = {});

}  // namespace petrov
