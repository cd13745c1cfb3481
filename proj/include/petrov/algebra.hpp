#pragma once

// Conventions for Λ² of an oriented 4-dimensional inner product space.
//
// Frame indices are 0-based in code: e0..e3 stand for e1..e4. The basis of Λ²
// is fixed everywhere as
//
//   slot 0: e1∧e2   slot 1: e1∧e3   slot 2: e1∧e4
//   slot 3: e3∧e4   slot 4: e4∧e2   slot 5: e2∧e3
//
// so slot a and slot a+3 hold complementary pairs. Every 6×6 matrix in this
// library is written in this basis. Orientation: dV(e1,e2,e3,e4) = +1.

#include "petrov/tolerances.hpp"
#include "petrov/types.hpp"

#include <array>
#include <utility>
#include <vector>

namespace petrov {

inline constexpr std::array<std::pair<int, int>, 6> kLambda2Basis{{
    {0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2},
}};

/// Slot holding the complementary pair of `slot`.
constexpr int dual_slot(int slot) { return (slot + 3) % 6; }

/// Where e_i∧e_j lives: e_i∧e_j = sign · basis[slot]. `sign` is 0 when i == j.
struct SlotRef {
  int slot = 0;
  int sign = 0;
};

SlotRef slot_of(int i, int j);

/// Diagonal ±1 signs of the frame metric: Riemannian (+,+,+,+),
/// Lorentzian (−,+,+,+), split (−,−,+,+).
Vec4 frame_signs(Signature sig);

/// The inner product induced on Λ² by the determinant formula. In the fixed
/// basis it is diagonal.
struct Lambda2Metric {
  Bivector diag;

  double inner(const Bivector& xi, const Bivector& eta) const {
    return xi.cwiseProduct(diag).dot(eta);
  }
  double norm2(const Bivector& xi) const { return inner(xi, xi); }
  Mat6 matrix() const { return diag.asDiagonal(); }
};

Lambda2Metric lambda2_metric(Signature sig);

/// Coefficient of ξ∧η on dV. Symmetric; pairs slot a with slot a+3.
double wedge_pairing(const Bivector& xi, const Bivector& eta);

/// ξ is decomposable iff ξ∧ξ = 0. `tol` is relative to |ξ|².
bool is_decomposable(const Bivector& xi, double tol = 1e-10);

/// Coordinates of v∧w for frame-coordinate vectors v and w.
Bivector wedge(const Vec4& v, const Vec4& w);

/// Sign of ⟨P,P⟩ for the given signature.
/// Throws DegeneratePlane when |⟨P,P⟩| < degeneracy_tol · |P|².
int epsilon_sign(const Bivector& plane, Signature sig, double degeneracy_tol = 1e-6);

/// Two frame vectors spanning a decomposable bivector, with u∧v = ξ exactly
/// up to rounding.
std::pair<Vec4, Vec4> span_of(const Bivector& xi);

/// Matrix of the map induced on Λ² by a change of frame. Column `slot` holds
/// the coordinates of f_i∧f_j, where f_k is column k of `frame`.
Mat6 lambda2_of_frame(const Mat4& frame);

struct SymmetricEigen {
  Vec3 values;   // descending
  Mat3 vectors;  // orthonormal columns; first nonzero coordinate positive
};

/// Eigen-decomposition of a 3×3 symmetric matrix.
/// Throws NotSymmetric when ‖M − Mᵀ‖∞ > tol · max(1, ‖M‖∞).
SymmetricEigen eig_symmetric(const Mat3& m, double tol = 1e-10);

struct EigenCluster {
  Complex value;
  int algebraic = 0;
  int geometric = 0;
};

struct ComplexEigenstructure {
  std::vector<EigenCluster> clusters;
  /// How decisively the rank decisions were made: the smaller of
  /// (smallest nonzero singular value / τ_r) and (τ_r / largest zero singular
  /// value) over every cluster. Values near 1 mean a borderline call.
  double tolerance_margin = 0.0;

  int total_geometric() const;
};

/// Eigenvalues with algebraic and geometric multiplicities.
///
/// Eigenvalues are merged by single linkage when closer than
/// τ_c = tol.cluster · (1 + ρ(M)), or when the merged cluster passes a
/// nilpotency test: for k merged values with mean μ, (M − μI)^k must be
/// numerically zero on a k-dimensional subspace. The second rule catches the
/// O(ε^{1/k}) splitting that floating point inflicts on defective
/// eigenvalues. Geometric multiplicity is 3 − rank(M − μI) with singular
/// values at or below tol.rank · ‖M‖₂ counted as zero.
ComplexEigenstructure complex_eigenstructure(const CMat3& m, const Tolerances& tol = {});

/// Largest absolute entry.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace petrov
