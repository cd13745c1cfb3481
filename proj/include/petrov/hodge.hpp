#pragma once

#include "petrov/types.hpp"

namespace petrov {

/// Hodge star of one of the three deformation metrics, as an exact integer
/// matrix in the fixed Λ² basis.
struct StarOperator {
  Mat6 matrix;
  Signature sig;

  /// +1 when ★² = I (Riemannian, split), −1 when ★² = −I (Lorentzian).
  int square_sign() const { return sig == Signature::Lorentzian ? -1 : +1; }
  Bivector operator()(const Bivector& xi) const { return matrix * xi; }
};

StarOperator hodge_star(Signature sig);

/// ‖M∘★ − ★∘M‖∞.
double commutator_residual(const Mat6& m, const Mat6& star);

/// A ★L-commuting operator viewed as a complex-linear map on Λ² with
/// i·ξ := ★L ξ.
///
/// Coordinates are taken on {e1∧e2, e1∧e3, e1∧e4}; a real bivector (x, y)
/// (first three slots, last three slots) corresponds to z = x − i·y, so
/// e3∧e4 = −i·e1∧e2. An operator [[P, Q], [−Q, P]] becomes P + i·Q.
using ComplexOperator = CMat3;

/// Throws NotComplexLinear when ‖M★L − ★LM‖∞ > rel_tol · ‖M‖∞.
ComplexOperator complexify(const Mat6& m, double rel_tol = 1e-8);

/// Inverse of complexify; the result commutes with ★L exactly.
Mat6 realify(const ComplexOperator& c);

/// z = x − i·y for the bivector (x, y).
CVec3 complex_coordinates(const Bivector& xi);
Bivector real_bivector(const CVec3& z);

}  // namespace petrov
