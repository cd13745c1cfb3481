#pragma once

#include "petrov/hodge.hpp"
#include "petrov/tolerances.hpp"
#include "petrov/types.hpp"

#include <array>
#include <span>

namespace petrov {

/// Pointwise Riemann tensor in an orthonormal frame, stored as the 21
/// pair-symmetric components: sym6(a, b) = R_{ijkl} for slot a = (i,j) and
/// slot b = (k,l).
///
/// Sign convention: R(v,w,w,v) is the sectional curvature of v∧w, so a round
/// sphere of curvature k has R_{ijij} = −k. Lorentzian-frame tensors have
/// e1 timelike; all other modules assume e1 = T.
class CurvatureTensor {
 public:
  CurvatureTensor() : sym6_(Mat6::Zero()) {}

  /// Throws NotSymmetric when ‖M − Mᵀ‖∞ > 1e-12 · max(1, ‖M‖∞).
  explicit CurvatureTensor(const Mat6& sym6, Signature frame = Signature::Riemannian);

  /// From the upper triangle, row-major in the fixed Λ² ordering.
  static CurvatureTensor from_upper(std::span<const double, 21> upper,
                                    Signature frame = Signature::Riemannian);
  std::array<double, 21> upper() const;

  const Mat6& sym6() const { return sym6_; }
  Signature frame_signature() const { return frame_; }

  /// R(e_i, e_j, e_k, e_l) with 0-based frame indices.
  double operator()(int i, int j, int k, int l) const;

  /// |R_1234 + R_1342 + R_1423|, which in slot form is the trace of the
  /// off-diagonal 3×3 block of sym6.
  double bianchi_residual() const;
  bool satisfies_bianchi(double rel_tol = 1e-9) const;

  double norm() const { return sym6_.cwiseAbs().maxCoeff(); }

 private:
  Mat6 sym6_;
  Signature frame_ = Signature::Riemannian;
};

enum class OperatorKind { CurvatureOperator, SPart, APart, CHatH };

struct OperatorMatrix {
  Mat6 matrix;
  OperatorKind kind = OperatorKind::CurvatureOperator;
};

/// 𝓡 with ⟨𝓡(v∧w), x∧y⟩ = −R(v,w,x,y); as a matrix, −sym6.
OperatorMatrix curvature_operator(const CurvatureTensor& r);

struct RicciForm {
  double lambda = 0.0;  // Ric(e1, e1)
  Vec3 psi = Vec3::Zero();  // Ric(e1, e_{2,3,4})
  Mat4 full = Mat4::Zero();
};

/// Ric_ij = Σ_k ε_k R(e_k, e_i, e_j, e_k) with ε the frame signs of the
/// tensor's own metric.
RicciForm ricci(const CurvatureTensor& r);

/// Σ_i ε_i Ric_ii.
double scalar_curvature(const CurvatureTensor& r);

struct WeylBlocks {
  Mat3 w_plus;
  Mat3 w_minus;
  Mat3 k_block;
  double scal = 0.0;
};

/// Blocks of 𝓡 in the basis ξ±_i = (b_i ± b_{i+3})/√2 of self-dual and
/// anti-self-dual 2-vectors, with the scal/12 shift removed from the diagonal
/// blocks. Riemannian frames only (WrongFrame otherwise).
WeylBlocks weyl_blocks(const CurvatureTensor& r);

/// Orthogonal change of basis to {ξ+_1, ξ+_2, ξ+_3, ξ−_1, ξ−_2, ξ−_3}.
Mat6 self_dual_basis();

struct SADecomposition {
  OperatorMatrix s;  // commutes with the star
  OperatorMatrix a;  // anti-commutes with the star
};

/// S = ½(M + σ ★M★), A = M − S, where σ = involution_sign and ★² = σI.
/// Throws SignMismatch when ★² ≠ σI.
SADecomposition sa_decompose(const Mat6& m, const StarOperator& star, int involution_sign);

/// K_{ijkl} = −⟨𝓡(e_i∧e_j), e_k∧e_l⟩_L in slot form (rows: (ij), columns: (kl)).
/// Assumes e1 = T. Equals sym6(a, b) · ε_L(b).
Mat6 k_components(const CurvatureTensor& r);

/// S_{ijkl} = −⟨S(e_i∧e_j), e_k∧e_l⟩_L for S the ★L-commuting part of 𝓡.
/// Computed from K as ½(K(a,b) − ε(a)ε(b) K(a*, b*)), a* the dual slot.
Mat6 s_components(const CurvatureTensor& r);

/// ĉ_h for a Lorentzian-frame tensor: R_{ijkl} = −⟨ĉ_h(e_i∧e_j), e_k∧e_l⟩_h
/// with h = g_L + 2T♭⊗T♭ Riemannian. As a matrix, −sym6, and symmetric.
OperatorMatrix c_hat_h(const CurvatureTensor& r);

struct TraceH {
  Mat4 h_trace = Mat4::Zero();  // H = tr_h(Rm)
  double f = 0.0;               // H_11 / h_11
  double residual = 0.0;        // ‖H − f·h‖∞
};

/// Trace of the Riemann tensor against a deformation metric h sharing the
/// frame: H_ij = Σ_k h_kk R(e_k, e_i, e_j, e_k). `deformation` is Split for a
/// Riemannian g with split h, Riemannian for a Lorentzian g with Riemannian h.
TraceH trace_h(const CurvatureTensor& r, Signature deformation);

/// Re-express the tensor in a new frame whose k-th vector is column k of
/// `frame` (coordinates in the old frame). The new frame must be orthonormal
/// for the tensor's frame metric.
CurvatureTensor rotate_frame(const CurvatureTensor& r, const Mat4& frame);

}  // namespace petrov
