#include "petrov/curvature.hpp"

#include "petrov/algebra.hpp"
#include "petrov/errors.hpp"

#include <cmath>

namespace petrov {

CurvatureTensor::CurvatureTensor(const Mat6& sym6, Signature frame) : frame_(frame) {
  if (max_abs(sym6 - sym6.transpose()) > 1e-12 * std::max(1.0, max_abs(sym6))) {
    throw Error(ErrorCode::NotSymmetric, "curvature components lack pair symmetry");
  }
  sym6_ = 0.5 * (sym6 + sym6.transpose());
}

CurvatureTensor CurvatureTensor::from_upper(std::span<const double, 21> upper,
                                            Signature frame) {
  Mat6 m;
  std::size_t n = 0;
  for (int a = 0; a < 6; ++a) {
    for (int b = a; b < 6; ++b) {
      m(a, b) = upper[n];
      m(b, a) = upper[n];
      ++n;
    }
  }
  return CurvatureTensor(m, frame);
}

std::array<double, 21> CurvatureTensor::upper() const {
  std::array<double, 21> out{};
  std::size_t n = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b) out[n++] = sym6_(a, b);
  return out;
}

double CurvatureTensor::operator()(int i, int j, int k, int l) const {
  const SlotRef p = slot_of(i, j);
  const SlotRef q = slot_of(k, l);
  return p.sign * q.sign * sym6_(p.slot, q.slot);
}

double CurvatureTensor::bianchi_residual() const {
  return std::abs(sym6_(0, 3) + sym6_(1, 4) + sym6_(2, 5));
}

bool CurvatureTensor::satisfies_bianchi(double rel_tol) const {
  return bianchi_residual() <= rel_tol * std::max(1.0, norm());
}

OperatorMatrix curvature_operator(const CurvatureTensor& r) {
  return {-r.sym6(), OperatorKind::CurvatureOperator};
}

RicciForm ricci(const CurvatureTensor& r) {
  const Vec4 eps = frame_signs(r.frame_signature());
  RicciForm out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 4; ++k) sum += eps[k] * r(k, i, j, k);
      out.full(i, j) = sum;
    }
  }
  out.lambda = out.full(0, 0);
  out.psi = out.full.block<1, 3>(0, 1).transpose();
  return out;
}

double scalar_curvature(const CurvatureTensor& r) {
  const Vec4 eps = frame_signs(r.frame_signature());
  return eps.dot(ricci(r).full.diagonal());
}

Mat6 self_dual_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  Mat6 u = Mat6::Zero();
  for (int i = 0; i < 3; ++i) {
    u(i, i) = s;
    u(i + 3, i) = s;
    u(i, i + 3) = s;
    u(i + 3, i + 3) = -s;
  }
  return u;
}

WeylBlocks weyl_blocks(const CurvatureTensor& r) {
  if (r.frame_signature() != Signature::Riemannian) {
    throw Error(ErrorCode::WrongFrame, "Weyl blocks need a Riemannian frame");
  }
  const Mat6 u = self_dual_basis();
  const Mat6 c = u.transpose() * curvature_operator(r).matrix * u;
  WeylBlocks out;
  out.scal = scalar_curvature(r);
  const Mat3 shift = (out.scal / 12.0) * Mat3::Identity();
  out.w_plus = c.topLeftCorner<3, 3>() - shift;
  out.w_minus = c.bottomRightCorner<3, 3>() - shift;
  out.k_block = c.topRightCorner<3, 3>();
  return out;
}

SADecomposition sa_decompose(const Mat6& m, const StarOperator& star, int involution_sign) {
  const Mat6 sq = star.matrix * star.matrix;
  if (max_abs(sq - involution_sign * Mat6::Identity()) > 1e-12) {
    throw Error(ErrorCode::SignMismatch, "star squared does not match the involution sign");
  }
  SADecomposition out;
  out.s.matrix = 0.5 * (m + involution_sign * (star.matrix * m * star.matrix));
  out.s.kind = OperatorKind::SPart;
  out.a.matrix = m - out.s.matrix;
  out.a.kind = OperatorKind::APart;
  return out;
}

Mat6 k_components(const CurvatureTensor& r) {
  const Bivector eps = lambda2_metric(Signature::Lorentzian).diag;
  return r.sym6() * eps.asDiagonal();
}

Mat6 s_components(const CurvatureTensor& r) {
  const Mat6 k = k_components(r);
  const Bivector eps = lambda2_metric(Signature::Lorentzian).diag;
  Mat6 s;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      s(a, b) = 0.5 * (k(a, b) - eps[a] * eps[b] * k(dual_slot(a), dual_slot(b)));
  return s;
}

OperatorMatrix c_hat_h(const CurvatureTensor& r) {
  if (r.frame_signature() != Signature::Lorentzian) {
    throw Error(ErrorCode::WrongFrame, "c_hat_h needs a Lorentzian-frame tensor");
  }
  return {-r.sym6(), OperatorKind::CHatH};
}

TraceH trace_h(const CurvatureTensor& r, Signature deformation) {
  const Vec4 h = frame_signs(deformation);
  TraceH out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 4; ++k) sum += h[k] * r(k, i, j, k);
      out.h_trace(i, j) = sum;
    }
  }
  out.f = out.h_trace(0, 0) / h[0];
  const Mat4 fh = out.f * Mat4(h.asDiagonal());
  out.residual = max_abs(out.h_trace - fh);
  return out;
}

CurvatureTensor rotate_frame(const CurvatureTensor& r, const Mat4& frame) {
  const Mat6 w = lambda2_of_frame(frame);
  const Mat6 rotated = w.transpose() * r.sym6() * w;
  return CurvatureTensor(0.5 * (rotated + rotated.transpose()), r.frame_signature());
}

}  // namespace petrov
