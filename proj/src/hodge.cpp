#include "petrov/hodge.hpp"

#include "petrov/algebra.hpp"
#include "petrov/errors.hpp"

namespace petrov {

StarOperator hodge_star(Signature sig) {
  Mat6 m = Mat6::Zero();
  const Mat3 id = Mat3::Identity();
  switch (sig) {
    case Signature::Riemannian:
      m.topRightCorner<3, 3>() = id;
      m.bottomLeftCorner<3, 3>() = id;
      break;
    case Signature::Lorentzian:
      m.topRightCorner<3, 3>() = id;
      m.bottomLeftCorner<3, 3>() = -id;
      break;
    case Signature::Split: {
      const Mat3 e = Vec3(1, -1, -1).asDiagonal();
      m.topRightCorner<3, 3>() = e;
      m.bottomLeftCorner<3, 3>() = e;
      break;
    }
  }
  return {m, sig};
}

double commutator_residual(const Mat6& m, const Mat6& star) {
  return max_abs(m * star - star * m);
}

ComplexOperator complexify(const Mat6& m, double rel_tol) {
  const double residual = commutator_residual(m, hodge_star(Signature::Lorentzian).matrix);
  if (residual > rel_tol * max_abs(m)) {
    throw Error(ErrorCode::NotComplexLinear,
                "commutator with the Lorentzian star is " + std::to_string(residual));
  }
  // Commutation forces [[P, Q], [−Q, P]]; average the two copies so that
  // slightly perturbed inputs land on the nearest complex-linear map.
  const Mat3 p = 0.5 * (m.topLeftCorner<3, 3>() + m.bottomRightCorner<3, 3>());
  const Mat3 q = 0.5 * (m.topRightCorner<3, 3>() - m.bottomLeftCorner<3, 3>());
  ComplexOperator c;
  c.real() = p;
  c.imag() = q;
  return c;
}

Mat6 realify(const ComplexOperator& c) {
  Mat6 m;
  m.topLeftCorner<3, 3>() = c.real();
  m.bottomRightCorner<3, 3>() = c.real();
  m.topRightCorner<3, 3>() = c.imag();
  m.bottomLeftCorner<3, 3>() = -c.imag();
  return m;
}

CVec3 complex_coordinates(const Bivector& xi) {
  CVec3 z;
  z.real() = xi.head<3>();
  z.imag() = -xi.tail<3>();
  return z;
}

Bivector real_bivector(const CVec3& z) {
  Bivector xi;
  xi.head<3>() = z.real();
  xi.tail<3>() = -z.imag();
  return xi;
}

}  // namespace petrov
