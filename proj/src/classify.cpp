#include "petrov/classify.hpp"

#include "petrov/errors.hpp"

#include <cmath>

namespace petrov {

double star_einstein_residual(const Mat6& m, const StarOperator& star) {
  return commutator_residual(m, star.matrix);
}

std::string_view to_string(PetrovType type) {
  switch (type) {
    case PetrovType::I: return "I";
    case PetrovType::II: return "II";
    case PetrovType::III: return "III";
  }
  return "?";
}

PetrovReport petrov_type(const Mat6& m, PetrovMode mode, const Tolerances& tol) {
  const StarOperator star_l = hodge_star(Signature::Lorentzian);
  PetrovReport report;
  report.mode = mode;
  report.commutation_residual = star_einstein_residual(m, star_l);

  Mat6 target = m;
  if (mode == PetrovMode::FullOperator) {
    if (report.commutation_residual > tol.identity * max_abs(m)) {
      throw Error(ErrorCode::NotComplexLinear,
                  "operator does not commute with the Lorentzian star (residual " +
                      std::to_string(report.commutation_residual) + ")");
    }
  } else {
    target = sa_decompose(m, star_l, -1).s.matrix;
  }
  // The S part commutes exactly, so complexify never rejects it.
  const ComplexOperator c = complexify(target, mode == PetrovMode::SPart ? 1.0 : tol.identity);
  const ComplexEigenstructure es = complex_eigenstructure(c, tol);
  report.clusters = es.clusters;
  report.tolerance_margin = es.tolerance_margin;
  switch (es.total_geometric()) {
    case 3: report.type = PetrovType::I; break;
    case 2: report.type = PetrovType::II; break;
    default: report.type = PetrovType::III; break;
  }
  return report;
}

PetrovReport petrov_type(const CurvatureTensor& r, PetrovMode mode, const Tolerances& tol) {
  return petrov_type(curvature_operator(r).matrix, mode, tol);
}

AlmostEinsteinVerdict almost_einstein_check(const CurvatureTensor& r, const Tolerances& tol) {
  const RicciForm ric = ricci(r);
  AlmostEinsteinVerdict out;
  out.lambda = ric.lambda;
  out.psi = ric.psi;
  double dev = 0.0;
  for (int i = 1; i < 4; ++i) {
    dev = std::max(dev, std::abs(ric.full(i, i) - ric.lambda));
    for (int j = 1; j < 4; ++j)
      if (i != j) dev = std::max(dev, std::abs(ric.full(i, j)));
  }
  out.residual = dev;
  out.tolerance = scaled(tol.identity, r.norm());
  out.matches = dev <= out.tolerance;
  return out;
}

WeylSymmetryVerdict w_plus_equals_w_minus(const CurvatureTensor& r, const Tolerances& tol) {
  const WeylBlocks w = weyl_blocks(r);
  WeylSymmetryVerdict out;
  out.residual = max_abs(w.w_plus - w.w_minus);
  out.tolerance = scaled(tol.identity, r.norm());
  out.holds = out.residual <= out.tolerance;
  return out;
}

NormalForm normal_form_lorentzian(const CurvatureTensor& r, const Tolerances& tol) {
  const Mat6 c = -r.sym6();
  const StarOperator star = hodge_star(Signature::Riemannian);
  const double residual = star_einstein_residual(c, star);
  if (residual > scaled(tol.identity, r.norm())) {
    throw Error(ErrorCode::NotStarEinstein,
                "operator does not commute with the Riemannian-form star (residual " +
                    std::to_string(residual) + ")");
  }
  const Mat6 u = self_dual_basis();
  const Mat6 blocks = u.transpose() * c * u;
  const SymmetricEigen plus = eig_symmetric(blocks.topLeftCorner<3, 3>(), 1e-6);
  const SymmetricEigen minus = eig_symmetric(blocks.bottomRightCorner<3, 3>(), 1e-6);

  NormalForm out;
  const double s = 1.0 / std::sqrt(2.0);
  Mat6 assembled = Mat6::Zero();
  for (int i = 0; i < 3; ++i) {
    Bivector alpha = u.leftCols<3>() * plus.vectors.col(i);
    Bivector beta = u.rightCols<3>() * minus.vectors.col(i);
    const Bivector p = s * (alpha + beta);
    const Bivector pd = star(p);
    out.planes[i] = p;
    out.dual_planes[i] = pd;
    out.lambdas[i] = p.dot(c * p);
    out.mus[i] = pd.dot(c * p);
    const Bivector cp = out.lambdas[i] * p + out.mus[i] * pd;
    const Bivector cpd = out.mus[i] * p + out.lambdas[i] * pd;
    assembled += cp * p.transpose() + cpd * pd.transpose();
  }
  out.residual = max_abs(c - assembled);
  return out;
}

}  // namespace petrov
