#include "petrov/algebra.hpp"

#include "petrov/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace petrov {

std::string_view to_string(Signature sig) {
  switch (sig) {
    case Signature::Riemannian: return "riemannian";
    case Signature::Lorentzian: return "lorentzian";
    case Signature::Split: return "split";
  }
  return "unknown";
}

std::optional<Signature> parse_signature(std::string_view text) {
  if (text == "riemannian") return Signature::Riemannian;
  if (text == "lorentzian") return Signature::Lorentzian;
  if (text == "split") return Signature::Split;
  return std::nullopt;
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotAPlane: return "NotAPlane";
    case ErrorCode::DegeneratePlane: return "DegeneratePlane";
    case ErrorCode::NotComplexLinear: return "NotComplexLinear";
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::ChartDomainExceeded: return "ChartDomainExceeded";
    case ErrorCode::NotStarEinstein: return "NotStarEinstein";
    case ErrorCode::BadEigenvalueCount: return "BadEigenvalueCount";
    case ErrorCode::WrongFrame: return "WrongFrame";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::WrongEntryCount: return "WrongEntryCount";
    case ErrorCode::UnknownSignature: return "UnknownSignature";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
  }
  return "Error";
}

SlotRef slot_of(int i, int j) {
  for (int a = 0; a < 6; ++a) {
    if (kLambda2Basis[a] == std::pair{i, j}) return {a, +1};
    if (kLambda2Basis[a] == std::pair{j, i}) return {a, -1};
  }
  return {0, 0};
}

Vec4 frame_signs(Signature sig) {
  switch (sig) {
    case Signature::Riemannian: return Vec4(1, 1, 1, 1);
    case Signature::Lorentzian: return Vec4(-1, 1, 1, 1);
    case Signature::Split: return Vec4(-1, -1, 1, 1);
  }
  return Vec4::Ones();
}

Lambda2Metric lambda2_metric(Signature sig) {
  const Vec4 eps = frame_signs(sig);
  Lambda2Metric metric;
  for (int a = 0; a < 6; ++a) {
    auto [i, j] = kLambda2Basis[a];
    metric.diag[a] = eps[i] * eps[j];
  }
  return metric;
}

double wedge_pairing(const Bivector& xi, const Bivector& eta) {
  double sum = 0.0;
  for (int a = 0; a < 3; ++a) sum += xi[a] * eta[a + 3] + xi[a + 3] * eta[a];
  return sum;
}

bool is_decomposable(const Bivector& xi, double tol) {
  return std::abs(wedge_pairing(xi, xi)) <= tol * std::max(xi.squaredNorm(), 1e-300);
}

Bivector wedge(const Vec4& v, const Vec4& w) {
  Bivector out;
  for (int a = 0; a < 6; ++a) {
    auto [i, j] = kLambda2Basis[a];
    out[a] = v[i] * w[j] - v[j] * w[i];
  }
  return out;
}

int epsilon_sign(const Bivector& plane, Signature sig, double degeneracy_tol) {
  const double n2 = lambda2_metric(sig).norm2(plane);
  if (std::abs(n2) < degeneracy_tol * std::max(plane.squaredNorm(), 1e-300)) {
    throw Error(ErrorCode::DegeneratePlane, "|<P,P>| = " + std::to_string(std::abs(n2)));
  }
  return n2 > 0 ? +1 : -1;
}

std::pair<Vec4, Vec4> span_of(const Bivector& xi) {
  Mat4 omega = Mat4::Zero();
  for (int a = 0; a < 6; ++a) {
    auto [i, j] = kLambda2Basis[a];
    omega(i, j) = xi[a];
    omega(j, i) = -xi[a];
  }
  int bi = 0, bj = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(omega(i, j)) > std::abs(omega(bi, bj))) bi = i, bj = j;
  if (omega(bi, bj) == 0.0) throw Error(ErrorCode::NotAPlane, "zero bivector");
  // For ξ = u∧v, column i of Ω is u v_i − v u_i, and (Ω e_i)∧(Ω e_j) = Ω_ij ξ.
  Vec4 first = omega.col(bi) / omega(bi, bj);
  Vec4 second = omega.col(bj);
  return {first, second};
}

Mat6 lambda2_of_frame(const Mat4& frame) {
  Mat6 out;
  for (int a = 0; a < 6; ++a) {
    auto [i, j] = kLambda2Basis[a];
    out.col(a) = wedge(frame.col(i), frame.col(j));
  }
  return out;
}

namespace {

template <typename Vector>
void fix_sign(Vector&& v) {
  for (int k = 0; k < v.size(); ++k) {
    if (std::abs(v[k]) > 1e-12) {
      if (v[k] < 0) v = -v;
      return;
    }
  }
}

}  // namespace

SymmetricEigen eig_symmetric(const Mat3& m, double tol) {
  if (max_abs(m - m.transpose()) > tol * std::max(1.0, max_abs(m))) {
    throw Error(ErrorCode::NotSymmetric, "3x3 input is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> solver(0.5 * (m + m.transpose()));
  SymmetricEigen out;
  for (int k = 0; k < 3; ++k) {
    out.values[k] = solver.eigenvalues()[2 - k];
    out.vectors.col(k) = solver.eigenvectors().col(2 - k);
    fix_sign(out.vectors.col(k));
  }
  return out;
}

int ComplexEigenstructure::total_geometric() const {
  int total = 0;
  for (const auto& c : clusters) total += c.geometric;
  return total;
}

namespace {

// Window inside which near-coincident eigenvalues are offered to the
// nilpotency test, relative to 1 + ρ(M).
constexpr double kMergeWindow = 1e-3;
// (M − μI)^k is "zero on k dimensions" when k singular values fall below
// this fraction of ‖M − μI‖₂^k.
constexpr double kNilpotentTol = 1e-9;

bool nilpotent_on(const CMat3& m, Complex mu, int k) {
  const CMat3 shifted = m - mu * CMat3::Identity();
  CMat3 power = CMat3::Identity();
  for (int p = 0; p < k; ++p) power = power * shifted;
  Eigen::JacobiSVD<CMat3> svd_shift(shifted);
  Eigen::JacobiSVD<CMat3> svd(power);
  const double scale = std::pow(std::max(svd_shift.singularValues()[0], 1e-300), k);
  int nullity = 0;
  for (int i = 0; i < 3; ++i)
    if (svd.singularValues()[i] <= kNilpotentTol * scale) ++nullity;
  return nullity >= k;
}

}  // namespace

ComplexEigenstructure complex_eigenstructure(const CMat3& m, const Tolerances& tol) {
  Eigen::ComplexEigenSolver<CMat3> solver(m, false);
  const CVec3 ev = solver.eigenvalues();
  double rho = 0.0;
  for (int i = 0; i < 3; ++i) rho = std::max(rho, std::abs(ev[i]));
  const double tau_c = tol.cluster * (1.0 + rho);
  const double window = kMergeWindow * (1.0 + rho);

  std::vector<std::vector<int>> groups{{0}, {1}, {2}};
  auto mean_of = [&](const std::vector<int>& g) {
    Complex s = 0.0;
    for (int i : g) s += ev[i];
    return s / static_cast<double>(g.size());
  };
  auto linkage = [&](const std::vector<int>& g, const std::vector<int>& h) {
    double d = std::numeric_limits<double>::infinity();
    for (int i : g)
      for (int j : h) d = std::min(d, std::abs(ev[i] - ev[j]));
    return d;
  };

  for (bool merged = true; merged && groups.size() > 1;) {
    merged = false;
    struct Candidate {
      double dist;
      std::size_t g, h;
    };
    std::vector<Candidate> pairs;
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (std::size_t h = g + 1; h < groups.size(); ++h)
        pairs.push_back({linkage(groups[g], groups[h]), g, h});
    std::sort(pairs.begin(), pairs.end(),
              [](const Candidate& a, const Candidate& b) { return a.dist < b.dist; });
    for (const auto& c : pairs) {
      std::vector<int> joined = groups[c.g];
      joined.insert(joined.end(), groups[c.h].begin(), groups[c.h].end());
      const bool accept =
          c.dist < tau_c ||
          (c.dist < window &&
           nilpotent_on(m, mean_of(joined), static_cast<int>(joined.size())));
      if (accept) {
        groups[c.g] = joined;
        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(c.h));
        merged = true;
        break;
      }
    }
  }

  Eigen::JacobiSVD<CMat3> svd_m(m);
  const double tau_r = tol.rank * svd_m.singularValues()[0];

  ComplexEigenstructure out;
  out.tolerance_margin = std::numeric_limits<double>::infinity();
  for (const auto& g : groups) {
    EigenCluster cluster;
    cluster.value = mean_of(g);
    cluster.algebraic = static_cast<int>(g.size());
    Eigen::JacobiSVD<CMat3> svd(m - cluster.value * CMat3::Identity());
    const auto& sv = svd.singularValues();
    int nullity = 0;
    double largest_zero = 0.0;
    double smallest_nonzero = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
      if (sv[i] <= tau_r) {
        ++nullity;
        largest_zero = std::max(largest_zero, sv[i]);
      } else {
        smallest_nonzero = std::min(smallest_nonzero, sv[i]);
      }
    }
    cluster.geometric = std::clamp(nullity, 1, cluster.algebraic);
    if (tau_r > 0.0) {
      out.tolerance_margin = std::min(
          {out.tolerance_margin, smallest_nonzero / tau_r,
           tau_r / std::max(largest_zero, std::numeric_limits<double>::min())});
    }
    out.clusters.push_back(cluster);
  }
  std::sort(out.clusters.begin(), out.clusters.end(), [](const auto& a, const auto& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace petrov
