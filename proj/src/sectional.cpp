#include "petrov/sectional.hpp"

#include "petrov/algebra.hpp"
#include "petrov/errors.hpp"
#include "petrov/hodge.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <thread>

namespace petrov {

std::string_view to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::Gsec: return "gsec";
    case Flavor::Tsec: return "tsec";
    case Flavor::Ssec: return "ssec";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(std::string_view text) {
  if (text == "gsec") return Flavor::Gsec;
  if (text == "tsec") return Flavor::Tsec;
  if (text == "ssec") return Flavor::Ssec;
  return std::nullopt;
}

std::string_view to_string(TRelation relation) {
  switch (relation) {
    case TRelation::ContainsT: return "contains_T";
    case TRelation::OrthogonalToT: return "orthogonal_to_T";
    case TRelation::Generic: return "generic";
  }
  return "?";
}

Signature flavor_metric(Flavor flavor) {
  return flavor == Flavor::Gsec ? Signature::Riemannian : Signature::Lorentzian;
}

namespace {

// Operator X and Λ² metric G such that the form is ⟨Xξ, ξ⟩_G / ⟨ξ, ξ⟩_G.
struct Form {
  Mat6 weight;  // symmetric part of G·X
  Bivector metric;
};

Form form_of(const CurvatureTensor& r, Flavor flavor) {
  Mat6 op = curvature_operator(r).matrix;
  if (flavor == Flavor::Ssec) op = sa_decompose(op, hodge_star(Signature::Lorentzian), -1).s.matrix;
  Form form;
  form.metric = lambda2_metric(flavor_metric(flavor)).diag;
  const Mat6 gx = form.metric.asDiagonal() * op;
  form.weight = 0.5 * (gx + gx.transpose());
  return form;
}

double rayleigh(const Form& form, const Bivector& xi, double degeneracy_tol) {
  const double n = xi.cwiseProduct(form.metric).dot(xi);
  if (std::abs(n) < degeneracy_tol * std::max(xi.squaredNorm(), 1e-300)) {
    throw Error(ErrorCode::DegeneratePlane, "|<P,P>| = " + std::to_string(std::abs(n)));
  }
  return xi.dot(form.weight * xi) / n;
}

void require_plane(const Bivector& plane) {
  if (!is_decomposable(plane, 1e-8)) {
    throw Error(ErrorCode::NotAPlane, "bivector is not decomposable");
  }
}

}  // namespace

double gsec(const CurvatureTensor& r, const Bivector& plane) {
  require_plane(plane);
  return rayleigh(form_of(r, Flavor::Gsec), plane, 1e-300);
}

double tsec(const CurvatureTensor& r, const Bivector& plane, double degeneracy_tol) {
  require_plane(plane);
  return rayleigh(form_of(r, Flavor::Tsec), plane, degeneracy_tol);
}

double ssec(const CurvatureTensor& r, const Bivector& plane, double degeneracy_tol) {
  require_plane(plane);
  return rayleigh(form_of(r, Flavor::Ssec), plane, degeneracy_tol);
}

double sectional(const CurvatureTensor& r, const Bivector& plane, Flavor flavor) {
  switch (flavor) {
    case Flavor::Gsec: return gsec(r, plane);
    case Flavor::Tsec: return tsec(r, plane);
    case Flavor::Ssec: return ssec(r, plane);
  }
  return 0.0;
}

namespace {

struct ChartBasis {
  Vec4 u0, v0;
  std::array<Vec4, 4> du, dv;
};

ChartBasis chart_basis(const GrassmannChart& chart) {
  const Mat4& f = chart.base_frame;
  ChartBasis b;
  const Vec4 zero = Vec4::Zero();
  if (chart.component == ChartComponent::GPlus) {
    b.u0 = f.col(2);
    b.v0 = f.col(3);
    b.du = {zero, zero, f.col(0), f.col(1)};
    b.dv = {f.col(0), f.col(1), zero, zero};
  } else {
    b.u0 = f.col(0);
    b.v0 = f.col(1);
    b.du = {zero, zero, f.col(2), f.col(3)};
    b.dv = {f.col(2), f.col(3), zero, zero};
  }
  return b;
}

double expected_sign(const GrassmannChart& chart) {
  return chart.component == ChartComponent::GPlus ? 1.0 : -1.0;
}

}  // namespace

Bivector grassmann_chart_eval(const GrassmannChart& chart, const Vec4& x, double domain_tol) {
  const ChartBasis b = chart_basis(chart);
  Vec4 u = b.u0, v = b.v0;
  for (int k = 0; k < 4; ++k) {
    u += x[k] * b.du[k];
    v += x[k] * b.dv[k];
  }
  const Bivector xi = wedge(u, v);
  const double n = lambda2_metric(chart.metric).norm2(xi) * expected_sign(chart);
  if (n <= domain_tol) {
    throw Error(ErrorCode::ChartDomainExceeded, "radicand " + std::to_string(n));
  }
  return xi / std::sqrt(n);
}

namespace {

// Two vectors spanning span(a, b), orthonormal for the diagonal metric g;
// the one of negative length (if any) comes first. e1 is used as the first
// vector when it lies in the span.
std::pair<Vec4, Vec4> orthonormal_pair(const Vec4& a, const Vec4& b, const Vec4& g) {
  auto ip = [&](const Vec4& x, const Vec4& y) { return x.cwiseProduct(g).dot(y); };
  auto unit = [&](const Vec4& x) -> Vec4 {
    const double n = std::abs(ip(x, x));
    if (n < 1e-14 * std::max(x.squaredNorm(), 1e-300)) {
      throw Error(ErrorCode::DegeneratePlane, "null direction while building a frame");
    }
    return x / std::sqrt(n);
  };

  Eigen::Matrix<double, 4, 2> span;
  span.col(0) = a;
  span.col(1) = b;
  const Vec4 e1 = Vec4::UnitX();
  const Eigen::Vector2d coeff = span.colPivHouseholderQr().solve(e1);
  if ((span * coeff - e1).norm() < 1e-9) {
    const Vec4 pa = a - ip(a, e1) / ip(e1, e1) * e1;
    const Vec4 pb = b - ip(b, e1) / ip(e1, e1) * e1;
    return {e1, unit(pa.norm() >= pb.norm() ? pa : pb)};
  }

  Eigen::Matrix2d gram;
  gram << ip(a, a), ip(a, b), ip(b, a), ip(b, b);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(gram);
  const Eigen::Matrix2d c = solver.eigenvectors();
  const Vec4 t0 = c(0, 0) * a + c(1, 0) * b;
  const Vec4 t1 = c(0, 1) * a + c(1, 1) * b;
  return {unit(t0), unit(t1)};
}

}  // namespace

GrassmannChart adapted_chart(const Bivector& plane, Signature metric) {
  require_plane(plane);
  const Vec4 g = frame_signs(metric);
  auto ip = [&](const Vec4& x, const Vec4& y) { return x.cwiseProduct(g).dot(y); };

  const int eps = epsilon_sign(plane, metric);
  if (metric == Signature::Split) {
    throw Error(ErrorCode::WrongFrame, "no chart is defined for the split metric");
  }
  const ChartComponent component = eps > 0 ? ChartComponent::GPlus : ChartComponent::GMinus;

  const auto [u, v] = span_of(plane);
  auto [p1, p2] = orthonormal_pair(u, v, g);
  if (wedge(p1, p2).dot(plane) < 0) p2 = -p2;

  // Orthogonal complement: project the fixed frame off the plane and keep
  // the best-conditioned pair.
  std::array<Vec4, 4> proj;
  for (int k = 0; k < 4; ++k) {
    Vec4 e = Vec4::Unit(k);
    proj[k] = e - ip(e, p1) / ip(p1, p1) * p1 - ip(e, p2) / ip(p2, p2) * p2;
  }
  int bi = 0, bj = 1;
  double best = -1.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const double w = wedge(proj[i], proj[j]).norm();
      if (w > best) best = w, bi = i, bj = j;
    }
  }
  auto [c1, c2] = orthonormal_pair(proj[bi], proj[bj], g);

  GrassmannChart chart;
  chart.metric = metric;
  chart.component = component;
  Mat4& f = chart.base_frame;
  if (component == ChartComponent::GPlus) {
    f << c1, c2, p1, p2;
    if (f.determinant() < 0) f.col(1) = -f.col(1);
  } else {
    f << p1, p2, c1, c2;
    if (f.determinant() < 0) f.col(3) = -f.col(3);
  }
  return chart;
}

ChartJet chart_jet(const CurvatureTensor& r, Flavor flavor, const GrassmannChart& chart,
                   const Vec4& x) {
  if (chart.metric != flavor_metric(flavor)) {
    throw Error(ErrorCode::WrongFrame, "chart metric does not match the flavor");
  }
  const Form form = form_of(r, flavor);
  const Mat6 gm = form.metric.asDiagonal();
  const ChartBasis b = chart_basis(chart);

  Vec4 u = b.u0, v = b.v0;
  for (int k = 0; k < 4; ++k) {
    u += x[k] * b.du[k];
    v += x[k] * b.dv[k];
  }
  const Bivector xi = wedge(u, v);
  std::array<Bivector, 4> d1;
  for (int k = 0; k < 4; ++k) d1[k] = wedge(b.du[k], v) + wedge(u, b.dv[k]);

  const double q = xi.dot(form.weight * xi);
  const double n = xi.dot(gm * xi);
  if (n * expected_sign(chart) <= 1e-12) {
    throw Error(ErrorCode::ChartDomainExceeded, "degenerate plane inside the chart");
  }
  Vec4 qk, nk;
  for (int k = 0; k < 4; ++k) {
    qk[k] = 2.0 * xi.dot(form.weight * d1[k]);
    nk[k] = 2.0 * xi.dot(gm * d1[k]);
  }
  ChartJet jet;
  jet.value = q / n;
  jet.gradient = (qk - jet.value * nk) / n;
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) {
      const Bivector d2 = wedge(b.du[k], b.dv[l]) + wedge(b.du[l], b.dv[k]);
      const double qkl = 2.0 * (d1[l].dot(form.weight * d1[k]) + xi.dot(form.weight * d2));
      const double nkl = 2.0 * (d1[l].dot(gm * d1[k]) + xi.dot(gm * d2));
      jet.hessian(k, l) = (qkl - jet.gradient[k] * nk[l] - jet.gradient[l] * nk[k] -
                           jet.value * nkl) / n;
    }
  }
  return jet;
}

TRelation relation_to_t(const Bivector& plane, double tol) {
  const double scale = plane.norm();
  if (plane.tail<3>().norm() <= tol * scale) return TRelation::ContainsT;
  if (plane.head<3>().norm() <= tol * scale) return TRelation::OrthogonalToT;
  return TRelation::Generic;
}

CriticalVerdict critical_test(const CurvatureTensor& r, const Bivector& plane, Flavor flavor,
                              const Tolerances& tol) {
  require_plane(plane);
  CriticalVerdict out;
  out.relation = relation_to_t(plane);
  out.tolerance = scaled(tol.identity, r.norm());

  if (flavor == Flavor::Gsec) {
    const Bivector p = plane.normalized();
    const Bivector rp = curvature_operator(r).matrix * p;
    const Bivector sp = hodge_star(Signature::Riemannian)(p);
    // P and ★P are orthonormal for a unit decomposable P.
    const double a = rp.dot(p);
    const double b = rp.dot(sp);
    out.residual = (rp - a * p - b * sp).norm();
    out.conditions = {a, b, 0.0, 0.0};
  } else {
    const GrassmannChart chart = adapted_chart(plane, Signature::Lorentzian);
    out.component = chart.component;
    Mat6 op = curvature_operator(r).matrix;
    if (flavor == Flavor::Ssec) {
      op = sa_decompose(op, hodge_star(Signature::Lorentzian), -1).s.matrix;
    }
    const Bivector eta = lambda2_metric(Signature::Lorentzian).diag;
    const Mat4& f = chart.base_frame;
    auto k = [&](int i, int j, int m, int n) {
      const Bivector from = wedge(f.col(i), f.col(j));
      const Bivector to = wedge(f.col(m), f.col(n));
      return -(op * from).cwiseProduct(eta).dot(to);
    };
    using Pair = std::pair<int, int>;
    const bool plus = chart.component == ChartComponent::GPlus;
    const Pair base = plus ? Pair{2, 3} : Pair{0, 1};
    const std::array<Pair, 4> pairs = plus ? std::array<Pair, 4>{{{2, 0}, {2, 1}, {0, 3}, {1, 3}}}
                                           : std::array<Pair, 4>{{{0, 2}, {0, 3}, {2, 1}, {3, 1}}};
    double sum2 = 0.0;
    for (int c = 0; c < 4; ++c) {
      auto [i, j] = pairs[c];
      out.conditions[c] = k(base.first, base.second, i, j) + k(i, j, base.first, base.second);
      sum2 += out.conditions[c] * out.conditions[c];
    }
    out.residual = std::sqrt(sum2);
  }
  out.is_critical = out.residual < out.tolerance;
  return out;
}

namespace {

constexpr int kMaxIterations = 80;
constexpr double kRecordResidual = 1e-7;
constexpr double kDedupDistance = 1e-4;

struct StartOutcome {
  bool converged = false;
  bool immediate = false;
  Bivector plane = Bivector::Zero();
  double value = 0.0;
  double residual = 0.0;
};

Bivector random_plane(std::mt19937_64& rng, Signature metric) {
  std::normal_distribution<double> normal;
  const Bivector g = lambda2_metric(metric).diag;
  for (;;) {
    Vec4 v, w;
    for (int k = 0; k < 4; ++k) v[k] = normal(rng), w[k] = normal(rng);
    const Bivector xi = wedge(v, w);
    const double n = xi.cwiseProduct(g).dot(xi);
    if (std::abs(n) >= 0.05 * xi.squaredNorm()) return xi / std::sqrt(std::abs(n));
  }
}

StartOutcome run_start(const CurvatureTensor& r, Flavor flavor, std::uint64_t seed, int start) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(start) + 1);
  const Signature metric = flavor_metric(flavor);
  Bivector plane = random_plane(rng, metric);
  const double conv_tol = 1e-10 * std::max(1.0, r.norm());

  StartOutcome out;
  try {
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      const GrassmannChart chart = adapted_chart(plane, metric);
      const ChartJet jet = chart_jet(r, flavor, chart, Vec4::Zero());
      const double gnorm = jet.gradient.norm();
      if (gnorm < conv_tol) {
        out.converged = true;
        out.immediate = iter == 0;
        out.plane = plane;
        out.value = jet.value;
        out.residual = gnorm;
        return out;
      }
      const Mat4 h = jet.hessian;
      const Mat4 h2 = h * h;
      const Vec4 rhs = -(h * jet.gradient);
      const double merit0 = jet.gradient.squaredNorm();
      double mu = 0.0;
      bool accepted = false;
      for (int attempt = 0; attempt < 30 && !accepted; ++attempt) {
        const Mat4 lhs = h2 + mu * Mat4::Identity();
        Vec4 step = lhs.completeOrthogonalDecomposition().solve(rhs);
        if (!step.allFinite()) step = -jet.gradient;
        if (step.norm() > 0.5) step *= 0.5 / step.norm();
        try {
          const ChartJet trial = chart_jet(r, flavor, chart, step);
          if (trial.gradient.squaredNorm() < merit0) {
            plane = grassmann_chart_eval(chart, step);
            accepted = true;
          }
        } catch (const Error&) {
          // outside the chart; damp harder
        }
        mu = mu == 0.0 ? 1e-8 * std::max(h2.norm(), 1e-30) : mu * 10.0;
      }
      if (!accepted) break;
    }
  } catch (const Error&) {
    // drifted onto a degenerate plane
  }
  return out;
}

}  // namespace

CriticalSearch find_critical_planes(const CurvatureTensor& r, Flavor flavor, int n_starts,
                                    std::uint64_t seed, const Tolerances& tol) {
  (void)tol;
  CriticalSearch search;
  search.starts = std::max(n_starts, 0);
  if (search.starts == 0) return search;

  std::vector<StartOutcome> outcomes(static_cast<std::size_t>(search.starts));
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1,
                                 std::min(8, search.starts));
  std::vector<std::future<void>> jobs;
  for (int w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (int s = w; s < search.starts; s += workers) {
        outcomes[static_cast<std::size_t>(s)] = run_start(r, flavor, seed, s);
      }
    }));
  }
  for (auto& job : jobs) job.get();

  bool all_immediate = true;
  std::vector<Bivector> unit_planes;
  for (const auto& o : outcomes) {
    all_immediate = all_immediate && o.immediate;
    if (!o.converged || o.residual >= kRecordResidual) {
      search.incomplete = true;
      continue;
    }
    ++search.converged;
    const Bivector q = o.plane.normalized();
    const bool seen = std::any_of(unit_planes.begin(), unit_planes.end(), [&](const Bivector& p) {
      return std::min((p - q).norm(), (p + q).norm()) < kDedupDistance;
    });
    if (seen) continue;
    unit_planes.push_back(q);
    search.records.push_back({o.plane, o.value, flavor, relation_to_t(o.plane), o.residual});
  }
  search.saturated = all_immediate;
  return search;
}

double duality_check(const CurvatureTensor& r, Signature star_kind, int n_samples,
                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const StarOperator star = hodge_star(star_kind);
  const Flavor flavor = star_kind == Signature::Lorentzian ? Flavor::Tsec : Flavor::Gsec;
  const Signature metric = flavor_metric(flavor);
  double worst = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    const Bivector p = random_plane(rng, metric);
    const double lhs = sectional(r, star(p), flavor);
    const double rhs = sectional(r, p, flavor);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace petrov
