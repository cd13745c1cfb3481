#include "petrov/verify.hpp"

#include "petrov/algebra.hpp"
#include "petrov/catalog.hpp"
#include "petrov/classify.hpp"
#include "petrov/curvature_file.hpp"
#include "petrov/errors.hpp"
#include "petrov/hodge.hpp"
#include "petrov/report.hpp"
#include "petrov/sectional.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace petrov::verify {

namespace {

Mat6 random_symmetric6(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat6 m;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b) m(a, b) = m(b, a) = u(rng);
  return m;
}

Vec4 random_vec4(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return Vec4(n(rng), n(rng), n(rng), n(rng));
}

// Random plane, unit in `metric`, with |⟨P,P⟩| ≥ 0.05 |P|².
Bivector random_plane(std::mt19937_64& rng, Signature metric) {
  const Lambda2Metric g = lambda2_metric(metric);
  for (;;) {
    const Bivector xi = wedge(random_vec4(rng), random_vec4(rng));
    const double n = g.norm2(xi);
    if (std::abs(n) >= 0.05 * xi.squaredNorm()) return xi / std::sqrt(std::abs(n));
  }
}

CriterionResult make(std::string id, std::string description, double threshold) {
  CriterionResult r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.threshold = threshold;
  return r;
}

void finish(CriterionResult& r, bool extra = true) {
  r.passed = extra && r.worst < r.threshold && r.instances > 0;
}

}  // namespace

CriterionResult star_algebra() {
  CriterionResult r = make("star_algebra", "star squares are ±I exactly; ★L self-adjoint for ⟨,⟩_L; ★h symmetric", 0.0);
  const Mat6 id = Mat6::Identity();
  const Mat6 s = hodge_star(Signature::Riemannian).matrix;
  const Mat6 l = hodge_star(Signature::Lorentzian).matrix;
  const Mat6 h = hodge_star(Signature::Split).matrix;
  const Mat6 gl = lambda2_metric(Signature::Lorentzian).matrix();
  std::vector<std::string> failures;
  if (s * s != id) failures.push_back("★² ≠ I");
  if (l * l != -id) failures.push_back("★L² ≠ −I");
  if (h * h != id) failures.push_back("★h² ≠ I");
  if (gl * l != (gl * l).transpose()) failures.push_back("★L not self-adjoint");
  if (h != h.transpose()) failures.push_back("split ★h not symmetric");
  if (s != s.transpose()) failures.push_back("★ not symmetric");
  r.instances = 6;
  r.passed = failures.empty();
  for (const auto& f : failures) r.detail += f + "; ";
  return r;
}

CriterionResult block_characterizations(int n) {
  CriterionResult r = make("block_characterizations",
                           "commutation/anti-commutation with ★ and ★L iff block conditions",
                           1e-12);
  std::mt19937_64 rng(101);
  const Mat6 star = hodge_star(Signature::Riemannian).matrix;
  const Mat6 star_l = hodge_star(Signature::Lorentzian).matrix;
  struct Class {
    const Mat6* s;
    int sign;      // +1 commute, −1 anti-commute
    int d_sign;    // D = d_sign · A
    int b_sign;    // Bᵀ = b_sign · B
  };
  const std::array<Class, 4> classes{{
      {&star, +1, +1, +1},
      {&star, -1, -1, -1},
      {&star_l, +1, +1, -1},
      {&star_l, -1, -1, +1},
  }};
  int mismatches = 0;
  std::array<int, 4> positives{};
  for (int i = 0; i < n; ++i) {
    Mat6 m = random_symmetric6(rng);
    const int k = i % 5;
    if (k > 0) {
      const Class& c = classes[static_cast<std::size_t>(k - 1)];
      const Mat3 a = 0.5 * (m.topLeftCorner<3, 3>() + c.d_sign * m.bottomRightCorner<3, 3>());
      const Mat3 b = 0.5 * (m.topRightCorner<3, 3>() + c.b_sign * m.topRightCorner<3, 3>().transpose());
      m << a, b, b.transpose(), c.d_sign * a;
    }
    const Mat3 a = m.topLeftCorner<3, 3>();
    const Mat3 b = m.topRightCorner<3, 3>();
    const Mat3 d = m.bottomRightCorner<3, 3>();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const Class& cl = classes[c];
      const double comm = max_abs(Mat6(m * *cl.s - cl.sign * (*cl.s * m)));
      const double blocks = std::max(max_abs(Mat3(d - cl.d_sign * a)),
                                     max_abs(Mat3(b.transpose() - cl.b_sign * b)));
      const bool by_comm = comm <= r.threshold;
      const bool by_blocks = blocks <= r.threshold;
      if (by_comm != by_blocks) ++mismatches;
      if (by_comm) ++positives[c];
      if (by_comm && by_blocks) r.worst = std::max({r.worst, comm, blocks});
    }
    ++r.instances;
  }
  const bool both_sides = std::all_of(positives.begin(), positives.end(),
                                      [&](int p) { return p > 0 && p < r.instances; });
  r.detail = std::to_string(mismatches) + " disagreements";
  r.passed = mismatches == 0 && both_sides && r.instances > 0;
  return r;
}

CriterionResult star_l_einstein_pattern(int n) {
  CriterionResult r = make("star_l_einstein_pattern",
                           "★L-Einstein ⇒ almost-Einstein Ricci pattern and W+ = W−", 1e-10);
  for (int i = 0; i < n; ++i) {
    const CurvatureTensor t = gen_star_l_einstein(static_cast<std::uint64_t>(i));
    const AlmostEinsteinVerdict ae = almost_einstein_check(t);
    const WeylSymmetryVerdict w = w_plus_equals_w_minus(t);
    r.worst = std::max({r.worst, ae.residual, w.residual});
    ++r.instances;
  }
  finish(r);
  return r;
}

CriterionResult sectional_duality(int instances, int planes) {
  CriterionResult r = make("sectional_duality",
                           "Tsec(★L P) = Tsec(P) on ★L-Einstein, Ssec(★L P) = Ssec(P) on any",
                           1e-10);
  std::mt19937_64 rng(202);
  const StarOperator star_l = hodge_star(Signature::Lorentzian);
  for (int i = 0; i < instances; ++i) {
    const CurvatureTensor e = gen_star_l_einstein(static_cast<std::uint64_t>(1000 + i));
    const CurvatureTensor g = gen_generic(static_cast<std::uint64_t>(1000 + i));
    for (int k = 0; k < planes; ++k) {
      const Bivector p = random_plane(rng, Signature::Lorentzian);
      const Bivector q = star_l(p);
      r.worst = std::max(r.worst, std::abs(tsec(e, q) - tsec(e, p)));
      r.worst = std::max(r.worst, std::abs(ssec(g, q) - ssec(g, p)));
    }
    ++r.instances;
  }
  finish(r);
  return r;
}

namespace {

// Linear constraints on the 21 upper entries whose joint kernel is the set of
// algebraic curvature tensors with tr_h Rm = f·h (h split).
Eigen::Matrix<double, 10, 21> trace_h_constraints() {
  Eigen::Matrix<double, 10, 21> a;
  const Vec4 h = frame_signs(Signature::Split);
  for (int k = 0; k < 21; ++k) {
    std::array<double, 21> e{};
    e[static_cast<std::size_t>(k)] = 1.0;
    const CurvatureTensor t = CurvatureTensor::from_upper(std::span<const double, 21>(e));
    const Mat6& s = t.sym6();
    const Mat4 hh = trace_h(t, Signature::Split).h_trace;
    int row = 0;
    a(row++, k) = s(0, 3) + s(1, 4) + s(2, 5);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) a(row++, k) = hh(i, j);
    for (int i = 1; i < 4; ++i) a(row++, k) = hh(0, 0) / h[0] - hh(i, i) / h[i];
  }
  return a;
}

}  // namespace

CriterionResult star_h_equivalence(int n) {
  CriterionResult r = make("star_h_equivalence",
                           "split ★h-Einstein ⇔ tr_h Rm = f·h, with gsec(★h P) = gsec(P)", 1e-10);
  std::mt19937_64 rng(303);
  const StarOperator star_h = hodge_star(Signature::Split);
  const Eigen::Matrix<double, 10, 21> a = trace_h_constraints();
  const Eigen::CompleteOrthogonalDecomposition<Eigen::Matrix<double, 10, 21>> cod(a);
  double converse_worst = 0.0;
  for (int i = 0; i < n; ++i) {
    // Commuting ⇒ trace condition and duality.
    const CurvatureTensor t =
        gen_star_h_einstein(static_cast<std::uint64_t>(i), StarHVariant::SplitGRiemannian);
    r.worst = std::max(r.worst, trace_h(t, Signature::Split).residual);
    for (int k = 0; k < 20; ++k) {
      const Bivector p = random_plane(rng, Signature::Riemannian);
      r.worst = std::max(r.worst, std::abs(gsec(t, star_h(p)) - gsec(t, p)));
    }
    // Trace condition (imposed by projection) ⇒ commuting.
    const std::array<double, 21> x0 = CurvatureTensor(random_symmetric6(rng)).upper();
    const Eigen::Matrix<double, 21, 1> x = Eigen::Map<const Eigen::Matrix<double, 21, 1>>(x0.data());
    const Eigen::Matrix<double, 21, 1> y = x - cod.solve(a * x);
    std::array<double, 21> yv{};
    std::copy(y.data(), y.data() + 21, yv.begin());
    const CurvatureTensor u = CurvatureTensor::from_upper(std::span<const double, 21>(yv));
    r.worst = std::max(r.worst, trace_h(u, Signature::Split).residual);
    converse_worst = std::max(converse_worst,
                              star_einstein_residual(curvature_operator(u).matrix, star_h));
    ++r.instances;
  }
  r.detail = "converse commutation residual " + format_double(converse_worst) + " (< 1e-9)";
  finish(r, converse_worst < 1e-9);
  return r;
}

namespace {

struct CriticalCase {
  CurvatureTensor tensor;
  Bivector plane;
  Flavor flavor;
};

CriticalCase critical_case(int i, std::mt19937_64& rng) {
  const int kind = i % 4;
  const Flavor flavor = i % 8 < 4 ? Flavor::Tsec : Flavor::Ssec;
  Mat6 m = CurvatureTensor(random_symmetric6(rng)).sym6();
  {
    const double t = (m(0, 3) + m(1, 4) + m(2, 5)) / 3.0;
    for (int s = 0; s < 3; ++s) m(s, s + 3) -= t, m(s + 3, s) -= t;
  }
  Bivector p = Bivector::Zero();
  auto zero = [&](int a, int b) { m(a, b) = m(b, a) = 0.0; };
  switch (kind) {
    case 0:
    case 1:
      return {CurvatureTensor(m), random_plane(rng, Signature::Lorentzian), flavor};
    case 2:
      // P = e3∧e4 with R_3442 = R_3423 = 0 (and the dual entries, for Ssec).
      zero(3, 4), zero(3, 5), zero(0, 1), zero(0, 2);
      p = Bivector::Unit(3);
      break;
    default:
      // P = e1∧e2 with R_1213 = R_1214 = 0.
      zero(0, 1), zero(0, 2), zero(3, 4), zero(3, 5);
      p = Bivector::Unit(0);
      break;
  }
  const Mat4 frame = frame_fixing_t(random_rotation(rng));
  const Bivector q = lambda2_of_frame(frame).transpose() * p;
  return {rotate_frame(CurvatureTensor(m), frame), q, flavor};
}

}  // namespace

CriterionResult critical_finite_differences(int n) {
  CriterionResult r = make("critical_finite_differences",
                           "closed-form Tsec/Ssec criticality agrees with central differences",
                           1e-8);
  std::mt19937_64 rng(404);
  const double h = 1e-5;
  int disagreements = 0, critical = 0;
  for (int i = 0; i < n; ++i) {
    const CriticalCase c = critical_case(i, rng);
    const CriticalVerdict v = critical_test(c.tensor, c.plane, c.flavor);
    const GrassmannChart chart = adapted_chart(c.plane, Signature::Lorentzian);
    Vec4 g;
    for (int k = 0; k < 4; ++k) {
      const Vec4 dx = h * Vec4::Unit(k);
      const double fp = sectional(c.tensor, grassmann_chart_eval(chart, dx), c.flavor);
      const double fm = sectional(c.tensor, grassmann_chart_eval(chart, -dx), c.flavor);
      g[k] = (fp - fm) / (2 * h);
    }
    const bool fd_critical = g.norm() < 1e-4;
    const bool closed_critical = v.residual < 1e-8;
    if (fd_critical != closed_critical) ++disagreements;
    if (closed_critical) {
      ++critical;
      r.worst = std::max(r.worst, v.residual);
    }
    ++r.instances;
  }
  r.detail = std::to_string(critical) + " critical, " + std::to_string(disagreements) +
             " disagreements";
  finish(r, disagreements == 0 && critical > 0 && critical < r.instances);
  return r;
}

namespace {

// Real representative of a complex eigenvector, if its complex line holds one.
std::optional<Vec3> real_direction(const CVec3& v) {
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  const Complex phase = v[k] / std::abs(v[k]);
  const CVec3 w = v / phase;
  if (w.imag().norm() > 1e-8 * w.norm()) return std::nullopt;
  return Vec3(w.real().normalized());
}

// ★L-Einstein operator with parameters θ = (A upper 6, B upper 3).
Mat6 star_l_operator(const Eigen::Matrix<double, 9, 1>& theta) {
  Mat3 a, b = Mat3::Zero();
  a << theta[0], theta[1], theta[2], theta[1], theta[3], theta[4], theta[2], theta[4], theta[5];
  b(0, 1) = theta[6], b(0, 2) = theta[7], b(1, 2) = theta[8];
  b = Mat3(b - b.transpose());
  Mat6 m;
  m << a, b, -b, a;
  return -m;
}

}  // namespace

CriterionResult t_adapted_eigenplanes(int n) {
  CriterionResult r = make("t_adapted_eigenplanes",
                           "T-adapted eigen-planes are gsec-critical and vice versa", 1e-8);
  std::mt19937_64 rng(505);
  const StarOperator star = hodge_star(Signature::Riemannian);
  int planes = 0;
  for (int i = 0; i < n; ++i) {
    const CurvatureTensor t = i % 2 == 0
                                  ? gen_star_l_einstein(static_cast<std::uint64_t>(i))
                                  : gen_star_l_einstein_adapted(static_cast<std::uint64_t>(i)).tensor;
    const ComplexOperator c = complexify(curvature_operator(t).matrix);
    const Eigen::ComplexEigenSolver<CMat3> solver(c);
    bool found = false;
    for (int k = 0; k < 3; ++k) {
      const auto x = real_direction(solver.eigenvectors().col(k));
      if (!x) continue;
      found = true;
      Bivector with_t = Bivector::Zero();
      with_t.head<3>() = *x;
      for (const Bivector& p : {with_t, Bivector(star(with_t))}) {
        r.worst = std::max(r.worst, critical_test(t, p, Flavor::Gsec).residual);
        ++planes;
      }
    }
    if (!found) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
  }

  // Converse: impose gsec-criticality of a random T-adapted plane on a
  // ★L-Einstein operator, then check the plane is a complex eigenvector.
  double converse = 0.0;
  int planted = 0;
  std::normal_distribution<double> normal;
  for (int i = 0; i < n; ++i) {
    Vec3 v(normal(rng), normal(rng), normal(rng));
    Bivector p = Bivector::Zero();
    p.head<3>() = v.normalized();
    if (i % 2 == 1) p = star(p);
    const Mat6 proj = Mat6::Identity() - p * p.transpose() - star(p) * star(p).transpose();
    Eigen::Matrix<double, 6, 9> cons;
    for (int k = 0; k < 9; ++k) {
      cons.col(k) = proj * star_l_operator(Eigen::Matrix<double, 9, 1>::Unit(k)) * p;
    }
    Eigen::Matrix<double, 9, 1> theta;
    for (int k = 0; k < 9; ++k) theta[k] = normal(rng);
    const Eigen::CompleteOrthogonalDecomposition<Eigen::Matrix<double, 6, 9>> cod(cons);
    theta -= cod.solve(cons * theta);
    const Mat6 op = star_l_operator(theta);
    const CurvatureTensor t(-op);
    const CriticalVerdict verdict = critical_test(t, p, Flavor::Gsec);
    const CVec3 z = complex_coordinates(p);
    const CMat3 c = complexify(op);
    const CVec3 cz = c * z;
    const Complex lambda = z.dot(cz) / z.squaredNorm();
    converse = std::max({converse, verdict.residual, (cz - lambda * z).norm()});
    ++planted;
  }
  r.worst = std::max(r.worst, converse);
  r.detail = std::to_string(planes) + " eigen-planes checked, " + std::to_string(r.skipped) +
             " instances without one skipped, " + std::to_string(planted) + " planted";
  finish(r);
  return r;
}

CriterionResult jordan_round_trip(int per_type) {
  CriterionResult r = make("jordan_round_trip", "prescribed Jordan type recovered", 0.5);
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int wrong = 0;
  for (PetrovType type : {PetrovType::I, PetrovType::II, PetrovType::III}) {
    const std::size_t count = type == PetrovType::I ? 3 : type == PetrovType::II ? 2 : 1;
    for (int i = 0; i < per_type; ++i) {
      std::vector<Complex> ev;
      while (ev.size() < count) {
        const Complex z(u(rng), u(rng));
        if (std::all_of(ev.begin(), ev.end(), [&](Complex w) { return std::abs(w - z) >= 0.5; }))
          ev.push_back(z);
      }
      const Mat6 m = gen_prescribed_jordan(type, ev, rng());
      const PetrovReport report = petrov_type(m, PetrovMode::FullOperator);
      if (report.type != type) ++wrong;
      ++r.instances;
    }
  }
  r.worst = wrong;
  r.detail = std::to_string(wrong) + " misclassified";
  finish(r, wrong == 0);
  return r;
}

CriterionResult normal_form_recovery(int n) {
  CriterionResult r = make("normal_form_recovery",
                           "Lorentzian ★h-Einstein normal form reconstructs and recovers (λ, μ)",
                           1e-9);
  for (int i = 0; i < n; ++i) {
    const PlantedNormalForm planted = gen_star_h_planted(static_cast<std::uint64_t>(i));
    const NormalForm nf = normal_form_lorentzian(planted.tensor);
    // Recovered values pair the descending self-dual and anti-self-dual
    // eigenvalues p = λ + μ and q = λ − μ.
    auto desc = [](Vec3 v) {
      std::sort(v.data(), v.data() + 3, std::greater<>());
      return v;
    };
    const Vec3 p = desc(planted.lambdas + planted.mus);
    const Vec3 q = desc(planted.lambdas - planted.mus);
    const Vec3 want_l = 0.5 * (p + q);
    const Vec3 want_m = 0.5 * (p - q);
    r.worst = std::max({r.worst, nf.residual, (nf.lambdas - want_l).cwiseAbs().maxCoeff(),
                        (nf.mus - want_m).cwiseAbs().maxCoeff()});
    ++r.instances;
  }
  finish(r);
  return r;
}

CriterionResult s_components_routes(int n) {
  CriterionResult r = make("s_components_routes",
                           "S components from K agree with the ★L-commuting part of 𝓡", 1e-12);
  const Bivector eps = lambda2_metric(Signature::Lorentzian).diag;
  for (int i = 0; i < n; ++i) {
    const CurvatureTensor t = gen_generic(static_cast<std::uint64_t>(2000 + i));
    const Mat6 s_op =
        sa_decompose(curvature_operator(t).matrix, hodge_star(Signature::Lorentzian), -1).s.matrix;
    // S_{(a)(b)} = −⟨S e_a, e_b⟩_L = −ε_b S_op(b, a).
    const Mat6 via_op = -(eps.asDiagonal() * s_op).transpose();
    r.worst = std::max(r.worst, max_abs(Mat6(s_components(t) - via_op)));
    ++r.instances;
  }
  finish(r);
  return r;
}

CriterionResult catalog_labels(int seeds_per_generator) {
  CriterionResult r = make("catalog_labels", "every generator's file classifies to its labels", 0.5);
  int wrong = 0;
  for (const CatalogEntry& entry : catalog()) {
    const bool seeded =
        std::any_of(entry.params.begin(), entry.params.end(),
                    [](const CatalogParam& p) { return p.name == "seed"; });
    const int runs = seeded ? seeds_per_generator : 1;
    for (int s = 0; s < runs; ++s) {
      std::vector<double> params = complete_params(entry, {});
      if (seeded) params.back() = s;
      CurvatureFile file = CurvatureFile::from_tensor(entry.make(params));
      const CurvatureFile back = parse_curvature_file(serialize(file));
      const auto bad = label_mismatches(entry.expected(params), compute_labels(back.tensor()));
      if (!bad.empty()) {
        ++wrong;
        r.detail += entry.name + "(" + std::to_string(s) + "): " + bad.front() + "; ";
      }
      ++r.instances;
    }
  }
  r.worst = wrong;
  finish(r, wrong == 0);
  return r;
}

Counts Counts::capped(int n) const {
  if (n <= 0) return *this;
  Counts c = *this;
  for (int* f : {&c.block, &c.star_l, &c.duality_instances, &c.duality_planes, &c.star_h,
                 &c.critical, &c.adapted, &c.jordan, &c.normal_form, &c.s_components,
                 &c.catalog_seeds})
    *f = std::min(*f, n);
  return c;
}

std::vector<CriterionResult> run_all(const Counts& c) {
  return {star_algebra(),
          block_characterizations(c.block),
          star_l_einstein_pattern(c.star_l),
          sectional_duality(c.duality_instances, c.duality_planes),
          star_h_equivalence(c.star_h),
          critical_finite_differences(c.critical),
          t_adapted_eigenplanes(c.adapted),
          jordan_round_trip(c.jordan),
          normal_form_recovery(c.normal_form),
          s_components_routes(c.s_components),
          catalog_labels(c.catalog_seeds)};
}

std::string format_line(const CriterionResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, " (worst %.3g, threshold %.3g, %d instances", r.worst,
                r.threshold, r.instances);
  std::string out = std::string(r.passed ? "PASS " : "FAIL ") + r.id + ": " + r.description + buf;
  if (r.skipped > 0) out += ", " + std::to_string(r.skipped) + " skipped";
  out += ")";
  if (!r.detail.empty()) out += " [" + r.detail + "]";
  return out;
}

}  // namespace petrov::verify
