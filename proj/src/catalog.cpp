#include "petrov/catalog.hpp"

#include "petrov/algebra.hpp"
#include "petrov/errors.hpp"
#include "petrov/hodge.hpp"

#include <algorithm>
#include <cmath>

namespace petrov {

namespace {

double uniform(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
}

Mat3 random_symmetric(std::mt19937_64& rng) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = uniform(rng);
  return m;
}

Mat3 random_antisymmetric(std::mt19937_64& rng) {
  Mat3 m = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      m(i, j) = uniform(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

Mat6 blocks(const Mat3& a, const Mat3& b, const Mat3& c, const Mat3& d) {
  Mat6 m;
  m << a, b, c, d;
  return m;
}

// Remove the trace of the off-diagonal block (the Bianchi sum).
Mat6 bianchi_project(Mat6 m) {
  const double t = (m(0, 3) + m(1, 4) + m(2, 5)) / 3.0;
  for (int a = 0; a < 3; ++a) {
    m(a, a + 3) -= t;
    m(a + 3, a) -= t;
  }
  return m;
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

}  // namespace

Mat3 random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Mat3 g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = normal(rng);
  Eigen::HouseholderQR<Mat3> qr(g);
  Mat3 q = qr.householderQ();
  const Mat3 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 3; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

Mat4 frame_fixing_t(const Mat3& rotation) {
  Mat4 f = Mat4::Identity();
  f.bottomRightCorner<3, 3>() = rotation;
  return f;
}

CurvatureTensor gen_constant_curvature(double k) {
  return CurvatureTensor(-k * Mat6::Identity());
}

CurvatureTensor gen_product_s2xs2(double k1, double k2) {
  Mat6 m = Mat6::Zero();
  m(0, 0) = -k1;
  m(3, 3) = -k2;
  return CurvatureTensor(m);
}

CurvatureTensor gen_einstein(std::uint64_t seed) {
  auto rng = seeded(seed, 1);
  const Mat3 a = random_symmetric(rng);
  Mat3 b = random_symmetric(rng);
  b -= (b.trace() / 3.0) * Mat3::Identity();
  return CurvatureTensor(blocks(a, b, b, a));
}

CurvatureTensor gen_generic(std::uint64_t seed) {
  auto rng = seeded(seed, 2);
  Mat6 m;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b) m(a, b) = m(b, a) = uniform(rng);
  return CurvatureTensor(bianchi_project(m));
}

CurvatureTensor gen_star_l_einstein(std::uint64_t seed) {
  auto rng = seeded(seed, 3);
  const Mat3 a = random_symmetric(rng);
  const Mat3 b = random_antisymmetric(rng);
  return CurvatureTensor(blocks(a, b, -b, a));
}

AdaptedStarL gen_star_l_einstein_adapted(std::uint64_t seed) {
  auto rng = seeded(seed, 4);
  Mat3 a = random_symmetric(rng);
  a(0, 1) = a(1, 0) = a(0, 2) = a(2, 0) = 0.0;
  Mat3 b = Mat3::Zero();
  b(1, 2) = uniform(rng);
  b(2, 1) = -b(1, 2);
  const CurvatureTensor base(blocks(a, b, -b, a));
  const Mat4 frame = frame_fixing_t(random_rotation(rng));
  // e1∧e2 of the old frame, written in the new one.
  const Bivector plane = lambda2_of_frame(frame).transpose() * Bivector::Unit(0);
  return {rotate_frame(base, frame), plane};
}

CurvatureTensor gen_star_h_einstein(std::uint64_t seed, StarHVariant which) {
  if (which == StarHVariant::LorentzianG) return gen_star_h_planted(seed).tensor;
  auto rng = seeded(seed, 5);
  const Mat3 e = Vec3(1.0, -1.0, -1.0).asDiagonal();
  const Mat3 a = random_symmetric(rng);
  const Mat3 c = random_symmetric(rng);
  Mat3 b = c * e;
  b -= (b.trace() / 3.0) * Mat3::Identity();
  return CurvatureTensor(blocks(a, b, b.transpose(), e * a * e));
}

PlantedNormalForm gen_star_h_planted(std::uint64_t seed) {
  auto rng = seeded(seed, 6);
  PlantedNormalForm out;
  for (int i = 0; i < 3; ++i) out.lambdas[i] = uniform(rng);
  for (int i = 0; i < 3; ++i) out.mus[i] = uniform(rng);
  out.mus.array() -= out.mus.mean();
  const Mat3 vp = random_rotation(rng);
  const Mat3 vm = random_rotation(rng);
  const Mat3 cp = vp * (out.lambdas + out.mus).asDiagonal() * vp.transpose();
  const Mat3 cm = vm * (out.lambdas - out.mus).asDiagonal() * vm.transpose();
  Mat6 inner = Mat6::Zero();
  inner.topLeftCorner<3, 3>() = cp;
  inner.bottomRightCorner<3, 3>() = cm;
  const Mat6 u = self_dual_basis();
  const Mat6 c = u * inner * u.transpose();
  out.tensor = CurvatureTensor(bianchi_project(-0.5 * (c + c.transpose())), Signature::Lorentzian);
  return out;
}

Mat6 gen_prescribed_jordan(PetrovType type, std::span<const Complex> eigenvalues,
                           std::uint64_t seed) {
  const std::size_t needed = type == PetrovType::I ? 3 : type == PetrovType::II ? 2 : 1;
  if (eigenvalues.size() != needed) {
    throw Error(ErrorCode::BadEigenvalueCount,
                "Type " + std::string(to_string(type)) + " takes " + std::to_string(needed) +
                    " eigenvalues, got " + std::to_string(eigenvalues.size()));
  }
  CMat3 j = CMat3::Zero();
  switch (type) {
    case PetrovType::I:
      for (int i = 0; i < 3; ++i) j(i, i) = eigenvalues[static_cast<std::size_t>(i)];
      break;
    case PetrovType::II:
      j(0, 0) = eigenvalues[0];
      j(1, 1) = j(2, 2) = eigenvalues[1];
      j(1, 2) = 1.0;
      break;
    case PetrovType::III:
      j(0, 0) = j(1, 1) = j(2, 2) = eigenvalues[0];
      j(0, 1) = j(1, 2) = 1.0;
      break;
  }
  auto rng = seeded(seed, 7);
  std::normal_distribution<double> normal;
  for (;;) {
    CMat3 q;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) q(r, c) = Complex(normal(rng), normal(rng));
    const Eigen::JacobiSVD<CMat3> svd(q);
    const auto s = svd.singularValues();
    if (s[2] <= 0.0 || s[0] / s[2] >= 50.0) continue;
    return realify(q * j * q.inverse());
  }
}

namespace {

ClassLabels riemannian_defaults() {
  ClassLabels l;
  l.petrov_type = PetrovType::I;
  return l;
}

std::uint64_t seed_param(std::span<const double> p, std::size_t i) {
  return static_cast<std::uint64_t>(std::max(0.0, p[i]));
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  out.push_back({"constant_curvature", "space form, operator k·I", {{"k", 1.0}},
                 [](std::span<const double> p) { return gen_constant_curvature(p[0]); },
                 [](std::span<const double>) {
                   ClassLabels l = riemannian_defaults();
                   l.einstein = l.star_l_einstein = l.almost_einstein = true;
                   l.w_plus_equals_w_minus = l.star_h_einstein = true;
                   return l;
                 }});

  out.push_back({"product_s2xs2", "S²(k1) × S²(k2) in the product frame",
                 {{"k1", 1.0}, {"k2", 1.0}},
                 [](std::span<const double> p) { return gen_product_s2xs2(p[0], p[1]); },
                 [](std::span<const double> p) {
                   ClassLabels l = riemannian_defaults();
                   const bool equal = p[0] == p[1];
                   l.einstein = l.star_l_einstein = l.almost_einstein = equal;
                   l.star_h_einstein = equal;
                   l.w_plus_equals_w_minus = true;
                   return l;
                 }});

  out.push_back({"product_s2xs2_rotated", "S²(k1) × S²(k2) in a random frame",
                 {{"k1", 1.0}, {"k2", 1.0}, {"seed", 0.0}},
                 [](std::span<const double> p) {
                   auto rng = seeded(seed_param(p, 2), 8);
                   // A generic rotation of all four frame vectors.
                   std::normal_distribution<double> normal;
                   Mat4 g;
                   for (int i = 0; i < 4; ++i)
                     for (int j = 0; j < 4; ++j) g(i, j) = normal(rng);
                   Eigen::HouseholderQR<Mat4> qr(g);
                   Mat4 q = qr.householderQ();
                   if (q.determinant() < 0) q.col(0) = -q.col(0);
                   return rotate_frame(gen_product_s2xs2(p[0], p[1]), q);
                 },
                 [](std::span<const double> p) {
                   ClassLabels l = riemannian_defaults();
                   l.einstein = l.almost_einstein = p[0] == p[1];
                   l.w_plus_equals_w_minus = p[0] + p[1] == 0.0;
                   return l;
                 }});

  out.push_back({"einstein", "random Einstein tensor", {{"seed", 0.0}},
                 [](std::span<const double> p) { return gen_einstein(seed_param(p, 0)); },
                 [](std::span<const double>) {
                   ClassLabels l = riemannian_defaults();
                   l.einstein = l.almost_einstein = true;
                   l.star_l_einstein = l.w_plus_equals_w_minus = l.star_h_einstein = false;
                   return l;
                 }});

  out.push_back({"generic", "random algebraic curvature tensor", {{"seed", 0.0}},
                 [](std::span<const double> p) { return gen_generic(seed_param(p, 0)); },
                 [](std::span<const double>) {
                   ClassLabels l = riemannian_defaults();
                   l.einstein = l.star_l_einstein = l.almost_einstein = false;
                   l.w_plus_equals_w_minus = l.star_h_einstein = false;
                   return l;
                 }});

  out.push_back({"star_l_einstein", "random ★L-Einstein tensor", {{"seed", 0.0}},
                 [](std::span<const double> p) { return gen_star_l_einstein(seed_param(p, 0)); },
                 [](std::span<const double>) {
                   ClassLabels l = riemannian_defaults();
                   l.star_l_einstein = l.almost_einstein = l.w_plus_equals_w_minus = true;
                   l.einstein = l.star_h_einstein = false;
                   return l;
                 }});

  out.push_back({"star_l_einstein_adapted",
                 "★L-Einstein tensor with an eigen-plane containing T", {{"seed", 0.0}},
                 [](std::span<const double> p) {
                   return gen_star_l_einstein_adapted(seed_param(p, 0)).tensor;
                 },
                 [](std::span<const double>) {
                   ClassLabels l = riemannian_defaults();
                   l.star_l_einstein = l.almost_einstein = l.w_plus_equals_w_minus = true;
                   l.einstein = l.star_h_einstein = false;
                   return l;
                 }});

  out.push_back({"star_h_einstein_split", "Riemannian g, operator commuting with split ★h",
                 {{"seed", 0.0}},
                 [](std::span<const double> p) {
                   return gen_star_h_einstein(seed_param(p, 0), StarHVariant::SplitGRiemannian);
                 },
                 [](std::span<const double>) {
                   ClassLabels l = riemannian_defaults();
                   l.star_h_einstein = true;
                   l.einstein = l.star_l_einstein = l.almost_einstein = false;
                   l.w_plus_equals_w_minus = false;
                   return l;
                 }});

  out.push_back({"star_h_einstein_lorentzian",
                 "Lorentzian g, ĉ_h commuting with the Riemannian-form star", {{"seed", 0.0}},
                 [](std::span<const double> p) {
                   return gen_star_h_einstein(seed_param(p, 0), StarHVariant::LorentzianG);
                 },
                 [](std::span<const double>) {
                   ClassLabels l;
                   l.star_h_einstein = true;
                   return l;
                 }});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_generator(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<double> complete_params(const CatalogEntry& entry, std::span<const double> given) {
  std::vector<double> out(given.begin(), given.end());
  for (std::size_t i = out.size(); i < entry.params.size(); ++i)
    out.push_back(entry.params[i].default_value);
  return out;
}

}  // namespace petrov
