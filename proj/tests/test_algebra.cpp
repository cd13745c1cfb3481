#include "oracle.hpp"
#include "petrov/algebra.hpp"
#include "petrov/errors.hpp"

#include <doctest.h>

using namespace petrov;

TEST_CASE("wedge lands in the fixed slots with the right signs") {
  const Vec4 e[4] = {Vec4::Unit(0), Vec4::Unit(1), Vec4::Unit(2), Vec4::Unit(3)};
  CHECK(wedge(e[0], e[1]) == Bivector::Unit(0));
  CHECK(wedge(e[2], e[3]) == Bivector::Unit(3));
  CHECK(wedge(e[1], e[3]) == -Bivector::Unit(4));
  CHECK(wedge(e[1], e[2]) == Bivector::Unit(5));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const SlotRef s = slot_of(i, j);
      CHECK(wedge(e[i], e[j]) == s.sign * Bivector::Unit(s.slot));
    }
}

TEST_CASE("wedge agrees with the antisymmetric-array oracle") {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 50; ++n) {
    const Vec4 v = oracle::random_vec(rng), w = oracle::random_vec(rng);
    CHECK((wedge(v, w) - oracle::from_antisym(oracle::wedge(v, w))).norm() < 1e-14);
  }
}

TEST_CASE("Λ² metric is the Gram determinant") {
  std::mt19937_64 rng(2);
  for (Signature s : {Signature::Riemannian, Signature::Lorentzian, Signature::Split}) {
    const Lambda2Metric g = lambda2_metric(s);
    for (int n = 0; n < 30; ++n) {
      Bivector a, b;
      for (int k = 0; k < 6; ++k) a[k] = oracle::random_vec(rng)[0], b[k] = oracle::random_vec(rng)[0];
      const double want = oracle::inner(oracle::to_antisym(a), oracle::to_antisym(b), s);
      CHECK(g.inner(a, b) == doctest::Approx(want).epsilon(1e-12));
    }
  }
  CHECK(lambda2_metric(Signature::Lorentzian).diag == (Bivector() << -1, -1, -1, 1, 1, 1).finished());
  CHECK(lambda2_metric(Signature::Split).diag == (Bivector() << 1, -1, -1, 1, -1, -1).finished());
}

TEST_CASE("decomposability") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 50; ++n) {
    const Bivector xi = wedge(oracle::random_vec(rng), oracle::random_vec(rng));
    CHECK(is_decomposable(xi));
    CHECK(std::abs(wedge_pairing(xi, xi)) < 1e-12 * xi.squaredNorm());
    const auto [u, v] = span_of(xi);
    CHECK((wedge(u, v) - xi).norm() < 1e-12 * xi.norm());
  }
  CHECK_FALSE(is_decomposable(Bivector::Unit(0) + Bivector::Unit(3)));
  CHECK(wedge_pairing(Bivector::Unit(1), Bivector::Unit(4)) == 1.0);
}

TEST_CASE("epsilon_sign and degenerate planes") {
  const Vec4 e1 = Vec4::Unit(0), e2 = Vec4::Unit(1), e3 = Vec4::Unit(2);
  CHECK(epsilon_sign(wedge(e1, e2), Signature::Lorentzian) == -1);
  CHECK(epsilon_sign(wedge(e2, e3), Signature::Lorentzian) == 1);
  CHECK(epsilon_sign(wedge(e1, e2), Signature::Split) == 1);
  CHECK_THROWS_AS(epsilon_sign(wedge(e1 + e2, e3), Signature::Lorentzian), Error);
}

TEST_CASE("lambda2_of_frame is the induced map") {
  std::mt19937_64 rng(4);
  CHECK(lambda2_of_frame(Mat4::Identity()) == Mat6::Identity());
  Eigen::HouseholderQR<Mat4> qr(Mat4::NullaryExpr([&](Eigen::Index, Eigen::Index) {
    return oracle::random_vec(rng)[0];
  }));
  const Mat4 q = qr.householderQ();
  const Mat6 w = lambda2_of_frame(q);
  CHECK((w.transpose() * w - Mat6::Identity()).norm() < 1e-12);
  const Vec4 v = oracle::random_vec(rng), u = oracle::random_vec(rng);
  CHECK((w * wedge(v, u) - wedge(q * v, q * u)).norm() < 1e-12);
}

TEST_CASE("symmetric eigen-decomposition") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 20; ++n) {
    const Mat6 m6 = oracle::random_symmetric(rng);
    const Mat3 m = m6.topLeftCorner<3, 3>();
    const SymmetricEigen e = eig_symmetric(m);
    CHECK(e.values[0] >= e.values[1]);
    CHECK(e.values[1] >= e.values[2]);
    CHECK((e.vectors * e.values.asDiagonal() * e.vectors.transpose() - m).norm() < 1e-12);
  }
  Mat3 bad = Mat3::Identity();
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_symmetric(bad), Error);
}

TEST_CASE("complex eigenstructure multiplicities") {
  CMat3 diag = CMat3::Zero();
  diag.diagonal() << Complex(1, 0), Complex(2, 0), Complex(3, 1);
  ComplexEigenstructure es = complex_eigenstructure(diag);
  CHECK(es.clusters.size() == 3);
  CHECK(es.total_geometric() == 3);

  es = complex_eigenstructure(CMat3::Identity() * Complex(2, -1));
  REQUIRE(es.clusters.size() == 1);
  CHECK(es.clusters[0].algebraic == 3);
  CHECK(es.clusters[0].geometric == 3);

  CMat3 jordan = CMat3::Identity() * Complex(5, 0);
  jordan(0, 1) = jordan(1, 2) = 1.0;
  es = complex_eigenstructure(jordan);
  REQUIRE(es.clusters.size() == 1);
  CHECK(es.clusters[0].algebraic == 3);
  CHECK(es.clusters[0].geometric == 1);

  // Defective eigenvalue hidden by a similarity transform.
  std::mt19937_64 rng(6);
  std::normal_distribution<double> nd;
  CMat3 q;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) q(r, c) = Complex(nd(rng), nd(rng));
  CMat3 j2 = CMat3::Zero();
  j2(0, 0) = Complex(1, 1);
  j2(1, 1) = j2(2, 2) = Complex(2, -1);
  j2(1, 2) = 1.0;
  es = complex_eigenstructure(q * j2 * q.inverse());
  REQUIRE(es.clusters.size() == 2);
  CHECK(es.total_geometric() == 2);
  CHECK(es.tolerance_margin > 1.0);
}
