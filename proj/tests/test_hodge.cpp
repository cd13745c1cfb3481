#include "oracle.hpp"
#include "petrov/algebra.hpp"
#include "petrov/errors.hpp"
#include "petrov/hodge.hpp"

#include <doctest.h>

using namespace petrov;

TEST_CASE("star matrices match the Levi-Civita definition") {
  for (Signature s : {Signature::Riemannian, Signature::Lorentzian, Signature::Split}) {
    const StarOperator star = hodge_star(s);
    for (int a = 0; a < 6; ++a) {
      const Bivector want = oracle::from_antisym(oracle::hodge(oracle::to_antisym(Bivector::Unit(a)), s));
      CHECK(star(Bivector::Unit(a)) == want);
    }
  }
}

TEST_CASE("ξ ∧ ★η = ⟨ξ, η⟩ dV") {
  std::mt19937_64 rng(7);
  for (Signature s : {Signature::Riemannian, Signature::Lorentzian, Signature::Split}) {
    const StarOperator star = hodge_star(s);
    const Lambda2Metric g = lambda2_metric(s);
    for (int n = 0; n < 20; ++n) {
      const Bivector xi = oracle::random_symmetric(rng).col(0);
      const Bivector eta = oracle::random_symmetric(rng).col(1);
      CHECK(wedge_pairing(xi, star(eta)) == doctest::Approx(g.inner(xi, eta)).epsilon(1e-12));
    }
  }
}

TEST_CASE("star squares and symmetries") {
  const Mat6 id = Mat6::Identity();
  CHECK(hodge_star(Signature::Riemannian).matrix * hodge_star(Signature::Riemannian).matrix == id);
  CHECK(hodge_star(Signature::Lorentzian).matrix * hodge_star(Signature::Lorentzian).matrix == -id);
  CHECK(hodge_star(Signature::Split).matrix * hodge_star(Signature::Split).matrix == id);
  CHECK(hodge_star(Signature::Lorentzian).square_sign() == -1);
  const Mat6 gl = lambda2_metric(Signature::Lorentzian).matrix();
  const Mat6 l = hodge_star(Signature::Lorentzian).matrix;
  CHECK(gl * l == (gl * l).transpose());
}

TEST_CASE("commutator of the block form [[A,B],[−B,A]] with ★L vanishes") {
  std::mt19937_64 rng(8);
  const Mat6 r = oracle::random_symmetric(rng);
  const Mat3 a = r.topLeftCorner<3, 3>();
  const Mat3 b = r.topRightCorner<3, 3>() - r.topRightCorner<3, 3>().transpose();
  Mat6 m;
  m << a, b, -b, a;
  CHECK(commutator_residual(m, hodge_star(Signature::Lorentzian).matrix) == 0.0);
  CHECK(commutator_residual(r, hodge_star(Signature::Lorentzian).matrix) > 1e-3);
}

TEST_CASE("complexification") {
  const ComplexOperator i3 = complexify(hodge_star(Signature::Lorentzian).matrix);
  CHECK((i3 - Complex(0, 1) * CMat3::Identity()).norm() == 0.0);

  std::mt19937_64 rng(9);
  for (int n = 0; n < 20; ++n) {
    CMat3 c;
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k) c(r, k) = Complex(oracle::random_vec(rng)[0], oracle::random_vec(rng)[1]);
    const Mat6 m = realify(c);
    CHECK(commutator_residual(m, hodge_star(Signature::Lorentzian).matrix) == 0.0);
    CHECK((complexify(m) - c).norm() == 0.0);

    // M acts on coordinates the way c acts on z.
    Bivector xi = oracle::random_symmetric(rng).col(2);
    CHECK((complex_coordinates(m * xi) - c * complex_coordinates(xi)).norm() < 1e-12);
    CHECK((real_bivector(complex_coordinates(xi)) - xi).norm() == 0.0);
  }
  CHECK_THROWS_AS(complexify(oracle::random_symmetric(rng)), Error);
}
