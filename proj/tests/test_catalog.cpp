#include "oracle.hpp"
#include "petrov/algebra.hpp"
#include "petrov/catalog.hpp"
#include "petrov/hodge.hpp"
#include "petrov/report.hpp"

#include <doctest.h>

using namespace petrov;

TEST_CASE("every generator yields an algebraic curvature tensor") {
  for (const CatalogEntry& e : catalog()) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      std::vector<double> p = complete_params(e, {});
      if (e.params.back().name == "seed") p.back() = static_cast<double>(seed);
      const CurvatureTensor t = e.make(p);
      CAPTURE(e.name);
      CHECK(t.sym6() == t.sym6().transpose());
      CHECK(oracle::bianchi_defect(oracle::to_rank4(t)) < 1e-12);
    }
  }
}

TEST_CASE("space forms and products") {
  CHECK(gen_constant_curvature(0.0).sym6().isZero());
  for (double k : {-1.0, 0.5, 3.0}) {
    const Mat4 want = 3 * k * Mat4::Identity();
    CHECK((ricci(gen_constant_curvature(k)).full - want).norm() < 1e-14);
  }
  Bivector d;
  d << 1, 0, 0, 1, 0, 0;
  CHECK(curvature_operator(gen_product_s2xs2(1, 1)).matrix == Mat6(d.asDiagonal()));
  CHECK((ricci(gen_product_s2xs2(1, 1)).full - Mat4::Identity()).norm() < 1e-15);
  const Mat4 ric12 = ricci(gen_product_s2xs2(1, 2)).full;
  CHECK(ric12(0, 0) != ric12(2, 2));
  // Product sectional curvature: planes inside a factor see that factor.
  CHECK(oracle::sectional(oracle::to_rank4(gen_product_s2xs2(1, 2)), Vec4::Unit(2), Vec4::Unit(3)) ==
        doctest::Approx(2.0));
}

TEST_CASE("★L-Einstein generator") {
  const StarOperator star_l = hodge_star(Signature::Lorentzian);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CurvatureTensor t = gen_star_l_einstein(seed);
    CHECK(commutator_residual(curvature_operator(t).matrix, star_l.matrix) < 1e-14);
    CHECK(t.bianchi_residual() < 1e-14);
    CHECK(t.norm() <= 1.0);
  }
  const AdaptedStarL a = gen_star_l_einstein_adapted(3);
  CHECK(commutator_residual(curvature_operator(a.tensor).matrix, star_l.matrix) < 1e-14);
  const Bivector rp = curvature_operator(a.tensor).matrix * a.plane_with_t;
  CHECK((rp - rp.dot(a.plane_with_t) * a.plane_with_t).norm() < 1e-12);
}

TEST_CASE("★h-Einstein generators commute with their star") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CurvatureTensor s = gen_star_h_einstein(seed, StarHVariant::SplitGRiemannian);
    CHECK(commutator_residual(curvature_operator(s).matrix, hodge_star(Signature::Split).matrix) < 1e-14);
    const CurvatureTensor l = gen_star_h_einstein(seed, StarHVariant::LorentzianG);
    CHECK(l.frame_signature() == Signature::Lorentzian);
    CHECK(commutator_residual(c_hat_h(l).matrix, hodge_star(Signature::Riemannian).matrix) < 1e-14);
    CHECK(normal_form_lorentzian(l).residual < 1e-9);
  }
}

TEST_CASE("prescribed Jordan output commutes with ★L exactly") {
  const std::vector<Complex> ev{{0.5, 1}, {-1, 0}};
  const Mat6 m = gen_prescribed_jordan(PetrovType::II, ev, 4);
  CHECK(commutator_residual(m, hodge_star(Signature::Lorentzian).matrix) == 0.0);
  // The spectrum is the prescribed one (each eigenvalue doubled on the real side).
  const Eigen::ComplexEigenSolver<CMat3> solver(complexify(m));
  Complex sum = solver.eigenvalues().sum();
  CHECK(std::abs(sum - (ev[0] + 2.0 * ev[1])) < 1e-10);
}

TEST_CASE("random rotations") {
  std::mt19937_64 rng(40);
  for (int n = 0; n < 20; ++n) {
    const Mat3 r = random_rotation(rng);
    CHECK((r.transpose() * r - Mat3::Identity()).norm() < 1e-14);
    CHECK(r.determinant() == doctest::Approx(1.0));
  }
}

TEST_CASE("catalog expectations hold in process") {
  for (const CatalogEntry& e : catalog()) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      std::vector<double> p = complete_params(e, {});
      if (e.params.back().name == "seed") p.back() = static_cast<double>(seed);
      CAPTURE(e.name);
      CAPTURE(seed);
      const auto bad = label_mismatches(e.expected(p), compute_labels(e.make(p)));
      CHECK(bad.empty());
    }
  }
  CHECK(find_generator("no_such") == nullptr);
  CHECK(label_mismatches(catalog().front().expected({}), ClassLabels{}).size() == 6);
}

TEST_CASE("product expectations follow the parameters") {
  const CatalogEntry* e = find_generator("product_s2xs2");
  REQUIRE(e);
  const std::vector<double> p{1.0, 2.0};
  CHECK(label_mismatches(e->expected(p), compute_labels(e->make(p))).empty());
  CHECK(*e->expected(p).einstein == false);
}
