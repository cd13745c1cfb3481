#pragma once

#include "petrov/classify.hpp"
#include "petrov/curvature.hpp"
#include "petrov/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace petrov {

/// 𝓡 = k·I₆ in a Riemannian frame.
CurvatureTensor gen_constant_curvature(double k);

/// S²(k1) × S²(k2) in the product frame {e1, e2 | e3, e4}:
/// R_1221 = k1, R_3443 = k2, everything else zero.
CurvatureTensor gen_product_s2xs2(double k1, double k2);

/// Random Einstein tensor: sym6 = [[A, B], [B, A]], A and B symmetric,
/// tr B = 0. Entries uniform in [−1, 1].
CurvatureTensor gen_einstein(std::uint64_t seed);

/// Random algebraic curvature tensor with no further structure.
CurvatureTensor gen_generic(std::uint64_t seed);

/// Random ★L-Einstein tensor: sym6 = [[A, B], [−B, A]], A symmetric,
/// B antisymmetric, entries uniform in [−1, 1].
CurvatureTensor gen_star_l_einstein(std::uint64_t seed);

/// ★L-Einstein tensor built with A01 = A02 = B01 = B02 = 0 and then rotated by
/// a random rotation fixing e1, so that its complexified operator has a real
/// eigenvector. Its eigen-plane containing T is returned alongside.
struct AdaptedStarL {
  CurvatureTensor tensor;
  Bivector plane_with_t;
};
AdaptedStarL gen_star_l_einstein_adapted(std::uint64_t seed);

enum class StarHVariant {
  SplitGRiemannian,  // Riemannian frame, split ★h = [[O, E], [E, O]], E = diag(1, −1, −1)
  LorentzianG,       // Lorentzian frame, ★h = [[O, I], [I, O]] acting on ĉ_h
};

/// Random tensor whose (adapted) operator commutes with ★h.
CurvatureTensor gen_star_h_einstein(std::uint64_t seed, StarHVariant which);

/// The LorentzianG variant together with the planted normal-form data.
///
/// λ is drawn uniform in [−1, 1]³ and μ uniform in [−1, 1]³ then shifted to
/// sum to zero (which is what the Bianchi identity asks for). The operator is
/// ĉ_h = U · diag(V+ diag(λ+μ) V+ᵀ, V− diag(λ−μ) V−ᵀ) · Uᵀ for random
/// rotations V±.
struct PlantedNormalForm {
  CurvatureTensor tensor;
  Vec3 lambdas;
  Vec3 mus;
};
PlantedNormalForm gen_star_h_planted(std::uint64_t seed);

/// realify(Q J Q⁻¹) for the Jordan matrix J of the requested type, with Q a
/// random complex matrix of condition number below 50.
/// Type I takes 3 eigenvalues, II takes 2 (the second carries the 2×2
/// block), III takes 1. Throws BadEigenvalueCount otherwise.
Mat6 gen_prescribed_jordan(PetrovType type, std::span<const Complex> eigenvalues,
                           std::uint64_t seed);

/// Uniform random rotation of R³.
Mat3 random_rotation(std::mt19937_64& rng);

/// Frame fixing e1 and rotating e2, e3, e4 by `rotation`.
Mat4 frame_fixing_t(const Mat3& rotation);

/// Class labels a tensor is expected to carry. Unset means "not asserted".
struct ClassLabels {
  std::optional<bool> einstein;
  std::optional<bool> star_l_einstein;
  std::optional<bool> almost_einstein;
  std::optional<bool> w_plus_equals_w_minus;
  std::optional<bool> star_h_einstein;
  std::optional<PetrovType> petrov_type;
};

struct CatalogParam {
  std::string name;
  double default_value = 0.0;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<CatalogParam> params;
  std::function<CurvatureTensor(std::span<const double>)> make;
  std::function<ClassLabels(std::span<const double>)> expected;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_generator(std::string_view name);

/// Fill in defaults for missing trailing parameters.
std::vector<double> complete_params(const CatalogEntry& entry, std::span<const double> given);

}  // namespace petrov
