#pragma once

// Brute-force reference implementations used by the tests. Nothing here
// touches the slot basis of the library except `to_rank4`, which reads
// sym6 through an independently written pair table.

#include "petrov/curvature.hpp"

#include <array>
#include <cmath>
#include <random>

namespace oracle {

using petrov::Bivector;
using petrov::Mat4;
using petrov::Mat6;
using petrov::Vec4;

using Rank4 = std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4>;

// Pairs (i, j) of each slot, written out by hand.
inline constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};

inline Rank4 to_rank4(const Mat6& sym6) {
  Rank4 r{};
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      const int i = kPairs[a][0], j = kPairs[a][1], k = kPairs[b][0], l = kPairs[b][1];
      const double v = sym6(a, b);
      r[i][j][k][l] = v;
      r[j][i][k][l] = -v;
      r[i][j][l][k] = -v;
      r[j][i][l][k] = v;
    }
  }
  return r;
}

inline Rank4 to_rank4(const petrov::CurvatureTensor& t) { return to_rank4(t.sym6()); }

/// Largest |R_ijkl + R_jkil + R_kijl| over all index triples and l.
inline double bianchi_defect(const Rank4& r) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          worst = std::max(worst, std::abs(r[i][j][k][l] + r[j][k][i][l] + r[k][i][j][l]));
  return worst;
}

/// Sign of the permutation (i, j, k, l) of (0, 1, 2, 3), or 0.
inline int levi_civita(int i, int j, int k, int l) {
  const int p[4] = {i, j, k, l};
  int sign = 1;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      if (p[a] == p[b]) return 0;
      if (p[a] > p[b]) sign = -sign;
    }
  return sign;
}

inline Vec4 signs(petrov::Signature s) {
  switch (s) {
    case petrov::Signature::Riemannian: return Vec4(1, 1, 1, 1);
    case petrov::Signature::Lorentzian: return Vec4(-1, 1, 1, 1);
    case petrov::Signature::Split: return Vec4(-1, -1, 1, 1);
  }
  return Vec4::Ones();
}

/// Antisymmetric 4×4 array X^{ij} of a bivector given in slot coordinates.
inline Mat4 to_antisym(const Bivector& xi) {
  Mat4 x = Mat4::Zero();
  for (int a = 0; a < 6; ++a) {
    x(kPairs[a][0], kPairs[a][1]) += xi[a];
    x(kPairs[a][1], kPairs[a][0]) -= xi[a];
  }
  return x;
}

inline Bivector from_antisym(const Mat4& x) {
  Bivector xi;
  for (int a = 0; a < 6; ++a) xi[a] = x(kPairs[a][0], kPairs[a][1]);
  return xi;
}

inline Mat4 wedge(const Vec4& v, const Vec4& w) { return v * w.transpose() - w * v.transpose(); }

/// ⟨X, Y⟩ = ½ Σ g_ii g_jj X^{ij} Y^{ij}: the Gram-determinant inner product.
inline double inner(const Mat4& x, const Mat4& y, petrov::Signature s) {
  const Vec4 g = signs(s);
  double sum = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) sum += g[i] * g[j] * x(i, j) * y(i, j);
  return 0.5 * sum;
}

/// Hodge star from ξ ∧ ★η = ⟨ξ, η⟩ dV with dV(e1, e2, e3, e4) = +1:
/// (★X)^{kl} = ½ Σ ε_{ijkl} g_ii g_jj X^{ij}.
inline Mat4 hodge(const Mat4& x, petrov::Signature s) {
  const Vec4 g = signs(s);
  Mat4 out = Mat4::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          out(k, l) += 0.5 * levi_civita(i, j, k, l) * g[i] * g[j] * x(i, j);
  return out;
}

/// R(v, w, x, y) in an orthonormal frame.
inline double eval(const Rank4& r, const Vec4& v, const Vec4& w, const Vec4& x, const Vec4& y) {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) sum += r[i][j][k][l] * v[i] * w[j] * x[k] * y[l];
  return sum;
}

/// R(v, w, w, v) / (|v|²|w|² − ⟨v,w⟩²) for a Riemannian frame.
inline double sectional(const Rank4& r, const Vec4& v, const Vec4& w) {
  return eval(r, v, w, w, v) / (v.squaredNorm() * w.squaredNorm() - std::pow(v.dot(w), 2));
}

/// Operator 𝓡 applied to X: ⟨𝓡X, Y⟩ = −R(X, Y) in a Riemannian frame, i.e.
/// (𝓡X)^{kl} = −½ Σ_ij R_ijkl X^{ij}.
inline Mat4 apply(const Rank4& r, const Mat4& x) {
  Mat4 out = Mat4::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) out(k, l) -= 0.5 * r[i][j][k][l] * x(i, j);
  return out;
}

/// Ric_ij = Σ_k g_kk R_kijk.
inline Mat4 ricci(const Rank4& r, petrov::Signature s) {
  const Vec4 g = signs(s);
  Mat4 ric = Mat4::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) ric(i, j) += g[k] * r[k][i][j][k];
  return ric;
}

inline Mat6 random_symmetric(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat6 m;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b) m(a, b) = m(b, a) = u(rng);
  return m;
}

/// Random algebraic curvature tensor: pair-symmetric with the Bianchi trace
/// removed.
inline petrov::CurvatureTensor random_tensor(std::mt19937_64& rng,
                                             petrov::Signature frame = petrov::Signature::Riemannian) {
  Mat6 m = random_symmetric(rng);
  const double t = (m(0, 3) + m(1, 4) + m(2, 5)) / 3.0;
  for (int a = 0; a < 3; ++a) {
    m(a, a + 3) -= t;
    m(a + 3, a) -= t;
  }
  return petrov::CurvatureTensor(m, frame);
}

inline Vec4 random_vec(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return Vec4(n(rng), n(rng), n(rng), n(rng));
}

}  // namespace oracle
