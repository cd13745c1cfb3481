#pragma once

namespace petrov {

/// Numerical thresholds shared by every module.
///
/// All verdicts compare a residual against one of these, scaled by the
/// magnitude of the data (see `scaled`).
struct Tolerances {
  /// Commutation and pattern checks ("is this operator ★-Einstein").
  double identity = 1e-8;
  /// Exact-identity checks such as eigen reconstruction.
  double exact = 1e-10;
  /// Eigenvalue clustering: τ_c = cluster · (1 + spectral radius).
  double cluster = 1e-6;
  /// Numerical rank: singular values below rank · ‖M‖₂ count as zero.
  double rank = 1e-8;
  /// Algebraic Bianchi residual, relative to ‖R‖.
  double bianchi = 1e-9;
  /// Planes with |⟨P,P⟩| below this are degenerate.
  double degenerate = 1e-6;

  /// Defaults, with `identity` overridden by the PETROV_TOL environment
  /// variable when it parses as a positive number.
  static Tolerances from_env();
};

/// `tol` relative to a data magnitude, never smaller than `tol` itself.
inline double scaled(double tol, double magnitude) {
  return tol * (magnitude > 1.0 ? magnitude : 1.0);
}

}  // namespace petrov
