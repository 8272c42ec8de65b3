#pragma once

namespace uorder {

/*
 * Tolerance policy.
 *
 * All tolerances are relative to scale(M) = max(1, spectral norm of M)
 * unless stated otherwise; double-precision eigensolver backward error is
 * O(n * eps * ||A||), so the defaults leave several orders of headroom at
 * desk scale (dim <= 200).
 */
struct Tolerances {
  double sym = 1e-10;      ///< Hermitian symmetry defect, relative to max-norm
  double unitary = 1e-10;  ///< max-norm of U*U - I
  double psd = 1e-9;       ///< PSD cone membership (min eigenvalue)
  double recon = 1e-9;     ///< decomposition reconstruction residual
  double eig = 1e-8;       ///< eigenvalue pairing / dominance comparisons
  double cluster = 1e-7;   ///< eigenvalue clustering for spectral families
  double proj = 1e-8;      ///< projection idempotency and range inclusion
  double normal = 1e-8;    ///< normality defect threshold
  double cond_cap = 1e12;  ///< condition-number cap for polar()

  /// Verdicts whose margin is within gray_factor * tol of the decision
  /// boundary are flagged as numerically marginal.
  double gray_factor = 10.0;

  /// Returns a copy with every relative tolerance multiplied by k
  /// (cond_cap and gray_factor are structural and stay fixed).
  Tolerances scaled_by(double k) const {
    Tolerances t = *this;
    t.sym *= k;
    t.unitary *= k;
    t.psd *= k;
    t.recon *= k;
    t.eig *= k;
    t.cluster *= k;
    t.proj *= k;
    t.normal *= k;
    return t;
  }

  static const Tolerances& defaults() {
    static const Tolerances t{};
    return t;
  }
};

}  // namespace uorder
