#pragma once

/*
 * The two orders on Hermitian matrices and their certificates.
 *
 *  - loewner_leq: A <= B iff B - A is positive semidefinite.
 *  - leq_u: A <=_u B iff A <= U*BU for some unitary U. At matrix scale this
 *    is equivalent to sorted eigenvalue dominance (Weyl monotonicity gives
 *    necessity), and a canonical witness U = V_B V_A* built from the
 *    ascending eigenbases certifies sufficiency: U*BU - A is then
 *    V_A diag(lambda(B) - lambda(A)) V_A*.
 *
 * The canonical witness simultaneously certifies A^n <= U*B^nU for every n
 * on positive inputs, since both sides are diagonal comparisons in V_A.
 */

#include <algorithm>
#include <cmath>
#include <optional>

#include "matrix_core.hpp"

namespace uorder {

/*
 * Decision record for A <=_u B.
 *
 * verdict true:  witness present, residual_min_eig = min eigenvalue of
 *                U*BU - A (>= -tol up to the gray band).
 * verdict false: violation_index present; eigenvalues paired in descending
 *                order, lambda_j(A) > lambda_j(B) + tol at that index.
 * residual_min_eig always carries the worst eigenvalue gap
 * min_j(lambda_j(B) - lambda_j(A)) when no witness exists.
 */
struct OrderCertificate {
  bool verdict = false;
  bool gray = false;
  std::optional<UnitaryMatrix> witness;
  double residual_min_eig = 0.0;
  std::optional<int> violation_index;
  double violation_margin = 0.0;
};

/// Loewner order test: is_psd(B - A) with the relative PSD tolerance.
inline PsdReport loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b,
                             double tol = Tolerances::defaults().psd) {
  require_same_dim(a.dim(), b.dim());
  return is_psd(HermitianMatrix(b.mat() - a.mat()), tol);
}

/*
 * Unitary-orbit order with certificate. Eigenvalues are paired in sorted
 * order with absolute tolerance tol * scale, scale = max(1, ||A||, ||B||).
 */
inline OrderCertificate leq_u(const HermitianMatrix& a, const HermitianMatrix& b,
                              double tol = Tolerances::defaults().eig,
                              const Tolerances& tols = Tolerances::defaults()) {
  require_same_dim(a.dim(), b.dim());
  const SpectralDecomposition sa = eig(a, tols);
  const SpectralDecomposition sb = eig(b, tols);
  const int n = a.dim();
  const double scale =
      std::max({1.0, std::abs(sa.min_eigenvalue()), std::abs(sa.max_eigenvalue()),
                std::abs(sb.min_eigenvalue()), std::abs(sb.max_eigenvalue())});
  const double tol_abs = tol * scale;

  // Worst ascending-order gap decides the verdict.
  int worst = 0;
  double worst_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double gap = sb.eigenvalues()[i] - sa.eigenvalues()[i];
    if (gap < worst_gap) {
      worst_gap = gap;
      worst = i;
    }
  }

  OrderCertificate cert;
  if (worst_gap >= -tol_abs) {
    cert.verdict = true;
    UnitaryMatrix u(sb.eigenbasis().mat() * sa.eigenbasis().adjoint(), tols);
    const Matrix conj = u.adjoint() * b.mat() * u.mat();
    const PsdReport res =
        is_psd(HermitianMatrix(conj - a.mat()), tol, tols.gray_factor);
    cert.witness = std::move(u);
    cert.residual_min_eig = res.min_eig;
    cert.gray = std::abs(res.min_eig) <= tols.gray_factor * tol_abs &&
                res.min_eig < -tol_abs;
  } else {
    cert.verdict = false;
    cert.residual_min_eig = worst_gap;
    cert.violation_index = n - 1 - worst;  // descending convention
    cert.violation_margin = -worst_gap;
    cert.gray = worst_gap >= -tols.gray_factor * tol_abs;
  }
  return cert;
}

/// Canonical witness U = V_B V_A*; throws NoWitnessError if dominance fails.
inline UnitaryMatrix witness(const HermitianMatrix& a, const HermitianMatrix& b,
                             double tol = Tolerances::defaults().eig) {
  OrderCertificate cert = leq_u(a, b, tol);
  if (!cert.verdict)
    throw NoWitnessError(*cert.violation_index, cert.violation_margin);
  return *std::move(cert.witness);
}

/*
 * Membership of U in the witness set for the n-th powers:
 * A^n <= U*B^nU. Powers are computed spectrally on inputs jointly rescaled
 * to spectral norm <= 1; the verdict is invariant under the common scaling
 * and the rescaling avoids overflow for large n.
 */
inline PsdReport in_K_n(const UnitaryMatrix& u, const PositiveMatrix& a,
                        const PositiveMatrix& b, int n,
                        double tol = Tolerances::defaults().psd) {
  require_same_dim(a.dim(), b.dim());
  require_same_dim(a.dim(), u.dim());
  if (n < 1) throw InvariantViolation("power index must be >= 1");
  const SpectralDecomposition sa = eig(a.base());
  const SpectralDecomposition sb = eig(b.base());
  const double s =
      std::max({1.0, sa.max_eigenvalue(), sb.max_eigenvalue()});
  const auto powln = [&](double t) {
    return std::pow(std::max(t, 0.0) / s, static_cast<double>(n));
  };
  const Matrix an = sa.map(powln);
  const Matrix bn = sb.map(powln);
  return is_psd(HermitianMatrix(u.adjoint() * bn * u.mat() - an), tol);
}

/// First n in 1..n_max where in_K_n fails, or nullopt if U stays a member.
/// By the nesting of the witness sets the membership range is a prefix.
inline std::optional<int> nested_K_property(const UnitaryMatrix& u,
                                            const PositiveMatrix& a,
                                            const PositiveMatrix& b, int n_max,
                                            double tol = Tolerances::defaults().psd) {
  for (int n = 1; n <= n_max; ++n) {
    if (!in_K_n(u, a, b, n, tol).psd) return n;
  }
  return std::nullopt;
}

/// True iff the sorted spectra agree within tol * scale.
inline bool unitarily_equivalent(const HermitianMatrix& a,
                                 const HermitianMatrix& b,
                                 double tol = Tolerances::defaults().eig) {
  require_same_dim(a.dim(), b.dim());
  const SpectralDecomposition sa = eig(a);
  const SpectralDecomposition sb = eig(b);
  const double scale =
      std::max({1.0, std::abs(sa.min_eigenvalue()), std::abs(sa.max_eigenvalue()),
                std::abs(sb.min_eigenvalue()), std::abs(sb.max_eigenvalue())});
  return (sa.eigenvalues() - sb.eigenvalues()).cwiseAbs().maxCoeff() <=
         tol * scale;
}

}  // namespace uorder
