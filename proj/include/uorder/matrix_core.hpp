#pragma once

/*
 * Complex Hermitian/unitary matrix types and the decompositions everything
 * else is built on: Hermitian eigendecomposition, polar decomposition, PSD
 * membership with an explicit tolerance policy, and the defect functionals
 * for hyponormality and normality.
 *
 * All types are immutable after construction and all operations are pure.
 */

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "errors.hpp"
#include "tolerances.hpp"

namespace uorder {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline double max_norm(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double frobenius_norm(const Matrix& m) { return m.norm(); }

/// Largest singular value, computed as sqrt(lambda_max(M* M)).
inline double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.adjoint() * m,
                                           Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw DecompositionError("spectral norm: eigensolver did not converge");
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

/// Relative-tolerance scale: max(1, spectral norm).
inline double scale_of(const Matrix& m) {
  return std::max(1.0, spectral_norm(m));
}

inline void require_square(const Matrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch(static_cast<int>(m.rows()),
                            static_cast<int>(m.cols()));
  if (m.rows() < 1) throw InvariantViolation("matrix dimension must be >= 1");
}

inline void require_same_dim(int a, int b) {
  if (a != b) throw DimensionMismatch(a, b);
}

/*
 * A self-adjoint matrix. Construction checks the symmetry defect against
 * tol.sym relative to max(1, max-norm) and stores the symmetrized form
 * (M + M*)/2.
 */
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Matrix& m,
                           const Tolerances& tol = Tolerances::defaults()) {
    require_square(m);
    const double defect = max_norm(m - m.adjoint());
    if (defect > tol.sym * std::max(1.0, max_norm(m)))
      throw InvariantViolation("matrix is not Hermitian: symmetry defect " +
                               std::to_string(defect));
    m_ = 0.5 * (m + m.adjoint());
  }

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& mat() const { return m_; }

 private:
  Matrix m_;
};

/// A unitary matrix; construction checks max-norm of U*U - I.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(const Matrix& u,
                         const Tolerances& tol = Tolerances::defaults()) {
    require_square(u);
    const Matrix defect =
        u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    if (max_norm(defect) > tol.unitary)
      throw InvariantViolation("matrix is not unitary: defect " +
                               std::to_string(max_norm(defect)));
    m_ = u;
  }

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& mat() const { return m_; }
  Matrix adjoint() const { return m_.adjoint(); }

  static UnitaryMatrix identity(int dim) {
    return UnitaryMatrix(Matrix::Identity(dim, dim));
  }

 private:
  Matrix m_;
};

/// Ascending eigenvalues and a unitary eigenbasis (columns are eigenvectors).
class SpectralDecomposition {
 public:
  SpectralDecomposition(RealVector eigenvalues, UnitaryMatrix eigenbasis)
      : eigenvalues_(std::move(eigenvalues)), eigenbasis_(std::move(eigenbasis)) {
    if (eigenvalues_.size() != eigenbasis_.dim())
      throw DimensionMismatch(static_cast<int>(eigenvalues_.size()),
                              eigenbasis_.dim());
    for (int i = 0; i + 1 < eigenvalues_.size(); ++i)
      if (eigenvalues_[i] > eigenvalues_[i + 1])
        throw InvariantViolation("eigenvalues must be ascending");
  }

  const RealVector& eigenvalues() const { return eigenvalues_; }
  const UnitaryMatrix& eigenbasis() const { return eigenbasis_; }
  int dim() const { return static_cast<int>(eigenvalues_.size()); }

  double min_eigenvalue() const { return eigenvalues_[0]; }
  double max_eigenvalue() const { return eigenvalues_[dim() - 1]; }

  /// Descending view (lambda_1 >= ... >= lambda_n convention).
  RealVector descending_eigenvalues() const { return eigenvalues_.reverse(); }

  Matrix reconstruct() const {
    const Matrix& v = eigenbasis_.mat();
    return v * eigenvalues_.asDiagonal() * v.adjoint();
  }

  /// V diag(f(lambda_i)) V* for a real-valued f; the spectral calculus core.
  template <typename Fn>
  Matrix map(Fn&& f) const {
    RealVector w(eigenvalues_.size());
    for (int i = 0; i < w.size(); ++i) w[i] = f(eigenvalues_[i]);
    const Matrix& v = eigenbasis_.mat();
    return v * w.asDiagonal() * v.adjoint();
  }

 private:
  RealVector eigenvalues_;
  UnitaryMatrix eigenbasis_;
};

/// Eigendecomposition of a Hermitian matrix, validated against the input.
inline SpectralDecomposition eig(const HermitianMatrix& a,
                                 const Tolerances& tol = Tolerances::defaults()) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat());
  if (es.info() != Eigen::Success)
    throw DecompositionError("eig: eigensolver did not converge");
  SpectralDecomposition sd(es.eigenvalues(),
                           UnitaryMatrix(es.eigenvectors(), tol));
  const double spec_scale =
      std::max(1.0, std::max(std::abs(sd.min_eigenvalue()),
                             std::abs(sd.max_eigenvalue())));
  if (max_norm(a.mat() - sd.reconstruct()) > tol.recon * spec_scale)
    throw DecompositionError("eig: reconstruction residual exceeds tolerance");
  return sd;
}

/*
 * A positive semidefinite matrix. The membership check is relative:
 * min eigenvalue >= -tol.psd * max(1, spectral norm).
 */
class PositiveMatrix {
 public:
  explicit PositiveMatrix(HermitianMatrix base,
                          const Tolerances& tol = Tolerances::defaults())
      : base_(std::move(base)) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(base_.mat(),
                                             Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw DecompositionError("positivity check: eigensolver failed");
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    const double scale = std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    if (lo < -tol.psd * scale)
      throw InvariantViolation("matrix is not positive: min eigenvalue " +
                               std::to_string(lo));
    min_eig_ = lo;
  }

  explicit PositiveMatrix(const Matrix& m,
                          const Tolerances& tol = Tolerances::defaults())
      : PositiveMatrix(HermitianMatrix(m, tol), tol) {}

  int dim() const { return base_.dim(); }
  const HermitianMatrix& base() const { return base_; }
  const Matrix& mat() const { return base_.mat(); }
  double min_eigenvalue() const { return min_eig_; }

 private:
  HermitianMatrix base_;
  double min_eig_ = 0.0;
};

/// Three-valued PSD verdict; `gray` marks a rejection within
/// gray_factor * tol of the boundary (numerically marginal).
struct PsdReport {
  bool psd = false;
  bool gray = false;
  double min_eig = 0.0;
  double scale = 1.0;
  double tol_abs = 0.0;
};

inline PsdReport is_psd(const HermitianMatrix& a, double tol,
                        double gray_factor = Tolerances::defaults().gray_factor) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw DecompositionError("is_psd: eigensolver did not converge");
  PsdReport r;
  r.min_eig = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  r.scale = std::max(1.0, std::max(std::abs(r.min_eig), std::abs(hi)));
  r.tol_abs = tol * r.scale;
  r.psd = r.min_eig >= -r.tol_abs;
  r.gray = !r.psd && r.min_eig >= -gray_factor * r.tol_abs;
  return r;
}

inline PsdReport is_psd(const HermitianMatrix& a) {
  return is_psd(a, Tolerances::defaults().psd);
}

/// T = unitary * modulus with modulus = (T* T)^{1/2}.
struct PolarDecomposition {
  UnitaryMatrix unitary;
  PositiveMatrix modulus;
};

/*
 * Polar decomposition of an invertible matrix via SVD: T = W S V* gives
 * unitary = W V* and modulus = V S V*. Inputs with condition number above
 * tol.cond_cap are rejected (the partial-isometry case is out of scope).
 */
inline PolarDecomposition polar(const Matrix& t,
                                const Tolerances& tol = Tolerances::defaults()) {
  require_square(t);
  Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();  // descending
  const double smax = sv[0];
  const double smin = sv[sv.size() - 1];
  if (smin <= 0.0 || smax / smin > tol.cond_cap)
    throw SingularMatrixError("polar: matrix is singular or ill-conditioned");
  const Matrix u = svd.matrixU() * svd.matrixV().adjoint();
  const Matrix h = svd.matrixV() * sv.asDiagonal() * svd.matrixV().adjoint();
  PolarDecomposition pd{UnitaryMatrix(u, tol), PositiveMatrix(h, tol)};
  if (max_norm(t - pd.unitary.mat() * pd.modulus.mat()) >
      tol.recon * std::max(1.0, smax))
    throw DecompositionError("polar: reconstruction residual exceeds tolerance");
  return pd;
}

/// Min eigenvalue of T*T - TT*; >= -tol means T is hyponormal.
inline double hyponormal_defect(const Matrix& t) {
  require_square(t);
  const Matrix d = t.adjoint() * t - t * t.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (d + d.adjoint()),
                                           Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw DecompositionError("hyponormal_defect: eigensolver failed");
  return es.eigenvalues().minCoeff();
}

/// Max-norm of T*T - TT*; zero (within tolerance) iff T is normal.
inline double normality_defect(const Matrix& t) {
  require_square(t);
  return max_norm(t.adjoint() * t - t * t.adjoint());
}

/// Frobenius norm of XY - YX.
inline double commutator_norm(const Matrix& x, const Matrix& y) {
  require_square(x);
  require_square(y);
  require_same_dim(static_cast<int>(x.rows()), static_cast<int>(y.rows()));
  return frobenius_norm(x * y - y * x);
}

/// A + s * I, preserving Hermitian type.
inline HermitianMatrix add_scaled_identity(const HermitianMatrix& a, double s) {
  return HermitianMatrix(a.mat() + s * Matrix::Identity(a.dim(), a.dim()));
}

/// M^n for n >= 0 by repeated squaring.
inline Matrix matrix_power(const Matrix& m, int n) {
  require_square(m);
  if (n < 0) throw InvariantViolation("matrix_power: exponent must be >= 0");
  Matrix result = Matrix::Identity(m.rows(), m.cols());
  Matrix base = m;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

}  // namespace uorder
