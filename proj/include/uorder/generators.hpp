#pragma once

/*
 * Seeded random matrix generators. Everything is driven by the portable Rng,
 * so a (kind, dim, seed) triple fully determines the output.
 *
 * Haar unitaries use the QR recipe with phase correction: orthonormalizing a
 * Ginibre matrix alone is not Haar; each column of Q is multiplied by the
 * phase of the corresponding diagonal entry of R.
 */

#include <string>
#include <variant>
#include <vector>

#include "matrix_core.hpp"
#include "rng.hpp"
#include "spectral_family.hpp"

namespace uorder {

inline Matrix ginibre(Rng& rng, int rows, int cols) {
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  return g;
}

/// Haar-distributed unitary via phase-corrected QR.
inline UnitaryMatrix haar_unitary(Rng& rng, int dim) {
  const Matrix g = ginibre(rng, dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double ad = std::abs(d);
    q.col(j) *= (ad > 0.0) ? d / ad : Complex(1.0, 0.0);
  }
  return UnitaryMatrix(q);
}

/// GUE-like Hermitian matrix, entries O(1), spectral norm O(sqrt(dim)).
inline HermitianMatrix random_hermitian(Rng& rng, int dim) {
  const Matrix g = ginibre(rng, dim, dim);
  return HermitianMatrix(0.5 * (g + g.adjoint()));
}

/// Positive matrix with spectrum drawn uniformly from [lo, 1].
inline PositiveMatrix random_positive(Rng& rng, int dim, double lo = 0.0) {
  RealVector spectrum(dim);
  for (int i = 0; i < dim; ++i) spectrum[i] = rng.uniform(lo, 1.0);
  const UnitaryMatrix v = haar_unitary(rng, dim);
  return PositiveMatrix(HermitianMatrix(
      v.mat() * spectrum.asDiagonal() * v.adjoint()));
}

/// Unitary with U^order = I: random eigenbasis, order-th roots of unity.
inline UnitaryMatrix finite_order_unitary(Rng& rng, int dim, int order) {
  if (order < 1) throw InvariantViolation("unitary order must be >= 1");
  const UnitaryMatrix v = haar_unitary(rng, dim);
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i) {
    const int k = rng.uniform_int(0, order - 1);
    const double theta = 2.0 * 3.14159265358979323846 * k / order;
    phases[i] = Complex(std::cos(theta), std::sin(theta));
  }
  return UnitaryMatrix(v.mat() * phases.asDiagonal() * v.adjoint());
}

/// Rank-r orthogonal projection with Haar-random range.
inline Projection random_projection(Rng& rng, int dim, int rank) {
  if (rank < 0 || rank > dim)
    throw InvariantViolation("projection rank must lie in [0, dim]");
  const UnitaryMatrix v = haar_unitary(rng, dim);
  const auto block = v.mat().leftCols(rank);
  return Projection(Matrix(block * block.adjoint()));
}

struct HermitianPair {
  HermitianMatrix a;
  HermitianMatrix b;
};

struct PositivePair {
  PositiveMatrix a;
  PositiveMatrix b;
};

/*
 * Positive pair with guaranteed eigenvalue dominance lambda_j(A) <= lambda_j(B):
 * B gets a uniform spectrum in [0,1]; A's spectrum shrinks each of B's
 * eigenvalues by an independent factor in [0,1] and is rebuilt in a fresh
 * random eigenbasis. Sorting cannot break dominance: any value of A exceeding
 * b_j must sit at an index beyond j.
 */
inline PositivePair dominance_pair_positive(Rng& rng, int dim) {
  RealVector sb(dim);
  for (int i = 0; i < dim; ++i) sb[i] = rng.uniform();
  std::sort(sb.begin(), sb.end());
  RealVector sa(dim);
  for (int i = 0; i < dim; ++i) sa[i] = rng.uniform() * sb[i];
  const UnitaryMatrix vb = haar_unitary(rng, dim);
  const UnitaryMatrix va = haar_unitary(rng, dim);
  return {PositiveMatrix(HermitianMatrix(va.mat() * sa.asDiagonal() * va.adjoint())),
          PositiveMatrix(HermitianMatrix(vb.mat() * sb.asDiagonal() * vb.adjoint()))};
}

/// Hermitian dominance pair: A's spectrum is B's shifted down by
/// independent nonnegative amounts, rebuilt in a fresh eigenbasis.
inline HermitianPair dominance_pair_hermitian(Rng& rng, int dim) {
  RealVector sb(dim);
  for (int i = 0; i < dim; ++i) sb[i] = rng.normal();
  std::sort(sb.begin(), sb.end());
  RealVector sa(dim);
  for (int i = 0; i < dim; ++i) sa[i] = sb[i] - rng.uniform();
  const UnitaryMatrix vb = haar_unitary(rng, dim);
  const UnitaryMatrix va = haar_unitary(rng, dim);
  return {HermitianMatrix(va.mat() * sa.asDiagonal() * va.adjoint()),
          HermitianMatrix(vb.mat() * sb.asDiagonal() * vb.adjoint())};
}

/*
 * Commuting positive pair (common random eigenbasis, spectra in [0,1]).
 * When `dominant` is set, A's spectrum shrinks B's coordinatewise, so the
 * pair is spectrally ordered.
 */
inline PositivePair commuting_positive_pair(Rng& rng, int dim,
                                            bool dominant = false) {
  const UnitaryMatrix v = haar_unitary(rng, dim);
  RealVector sb(dim), sa(dim);
  for (int i = 0; i < dim; ++i) sb[i] = rng.uniform();
  for (int i = 0; i < dim; ++i)
    sa[i] = dominant ? rng.uniform() * sb[i] : rng.uniform();
  return {PositiveMatrix(HermitianMatrix(v.mat() * sa.asDiagonal() * v.adjoint())),
          PositiveMatrix(HermitianMatrix(v.mat() * sb.asDiagonal() * v.adjoint()))};
}

/// Weighted truncated shift: T e_j = w_j e_{j+1}; dim = weights.size() + 1.
inline Matrix truncated_shift(const std::vector<double>& weights) {
  const int dim = static_cast<int>(weights.size()) + 1;
  Matrix t = Matrix::Zero(dim, dim);
  for (int j = 0; j + 1 < dim; ++j) t(j + 1, j) = weights[static_cast<std::size_t>(j)];
  return t;
}

/// Structured generator request; `seed` fully determines the output.
struct GeneratorSpec {
  enum class Kind {
    Hermitian,
    Positive,
    UnitaryHaar,
    UnitaryFiniteOrder,
    Projection,
    DominancePair,
    CommutingPair,
    TruncatedShift,
  };

  Kind kind = Kind::Hermitian;
  int dim = 2;
  std::uint64_t seed = 0;
  int n0 = 2;                    ///< order for UnitaryFiniteOrder
  int rank = 1;                  ///< rank for Projection
  std::vector<double> weights;   ///< subdiagonal for TruncatedShift

  void validate() const {
    if (dim < 1) throw InvariantViolation("generator dim must be >= 1");
    if (kind == Kind::UnitaryFiniteOrder && n0 < 1)
      throw InvariantViolation("finite-order n0 must be >= 1");
    if (kind == Kind::Projection && (rank < 0 || rank > dim))
      throw InvariantViolation("projection rank must lie in [0, dim]");
    if (kind == Kind::TruncatedShift) {
      if (weights.size() != static_cast<std::size_t>(dim - 1))
        throw InvariantViolation("truncated shift needs dim - 1 weights");
      for (double w : weights)
        if (w < 0.0) throw InvariantViolation("shift weights must be >= 0");
    }
  }

  static Kind kind_from_string(const std::string& s) {
    if (s == "hermitian") return Kind::Hermitian;
    if (s == "positive") return Kind::Positive;
    if (s == "unitary_haar") return Kind::UnitaryHaar;
    if (s == "unitary_finite_order") return Kind::UnitaryFiniteOrder;
    if (s == "projection") return Kind::Projection;
    if (s == "dominance_pair") return Kind::DominancePair;
    if (s == "commuting_pair") return Kind::CommutingPair;
    if (s == "truncated_shift") return Kind::TruncatedShift;
    throw Error("unknown generator kind: " + s);
  }
};

using Generated = std::variant<HermitianMatrix, PositiveMatrix, UnitaryMatrix,
                               Projection, Matrix, HermitianPair, PositivePair>;

inline Generated generate(const GeneratorSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  switch (spec.kind) {
    case GeneratorSpec::Kind::Hermitian:
      return random_hermitian(rng, spec.dim);
    case GeneratorSpec::Kind::Positive:
      return random_positive(rng, spec.dim);
    case GeneratorSpec::Kind::UnitaryHaar:
      return haar_unitary(rng, spec.dim);
    case GeneratorSpec::Kind::UnitaryFiniteOrder:
      return finite_order_unitary(rng, spec.dim, spec.n0);
    case GeneratorSpec::Kind::Projection:
      return random_projection(rng, spec.dim, spec.rank);
    case GeneratorSpec::Kind::DominancePair:
      return dominance_pair_positive(rng, spec.dim);
    case GeneratorSpec::Kind::CommutingPair:
      return commuting_positive_pair(rng, spec.dim);
    case GeneratorSpec::Kind::TruncatedShift:
      return truncated_shift(spec.weights);
  }
  throw Error("unreachable generator kind");
}

}  // namespace uorder
