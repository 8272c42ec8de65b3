#pragma once

/*
 * Spectral families E_lambda(A): cumulative projections onto the span of
 * eigenvectors with eigenvalue <= lambda. E is piecewise constant and
 * right-continuous in lambda, with jumps exactly at the (clustered)
 * eigenvalues.
 *
 * Eigenvalues within tol.cluster * scale of each other are merged into one
 * threshold; E_lambda is discontinuous at eigenvalues, so near-degenerate
 * spectra would otherwise make the projections numerically unstable.
 *
 * Comparison orientation: for diagonal matrices with a_i <= b_i
 * coordinatewise, the larger matrix crosses each threshold later, so
 * E_lambda(B) <= E_lambda(A). family_leq(A, B) therefore tests
 * E_lambda(B) <= E_lambda(A) at every grid point; this is the orientation
 * equivalent to the power-wise order A^n <= B^n for all n.
 */

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "matrix_core.hpp"
#include "order_relations.hpp"

namespace uorder {

/// An orthogonal projection (idempotent Hermitian, spectrum in {0,1}).
class Projection {
 public:
  explicit Projection(HermitianMatrix p,
                      const Tolerances& tol = Tolerances::defaults())
      : base_(std::move(p)) {
    if (max_norm(base_.mat() * base_.mat() - base_.mat()) > tol.proj)
      throw InvariantViolation("matrix is not idempotent");
    rank_ = static_cast<int>(std::lround(base_.mat().trace().real()));
  }

  explicit Projection(const Matrix& p,
                      const Tolerances& tol = Tolerances::defaults())
      : Projection(HermitianMatrix(p, tol), tol) {}

  int dim() const { return base_.dim(); }
  int rank() const { return rank_; }
  const HermitianMatrix& base() const { return base_; }
  const Matrix& mat() const { return base_.mat(); }

 private:
  HermitianMatrix base_;
  int rank_ = 0;
};

/// Range-inclusion residual ||(I - Q) P||_max; zero iff P <= Q for projections.
inline double projection_leq_residual(const Matrix& p, const Matrix& q) {
  return max_norm((Matrix::Identity(q.rows(), q.cols()) - q) * p);
}

inline bool projection_leq(const Projection& p, const Projection& q,
                           double tol = Tolerances::defaults().proj) {
  require_same_dim(p.dim(), q.dim());
  return projection_leq_residual(p.mat(), q.mat()) <= tol;
}

/// Cumulative spectral projections at the clustered eigenvalue thresholds.
class SpectralFamily {
 public:
  SpectralFamily(std::vector<double> thresholds,
                 std::vector<HermitianMatrix> projections, std::vector<int> ranks)
      : thresholds_(std::move(thresholds)),
        projections_(std::move(projections)),
        ranks_(std::move(ranks)) {
    if (thresholds_.empty() || projections_.size() != thresholds_.size() ||
        ranks_.size() != thresholds_.size())
      throw InvariantViolation("spectral family: inconsistent component sizes");
  }

  const std::vector<double>& thresholds() const { return thresholds_; }
  const std::vector<HermitianMatrix>& projections() const { return projections_; }
  const std::vector<int>& ranks() const { return ranks_; }
  int dim() const { return projections_.front().dim(); }

  /// E_lambda by lookup: the projection at the largest threshold <= lambda,
  /// or zero below the first threshold.
  Matrix at(double lambda) const {
    const int d = dim();
    auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), lambda);
    if (it == thresholds_.begin()) return Matrix::Zero(d, d);
    const auto k = std::distance(thresholds_.begin(), it) - 1;
    return projections_[static_cast<std::size_t>(k)].mat();
  }

 private:
  std::vector<double> thresholds_;
  std::vector<HermitianMatrix> projections_;
  std::vector<int> ranks_;
};

/*
 * Builds the spectral family of A. Eigenvalues within tol.cluster * scale
 * are merged into one threshold (the cluster mean); projections[k]
 * accumulates every eigenprojection up to cluster k, so the last projection
 * is the identity.
 */
inline SpectralFamily spectral_family(const HermitianMatrix& a,
                                      const Tolerances& tol = Tolerances::defaults()) {
  const SpectralDecomposition sd = eig(a, tol);
  const int n = sd.dim();
  const double scale =
      std::max(1.0, std::max(std::abs(sd.min_eigenvalue()),
                             std::abs(sd.max_eigenvalue())));
  const double gap = tol.cluster * scale;

  std::vector<double> thresholds;
  std::vector<HermitianMatrix> projections;
  std::vector<int> ranks;
  const Matrix& v = sd.eigenbasis().mat();

  int start = 0;
  while (start < n) {
    int end = start + 1;  // one past the cluster
    while (end < n && sd.eigenvalues()[end] - sd.eigenvalues()[end - 1] <= gap)
      ++end;
    double mean = 0.0;
    for (int i = start; i < end; ++i) mean += sd.eigenvalues()[i];
    mean /= (end - start);
    const auto block = v.leftCols(end);
    thresholds.push_back(mean);
    projections.emplace_back(Matrix(block * block.adjoint()), tol);
    ranks.push_back(end);
    start = end;
  }
  return SpectralFamily(std::move(thresholds), std::move(projections),
                        std::move(ranks));
}

/*
 * Comparison grid for two families: the merged distinct thresholds (nudged
 * just past each jump so both families land inside the same piece), the
 * midpoints between consecutive merged thresholds, and one point below the
 * minimum. E is piecewise constant, so these points cover every piece.
 */
inline std::vector<double> family_comparison_grid(const SpectralFamily& fa,
                                                  const SpectralFamily& fb,
                                                  const Tolerances& tol = Tolerances::defaults()) {
  std::vector<double> merged = fa.thresholds();
  merged.insert(merged.end(), fb.thresholds().begin(), fb.thresholds().end());
  std::sort(merged.begin(), merged.end());
  double scale = 1.0;
  for (double t : merged) scale = std::max(scale, std::abs(t));
  const double gap = tol.cluster * scale;

  std::vector<double> distinct;
  for (double t : merged)
    if (distinct.empty() || t - distinct.back() > gap) distinct.push_back(t);

  std::vector<double> grid;
  grid.push_back(distinct.front() - std::max(1.0, gap));
  for (std::size_t k = 0; k < distinct.size(); ++k) {
    double nudge = gap / 2.0;
    if (k + 1 < distinct.size())
      nudge = std::min(nudge, (distinct[k + 1] - distinct[k]) / 4.0);
    grid.push_back(distinct[k] + nudge);
    if (k + 1 < distinct.size())
      grid.push_back(0.5 * (distinct[k] + distinct[k + 1]));
  }
  return grid;
}

struct FamilyLeqEntry {
  double lambda = 0.0;
  bool holds = false;
  double residual = 0.0;  ///< range-inclusion residual at this grid point
};

struct FamilyLeqReport {
  bool holds = false;
  std::vector<FamilyLeqEntry> entries;
};

/*
 * Tests E_lambda(B) <= E_lambda(A) at every grid point (the orientation
 * matching the power-wise order; see the header comment). fa, fb are the
 * families of A and B respectively.
 */
inline FamilyLeqReport family_leq(const SpectralFamily& fa,
                                  const SpectralFamily& fb,
                                  const std::vector<double>& grid,
                                  double tol = Tolerances::defaults().proj) {
  require_same_dim(fa.dim(), fb.dim());
  FamilyLeqReport report;
  report.holds = true;
  for (double lambda : grid) {
    const Matrix ea = fa.at(lambda);
    const Matrix eb = fb.at(lambda);
    const double res = projection_leq_residual(eb, ea);
    const bool ok = res <= tol;
    report.holds = report.holds && ok;
    report.entries.push_back({lambda, ok, res});
  }
  return report;
}

inline FamilyLeqReport family_leq(const SpectralFamily& fa,
                                  const SpectralFamily& fb,
                                  const Tolerances& tol = Tolerances::defaults()) {
  return family_leq(fa, fb, family_comparison_grid(fa, fb, tol), tol.proj);
}

inline FamilyLeqReport family_leq(const HermitianMatrix& a,
                                  const HermitianMatrix& b,
                                  const Tolerances& tol = Tolerances::defaults()) {
  return family_leq(spectral_family(a, tol), spectral_family(b, tol), tol);
}

/// Power-order scan paired with the family order.
struct OlsonForwardReport {
  bool family_order = false;
  bool power_order = false;
  std::optional<int> first_failing_n;
};

namespace detail {

/// First n in 1..n_max with B^n - A^n not PSD, on jointly rescaled inputs.
inline std::optional<int> first_power_violation(const PositiveMatrix& a,
                                                const PositiveMatrix& b, int n_max,
                                                double tol) {
  const SpectralDecomposition sa = eig(a.base());
  const SpectralDecomposition sb = eig(b.base());
  const double s = std::max({1.0, sa.max_eigenvalue(), sb.max_eigenvalue()});
  for (int n = 1; n <= n_max; ++n) {
    const auto powln = [&](double t) {
      return std::pow(std::max(t, 0.0) / s, static_cast<double>(n));
    };
    const PsdReport r =
        is_psd(HermitianMatrix(sb.map(powln) - sa.map(powln)), tol);
    if (!r.psd) return n;
  }
  return std::nullopt;
}

}  // namespace detail

/*
 * Forward direction of the power/family equivalence: when the family order
 * holds, B^n - A^n must be PSD for every n. Returns the scan outcome either
 * way; a counterexample with family_order true contradicts the equivalence.
 */
inline OlsonForwardReport olson_forward(const PositiveMatrix& a,
                                        const PositiveMatrix& b, int n_max,
                                        const Tolerances& tol = Tolerances::defaults()) {
  require_same_dim(a.dim(), b.dim());
  OlsonForwardReport report;
  report.family_order = family_leq(a.base(), b.base(), tol).holds;
  report.first_failing_n =
      detail::first_power_violation(a, b, n_max, tol.psd);
  report.power_order = !report.first_failing_n.has_value();
  return report;
}

enum class OlsonCell {
  BothHold,           ///< power order and family order both hold
  BothFail,           ///< both fail; consistent
  TruncationSuspect,  ///< power order held up to n_max but family order fails
  HardFailure,        ///< family order holds yet some finite power fails
};

inline const char* olson_cell_name(OlsonCell c) {
  switch (c) {
    case OlsonCell::BothHold: return "both_hold";
    case OlsonCell::BothFail: return "both_fail";
    case OlsonCell::TruncationSuspect: return "truncation_suspect";
    case OlsonCell::HardFailure: return "hard_failure";
  }
  return "unknown";
}

struct OlsonReport {
  bool power_order = false;
  std::optional<int> first_failing_n;
  bool family_order = false;
  OlsonCell cell = OlsonCell::BothFail;
};

/// Cross-tabulates the truncated power order against the family order.
inline OlsonReport olson_consistency(const PositiveMatrix& a,
                                     const PositiveMatrix& b, int n_max,
                                     const Tolerances& tol = Tolerances::defaults()) {
  require_same_dim(a.dim(), b.dim());
  OlsonReport report;
  report.family_order = family_leq(a.base(), b.base(), tol).holds;
  report.first_failing_n = detail::first_power_violation(a, b, n_max, tol.psd);
  report.power_order = !report.first_failing_n.has_value();
  if (report.power_order)
    report.cell = report.family_order ? OlsonCell::BothHold
                                      : OlsonCell::TruncationSuspect;
  else
    report.cell =
        report.family_order ? OlsonCell::HardFailure : OlsonCell::BothFail;
  return report;
}

/*
 * Max residual of E_lambda(U*AU) - U* E_lambda(A) U over A's thresholds,
 * with each lookup nudged into the interior of its piece so both families
 * cluster identically.
 */
inline double family_conjugation_covariance(const HermitianMatrix& a,
                                            const UnitaryMatrix& u,
                                            const Tolerances& tol = Tolerances::defaults()) {
  require_same_dim(a.dim(), u.dim());
  const SpectralFamily fa = spectral_family(a, tol);
  const SpectralFamily fc =
      spectral_family(HermitianMatrix(u.adjoint() * a.mat() * u.mat()), tol);
  double scale = 1.0;
  for (double t : fa.thresholds()) scale = std::max(scale, std::abs(t));
  const double nudge = tol.cluster * scale / 2.0;

  double worst = 0.0;
  for (std::size_t k = 0; k < fa.thresholds().size(); ++k) {
    const double lambda = fa.thresholds()[k] + nudge;
    const Matrix lhs = fc.at(lambda);
    const Matrix rhs = u.adjoint() * fa.at(lambda) * u.mat();
    worst = std::max(worst, max_norm(lhs - rhs));
  }
  return worst;
}

}  // namespace uorder
