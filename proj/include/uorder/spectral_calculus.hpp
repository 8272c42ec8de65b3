#pragma once

/*
 * Scalar functions applied to Hermitian matrices through the spectral
 * theorem, plus the two function catalogs used by the order-preservation
 * machinery:
 *
 *  - OMFunction: a closed catalog of monotone transforms (powers with
 *    exponent in [0,1], log, exp, nonnegative-slope affine maps, and
 *    compositions of these).
 *  - OCFunction: increasing operator convex functions on [0, inf) in
 *    integral-representation form with a finitely-atomic measure:
 *        f(t) = f(0) + beta t + gamma t^2 + sum_k w_k lambda_k t^2 / (lambda_k + t)
 *    with beta, gamma, w_k >= 0 and lambda_k > 0; beta is the right
 *    derivative at 0, so beta >= 0 makes f nondecreasing.
 *
 * Matrix exp/log/powers are computed via eigendecomposition, exact to
 * eigensolver accuracy for Hermitian inputs.
 */

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "matrix_core.hpp"

namespace uorder {

/// A real interval with independently open/closed endpoints.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_open = false;
  bool hi_open = false;

  static Interval reals() { return {}; }
  static Interval nonnegative() { return {0.0, std::numeric_limits<double>::infinity(), false, false}; }
  static Interval positive() { return {0.0, std::numeric_limits<double>::infinity(), true, false}; }
  static Interval at_least(double lo_, bool open_ = false) {
    return {lo_, std::numeric_limits<double>::infinity(), open_, false};
  }

  /// Membership with slack `tol` on closed endpoints; open endpoints demand
  /// a strict margin of `tol` instead.
  bool contains(double t, double tol = 0.0) const {
    const bool above = lo_open ? (t > lo + tol) : (t >= lo - tol);
    const bool below = hi_open ? (t < hi - tol) : (t <= hi + tol);
    return above && below;
  }

  /// Clamps a value that passed contains() onto closed endpoints.
  double clamp(double t) const {
    if (!lo_open && t < lo) return lo;
    if (!hi_open && t > hi) return hi;
    return t;
  }

  std::string str() const {
    const auto num = [](double x) {
      if (x == std::numeric_limits<double>::infinity()) return std::string("inf");
      if (x == -std::numeric_limits<double>::infinity()) return std::string("-inf");
      return std::to_string(x);
    };
    return (lo_open ? "(" : "[") + num(lo) + ", " + num(hi) +
           (hi_open ? ")" : "]");
  }
};

/// A scalar function handle with its validity domain.
struct ScalarFn {
  std::function<double(double)> fn;
  Interval domain;
  std::string name;

  double operator()(double t) const { return fn(t); }
};

/*
 * Applies a scalar function to a Hermitian matrix: result is
 * V diag(f(lambda_i)) V* for eig(A) = (lambda, V). Every eigenvalue must lie
 * in `domain` up to tol.psd * scale slack; values inside the slack band are
 * clamped onto closed endpoints before evaluation.
 */
inline HermitianMatrix apply_scalar_fn(const std::function<double(double)>& f,
                                       const HermitianMatrix& a,
                                       const Interval& domain,
                                       const Tolerances& tol = Tolerances::defaults()) {
  const SpectralDecomposition sd = eig(a, tol);
  const double scale = std::max(1.0, std::max(std::abs(sd.min_eigenvalue()),
                                              std::abs(sd.max_eigenvalue())));
  const double slack = tol.psd * scale;
  for (int i = 0; i < sd.dim(); ++i) {
    if (!domain.contains(sd.eigenvalues()[i], slack))
      throw DomainError("eigenvalue " + std::to_string(sd.eigenvalues()[i]) +
                            " outside domain " + domain.str(),
                        sd.eigenvalues()[i]);
  }
  return HermitianMatrix(
      sd.map([&](double t) { return f(domain.clamp(t)); }), tol);
}

inline HermitianMatrix apply_scalar_fn(const ScalarFn& f, const HermitianMatrix& a,
                                       const Tolerances& tol = Tolerances::defaults()) {
  return apply_scalar_fn(f.fn, a, f.domain, tol);
}

/// Catalog of monotone spectral transforms; composable.
class OMFunction {
 public:
  enum class Kind { Power, Log, ExpScaled, Affine };

  /// t^alpha with alpha in [0,1].
  static OMFunction power(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
      throw InvariantViolation("power exponent must lie in [0,1], got " +
                               std::to_string(alpha));
    OMFunction g;
    g.steps_.push_back({Kind::Power, alpha, 0.0});
    return g;
  }

  static OMFunction log() {
    OMFunction g;
    g.steps_.push_back({Kind::Log, 0.0, 0.0});
    return g;
  }

  static OMFunction exp_scaled() {
    OMFunction g;
    g.steps_.push_back({Kind::ExpScaled, 0.0, 0.0});
    return g;
  }

  /// a t + b with a >= 0.
  static OMFunction affine(double a, double b) {
    if (!(a >= 0.0))
      throw InvariantViolation("affine slope must be nonnegative");
    OMFunction g;
    g.steps_.push_back({Kind::Affine, a, b});
    return g;
  }

  /// Composition outer(this(t)).
  OMFunction then(const OMFunction& outer) const {
    OMFunction g = *this;
    g.steps_.insert(g.steps_.end(), outer.steps_.begin(), outer.steps_.end());
    return g;
  }

  double operator()(double t) const {
    double v = t;
    for (const Step& s : steps_) {
      switch (s.kind) {
        case Kind::Power:
          if (v < 0.0) throw DomainError("power of negative value", v);
          v = std::pow(v, s.a);
          break;
        case Kind::Log:
          if (v <= 0.0) throw DomainError("log of non-positive value", v);
          v = std::log(v);
          break;
        case Kind::ExpScaled:
          v = std::exp(v);
          break;
        case Kind::Affine:
          v = s.a * v + s.b;
          break;
      }
    }
    return v;
  }

  /// Natural domain of the first step; later steps are checked at evaluation.
  Interval domain() const {
    switch (steps_.front().kind) {
      case Kind::Power:
        return Interval::nonnegative();
      case Kind::Log:
        return Interval::positive();
      default:
        return Interval::reals();
    }
  }

  bool is_log() const {
    return steps_.size() == 1 && steps_.front().kind == Kind::Log;
  }
  bool is_power() const {
    return steps_.size() == 1 && steps_.front().kind == Kind::Power;
  }
  bool is_affine() const {
    return steps_.size() == 1 && steps_.front().kind == Kind::Affine;
  }
  double power_exponent() const { return steps_.front().a; }
  std::pair<double, double> affine_coefficients() const {
    return {steps_.front().a, steps_.front().b};
  }

  std::string name() const {
    std::string out;
    for (const Step& s : steps_) {
      if (!out.empty()) out = " o " + out;
      switch (s.kind) {
        case Kind::Power:
          out = "power(" + std::to_string(s.a) + ")" + out;
          break;
        case Kind::Log:
          out = "log" + out;
          break;
        case Kind::ExpScaled:
          out = "exp" + out;
          break;
        case Kind::Affine:
          out = "affine(" + std::to_string(s.a) + "," + std::to_string(s.b) +
                ")" + out;
          break;
      }
    }
    return out;
  }

  ScalarFn to_scalar_fn() const {
    return {[g = *this](double t) { return g(t); }, domain(), name()};
  }

 private:
  struct Step {
    Kind kind;
    double a;
    double b;
  };
  OMFunction() = default;
  std::vector<Step> steps_;
};

struct OCAtom {
  double lambda;  ///< > 0
  double weight;  ///< >= 0
};

/// Increasing operator convex function on [0, inf) in representation form.
class OCFunction {
 public:
  OCFunction(double f0, double beta, double gamma, std::vector<OCAtom> atoms = {})
      : f0_(f0), beta_(beta), gamma_(gamma), atoms_(std::move(atoms)) {
    if (!(beta_ >= 0.0))
      throw InvariantViolation("beta (right derivative at 0) must be >= 0");
    if (!(gamma_ >= 0.0))
      throw InvariantViolation("gamma (quadratic weight) must be >= 0");
    for (const OCAtom& a : atoms_) {
      if (!(a.lambda > 0.0))
        throw InvariantViolation("atom position must be > 0");
      if (!(a.weight >= 0.0))
        throw InvariantViolation("atom weight must be >= 0");
    }
  }

  static OCFunction identity() { return OCFunction(0.0, 1.0, 0.0); }
  static OCFunction square() { return OCFunction(0.0, 0.0, 1.0); }

  /// Valid for t >= 0.
  double operator()(double t) const {
    double v = f0_ + beta_ * t + gamma_ * t * t;
    for (const OCAtom& a : atoms_)
      v += a.weight * (a.lambda * t * t) / (a.lambda + t);
    return v;
  }

  double f0() const { return f0_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  const std::vector<OCAtom>& atoms() const { return atoms_; }

  ScalarFn to_scalar_fn() const {
    return {[f = *this](double t) { return f(t); }, Interval::nonnegative(),
            "oc"};
  }

 private:
  double f0_;
  double beta_;
  double gamma_;
  std::vector<OCAtom> atoms_;
};

/// Right derivative at 0 of the representation (the beta coefficient).
inline double oc_derivative_at_zero(const OCFunction& f) { return f.beta(); }

/// A strictly positive exponent.
struct ExponentR {
  explicit ExponentR(double r_) : value(r_) {
    if (!(value > 0.0)) throw InvariantViolation("exponent r must be > 0");
  }
  double value;
};

inline HermitianMatrix apply_om(const OMFunction& g, const PositiveMatrix& a,
                                const Tolerances& tol = Tolerances::defaults()) {
  return apply_scalar_fn([&g](double t) { return g(t); }, a.base(), g.domain(),
                         tol);
}

inline HermitianMatrix apply_oc(const OCFunction& f, const PositiveMatrix& a,
                                const Tolerances& tol = Tolerances::defaults()) {
  return apply_scalar_fn([&f](double t) { return f(t); }, a.base(),
                         Interval::nonnegative(), tol);
}

/// A^r for Hermitian A with nonnegative spectrum (tolerance-clamped at 0).
inline HermitianMatrix spectral_pow(const HermitianMatrix& a, double r,
                                    const Tolerances& tol = Tolerances::defaults()) {
  return apply_scalar_fn([r](double t) { return std::pow(t, r); }, a,
                         Interval::nonnegative(), tol);
}

inline HermitianMatrix spectral_sqrt(const HermitianMatrix& a,
                                     const Tolerances& tol = Tolerances::defaults()) {
  return spectral_pow(a, 0.5, tol);
}

inline HermitianMatrix spectral_exp(const HermitianMatrix& a,
                                    const Tolerances& tol = Tolerances::defaults()) {
  return apply_scalar_fn([](double t) { return std::exp(t); }, a,
                         Interval::reals(), tol);
}

inline HermitianMatrix spectral_log(const HermitianMatrix& a,
                                    const Tolerances& tol = Tolerances::defaults()) {
  return apply_scalar_fn([](double t) { return std::log(t); }, a,
                         Interval::positive(), tol);
}

/*
 * The chained transform t -> f(g(t)^r). The handle is nondecreasing on its
 * domain: g is nondecreasing, g(t)^r preserves that on g >= 0, and f is
 * nondecreasing on [0, inf) because its right derivative at 0 is
 * nonnegative.
 *
 * The domain is the part of g's domain where g(t) >= 0: [1, inf) for log,
 * [0, inf) for powers, all reals for exp, [-b/a, inf) for affine.
 */
inline ScalarFn compose_chain(const OCFunction& f, const OMFunction& g,
                              ExponentR r) {
  Interval dom = g.domain();
  if (g.is_log()) {
    dom = Interval::at_least(1.0);
  } else if (g.is_affine()) {
    const auto [slope, offset] = g.affine_coefficients();
    if (slope > 0.0)
      dom = Interval::at_least(-offset / slope);
    else if (offset < 0.0)
      throw DomainError("chain: constant negative inner transform", offset);
  }
  // exp is positive everywhere; multi-step compositions are guarded at
  // evaluation time.
  const double rr = r.value;
  auto fn = [f, g, rr](double t) {
    double gt = g(t);
    if (gt < 0.0) {
      if (gt > -1e-12 * (1.0 + std::abs(t)))
        gt = 0.0;  // tolerance clamp at the boundary
      else
        throw DomainError("chain: inner transform is negative at " +
                              std::to_string(t),
                          gt);
    }
    return f(std::pow(gt, rr));
  };
  return ScalarFn{std::move(fn), dom,
                  "oc(" + g.name() + "^" + std::to_string(rr) + ")"};
}

/// Max-norm residual of f(U*AU) - U*f(A)U; zero for exact arithmetic.
inline double verify_conjugation_covariance(const ScalarFn& f,
                                            const HermitianMatrix& a,
                                            const UnitaryMatrix& u,
                                            const Tolerances& tol = Tolerances::defaults()) {
  require_same_dim(a.dim(), u.dim());
  const HermitianMatrix conj_a(u.adjoint() * a.mat() * u.mat(), tol);
  const HermitianMatrix lhs = apply_scalar_fn(f, conj_a, tol);
  const HermitianMatrix fa = apply_scalar_fn(f, a, tol);
  const Matrix rhs = u.adjoint() * fa.mat() * u.mat();
  return max_norm(lhs.mat() - rhs);
}

/// Shift s with spec(A + sI) >= 1; combine with max() to shift pairs jointly.
inline double unit_spectrum_shift(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw DecompositionError("unit_spectrum_shift: eigensolver failed");
  return 1.0 + std::abs(es.eigenvalues().minCoeff());
}

}  // namespace uorder
