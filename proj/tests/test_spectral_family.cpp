#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "test_helpers.hpp"

using namespace uorder;
using test_helpers::diag;
using test_helpers::hdiag;
using test_helpers::hermitian;
using test_helpers::real_mat;
using Catch::Approx;

namespace {

// Scalar oracle for diagonal inputs: E_lambda(B) <= E_lambda(A) at every
// lambda iff {i : b_i <= lambda} is contained in {i : a_i <= lambda} for all
// lambda. The index sets are coordinate subsets, so the condition is
// a_i <= b_i coordinatewise (sorted-spectrum dominance is strictly weaker).
bool diagonal_family_oracle(const RealVector& a, const RealVector& b) {
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > b[i] + 1e-12) return false;
  return true;
}

}  // namespace

TEST_CASE("spectral family of a diagonal matrix with a repeated eigenvalue") {
  const SpectralFamily f = spectral_family(hdiag({1, 2, 2, 5}));
  REQUIRE(f.thresholds().size() == 3);
  CHECK(f.thresholds()[0] == Approx(1.0));
  CHECK(f.thresholds()[1] == Approx(2.0));
  CHECK(f.thresholds()[2] == Approx(5.0));
  CHECK(f.ranks() == std::vector<int>{1, 3, 4});

  CHECK(max_norm(f.projections()[0].mat() - diag({1, 0, 0, 0})) < 1e-12);
  CHECK(max_norm(f.projections()[1].mat() - diag({1, 1, 1, 0})) < 1e-12);
  CHECK(max_norm(f.projections()[2].mat() - Matrix::Identity(4, 4)) < 1e-12);
}

TEST_CASE("spectral family of the identity") {
  const SpectralFamily f = spectral_family(hdiag({1, 1, 1, 1, 1}));
  REQUIRE(f.thresholds().size() == 1);
  CHECK(f.thresholds()[0] == Approx(1.0));
  CHECK(max_norm(f.projections()[0].mat() - Matrix::Identity(5, 5)) < 1e-12);
}

TEST_CASE("spectral family of the flip matrix") {
  const SpectralFamily f = spectral_family(hermitian({{0, 1}, {1, 0}}));
  REQUIRE(f.thresholds().size() == 2);
  CHECK(f.thresholds()[0] == Approx(-1.0));
  CHECK(f.thresholds()[1] == Approx(1.0));
  // Eigenprojection at -1 is onto (1,-1)/sqrt(2).
  const Matrix expected = real_mat({{0.5, -0.5}, {-0.5, 0.5}});
  CHECK(max_norm(f.projections()[0].mat() - expected) < 1e-12);
}

TEST_CASE("family lookup is right-continuous and zero below the spectrum") {
  const SpectralFamily f = spectral_family(hdiag({1, 2, 2, 5}));
  CHECK(max_norm(f.at(0.0)) == 0.0);
  CHECK(max_norm(f.at(1.0) - diag({1, 0, 0, 0})) < 1e-12);
  CHECK(max_norm(f.at(1.5) - diag({1, 0, 0, 0})) < 1e-12);
  CHECK(max_norm(f.at(3.0) - diag({1, 1, 1, 0})) < 1e-12);
  CHECK(max_norm(f.at(100.0) - Matrix::Identity(4, 4)) < 1e-12);
}

TEST_CASE("family monotonicity, rank additivity and reconstruction") {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = rng.uniform_int(2, 7);
    const HermitianMatrix a = random_hermitian(rng, dim);
    const SpectralFamily f = spectral_family(a);

    // Monotone in lambda: range inclusion along the chain.
    for (std::size_t k = 0; k + 1 < f.projections().size(); ++k)
      CHECK(projection_leq_residual(f.projections()[k].mat(),
                                    f.projections()[k + 1].mat()) <= 1e-10);

    // Ranks count clustered eigenvalues cumulatively.
    const SpectralDecomposition sd = eig(a);
    CHECK(f.ranks().back() == dim);
    for (std::size_t k = 0; k < f.thresholds().size(); ++k) {
      int count = 0;
      const double edge = f.thresholds()[k] +
                          Tolerances::defaults().cluster * scale_of(a.mat());
      for (int i = 0; i < dim; ++i)
        if (sd.eigenvalues()[i] <= edge) ++count;
      CHECK(f.ranks()[k] == count);
    }

    // Threshold-weighted increments rebuild A up to the clustering slack.
    Matrix rebuilt = Matrix::Zero(dim, dim);
    Matrix prev = Matrix::Zero(dim, dim);
    for (std::size_t k = 0; k < f.thresholds().size(); ++k) {
      rebuilt += f.thresholds()[k] * (f.projections()[k].mat() - prev);
      prev = f.projections()[k].mat();
    }
    const double scale = scale_of(a.mat());
    CHECK(max_norm(a.mat() - rebuilt) <=
          Tolerances::defaults().cluster * scale +
              Tolerances::defaults().recon * scale);
  }
}

TEST_CASE("projection order by range inclusion") {
  const Projection e1(diag({1, 0}));
  const Projection full(Matrix::Identity(2, 2));
  const Projection e2(diag({0, 1}));
  CHECK(projection_leq(e1, full));
  CHECK_FALSE(projection_leq(e1, e2));

  // span{(1,1,0)} inside the e1-e2 plane of C^3.
  const Projection line(real_mat({{0.5, 0.5, 0}, {0.5, 0.5, 0}, {0, 0, 0}}));
  const Projection plane(diag({1, 1, 0}));
  CHECK(projection_leq(line, plane));
  CHECK_FALSE(projection_leq(plane, line));

  CHECK_THROWS_AS(Projection(diag({1, 0.5})), InvariantViolation);
  CHECK_THROWS_AS(projection_leq(e1, Projection(diag({1, 0, 0}))),
                  DimensionMismatch);
}

TEST_CASE("family order on diagonal examples") {
  // A = diag(1,2) vs B = diag(2,3): B crosses each threshold later.
  CHECK(family_leq(hdiag({1, 2}), hdiag({2, 3})).holds);
  CHECK(family_leq(hdiag({1, 2}), hdiag({1, 2})).holds);
  CHECK_FALSE(family_leq(hdiag({2, 3}), hdiag({1, 2})).holds);
}

TEST_CASE("family order matches the diagonal oracle") {
  Rng rng(91);
  int holds = 0, fails = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = rng.uniform_int(2, 6);
    RealVector a(dim), b(dim);
    for (int i = 0; i < dim; ++i) a[i] = rng.uniform();
    if (trial % 2 == 0) {
      // Coordinatewise dominated pair.
      for (int i = 0; i < dim; ++i) b[i] = a[i] + rng.uniform();
    } else {
      for (int i = 0; i < dim; ++i) b[i] = rng.uniform();
    }
    Matrix da = Matrix::Zero(dim, dim), db = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
      da(i, i) = a[i];
      db(i, i) = b[i];
    }
    const bool oracle = diagonal_family_oracle(a, b);
    const bool implemented =
        family_leq(HermitianMatrix(da), HermitianMatrix(db)).holds;
    CHECK(implemented == oracle);
    (oracle ? holds : fails) += 1;
  }
  CHECK(holds > 0);
  CHECK(fails > 0);
}

TEST_CASE("per-lambda report entries cover every piece") {
  const FamilyLeqReport rep = family_leq(hdiag({1, 2}), hdiag({2, 3}));
  REQUIRE(!rep.entries.empty());
  for (const FamilyLeqEntry& e : rep.entries) CHECK(e.holds);
  // A reversed pair pinpoints the failing lambda.
  const FamilyLeqReport bad = family_leq(hdiag({2, 3}), hdiag({1, 2}));
  bool any_fail = false;
  for (const FamilyLeqEntry& e : bad.entries) any_fail = any_fail || !e.holds;
  CHECK(any_fail);
}

TEST_CASE("power order through the family order (ordered commuting pair)") {
  const PositiveMatrix a(diag({1.0 / 3, 2.0 / 3}));
  const PositiveMatrix b(diag({2.0 / 3, 1.0}));
  const OlsonForwardReport rep = olson_forward(a, b, 12);
  CHECK(rep.family_order);
  CHECK(rep.power_order);
  CHECK_FALSE(rep.first_failing_n.has_value());

  const PositiveMatrix zero(Matrix::Zero(2, 2));
  const OlsonForwardReport rep0 = olson_forward(zero, b, 12);
  CHECK(rep0.family_order);
  CHECK(rep0.power_order);
}

TEST_CASE("the classic pair where the Loewner order does not square") {
  // A = [[1,1],[1,1]]/3 <= B = [[2,1],[1,1]]/3 but det(B^2 - A^2) = -1/81
  // (before scaling, B^2 - A^2 = [[3,1],[1,0]] with det -1), so the power
  // order breaks at n = 2 and the family order is false, consistently.
  const Matrix a_raw = real_mat({{1, 1}, {1, 1}});
  const Matrix b_raw = real_mat({{2, 1}, {1, 1}});
  const Matrix diff2 = b_raw * b_raw - a_raw * a_raw;
  CHECK(max_norm(diff2 - real_mat({{3, 1}, {1, 0}})) < 1e-14);
  CHECK(diff2.determinant().real() == Approx(-1.0));

  const PositiveMatrix a(Matrix(a_raw / 3.0));
  const PositiveMatrix b(Matrix(b_raw / 3.0));
  CHECK(loewner_leq(a.base(), b.base()).psd);

  const OlsonReport rep = olson_consistency(a, b, 12);
  CHECK_FALSE(rep.power_order);
  REQUIRE(rep.first_failing_n.has_value());
  CHECK(*rep.first_failing_n == 2);
  CHECK_FALSE(rep.family_order);
  CHECK(rep.cell == OlsonCell::BothFail);
}

TEST_CASE("olson consistency cells on random pairs") {
  Rng rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = rng.uniform_int(2, 5);
    const bool commuting = trial % 2 == 0;
    const PositivePair pair =
        commuting ? commuting_positive_pair(rng, dim, trial % 4 == 0)
                  : PositivePair{random_positive(rng, dim),
                                 random_positive(rng, dim)};
    const OlsonReport rep = olson_consistency(pair.a, pair.b, 12);
    CHECK(rep.cell != OlsonCell::HardFailure);
    if (commuting) CHECK(rep.power_order == rep.family_order);
  }
}

TEST_CASE("family conjugation covariance") {
  const HermitianMatrix a = hdiag({1, 2, 3});
  CHECK(family_conjugation_covariance(a, UnitaryMatrix::identity(3)) == 0.0);

  // Permutations of a diagonal matrix permute the eigenprojections.
  const UnitaryMatrix perm(real_mat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  CHECK(family_conjugation_covariance(a, perm) < 1e-12);

  Rng rng(101);
  for (int trial = 0; trial < 15; ++trial) {
    const HermitianMatrix h = random_hermitian(rng, 5);
    const UnitaryMatrix u = haar_unitary(rng, 5);
    CHECK(family_conjugation_covariance(h, u) <= 1e-8);
  }
}
