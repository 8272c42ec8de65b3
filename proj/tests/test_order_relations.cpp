#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "test_helpers.hpp"

using namespace uorder;
using test_helpers::diag;
using test_helpers::hdiag;
using test_helpers::hermitian;
using test_helpers::real_mat;
using Catch::Approx;

TEST_CASE("loewner_leq examples") {
  CHECK(loewner_leq(hdiag({1, 2}), hdiag({2, 3})).psd);
  // B - A = diag(1, 0).
  CHECK(loewner_leq(hermitian({{1, 1}, {1, 1}}), hermitian({{2, 1}, {1, 1}})).psd);
  CHECK_FALSE(loewner_leq(hdiag({3, 1}), hdiag({2, 4})).psd);
  CHECK_THROWS_AS(loewner_leq(hdiag({1}), hdiag({1, 2})), DimensionMismatch);
}

TEST_CASE("leq_u with the swap witness") {
  const OrderCertificate cert = leq_u(hdiag({3, 1}), hdiag({2, 4}));
  REQUIRE(cert.verdict);
  REQUIRE(cert.witness.has_value());
  CHECK(max_norm(cert.witness->mat() - real_mat({{0, 1}, {1, 0}})) < 1e-12);
  // U*BU - A = diag(1, 1).
  CHECK(cert.residual_min_eig == Approx(1.0));
}

TEST_CASE("leq_u violation carries the descending index") {
  const OrderCertificate cert = leq_u(hdiag({5, 0}), hdiag({4, 2}));
  REQUIRE_FALSE(cert.verdict);
  REQUIRE(cert.violation_index.has_value());
  CHECK(*cert.violation_index == 0);  // top eigenvalue 5 > 4
  CHECK(cert.violation_margin == Approx(1.0));
  CHECK_FALSE(cert.witness.has_value());
}

TEST_CASE("leq_u is reflexive with the identity witness") {
  Rng rng(8);
  const HermitianMatrix a = random_hermitian(rng, 5);
  const OrderCertificate cert = leq_u(a, a);
  REQUIRE(cert.verdict);
  CHECK(max_norm(cert.witness->mat() - Matrix::Identity(5, 5)) < 1e-12);
  CHECK(std::abs(cert.residual_min_eig) < 1e-12);
}

TEST_CASE("leq_u transitivity with composed witnesses") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = rng.uniform_int(2, 6);
    // Spectra ordered a <= b <= c coordinatewise, three independent bases.
    RealVector sb(dim), sa(dim), sc(dim);
    for (int i = 0; i < dim; ++i) sb[i] = rng.normal();
    std::sort(sb.begin(), sb.end());
    for (int i = 0; i < dim; ++i) sa[i] = sb[i] - rng.uniform();
    for (int i = 0; i < dim; ++i) sc[i] = sb[i] + rng.uniform();
    const UnitaryMatrix va = haar_unitary(rng, dim);
    const UnitaryMatrix vb = haar_unitary(rng, dim);
    const UnitaryMatrix vc = haar_unitary(rng, dim);
    const HermitianMatrix a(Matrix(va.mat() * sa.asDiagonal() * va.adjoint()));
    const HermitianMatrix b(Matrix(vb.mat() * sb.asDiagonal() * vb.adjoint()));
    const HermitianMatrix c(Matrix(vc.mat() * sc.asDiagonal() * vc.adjoint()));

    const OrderCertificate ab = leq_u(a, b);
    const OrderCertificate bc = leq_u(b, c);
    const OrderCertificate ac = leq_u(a, c);
    REQUIRE(ab.verdict);
    REQUIRE(bc.verdict);
    REQUIRE(ac.verdict);

    // A <= U1*BU1 and B <= U2*CU2 chain to A <= (U2 U1)* C (U2 U1).
    const Matrix composed = bc.witness->mat() * ab.witness->mat();
    const Matrix residual =
        composed.adjoint() * c.mat() * composed - a.mat();
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        Matrix(0.5 * (residual + residual.adjoint())), Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-9 * scale_of(c.mat()));
  }
}

TEST_CASE("finite-dimensional antisymmetry") {
  Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = rng.uniform_int(2, 6);
    const HermitianMatrix a = random_hermitian(rng, dim);
    const UnitaryMatrix q = haar_unitary(rng, dim);
    const HermitianMatrix b(q.adjoint() * a.mat() * q.mat());
    CHECK(leq_u(a, b).verdict);
    CHECK(leq_u(b, a).verdict);
    CHECK(unitarily_equivalent(a, b));
  }
}

TEST_CASE("loewner order implies the orbit order but not conversely") {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = rng.uniform_int(2, 6);
    const HermitianMatrix a = random_hermitian(rng, dim);
    const PositiveMatrix bump = random_positive(rng, dim);
    const HermitianMatrix b(a.mat() + bump.mat());
    REQUIRE(loewner_leq(a, b).psd);
    CHECK(leq_u(a, b).verdict);
  }
  // The gap: diag(3,1) <=_u diag(2,4) holds though the Loewner order fails.
  CHECK(leq_u(hdiag({3, 1}), hdiag({2, 4})).verdict);
  CHECK_FALSE(loewner_leq(hdiag({3, 1}), hdiag({2, 4})).psd);
}

TEST_CASE("certificate soundness on random pairs") {
  Rng rng(51);
  int trues = 0, falses = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = rng.uniform_int(2, 6);
    HermitianMatrix a = random_hermitian(rng, dim);
    HermitianMatrix b = random_hermitian(rng, dim);
    if (trial % 2 == 0) {
      const auto pair = dominance_pair_hermitian(rng, dim);
      a = pair.a;
      b = pair.b;
    }
    const OrderCertificate cert = leq_u(a, b);
    const double scale =
        std::max({1.0, spectral_norm(a.mat()), spectral_norm(b.mat())});
    if (cert.verdict) {
      ++trues;
      REQUIRE(cert.witness.has_value());
      const Matrix conj =
          cert.witness->adjoint() * b.mat() * cert.witness->mat();
      Eigen::SelfAdjointEigenSolver<Matrix> es(
          Matrix(0.5 * ((conj - a.mat()) + (conj - a.mat()).adjoint())),
          Eigen::EigenvaluesOnly);
      CHECK(es.eigenvalues().minCoeff() >= -1e-8 * scale);
    } else {
      ++falses;
      REQUIRE(cert.violation_index.has_value());
      const RealVector da = eig(a).descending_eigenvalues();
      const RealVector db = eig(b).descending_eigenvalues();
      const int j = *cert.violation_index;
      CHECK(da[j] > db[j] + 1e-8 * scale);
    }
  }
  CHECK(trues > 0);
  CHECK(falses > 0);
}

TEST_CASE("witness construction and failure") {
  // Already-aligned ascending diagonals give the identity witness.
  const UnitaryMatrix u = witness(hdiag({1, 2}), hdiag({2, 3}));
  CHECK(max_norm(u.mat() - Matrix::Identity(2, 2)) < 1e-12);

  const UnitaryMatrix swap = witness(hdiag({3, 1}), hdiag({2, 4}));
  CHECK(max_norm(swap.mat() - real_mat({{0, 1}, {1, 0}})) < 1e-12);

  try {
    witness(hdiag({5, 0}), hdiag({4, 2}));
    FAIL("expected no witness");
  } catch (const NoWitnessError& e) {
    CHECK(e.violation_index == 0);
  }

  // Conjugated pair: A = Q diag(1,2) Q*, B = diag(2,3); the canonical
  // witness absorbs Q and certifies the order.
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const UnitaryMatrix q = haar_unitary(rng, 2);
    const HermitianMatrix a(Matrix(q.mat() * diag({1, 2}) * q.adjoint()));
    const HermitianMatrix b = hdiag({2, 3});
    const UnitaryMatrix w = witness(a, b);
    const Matrix residual = w.adjoint() * b.mat() * w.mat() - a.mat();
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        Matrix(0.5 * (residual + residual.adjoint())), Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-9 * scale_of(b.mat()));
  }
}

TEST_CASE("in_K_n membership") {
  Rng rng(71);
  const PositiveMatrix a(diag({0.3, 0.6}));
  for (int n = 1; n <= 8; ++n)
    CHECK(in_K_n(UnitaryMatrix::identity(2), a, a, n).psd);

  const PositiveMatrix half_a(diag({0.5, 1.0}));
  const PositiveMatrix half_b(diag({1.0, 1.5}));
  CHECK(in_K_n(UnitaryMatrix::identity(2), half_a, half_b, 5).psd);

  const PositiveMatrix s09(diag({0.9}));
  const PositiveMatrix s08(diag({0.8}));
  for (int n : {1, 3, 7})
    CHECK_FALSE(in_K_n(UnitaryMatrix::identity(1), s09, s08, n).psd);

  CHECK_THROWS_AS(in_K_n(UnitaryMatrix::identity(2), a, PositiveMatrix(diag({1.0})), 1),
                  DimensionMismatch);
}

TEST_CASE("nested membership scan") {
  // Canonical witness on a positive dominance pair is a member for every n.
  Rng rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = rng.uniform_int(2, 5);
    const auto pair = dominance_pair_positive(rng, dim);
    const UnitaryMatrix u = witness(pair.a.base(), pair.b.base());
    CHECK_FALSE(nested_K_property(u, pair.a, pair.b, 12).has_value());
  }

  // diag(0.5, 0.6) vs diag(0.6, 0.5): n = 1 already fails under the identity.
  const PositiveMatrix a(diag({0.5, 0.6}));
  const PositiveMatrix b(diag({0.6, 0.5}));
  const auto broken = nested_K_property(UnitaryMatrix::identity(2), a, b, 12);
  REQUIRE(broken.has_value());
  CHECK(*broken == 1);

  // Zero is below anything positive.
  const PositiveMatrix zero(Matrix::Zero(2, 2));
  CHECK_FALSE(
      nested_K_property(UnitaryMatrix::identity(2), zero, b, 12).has_value());
}

TEST_CASE("unitary equivalence by spectrum") {
  Rng rng(79);
  const HermitianMatrix a = random_hermitian(rng, 4);
  const UnitaryMatrix u = haar_unitary(rng, 4);
  CHECK(unitarily_equivalent(a, HermitianMatrix(u.adjoint() * a.mat() * u.mat())));
  CHECK_FALSE(unitarily_equivalent(hdiag({1, 2}), hdiag({1, 3})));
  CHECK(unitarily_equivalent(hermitian({{0, 1}, {1, 0}}), hdiag({1, -1})));
}
