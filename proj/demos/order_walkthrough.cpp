// Tour of the main flows: orbit-order certificates, the gap between the
// Loewner and orbit orders, power/family-order consistency, and a spectral
// transform chain.

#include <iostream>

#include <uorder/uorder.hpp>

using namespace uorder;

int main() {
  // diag(3,1) is not below diag(2,4) in the Loewner order, but a swap of
  // the basis vectors certifies the orbit order.
  Matrix a(2, 2), b(2, 2);
  a << 3, 0, 0, 1;
  b << 2, 0, 0, 4;
  const HermitianMatrix ha(a), hb(b);

  std::cout << "Loewner A <= B: " << (loewner_leq(ha, hb).psd ? "yes" : "no")
            << "\n";
  const OrderCertificate cert = leq_u(ha, hb);
  std::cout << "orbit order A <=_u B: " << (cert.verdict ? "yes" : "no")
            << ", witness residual min-eig " << cert.residual_min_eig << "\n"
            << "witness:\n" << cert.witness->mat().real() << "\n\n";

  // A Loewner-ordered pair whose order does not survive squaring; the
  // spectral-family order detects this at n = 2.
  Matrix c(2, 2), d(2, 2);
  c << 1, 1, 1, 1;
  d << 2, 1, 1, 1;
  const PositiveMatrix pc(Matrix(c / 3.0)), pd(Matrix(d / 3.0));
  const OlsonReport olson = olson_consistency(pc, pd, 12);
  std::cout << "A <= B: " << (loewner_leq(pc.base(), pd.base()).psd ? "yes" : "no")
            << ", power order: " << (olson.power_order ? "holds" : "breaks")
            << (olson.first_failing_n
                    ? " at n = " + std::to_string(*olson.first_failing_n)
                    : "")
            << ", family order: " << (olson.family_order ? "holds" : "fails")
            << " -> " << olson_cell_name(olson.cell) << "\n\n";

  // Spectral family of diag(1,2,2,5): thresholds with cumulative ranks.
  Matrix e = Matrix::Zero(4, 4);
  e(0, 0) = 1;
  e(1, 1) = 2;
  e(2, 2) = 2;
  e(3, 3) = 5;
  const SpectralFamily family = spectral_family(HermitianMatrix(e));
  std::cout << "spectral family of diag(1,2,2,5):\n";
  for (std::size_t k = 0; k < family.thresholds().size(); ++k)
    std::cout << "  E at " << family.thresholds()[k] << " has rank "
              << family.ranks()[k] << "\n";

  // A monotone convex chain applied through the spectral theorem.
  const ScalarFn chain =
      compose_chain(OCFunction(0.0, 1.0, 0.5), OMFunction::power(0.5),
                    ExponentR(2.0));
  const HermitianMatrix mapped = apply_scalar_fn(chain, hb);
  std::cout << "\nchain " << chain.name << " applied to diag(2,4):\n"
            << mapped.mat().real() << "\n";
  return 0;
}
