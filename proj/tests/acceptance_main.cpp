// Acceptance suite: one seeded, self-contained check per release criterion,
// one pass/fail line each. Exit code is the number of failed criteria.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <uorder/uorder.hpp>

using namespace uorder;

namespace {

int g_failures = 0;

void criterion(int index, const std::string& label, bool ok,
               const std::string& detail = "") {
  std::printf("%s criterion-%d: %s%s%s\n", ok ? "PASS" : "FAIL", index,
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

Matrix real2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// --- criterion 1: order-certificate soundness -----------------------------

void run_certificate_soundness() {
  Rng rng(0xACCE501);
  int trues = 0, falses = 0, uncertified = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = rng.uniform_int(2, 8);
    HermitianMatrix a = random_hermitian(rng, dim);
    HermitianMatrix b = random_hermitian(rng, dim);
    if (trial % 2 == 0) {
      const HermitianPair pair = dominance_pair_hermitian(rng, dim);
      a = pair.a;
      b = pair.b;
    }
    const double scale =
        std::max({1.0, spectral_norm(a.mat()), spectral_norm(b.mat())});
    const OrderCertificate cert = leq_u(a, b);
    if (cert.verdict) {
      ++trues;
      if (!cert.witness.has_value()) {
        ++uncertified;
        continue;
      }
      const Matrix conj =
          cert.witness->adjoint() * b.mat() * cert.witness->mat();
      Eigen::SelfAdjointEigenSolver<Matrix> es(
          Matrix(0.5 * ((conj - a.mat()) + (conj - a.mat()).adjoint())),
          Eigen::EigenvaluesOnly);
      if (es.eigenvalues().minCoeff() < -1e-8 * scale) ++uncertified;
    } else {
      ++falses;
      if (!cert.violation_index.has_value()) {
        ++uncertified;
        continue;
      }
      const RealVector da = eig(a).descending_eigenvalues();
      const RealVector db = eig(b).descending_eigenvalues();
      const int j = *cert.violation_index;
      if (!(da[j] > db[j] + 1e-8 * scale)) ++uncertified;
    }
  }
  std::ostringstream detail;
  detail << "true=" << trues << " false=" << falses
         << " uncertified=" << uncertified;
  criterion(1, "order-certificate soundness (500 pairs, dims 2-8)",
            trues > 0 && falses > 0 && uncertified == 0, detail.str());
}

// --- helpers for suite-backed criteria ------------------------------------

TrialConfig acceptance_config(int trials) {
  TrialConfig cfg;
  cfg.dim = 8;
  cfg.trials = trials;
  cfg.seed = 42;
  cfg.n_max = 12;
  return cfg;
}

std::string report_summary(const SuiteReport& r) {
  std::ostringstream out;
  out << "premise=" << r.premise_hits << "/" << r.trials << " gray=" << r.gray
      << " failures=" << r.failures.size();
  return out.str();
}

bool clean_report(const SuiteReport& r, bool premise_every_trial = false) {
  const bool premise_ok =
      premise_every_trial ? r.premise_hits == r.trials : r.premise_hits > 0;
  return r.failures.empty() && r.gray == 0 && premise_ok;
}

// --- criterion 4: power and log order preservation ------------------------

void run_power_log_monotonicity() {
  Rng rng(0xACCE504);
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = rng.uniform_int(2, 8);
    const PositiveMatrix s = random_positive(rng, dim);
    const PositiveMatrix bump = random_positive(rng, dim);
    const PositiveMatrix t(HermitianMatrix(s.mat() + bump.mat()));
    for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
      const HermitianMatrix sa = apply_om(OMFunction::power(alpha), s);
      const HermitianMatrix ta = apply_om(OMFunction::power(alpha), t);
      const double scale =
          std::max({1.0, spectral_norm(sa.mat()), spectral_norm(ta.mat())});
      Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(ta.mat() - sa.mat()),
                                               Eigen::EigenvaluesOnly);
      if (es.eigenvalues().minCoeff() < -1e-8 * scale) ++violations;
    }
  }
  int log_violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = rng.uniform_int(2, 8);
    const PositiveMatrix a = random_positive(rng, dim, 0.1);
    const PositiveMatrix bump = random_positive(rng, dim);
    const PositiveMatrix b(HermitianMatrix(a.mat() + bump.mat()));
    const HermitianMatrix la = apply_om(OMFunction::log(), a);
    const HermitianMatrix lb = apply_om(OMFunction::log(), b);
    const double scale =
        std::max({1.0, spectral_norm(la.mat()), spectral_norm(lb.mat())});
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(lb.mat() - la.mat()),
                                             Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8 * scale) ++log_violations;
  }
  std::ostringstream detail;
  detail << "power violations=" << violations
         << " log violations=" << log_violations;
  criterion(4, "power/log order preservation (200 ordered pairs each)",
            violations == 0 && log_violations == 0, detail.str());
}

// --- criterion 6: olson consistency ----------------------------------------

void run_olson_consistency() {
  Rng rng(0xACCE506);
  int disagreements = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = rng.uniform_int(2, 8);
    const PositivePair pair =
        commuting_positive_pair(rng, dim, trial % 2 == 0);
    const OlsonReport rep = olson_consistency(pair.a, pair.b, 12);
    if (rep.power_order != rep.family_order) ++disagreements;
  }

  int hard_failures = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = rng.uniform_int(2, 8);
    const PositivePair pair{random_positive(rng, dim),
                            random_positive(rng, dim)};
    const OlsonReport rep = olson_consistency(pair.a, pair.b, 12);
    if (rep.cell == OlsonCell::HardFailure) ++hard_failures;
  }

  // The pair whose Loewner order does not survive squaring.
  const Matrix a_raw = real2(1, 1, 1, 1);
  const Matrix b_raw = real2(2, 1, 1, 1);
  const double det_before =
      (b_raw * b_raw - a_raw * a_raw).determinant().real();
  const PositiveMatrix a(Matrix(a_raw / 3.0));
  const PositiveMatrix b(Matrix(b_raw / 3.0));
  const bool loewner_ok = loewner_leq(a.base(), b.base()).psd;
  const OlsonReport known = olson_consistency(a, b, 12);
  const bool known_ok = loewner_ok && det_before < 0.0 && !known.power_order &&
                        known.first_failing_n.has_value() &&
                        *known.first_failing_n == 2 && !known.family_order &&
                        known.cell == OlsonCell::BothFail;

  std::ostringstream detail;
  detail << "commuting disagreements=" << disagreements
         << " hard failures=" << hard_failures
         << " det(B^2-A^2)=" << det_before;
  criterion(6, "power order vs family order consistency (300 + 300 pairs)",
            disagreements == 0 && hard_failures == 0 && known_ok,
            detail.str());
}

// --- criterion 10: CLI determinism -----------------------------------------

json strip_volatile(json j) {
  for (json& rep : j["reports"]) rep.erase("seconds");
  return j;
}

int run_cli_capture(const std::string& args, std::string* out) {
  const std::string cmd =
      std::string(UORDER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buffer[8192];
  while (std::size_t n = fread(buffer, 1, sizeof(buffer), pipe))
    out->append(buffer, n);
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void run_determinism() {
  std::string first, second;
  const std::string args = "suite --theorem all --seed 42 --dim 6 --trials 60";
  const int code1 = run_cli_capture(args, &first);
  const int code2 = run_cli_capture(args, &second);
  bool ok = code1 == 0 && code2 == 0;
  std::string detail = "exit codes " + std::to_string(code1) + "/" +
                       std::to_string(code2);
  if (ok) {
    try {
      const json a = strip_volatile(json::parse(first));
      const json b = strip_volatile(json::parse(second));
      ok = a == b;
      detail = ok ? "verdicts and failure lists identical"
                  : "reports differ between runs";
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
  }
  criterion(10, "suite determinism (two runs, --theorem all --seed 42)", ok,
            detail);
}

}  // namespace

int main() {
  std::printf("acceptance suite (seeded, dims 2-8)\n");

  run_certificate_soundness();

  {
    const SuiteReport rep = verify_uv6(acceptance_config(200));
    criterion(2,
              "convex-monotone chains preserve the orbit order "
              "(200 trials x 50 functions)",
              clean_report(rep, true), report_summary(rep));
  }
  {
    const SuiteReport rep = verify_kosaki(acceptance_config(200));
    criterion(3, "exp preserves the orbit order (200 trials)",
              clean_report(rep, true), report_summary(rep));
  }

  run_power_log_monotonicity();

  {
    const SuiteReport rep = verify_uv5(acceptance_config(200));
    criterion(5,
              "square dominance implies convex dominance "
              "(200 pairs x 50 functions)",
              clean_report(rep, true), report_summary(rep));
  }

  run_olson_consistency();

  {
    const SuiteReport uv3 = verify_rigidity_uv3(acceptance_config(200));
    const SuiteReport u11 = verify_projection_lemma(acceptance_config(200));
    const SuiteReport pp = verify_pp(acceptance_config(200));
    const std::string detail = "uv3: " + report_summary(uv3) +
                               " | u11: " + report_summary(u11) +
                               " | pp: " + report_summary(pp);
    criterion(7,
              "rigidity suite: commuting equality + certified premise failure "
              "(3 x 200 trials)",
              clean_report(uv3, true) && clean_report(u11, true) &&
                  clean_report(pp, true),
              detail);
  }
  {
    const SuiteReport rep = verify_theorem_ss(acceptance_config(200));
    criterion(8, "single witness certifies every power n = 1..12 (200 pairs)",
              clean_report(rep, true), report_summary(rep));
  }
  {
    const SuiteReport rep = verify_finite_hyponormal_normal(acceptance_config(500));
    criterion(9,
              "hyponormal-implies-normal shadow and sandwich defect identity "
              "(500 trials)",
              clean_report(rep, true), report_summary(rep));
  }

  run_determinism();

  if (g_failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures;
}
