// Command-line front end: matrix I/O, structured generators, order checks
// with JSON certificates, and the seeded verification suite.
//
// Exit codes: 0 = relation holds / success, 1 = relation fails,
// 2 = input or domain error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <uorder/uorder.hpp>

namespace {

using uorder::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

uorder::Tolerances base_tolerances() {
  uorder::Tolerances tol = uorder::Tolerances::defaults();
  if (const char* env = std::getenv("UNITARY_ORDER_TOL")) {
    char* end = nullptr;
    const double k = std::strtod(env, &end);
    if (end == env || k <= 0.0)
      throw uorder::Error("UNITARY_ORDER_TOL must be a positive number");
    tol = tol.scaled_by(k);
  }
  return tol;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw uorder::Error("cannot open file: " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw uorder::Error("malformed JSON in " + path + ": " + e.what());
  }
}

uorder::HermitianMatrix read_hermitian(const std::string& path,
                                       const uorder::Tolerances& tol) {
  return uorder::HermitianMatrix(uorder::matrix_from_json(read_json_file(path)),
                                 tol);
}

uorder::PositiveMatrix read_positive(const std::string& path,
                                     const uorder::Tolerances& tol) {
  return uorder::PositiveMatrix(uorder::matrix_from_json(read_json_file(path)),
                                tol);
}

void emit(const json& j, const std::optional<std::string>& out_path) {
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) throw uorder::Error("cannot write file: " + *out_path);
    out << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

struct CheckArgs {
  std::string path_a;
  std::string path_b;
  double tol_override = -1.0;  // < 0 means module default
  int n_max = 12;
};

int run_check_loewner(const CheckArgs& args, const uorder::Tolerances& tol) {
  const auto a = read_hermitian(args.path_a, tol);
  const auto b = read_hermitian(args.path_b, tol);
  const double t = args.tol_override > 0 ? args.tol_override : tol.psd;
  const uorder::PsdReport rep = uorder::loewner_leq(a, b, t);
  emit(uorder::psd_report_to_json(rep), std::nullopt);
  return rep.psd ? kExitHolds : kExitFails;
}

int run_check_lequ(const CheckArgs& args, const uorder::Tolerances& tol) {
  const auto a = read_hermitian(args.path_a, tol);
  const auto b = read_hermitian(args.path_b, tol);
  const double t = args.tol_override > 0 ? args.tol_override : tol.eig;
  const uorder::OrderCertificate cert = uorder::leq_u(a, b, t, tol);
  emit(uorder::certificate_to_json(cert), std::nullopt);
  return cert.verdict ? kExitHolds : kExitFails;
}

int run_check_olson(const CheckArgs& args, const uorder::Tolerances& tol) {
  const auto a = read_positive(args.path_a, tol);
  const auto b = read_positive(args.path_b, tol);
  const uorder::OlsonReport rep =
      uorder::olson_consistency(a, b, args.n_max, tol);
  emit(uorder::olson_report_to_json(rep), std::nullopt);
  return rep.cell == uorder::OlsonCell::BothHold ? kExitHolds : kExitFails;
}

int run_check_family(const CheckArgs& args, const uorder::Tolerances& tol) {
  const auto a = read_hermitian(args.path_a, tol);
  const auto b = read_hermitian(args.path_b, tol);
  const uorder::FamilyLeqReport rep = uorder::family_leq(a, b, tol);
  emit(uorder::family_leq_report_to_json(rep), std::nullopt);
  return rep.holds ? kExitHolds : kExitFails;
}

int run_witness(const CheckArgs& args, const uorder::Tolerances& tol) {
  const auto a = read_hermitian(args.path_a, tol);
  const auto b = read_hermitian(args.path_b, tol);
  const double t = args.tol_override > 0 ? args.tol_override : tol.eig;
  const uorder::OrderCertificate cert = uorder::leq_u(a, b, t, tol);
  if (!cert.verdict) {
    emit(uorder::certificate_to_json(cert), std::nullopt);
    return kExitFails;
  }
  emit(uorder::matrix_to_json(cert.witness->mat()), std::nullopt);
  return kExitHolds;
}

int run_apply(const std::string& fn_path, const std::string& matrix_path,
              const uorder::Tolerances& tol) {
  const json fn_spec = read_json_file(fn_path);
  const auto a = read_positive(matrix_path, tol);
  uorder::HermitianMatrix result =
      fn_spec.is_object() && fn_spec.contains("kind")
          ? uorder::apply_om(uorder::om_from_json(fn_spec), a, tol)
          : uorder::apply_oc(uorder::oc_from_json(fn_spec), a, tol);
  emit(uorder::matrix_to_json(result.mat()), std::nullopt);
  return kExitHolds;
}

int run_spectral_family(const std::string& path, bool verbose,
                        const uorder::Tolerances& tol) {
  const auto a = read_hermitian(path, tol);
  emit(uorder::family_to_json(uorder::spectral_family(a, tol), verbose),
       std::nullopt);
  return kExitHolds;
}

json generated_to_json(const uorder::Generated& g) {
  using namespace uorder;
  return std::visit(
      [](const auto& value) -> json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, HermitianPair>)
          return json{{"A", matrix_to_json(value.a.mat())},
                      {"B", matrix_to_json(value.b.mat())}};
        else if constexpr (std::is_same_v<T, PositivePair>)
          return json{{"A", matrix_to_json(value.a.mat())},
                      {"B", matrix_to_json(value.b.mat())}};
        else if constexpr (std::is_same_v<T, Matrix>)
          return matrix_to_json(value);
        else
          return matrix_to_json(value.mat());
      },
      g);
}

int run_gen(const uorder::GeneratorSpec& spec,
            const std::optional<std::string>& out_path) {
  emit(generated_to_json(uorder::generate(spec)), out_path);
  return kExitHolds;
}

int run_suite(const std::string& theorem, uorder::TrialConfig cfg,
              const std::optional<std::string>& out_path) {
  std::vector<uorder::SuiteReport> reports;
  if (theorem == "all") {
    reports = uorder::run_all(cfg);
  } else {
    reports.push_back(uorder::run_theorem(theorem, cfg));
  }

  json report_array = json::array();
  bool all_clean = true;
  for (const uorder::SuiteReport& r : reports) {
    report_array.push_back(uorder::suite_report_to_json(r));
    all_clean = all_clean && r.failures.empty();
  }
  const json out{{"config",
                  json{{"theorem", theorem},
                       {"dim", cfg.dim},
                       {"trials", cfg.trials},
                       {"seed", cfg.seed},
                       {"n_max", cfg.n_max},
                       {"jobs", cfg.jobs}}},
                 {"reports", std::move(report_array)}};
  emit(out, out_path);
  if (out_path) {
    for (const uorder::SuiteReport& r : reports)
      std::cout << r.status() << " " << r.theorem << " trials=" << r.trials
                << " premise=" << r.premise_hits << " gray=" << r.gray
                << " failures=" << r.failures.size() << "\n";
  }
  return all_clean ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for the unitary-orbit order on Hermitian matrices"};
  app.require_subcommand(1);

  CheckArgs check_args;
  bool verbose = false;

  // check {loewner|lequ|olson|family} A.json B.json
  CLI::App* check = app.add_subcommand("check", "decide an order relation");
  check->require_subcommand(1);
  const auto add_pair = [&](CLI::App* sub, bool with_nmax) {
    sub->add_option("A", check_args.path_a, "left matrix file")->required();
    sub->add_option("B", check_args.path_b, "right matrix file")->required();
    sub->add_option("--tol", check_args.tol_override,
                    "relative tolerance override");
    if (with_nmax)
      sub->add_option("--n-max", check_args.n_max, "power truncation");
  };
  CLI::App* c_loewner = check->add_subcommand("loewner", "A <= B (PSD difference)");
  add_pair(c_loewner, false);
  CLI::App* c_lequ = check->add_subcommand("lequ", "A <=_u B with certificate");
  add_pair(c_lequ, false);
  CLI::App* c_olson = check->add_subcommand(
      "olson", "power order vs spectral-family order cross-check");
  add_pair(c_olson, true);
  CLI::App* c_family = check->add_subcommand(
      "family", "spectral-family order at every threshold");
  add_pair(c_family, false);

  CLI::App* witness_cmd =
      app.add_subcommand("witness", "emit the canonical order witness");
  add_pair(witness_cmd, false);

  std::string fn_path, matrix_path;
  CLI::App* apply_cmd =
      app.add_subcommand("apply", "apply a spectral transform to a matrix");
  apply_cmd->add_option("FN", fn_path, "transform spec file (monotone or convex form)")
      ->required();
  apply_cmd->add_option("A", matrix_path, "matrix file")->required();

  std::string family_path;
  CLI::App* family_cmd =
      app.add_subcommand("spectral-family", "thresholds and cumulative ranks");
  family_cmd->add_option("A", family_path, "matrix file")->required();
  family_cmd->add_flag("--verbose", verbose, "include projection matrices");

  uorder::GeneratorSpec gen_spec;
  std::string gen_kind = "hermitian";
  std::optional<std::string> gen_out;
  std::uint64_t gen_seed = 0;
  CLI::App* gen_cmd = app.add_subcommand("gen", "seeded structured generators");
  gen_cmd->add_option("--kind", gen_kind,
                      "hermitian|positive|unitary_haar|unitary_finite_order|"
                      "projection|dominance_pair|commuting_pair|truncated_shift");
  gen_cmd->add_option("--dim", gen_spec.dim, "dimension")->required();
  gen_cmd->add_option("--seed", gen_seed, "generator seed");
  gen_cmd->add_option("--n0", gen_spec.n0, "unitary order for unitary_finite_order");
  gen_cmd->add_option("--rank", gen_spec.rank, "rank for projection");
  gen_cmd->add_option("--weights", gen_spec.weights,
                      "subdiagonal weights for truncated_shift")
      ->delimiter(',');
  gen_cmd->add_option("--out", gen_out, "write to file instead of stdout");

  std::string suite_theorem = "all";
  uorder::TrialConfig suite_cfg;
  std::optional<std::string> suite_out;
  CLI::App* suite_cmd =
      app.add_subcommand("suite", "run the seeded verification suite");
  suite_cmd->add_option("--theorem", suite_theorem,
                        "theorem id or \"all\" (kosaki uv6 uv5 uv3 u11 pp ss uv1 uv2)");
  suite_cmd->add_option("--dim", suite_cfg.dim, "max dimension (trials sample 2..dim)");
  suite_cmd->add_option("--trials", suite_cfg.trials, "trials per theorem");
  suite_cmd->add_option("--seed", suite_cfg.seed, "base seed");
  suite_cmd->add_option("--n-max", suite_cfg.n_max, "power truncation");
  suite_cmd->add_option("--jobs", suite_cfg.jobs, "trial-level parallelism");
  suite_cmd->add_option("--out", suite_out, "report file");

  CLI11_PARSE(app, argc, argv);

  try {
    const uorder::Tolerances tol = base_tolerances();
    if (c_loewner->parsed()) return run_check_loewner(check_args, tol);
    if (c_lequ->parsed()) return run_check_lequ(check_args, tol);
    if (c_olson->parsed()) return run_check_olson(check_args, tol);
    if (c_family->parsed()) return run_check_family(check_args, tol);
    if (witness_cmd->parsed()) return run_witness(check_args, tol);
    if (apply_cmd->parsed()) return run_apply(fn_path, matrix_path, tol);
    if (family_cmd->parsed())
      return run_spectral_family(family_path, verbose, tol);
    if (gen_cmd->parsed()) {
      gen_spec.kind = uorder::GeneratorSpec::kind_from_string(gen_kind);
      gen_spec.seed = gen_seed;
      return run_gen(gen_spec, gen_out);
    }
    if (suite_cmd->parsed()) {
      suite_cfg.tol = tol;
      return run_suite(suite_theorem, suite_cfg, suite_out);
    }
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kExitError;
  }
  return kExitError;
}
