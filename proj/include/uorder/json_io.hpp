#pragma once

/*
 * JSON wire formats.
 *
 * Matrix: { "n": int, "re": [[...]], "im": [[...]] }, row-major; "im"
 * omitted when all entries are real. Doubles are serialized with full
 * round-trip precision, so parse(emit(M)) preserves values far below the
 * 1e-15 relative contract.
 */

#include <json.hpp>

#include <string>
#include <vector>

#include "matrix_core.hpp"
#include "order_relations.hpp"
#include "spectral_calculus.hpp"
#include "spectral_family.hpp"

namespace uorder {

using json = nlohmann::json;

inline json matrix_to_json(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  json re = json::array();
  json im = json::array();
  bool has_im = false;
  for (int i = 0; i < n; ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (int j = 0; j < static_cast<int>(m.cols()); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
      has_im = has_im || m(i, j).imag() != 0.0;
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  json out{{"n", n}, {"re", std::move(re)}};
  if (has_im) out["im"] = std::move(im);
  return out;
}

inline Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("re"))
    throw Error("matrix JSON must be an object with \"n\" and \"re\"");
  if (!j["n"].is_number_integer())
    throw Error("matrix JSON: \"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (n < 1) throw Error("matrix JSON: \"n\" must be >= 1");

  const auto read_grid = [n](const json& grid, const char* key) {
    if (!grid.is_array() || grid.size() != static_cast<std::size_t>(n))
      throw Error(std::string("matrix JSON: \"") + key + "\" must be " +
                  std::to_string(n) + " rows");
    std::vector<std::vector<double>> out;
    for (const auto& row : grid) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
        throw Error(std::string("matrix JSON: \"") + key +
                    "\" rows must have " + std::to_string(n) + " entries");
      std::vector<double> r;
      for (const auto& v : row) {
        if (!v.is_number())
          throw Error(std::string("matrix JSON: \"") + key +
                      "\" entries must be numbers");
        r.push_back(v.get<double>());
      }
      out.push_back(std::move(r));
    }
    return out;
  };

  const auto re = read_grid(j["re"], "re");
  Matrix m(n, n);
  if (j.contains("im")) {
    const auto im = read_grid(j["im"], "im");
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        m(i, k) = Complex(re[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                          im[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
  } else {
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        m(i, k) = Complex(re[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], 0.0);
  }
  return m;
}

inline json psd_report_to_json(const PsdReport& r) {
  return json{{"psd", r.psd},
              {"gray", r.gray},
              {"min_eig", r.min_eig},
              {"scale", r.scale},
              {"tol_abs", r.tol_abs}};
}

inline json certificate_to_json(const OrderCertificate& c) {
  json out{{"verdict", c.verdict}, {"residual_min_eig", c.residual_min_eig}};
  if (c.witness) out["witness"] = matrix_to_json(c.witness->mat());
  if (c.violation_index) out["violation_index"] = *c.violation_index;
  if (c.gray) out["gray"] = true;
  return out;
}

inline json om_to_json(const OMFunction& g) {
  if (g.is_power()) return json{{"kind", "power"}, {"alpha", g.power_exponent()}};
  if (g.is_log()) return json{{"kind", "log"}};
  throw Error("only power and log transforms have a JSON form");
}

inline OMFunction om_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw Error("monotone-transform JSON must be an object with \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "power") {
    if (!j.contains("alpha") || !j["alpha"].is_number())
      throw Error("power transform needs a numeric \"alpha\"");
    return OMFunction::power(j["alpha"].get<double>());
  }
  if (kind == "log") return OMFunction::log();
  throw Error("unknown transform kind: " + kind);
}

inline json oc_to_json(const OCFunction& f) {
  json atoms = json::array();
  for (const OCAtom& a : f.atoms()) atoms.push_back(json::array({a.lambda, a.weight}));
  return json{{"f0", f.f0()}, {"beta", f.beta()}, {"gamma", f.gamma()}, {"atoms", std::move(atoms)}};
}

inline OCFunction oc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("f0") || !j.contains("beta") ||
      !j.contains("gamma"))
    throw Error("convex-function JSON needs \"f0\", \"beta\", \"gamma\"");
  std::vector<OCAtom> atoms;
  if (j.contains("atoms")) {
    for (const auto& a : j["atoms"]) {
      if (!a.is_array() || a.size() != 2)
        throw Error("convex-function atoms must be [lambda, weight] pairs");
      atoms.push_back({a[0].get<double>(), a[1].get<double>()});
    }
  }
  return OCFunction(j["f0"].get<double>(), j["beta"].get<double>(),
                    j["gamma"].get<double>(), std::move(atoms));
}

inline json family_to_json(const SpectralFamily& f, bool verbose = false) {
  json out{{"thresholds", f.thresholds()}, {"ranks", f.ranks()}};
  if (verbose) {
    json projections = json::array();
    for (const HermitianMatrix& p : f.projections())
      projections.push_back(matrix_to_json(p.mat()));
    out["projections"] = std::move(projections);
  }
  return out;
}

inline json family_leq_report_to_json(const FamilyLeqReport& r) {
  json entries = json::array();
  for (const FamilyLeqEntry& e : r.entries)
    entries.push_back(json{{"lambda", e.lambda}, {"holds", e.holds}, {"residual", e.residual}});
  return json{{"holds", r.holds}, {"entries", std::move(entries)}};
}

inline json olson_report_to_json(const OlsonReport& r) {
  json out{{"power_order", r.power_order},
           {"family_order", r.family_order},
           {"cell", olson_cell_name(r.cell)}};
  if (r.first_failing_n) out["first_failing_n"] = *r.first_failing_n;
  return out;
}

}  // namespace uorder
