#include "shrinker/shrinker.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using shrinker::Verdict;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

shrinker::ParamMap parse_params(const std::vector<std::string>& raw) {
  shrinker::ParamMap out;
  for (const std::string& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("parameter must look like key=value, got '" +
                                  kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string val = kv.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != val.size())
      throw std::invalid_argument("bad numeric value in '" + kv + "'");
    out[key] = v;
  }
  return out;
}

json to_json(const shrinker::Estimate& e) {
  return json{{"value", e.value}, {"error", e.error}};
}

json to_json(const shrinker::InvariantReport& r) {
  json out;
  out["volume"] = to_json(r.volume);
  out["chi"] = to_json(r.chi);
  out["tau"] = to_json(r.tau);
  out["chi_int"] = r.chi_int;
  out["tau_int"] = r.tau_int;
  out["gb_defect"] = r.gb_defect;
  out["sig_defect"] = r.sig_defect;
  out["two_chi_plus_3abs_tau"] = to_json(r.two_chi_plus_3abs_tau);
  out["two_chi_minus_3abs_tau"] = to_json(r.two_chi_minus_3abs_tau);
  out["scalar_sq"] = to_json(r.scalar_sq);
  out["ricci_sq"] = to_json(r.ricci_sq);
  out["sigma2"] = to_json(r.sigma2);
  out["weyl_sq"] = to_json(r.weyl_sq);
  out["energy_identity_residual"] = to_json(r.energy_identity_residual);
  out["ht_excess_plus"] = to_json(r.ht_excess_plus);
  out["ht_excess_minus"] = to_json(r.ht_excess_minus);
  return out;
}

json to_json(const shrinker::BoundCheck& b) {
  return json{{"lhs", b.lhs},
              {"rhs", b.rhs},
              {"margin", b.margin},
              {"verdict", to_string(b.verdict)}};
}

json to_json(const shrinker::SufficientReport& r) {
  json out;
  out["scalar_positive"] = to_string(r.scalar_positive);
  out["min_scalar"] = r.min_scalar;
  out["scalar_surrogate"] = r.scalar_surrogate;
  out["energy"] = to_json(r.energy);
  out["f_min"] = r.f_min;
  out["f_max"] = r.f_max;
  out["oscillation"] = to_json(r.oscillation);
  out["positive_class"] = to_string(r.positive_class);
  out["sigma2"] = r.sigma2_value;
  out["ricci_checked"] = r.ricci_checked;
  out["min_ricci_eigenvalue"] = r.min_ricci_eigenvalue;
  out["ricci_positive"] = to_string(r.ricci_positive);
  out["chi_weyl_slack"] = r.chi_weyl_slack;
  out["oscillation_implies_energy"] = r.oscillation_implies_energy;
  out["ht_plus"] = r.ht_plus;
  out["ht_minus"] = r.ht_minus;
  out["ht_plus_verdict"] = to_string(r.ht_plus_verdict);
  out["ht_minus_verdict"] = to_string(r.ht_minus_verdict);
  out["invariants"] = to_json(r.invariants);
  return out;
}

json to_json(const shrinker::FourManifoldClass& c) {
  return json{{"label", c.label},
              {"chi", c.chi},
              {"tau", c.tau},
              {"b1", c.b1},
              {"spin", c.spin},
              {"simply_connected", c.simply_connected}};
}

json params_json(const shrinker::ParamMap& params) {
  json out = json::object();
  for (const auto& [k, v] : params)
    out[k] = v;
  return out;
}

void emit(const json& doc, bool compact) {
  if (compact)
    std::cout << doc.dump() << "\n";
  else
    std::cout << doc.dump(2) << "\n";
}

struct NumericFlags {
  int nodes = 24;
  double tol = 1e-6;
  bool compact_json = false;
};

void add_numeric_flags(CLI::App* cmd, NumericFlags& flags) {
  cmd->add_option("--nodes", flags.nodes,
                  "Gauss-Legendre nodes per axis (base pass)")
      ->check(CLI::Range(2, 128));
  cmd->add_option("--tol", flags.tol, "absolute tolerance for pass verdicts")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--json", flags.compact_json,
                "compact single-line JSON output");
}

int run(int argc, char** argv) {
  CLI::App app{"verification toolkit for 4-dimensional shrinking Ricci "
               "soliton geometry"};
  app.require_subcommand(1);

  // zoo list
  auto* zoo = app.add_subcommand("zoo", "catalog of built-in metrics");
  zoo->require_subcommand(1);
  auto* zoo_list = zoo->add_subcommand("list", "list catalog entries");
  bool zoo_compact = false;
  zoo_list->add_flag("--json", zoo_compact, "compact single-line JSON output");

  // invariants
  auto* inv = app.add_subcommand("invariants",
                                 "curvature integrals of a zoo metric");
  std::string inv_metric;
  std::vector<std::string> inv_params;
  NumericFlags inv_flags;
  inv->add_option("--metric", inv_metric, "zoo metric name")->required();
  inv->add_option("--param", inv_params, "metric parameter key=value");
  add_numeric_flags(inv, inv_flags);

  // soliton-check
  auto* sol = app.add_subcommand("soliton-check",
                                 "soliton equation and identity checks");
  std::string sol_metric;
  std::vector<std::string> sol_params;
  double sol_rho = 0.5;
  bool sol_rho_set = false;
  int sol_samples = 100;
  bool sol_full = false;
  NumericFlags sol_flags;
  sol->add_option("--metric", sol_metric, "zoo metric name")->required();
  sol->add_option("--param", sol_params, "metric parameter key=value");
  sol->add_option("--rho", sol_rho, "soliton constant (defaults to zoo data)")
      ->each([&sol_rho_set](const std::string&) { sol_rho_set = true; });
  sol->add_option("--samples", sol_samples, "number of sample points")
      ->check(CLI::Range(1, 1000000));
  sol->add_flag("--full", sol_full,
                "also compute the sufficient-condition report (compact "
                "normalized candidates)");
  add_numeric_flags(sol, sol_flags);

  // ht
  auto* ht = app.add_subcommand("ht", "2chi +- 3|tau| of a connected sum");
  std::string ht_sum;
  bool ht_compact = false;
  ht->add_option("--sum", ht_sum, "connected-sum expression")->required();
  ht->add_flag("--json", ht_compact, "compact single-line JSON output");

  // obstruct
  auto* obs = app.add_subcommand("obstruct",
                                 "obstruction rules for a structure type");
  std::string obs_sum, obs_structure;
  bool obs_compact = false;
  obs->add_option("--sum", obs_sum, "connected-sum expression")->required();
  obs->add_option("--structure", obs_structure,
                  "einstein | shrinking_soliton | kahler_shrinking_soliton | "
                  "symplectic_shrinking_soliton")
      ->required();
  obs->add_flag("--json", obs_compact, "compact single-line JSON output");

  // freedman
  auto* fre = app.add_subcommand("freedman",
                                 "homeomorphism test for two classes");
  std::string fre_a, fre_b;
  bool fre_compact = false;
  fre->add_option("--a", fre_a, "first connected-sum expression")->required();
  fre->add_option("--b", fre_b, "second connected-sum expression")->required();
  fre->add_flag("--json", fre_compact, "compact single-line JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help goes to stdout with exit 0
      return app.exit(e);
    }
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return kExitUsage;
  }

  if (zoo_list->parsed()) {
    json doc;
    doc["command"] = "zoo list";
    doc["entries"] = json::array();
    for (const shrinker::ZooEntry& e : shrinker::zoo_entries()) {
      json je;
      je["name"] = e.name;
      je["buildable"] = e.buildable;
      je["doc"] = e.doc;
      je["params"] = json::array();
      for (const shrinker::ZooParam& p : e.params)
        je["params"].push_back(
            json{{"key", p.key}, {"default", p.def}, {"doc", p.doc}});
      const shrinker::ZooReference ref = shrinker::zoo_reference(e.name);
      json jr;
      jr["chi"] = ref.chi;
      jr["tau"] = ref.tau;
      jr["b1"] = ref.b1;
      jr["spin"] = ref.spin;
      jr["simply_connected"] = ref.simply_connected;
      jr["einstein"] = ref.einstein;
      jr["kahler"] = ref.kahler;
      jr["compact"] = ref.compact;
      if (ref.volume)
        jr["volume"] = *ref.volume;
      else
        jr["volume"] = nullptr;
      if (!ref.note.empty())
        jr["note"] = ref.note;
      je["reference"] = jr;
      if (e.buildable) {
        const shrinker::ZooBuild b = shrinker::zoo_build(e.name);
        if (b.soliton)
          je["soliton"] = json{{"rho", b.soliton->rho}};
        else
          je["soliton"] = nullptr;
      } else {
        je["soliton"] = nullptr;
      }
      doc["entries"].push_back(je);
    }
    emit(doc, zoo_compact);
    return kExitPass;
  }

  if (inv->parsed()) {
    const shrinker::ParamMap params = parse_params(inv_params);
    const shrinker::ZooBuild build = shrinker::zoo_build(inv_metric, params);
    shrinker::QuadratureSpec spec;
    spec.nodes = inv_flags.nodes;
    spec.tolerance = inv_flags.tol;
    const shrinker::InvariantReport rep =
        shrinker::invariant_report(build.atlas, spec);
    const bool ok =
        rep.gb_defect <= std::max(10.0 * rep.chi.error, inv_flags.tol) &&
        rep.sig_defect <= std::max(10.0 * rep.tau.error, inv_flags.tol);
    json doc;
    doc["command"] = "invariants";
    doc["metric"] = inv_metric;
    doc["params"] = params_json(params);
    doc["nodes"] = spec.nodes;
    doc["tolerance"] = spec.tolerance;
    doc["report"] = to_json(rep);
    doc["near_integer_ok"] = ok;
    emit(doc, inv_flags.compact_json);
    return ok ? kExitPass : kExitFail;
  }

  if (sol->parsed()) {
    const shrinker::ParamMap params = parse_params(sol_params);
    shrinker::ZooBuild build = shrinker::zoo_build(sol_metric, params);
    shrinker::SolitonCandidate cand;
    cand.atlas = std::move(build.atlas);
    if (build.soliton) {
      cand.f = build.soliton->f;
      cand.rho = build.soliton->rho;
    } else {
      cand.f = shrinker::PotentialField::constant(0.0);
      cand.rho = sol_rho;
    }
    if (sol_rho_set)
      cand.rho = sol_rho;

    double residual_max = 0.0;
    const auto pts =
        shrinker::sample_points(cand.atlas, sol_samples, 0x5eed);
    for (const shrinker::AtlasPoint& p : pts)
      residual_max = std::max(residual_max, shrinker::residual(cand, p).norm);
    const shrinker::IdentityDeviations dev = shrinker::identity_suite(cand, pts);

    const double tol = sol_flags.tol;
    const bool pass = residual_max <= tol && dev.trace_max <= tol &&
                      dev.gradient_max <= tol && dev.conserved_spread <= tol;

    json doc;
    doc["command"] = "soliton-check";
    doc["metric"] = sol_metric;
    doc["params"] = params_json(params);
    doc["rho"] = cand.rho;
    doc["samples"] = sol_samples;
    doc["tolerance"] = tol;
    doc["residual_max"] = residual_max;
    doc["identities"] = json{{"trace_max", dev.trace_max},
                             {"gradient_max", dev.gradient_max},
                             {"conserved_spread", dev.conserved_spread}};
    if (sol_full) {
      shrinker::QuadratureSpec spec;
      spec.nodes = sol_flags.nodes;
      spec.tolerance = sol_flags.tol;
      doc["sufficient"] = to_json(shrinker::sufficient_report(cand, spec));
    } else {
      doc["sufficient"] = nullptr;
    }
    doc["pass"] = pass;
    emit(doc, sol_flags.compact_json);
    return pass ? kExitPass : kExitFail;
  }

  if (ht->parsed()) {
    const shrinker::FourManifoldClass c = shrinker::parse_sum(ht_sum);
    const shrinker::HtPredicate p = shrinker::ht_predicate(c);
    json doc;
    doc["command"] = "ht";
    doc["sum"] = ht_sum;
    doc["class"] = to_json(c);
    doc["plus"] = json{{"value", p.plus_value},
                       {"verdict", to_string(p.plus_verdict)}};
    doc["minus"] = json{{"value", p.minus_value},
                        {"verdict", to_string(p.minus_verdict)}};
    doc["satisfied"] = p.satisfied();
    emit(doc, ht_compact);
    return p.satisfied() ? kExitPass : kExitFail;
  }

  if (obs->parsed()) {
    const shrinker::FourManifoldClass c = shrinker::parse_sum(obs_sum);
    const shrinker::Structure st =
        shrinker::structure_from_string(obs_structure);
    const shrinker::ObstructionReport rep = shrinker::obstruction_report(c, st);
    json doc;
    doc["command"] = "obstruct";
    doc["sum"] = obs_sum;
    doc["structure"] = to_string(st);
    doc["class"] = to_json(c);
    doc["rules"] = json::array();
    for (const shrinker::RuleResult& r : rep.rules)
      doc["rules"].push_back(json{{"rule", r.rule},
                                  {"verdict", to_string(r.verdict)},
                                  {"citation", r.citation},
                                  {"detail", r.detail}});
    doc["obstructed"] = rep.obstructed;
    if (rep.classification)
      doc["classification"] = *rep.classification;
    else
      doc["classification"] = nullptr;
    emit(doc, obs_compact);
    return rep.obstructed ? kExitFail : kExitPass;
  }

  if (fre->parsed()) {
    const shrinker::FourManifoldClass a = shrinker::parse_sum(fre_a);
    const shrinker::FourManifoldClass b = shrinker::parse_sum(fre_b);
    const bool eq = shrinker::freedman_equivalent(a, b);
    json doc;
    doc["command"] = "freedman";
    doc["a"] = fre_a;
    doc["b"] = fre_b;
    doc["class_a"] = to_json(a);
    doc["class_b"] = to_json(b);
    doc["equivalent"] = eq;
    emit(doc, fre_compact);
    return eq ? kExitPass : kExitFail;
  }

  std::cerr << app.help() << std::flush;
  return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const shrinker::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
