// Batch front end: computes homology/invariant tables, the distinguished
// cyclic lift and its principal parts, flat coordinates and the genus-zero
// potential data for the level-n family, and runs the verification sweep.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 truncation overflow.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "angw/verification.hpp"

using nlohmann::json;
using namespace angw;

namespace {

struct RunConfig {
  int n = 2;
  int order = 4;
  int u_cap = -1;    // default: order + 2
  int bar_cap = -1;  // default: (n+1)(order + u_cap + 1) + n
  std::string format = "text";
  std::string command;

  void finalize() {
    if (u_cap < 0) u_cap = order + 2;
    if (bar_cap < 0) bar_cap = (n + 1) * (order + u_cap + 1) + n;
  }
};

std::string key2(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }
std::string key3(int i, int j, int k) { return key2(i, j) + "," + std::to_string(k); }

// Series as sorted (exponent tuple, scalar) pairs.
json series_json(const TSeries& s) {
  json out = json::array();
  for (const auto& [e, c] : s.terms()) out.push_back({json(e), c.to_string()});
  return out;
}

json chain_json(const UChain& c) {
  json out = json::array();
  for (const auto& [k, coef] : c.terms())
    out.push_back({word_string(k.word), k.upow, series_json(coef)});
  return out;
}

json invariants_report(const RunConfig& cfg) {
  json out;
  out["schema_version"] = 1;
  out["command"] = "invariants";
  out["n"] = cfg.n;
  HomologyReport hh = hochschild_homology(cfg.n, 3 * cfg.n + 2);
  out["hh"] = {{"dimension", hh.odd_dim},
               {"parity", "odd"},
               {"basis_standard", hh.basis_is_standard},
               {"even_stable_classes", hh.even_dim_stable}};
  AnFamily fiber(cfg.n, 1);
  json mukai = json::object();
  for (int i = 0; i < cfg.n; ++i)
    for (int j = i; j < cfg.n; ++j) {
      UChain a(cfg.n, 1, 2 * cfg.n), b(cfg.n, 1, 2 * cfg.n);
      a.add_term(Head::Eps, i, 0, TSeries::constant(cfg.n, 1, Scalar(1)));
      b.add_term(Head::Eps, j, 0, TSeries::constant(cfg.n, 1, Scalar(1)));
      Scalar v = mukai_pairing(a, b, fiber).constant_term();
      if (!v.is_zero()) mukai[key2(i, j)] = v.to_string();
    }
  out["mukai"] = mukai;
  json cop = json::object();
  for (int k = 0; k <= 2 * cfg.n; ++k) {
    json terms = json::array();
    for (const auto& [l, r] : coproduct(BarWord{Head::Eps, k}))
      terms.push_back({word_string(l), word_string(r)});
    cop[word_string(BarWord{Head::Eps, k})] = terms;
  }
  out["coproduct"] = cop;
  json i03 = json::object(), i11 = json::object();
  for (int i = 0; i < cfg.n; ++i)
    for (int j = i; j < cfg.n; ++j)
      for (int k = j; k < cfg.n; ++k) {
        Scalar v = inv_03(i, j, k, cfg.n);
        if (!v.is_zero()) i03[key3(i, j, k)] = v.to_string();
      }
  for (int k = 0; k < cfg.n; ++k)
    for (int l = 0; l <= 1; ++l) {
      Scalar v = inv_11(k, l, cfg.n);
      if (!v.is_zero()) i11["k=" + std::to_string(k) + ",l=" + std::to_string(l)] = v.to_string();
    }
  out["costello"] = {{"inv_03", i03}, {"inv_11", i11}};
  return out;
}

json primitive_form_report(const RunConfig& cfg) {
  SolverState st = solve_primitive_form(cfg.n, cfg.order, cfg.u_cap, cfg.bar_cap);
  json out;
  out["schema_version"] = 1;
  out["command"] = "primitive-form";
  out["n"] = cfg.n;
  out["order"] = cfg.order;
  out["homogeneity_r"] = st.r.to_string();
  out["zeta"] = chain_json(st.zeta);
  json jterms = json::object();
  for (const auto& [depth, coords] : st.J) {
    json row = json::object();
    for (int l = 0; l < cfg.n; ++l)
      if (!coords[l].is_zero()) row["s_" + std::to_string(l)] = series_json(coords[l]);
    jterms["-" + std::to_string(depth)] = row;
  }
  out["J"] = jterms;
  return out;
}

json potential_report(const RunConfig& cfg) {
  SolverState st = solve_primitive_form(cfg.n, cfg.order, cfg.u_cap, cfg.bar_cap);
  PotentialSeries pot = potential_derivatives(st);
  json out;
  out["schema_version"] = 1;
  out["command"] = "potential";
  out["n"] = cfg.n;
  out["order"] = cfg.order;
  json coords = json::object(), derivs = json::object();
  for (int k = 0; k < cfg.n; ++k) {
    coords["tau_" + std::to_string(k)] = series_json(pot.coords.at(k));
    derivs["dF/dtau_" + std::to_string(k)] = series_json(pot.derivs.at(k));
  }
  out["flat_coords"] = coords;
  out["potential_derivs"] = derivs;
  json two = json::object(), three = json::object();
  for (int i = 0; i < cfg.n; ++i)
    for (int j = i; j < cfg.n; ++j) {
      Scalar v = correlator(st, pot, {i, j});
      if (!v.is_zero()) two[key2(i, j)] = v.to_string();
    }
  for (int i = 0; i < cfg.n; ++i)
    for (int j = i; j < cfg.n; ++j)
      for (int k = j; k < cfg.n; ++k) {
        Scalar v = correlator(st, pot, {i, j, k});
        if (!v.is_zero()) three[key3(i, j, k)] = v.to_string();
      }
  json correlators;
  correlators["two_point"] = two;
  correlators["three_point"] = three;
  if (cfg.n >= 2)
    correlators["four_point_11nn"] =
        correlator(st, pot, {1, 1, cfg.n - 1, cfg.n - 1}).to_string();
  out["correlators"] = correlators;
  PrimitiveAxiomReport ax = check_primitive_axioms(st);
  CheckReport dim = check_dimension_axiom(st, pot);
  CheckReport wdvv = check_wdvv(st, pot);
  out["axioms"] = {{"P1", ax.p1 ? "pass" : "fail"}, {"P2", ax.p2 ? "pass" : "fail"},
                   {"P3", ax.p3 ? "pass" : "fail"}, {"P4", ax.p4 ? "pass" : "fail"},
                   {"WDVV", wdvv.pass ? "pass" : "fail"},
                   {"dimension", dim.pass ? "pass" : "fail"}};
  return out;
}

json verify_report(const RunConfig& cfg, bool& all_pass) {
  std::vector<VerifyItem> items = verify_config(cfg.n, cfg.order, cfg.u_cap, cfg.bar_cap);
  json out;
  out["schema_version"] = 1;
  out["command"] = "verify";
  out["n"] = cfg.n;
  out["order"] = cfg.order;
  json checks = json::array();
  all_pass = true;
  for (const auto& it : items) {
    checks.push_back({{"name", it.name}, {"status", it.pass ? "pass" : "fail"},
                      {"detail", it.detail}});
    all_pass = all_pass && it.pass;
  }
  out["checks"] = checks;
  out["all_pass"] = all_pass;
  return out;
}

void print_report(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // Text: a flat walk of the same data.
  std::cout << j["command"].get<std::string>() << " n=" << j["n"] << "\n";
  for (auto& [k, v] : j.items()) {
    if (k == "schema_version" || k == "command" || k == "n") continue;
    std::cout << "  " << k << ": " << v.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cyclic-homology invariants and genus-zero potentials of the A_n family"};
  app.require_subcommand(1);
  app.fallthrough();  // accept --n etc. after the subcommand as well
  RunConfig cfg;
  app.add_option("--n", cfg.n, "level of the family (>= 1)")->check(CLI::PositiveNumber);
  app.add_option("--order", cfg.order, "t-truncation order (default 4)")
      ->check(CLI::PositiveNumber);
  app.add_option("--u-cap", cfg.u_cap, "highest retained u-power (default order+2)");
  app.add_option("--bar-cap", cfg.bar_cap, "bar word length cap (default auto)");
  app.add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_subcommand("invariants", "homology, pairing and low-genus invariant tables");
  app.add_subcommand("primitive-form", "the distinguished cyclic lift and its principal parts");
  app.add_subcommand("potential", "flat coordinates, potential derivatives, correlators");
  app.add_subcommand("verify", "run every identity and acceptance check for this configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.finalize();

  try {
    if (cfg.command == "invariants") {
      print_report(invariants_report(cfg), cfg.format);
    } else if (cfg.command == "primitive-form") {
      print_report(primitive_form_report(cfg), cfg.format);
    } else if (cfg.command == "potential") {
      print_report(potential_report(cfg), cfg.format);
    } else if (cfg.command == "verify") {
      bool all_pass = false;
      print_report(verify_report(cfg, all_pass), cfg.format);
      if (!all_pass) return 1;
    }
  } catch (const TruncationError& e) {
    std::cerr << "truncation overflow: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
