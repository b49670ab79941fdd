// Command-line front end: solves the product-factorization ansatz for the
// M24 classes, verifies the tabulated factorizations coefficient-by-
// coefficient, dumps the data tables, and runs the numerical checks.

#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "arith.hpp"
#include "expander.hpp"
#include "json.hpp"
#include "numverify.hpp"
#include "solver.hpp"

using Json = nlohmann::ordered_json;
using namespace m24;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitBadInput = 3;

Json solution_to_json(const Solution& sol) {
  Json j;
  j["class"] = sol.label;
  j["p"] = sol.p;
  j["weight"] = rat_to_string(sol.weight);
  Json rows = Json::array();
  for (const auto& r : sol.rows) {
    Json row;
    row["N"] = r.N;
    row["n"] = r.n;
    row["tc0"] = rat_to_string(r.phi.tc0);
    Json tc2 = Json::array();
    for (const auto& c : r.phi.tc2.coords) tc2.push_back(rat_to_string(c));
    row["tc2"] = tc2;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["exponents"] = {rat_to_string(sol.exponents[0]), rat_to_string(sol.exponents[1]),
                    rat_to_string(sol.exponents[2])};
  return j;
}

void print_solution_text(const Solution& sol) {
  std::printf("class %s: p = %ld, weight = %s, exponents = (%s, %s, %s)\n",
              sol.label.c_str(), sol.p, rat_to_string(sol.weight).c_str(),
              rat_to_string(sol.exponents[0]).c_str(),
              rat_to_string(sol.exponents[1]).c_str(),
              rat_to_string(sol.exponents[2]).c_str());
  for (const auto& r : sol.rows) {
    std::string tc2 = "[";
    for (size_t i = 0; i < r.phi.tc2.coords.size(); ++i) {
      if (i) tc2 += ", ";
      tc2 += rat_to_string(r.phi.tc2.coords[i]);
    }
    tc2 += "]";
    std::printf("  B_%ld[phi, %ld]: tc0 = %s, tc2 = %s\n", r.N, r.n,
                rat_to_string(r.phi.tc0).c_str(), tc2.c_str());
  }
}

int cmd_solve(const std::string& label, const SolveOptions& opts,
              const std::string& format) {
  auto sol = solve_class(label, opts);
  if (!sol) {
    if (format == "json") {
      Json j;
      j["class"] = label;
      j["status"] = "infeasible";
      std::printf("%s\n", j.dump(1).c_str());
    } else {
      std::printf("class %s: infeasible at pole order 0\n", label.c_str());
    }
    return kExitInfeasible;
  }
  if (format == "json")
    std::printf("%s\n", solution_to_json(*sol).dump(1).c_str());
  else
    print_solution_text(*sol);
  return kExitOk;
}

int cmd_verify(const std::string& label, long bound_a, long bound_b) {
  Solution sol = fixture_solution(label);
  VerifyReport report = verify_solution(label, sol);
  if (bound_a <= 0) bound_a = acceptance_bound(label);
  if (bound_b <= 0) bound_b = bound_a;

  std::printf("class %s: p = %ld, weight p k = %s, exponents = (%s, %s, %s)\n",
              label.c_str(), sol.p, rat_to_string(Rat(sol.p) * sol.weight).c_str(),
              rat_to_string(sol.exponents[0]).c_str(),
              rat_to_string(sol.exponents[1]).c_str(),
              rat_to_string(sol.exponents[2]).c_str());
  for (const auto& line : report.failures) std::printf("  FAIL %s\n", line.c_str());
  std::printf("  modularity criterion: %zu checks, %zu failures\n",
              report.checks.size() + report.failures.size(), report.failures.size());

  std::vector<BorcherdsSpec> specs;
  for (const auto& r : sol.rows) specs.push_back({r.N, r.n, r.phi});
  Int extra = window_denominator(specs, sol.p, 4 * bound_a * bound_b + 1);
  if (extra != 1)
    std::printf("  note: positive-window exponents carry denominator %s in the class data\n",
                extra.get_str().c_str());

  Q3Series lhs = expand_phi_power(label, sol.p, bound_a, bound_b);
  Q3Series rhs = expand_borcherds_side(sol.rows, sol.p, bound_a, bound_b);
  auto mismatch = compare(lhs, rhs);
  if (mismatch) {
    std::printf("  FAIL expansion mismatch at (n, r, m) = (%ld, %ld, %ld): %s vs %s\n",
                mismatch->n, mismatch->r, mismatch->m,
                rat_to_string(mismatch->lhs).c_str(),
                rat_to_string(mismatch->rhs).c_str());
  } else {
    std::printf("  expansions equal over the window (%ld, %ld)\n", bound_a, bound_b);
  }
  bool ok = report.ok && !mismatch;
  std::printf("%s %s\n", ok ? "PASS" : "FAIL", label.c_str());
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_tables(const std::string& which, const std::string& format) {
  Json j = Json::array();
  if (which == "Ng") {
    for (const auto& label : primepower_classes()) {
      auto sol = solve_class(label, {.minimize = true});
      if (!sol) return kExitVerifyFailed;
      Json row;
      row["class"] = label;
      row["Ng"] = class_row(label).Ng;
      row["kg"] = rat_to_string(sol->weight);
      row["p"] = sol->p;
      j.push_back(row);
    }
  } else if (which == "Zg") {
    for (const auto& label : primepower_classes()) {
      for (long d : divisors(class_row(label).order)) {
        auto [m0, m2] = moebius_component(label, d);
        Json row;
        row["class"] = label;
        row["d"] = d;
        row["m0"] = rat_to_string(m0);
        Json tc2 = Json::array();
        for (const auto& c : m2.coords) tc2.push_back(rat_to_string(c));
        row["tc2"] = tc2;
        row["level"] = m2.N;
        j.push_back(row);
      }
    }
  } else if (which == "cusps") {
    for (long N : dataset().full_levels) {
      for (const auto& c : cusp_set(N)) {
        Json row;
        row["N"] = N;
        row["cusp"] = c.label();
        row["width"] = c.width;
        row["Nc"] = c.nc;
        j.push_back(row);
      }
    }
  } else if (which == "projections") {
    for (const auto& [N, by_cusp] : dataset().pi_fe_k2) {
      for (const auto& [key, mat] : by_cusp) {
        Json row;
        row["N"] = N;
        row["cusp"] = key;
        Json m = Json::array();
        for (const auto& r : mat) {
          Json mr = Json::array();
          for (const auto& c : r) mr.push_back(rat_to_string(c));
          m.push_back(mr);
        }
        row["matrix"] = m;
        j.push_back(row);
      }
    }
  } else if (which == "solutions") {
    for (const auto& label : primepower_classes()) {
      auto sol = solve_class(label, {.minimize = true});
      if (!sol) return kExitVerifyFailed;
      j.push_back(solution_to_json(*sol));
    }
  } else {
    std::fprintf(stderr, "unknown table '%s'\n", which.c_str());
    return kExitBadInput;
  }

  if (format == "csv") {
    // flat comma-separated dump; nested arrays joined with spaces
    for (const auto& row : j) {
      std::string line;
      for (const auto& [key, value] : row.items()) {
        if (!line.empty()) line += ",";
        if (value.is_array()) {
          std::string joined;
          for (const auto& v : value) {
            if (!joined.empty()) joined += " ";
            joined += v.is_string() ? v.get<std::string>() : v.dump();
          }
          line += joined;
        } else if (value.is_string()) {
          line += value.get<std::string>();
        } else {
          line += value.dump();
        }
      }
      std::printf("%s\n", line.c_str());
    }
  } else {
    std::printf("%s\n", j.dump(1).c_str());
  }
  return kExitOk;
}

int cmd_numverify(double tol, long terms) {
  auto reports = numverify_all(terms, tol, 10 * tol);
  bool ok = true;
  for (const auto& r : reports) {
    std::printf("%-40s residual %.3e  tol %.1e  %s\n", r.what.c_str(), r.residual,
                r.tolerance, r.ok ? "ok" : "FAIL");
    ok = ok && r.ok;
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the M24 twisted product expansions as "
               "products of rescaled Borcherds products"};
  app.require_subcommand(1);

  std::string data_path;
  app.add_option("--data", data_path, "path to the data file (default: built-in)");

  std::string label, format = "text";
  long level = 0, max_base = 0;
  bool minimize = false;
  long pole_order = 0;
  auto* solve = app.add_subcommand("solve", "solve the linear ansatz for a class");
  solve->add_option("class", label)->required();
  solve->add_option("--level", level, "target level N' (default: tabulated)");
  solve->add_option("--max-base-level", max_base, "largest base level N");
  solve->add_option("--order", pole_order, "pole order o (only 0 is implemented)");
  solve->add_flag("--minimize", minimize, "zero as many blocks as possible");
  solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string vlabel;
  std::vector<long> bounds;
  auto* verify = app.add_subcommand("verify", "verify the tabulated factorization");
  verify->add_option("class", vlabel)->required();
  verify->add_option("--bounds", bounds, "expansion window A B")->expected(2);

  std::string which, tformat = "json";
  auto* tables = app.add_subcommand("tables", "dump a table from live computation");
  tables->add_option("table", which)->required();
  tables->add_option("--format", tformat)->check(CLI::IsMember({"json", "csv"}));

  double tol = 1e-8;
  long terms = 128;
  auto* numv = app.add_subcommand("numverify", "numerical data validation");
  numv->add_option("--tol", tol, "projection residual tolerance");
  numv->add_option("--terms", terms, "series truncation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (!data_path.empty()) set_dataset_path(data_path);
    if (solve->parsed()) {
      SolveOptions opts;
      if (level > 0) opts.target_level = level;
      if (max_base > 0) opts.max_base_level = max_base;
      opts.minimize = minimize;
      opts.pole_order = pole_order;
      return cmd_solve(label, opts, format);
    }
    if (verify->parsed())
      return cmd_verify(vlabel, bounds.size() == 2 ? bounds[0] : 0,
                        bounds.size() == 2 ? bounds[1] : 0);
    if (tables->parsed()) return cmd_tables(which, tformat);
    if (numv->parsed()) return cmd_numverify(tol, terms);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitVerifyFailed;
  }
  return kExitBadInput;
}
