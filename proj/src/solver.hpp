#pragma once

#include <optional>
#include <string>
#include <vector>

#include "borcherds.hpp"
#include "moonshine.hpp"

namespace m24 {

// The linear ansatz: one unknown block per pair (N, n) with N a fully
// supported level, N <= max_base_level, and nN | target_level; each block
// holds the coordinates of (tc0, tc2) of a candidate weak Jacobi form at
// level N.  Pole order is fixed to 0 (weak forms); requesting more is
// rejected as unimplemented.
struct AnsatzBlock {
  long N = 1, n = 1;
  long offset = 0;  // first variable index
  long width = 0;   // 1 + dim M_2(N)
};

struct Ansatz {
  std::string label;
  long target_level = 1;     // N'
  long max_base_level = 1;   // N_max
  long comparison_level = 1; // native level of tdT_g
  long prec = 0;             // q-coefficients compared per divisor
  std::vector<AnsatzBlock> blocks;
  std::vector<long> layers;  // all divisor layers d that carry an equation
  long nvars = 0;
};

struct LinearSystem {
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
};

struct SolutionRow {
  long N = 1, n = 1;
  JacobiForm01 phi;
};

struct Solution {
  std::string label;
  long target_level = 1;
  long p = 1;                     // minimal integral power
  Rat weight;                     // sum of the row weights, = k_g
  std::array<Rat, 3> exponents;   // row sums, = (1, 1, 1)
  std::vector<SolutionRow> rows;
};

struct SolveOptions {
  std::optional<long> target_level;    // default: ansatz level from the tables
  std::optional<long> max_base_level;  // default: native level of tdT_g
  bool minimize = false;
  long pole_order = 0;
};

Ansatz build_ansatz(const std::string& label, const SolveOptions& opts = {});
LinearSystem build_system(const Ansatz& ansatz);

// Exact solution of the ansatz, or nullopt when the system is infeasible.
// With minimize set, whole (N, n) blocks are zeroed greedily in order of
// decreasing nN while the system stays consistent, and the canonical
// reduced-echelon representative of what remains is returned.
std::optional<Solution> solve_class(const std::string& label,
                                    const SolveOptions& opts = {});

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> checks;    // one line per passed check
  std::vector<std::string> failures;  // offending divisor/cusp/coefficient

  void pass(std::string line) { checks.push_back(std::move(line)); }
  void fail(std::string line) {
    ok = false;
    failures.push_back(std::move(line));
  }
};

// The modularity-criterion checks for a claimed factorization of Phi_g^p:
// (a) p E(Phi_g) = sum of the rescaled-product E-vectors, per divisor;
// (b) exponent sums equal (p, p, p);
// (c) n_i N_i | target level;
// (d) integrality of p (h_c/N_c) c(phi_c; Delta) for Delta <= 0;
// (e) total weight p k_g.
VerifyReport verify_solution(const std::string& label, const Solution& sol);

// The known factorization table as Solution rows, used by the verify
// command and as the expected output of the minimizing solver.
Solution fixture_solution(const std::string& label);

}  // namespace m24
