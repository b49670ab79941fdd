#include "solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "arith.hpp"
#include "linsolve.hpp"

namespace m24 {

namespace {

long sturm_bound(long level) { return gamma0_index(level) / 6; }

// q-expansions (to prec) of Pi_FE(2, N, c) applied to each basis vector.
std::vector<std::vector<Rat>> projected_basis_expansions(long N, const CuspData& cusp,
                                                         long prec) {
  long dim = dim_mk(2, N);
  std::vector<std::vector<Rat>> cols;
  for (long i = 0; i < dim; ++i) {
    ModFormVec e = zero_form(2, N);
    e.coords[i] = 1;
    QSeries f = expand(pi_fe(e, cusp), prec);
    std::vector<Rat> col(prec);
    for (long j = 0; j < prec; ++j) col[j] = f.coeff_int(j);
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

Ansatz build_ansatz(const std::string& label, const SolveOptions& opts) {
  if (opts.pole_order != 0)
    throw std::invalid_argument("pole order o > 0 is not implemented");
  const auto& row = class_row(label);
  Ansatz a;
  a.label = label;
  a.target_level = opts.target_level.value_or(row.ansatz_level);
  a.max_base_level = opts.max_base_level.value_or(row.level);
  a.comparison_level = row.level;
  a.prec = sturm_bound(a.comparison_level) + 9;

  // Blocks (N, n) over fully supported base levels with nN | N', laid out in
  // (n, N) order.
  std::vector<std::pair<long, long>> keys;  // (n, N)
  for (long N : dataset().full_levels) {
    if (N > a.max_base_level || a.target_level % N) continue;
    if (a.comparison_level % N)
      throw std::invalid_argument("block level " + std::to_string(N) +
                                  " does not divide the comparison level");
    for (long n : divisors(a.target_level / N)) keys.emplace_back(n, N);
  }
  std::sort(keys.begin(), keys.end());
  long offset = 0;
  for (auto [n, N] : keys) {
    AnsatzBlock b;
    b.N = N;
    b.n = n;
    b.offset = offset;
    b.width = 1 + dim_mk(2, N);
    offset += b.width;
    a.blocks.push_back(b);
  }
  a.nvars = offset;

  std::vector<long> layers = divisors(row.order);
  for (const auto& b : a.blocks)
    for (const auto& cusp : cusp_set(b.N)) layers.push_back(b.n * cusp.nc);
  std::sort(layers.begin(), layers.end());
  layers.erase(std::unique(layers.begin(), layers.end()), layers.end());
  a.layers = layers;
  return a;
}

LinearSystem build_system(const Ansatz& ansatz) {
  const auto& row = class_row(ansatz.label);
  LinearSystem sys;
  long prec = ansatz.prec;
  for (long d : ansatz.layers) {
    // One weight-0 equation and prec weight-2 coefficient equations.
    std::vector<Rat> m0_row(ansatz.nvars, Rat(0));
    std::vector<std::vector<Rat>> m2_rows(prec, std::vector<Rat>(ansatz.nvars, Rat(0)));
    for (const auto& b : ansatz.blocks) {
      for (const auto& cusp : cusp_set(b.N)) {
        if (b.n * cusp.nc != d) continue;
        Rat scale = rat(cusp.width, cusp.nc);
        m0_row[b.offset] += scale;
        auto cols = projected_basis_expansions(b.N, cusp, prec);
        for (long i = 0; i + 1 < b.width; ++i)
          for (long j = 0; j < prec; ++j)
            m2_rows[j][b.offset + 1 + i] += scale * cols[i][j];
      }
    }
    Rat m0_rhs(0);
    std::vector<Rat> m2_rhs(prec, Rat(0));
    if (row.order % d == 0) {
      auto [m0, m2] = moebius_component(ansatz.label, d);
      m0_rhs = m0;
      QSeries f = expand(m2, prec);
      for (long j = 0; j < prec; ++j) m2_rhs[j] = f.coeff_int(j);
    }
    sys.a.push_back(std::move(m0_row));
    sys.b.push_back(m0_rhs);
    for (long j = 0; j < prec; ++j) {
      sys.a.push_back(std::move(m2_rows[j]));
      sys.b.push_back(m2_rhs[j]);
    }
  }
  return sys;
}

namespace {

bool system_consistent(const LinearSystem& sys, const std::vector<long>& zeroed_vars) {
  std::vector<std::vector<Rat>> aug = sys.a;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(sys.b[i]);
  size_t nvars = sys.a.empty() ? 0 : sys.a[0].size();
  for (long v : zeroed_vars) {
    std::vector<Rat> unit(nvars + 1, Rat(0));
    unit[v] = 1;
    aug.push_back(std::move(unit));
  }
  return rref_augmented(std::move(aug)).consistent;
}

Solution assemble_solution(const Ansatz& ansatz, const std::vector<Rat>& x) {
  const auto& row = class_row(ansatz.label);
  Solution sol;
  sol.label = ansatz.label;
  sol.target_level = ansatz.target_level;
  for (const auto& b : ansatz.blocks) {
    bool nonzero = false;
    for (long i = 0; i < b.width; ++i) nonzero = nonzero || x[b.offset + i] != 0;
    if (!nonzero) continue;
    SolutionRow r;
    r.N = b.N;
    r.n = b.n;
    r.phi.level = b.N;
    r.phi.tc0 = x[b.offset];
    r.phi.tc2 = zero_form(2, b.N);
    for (long i = 0; i + 1 < b.width; ++i) r.phi.tc2.coords[i] = x[b.offset + 1 + i];
    sol.rows.push_back(std::move(r));
  }

  sol.exponents = {Rat(0), Rat(0), Rat(0)};
  sol.weight = 0;
  std::vector<BorcherdsSpec> specs;
  for (const auto& r : sol.rows) {
    BorcherdsSpec spec{r.N, r.n, r.phi};
    auto e = borcherds_exponents(spec);
    for (int i = 0; i < 3; ++i) sol.exponents[i] += e[i];
    sol.weight += borcherds_weight(r.N, r.phi);
    specs.push_back(std::move(spec));
  }
  // The ansatz equations force the exponent identity; a violation would mean
  // inconsistent class data.
  for (int i = 0; i < 3; ++i)
    if (sol.exponents[i] != 1)
      throw std::logic_error("solution violates the exponent identity");
  sol.p = minimal_power(specs);
  if (row.kg && sol.weight != *row.kg)
    throw std::logic_error("solution weight disagrees with the expected weight");
  return sol;
}

}  // namespace

std::optional<Solution> solve_class(const std::string& label, const SolveOptions& opts) {
  Ansatz ansatz = build_ansatz(label, opts);
  LinearSystem sys = build_system(ansatz);

  std::vector<long> zeroed;
  if (!system_consistent(sys, zeroed)) return std::nullopt;

  if (opts.minimize) {
    // Greedy block elimination, largest nN first; within a tie the larger
    // rescaling n goes first, so factorizations prefer unrescaled products
    // when both exist (the level-4 class admits a two-row representation
    // through B_1[phi, 2] that the tabulated one avoids).
    std::vector<const AnsatzBlock*> order;
    for (const auto& b : ansatz.blocks) order.push_back(&b);
    std::sort(order.begin(), order.end(), [](const AnsatzBlock* l, const AnsatzBlock* r) {
      if (l->n * l->N != r->n * r->N) return l->n * l->N > r->n * r->N;
      if (l->n != r->n) return l->n > r->n;
      return l->N > r->N;
    });
    for (const AnsatzBlock* b : order) {
      std::vector<long> candidate = zeroed;
      for (long i = 0; i < b->width; ++i) candidate.push_back(b->offset + i);
      if (system_consistent(sys, candidate)) zeroed = std::move(candidate);
    }
  }

  std::vector<std::vector<Rat>> a = sys.a;
  std::vector<Rat> b = sys.b;
  size_t nvars = ansatz.nvars;
  for (long v : zeroed) {
    std::vector<Rat> unit(nvars, Rat(0));
    unit[v] = 1;
    a.push_back(std::move(unit));
    b.push_back(Rat(0));
  }
  auto x = solve_particular(a, b);
  if (!x) return std::nullopt;
  return assemble_solution(ansatz, *x);
}

Solution fixture_solution(const std::string& label) {
  const auto& row = class_row(label);
  auto it = dataset().solutions.find(label);
  if (it == dataset().solutions.end())
    throw std::invalid_argument("no tabulated factorization for " + label);
  Solution sol;
  sol.label = label;
  sol.target_level = row.ansatz_level;
  sol.exponents = {Rat(0), Rat(0), Rat(0)};
  sol.weight = 0;
  std::vector<BorcherdsSpec> specs;
  for (const auto& fr : it->second) {
    SolutionRow r;
    r.N = fr.N;
    r.n = fr.n;
    r.phi.level = fr.N;
    r.phi.tc0 = fr.tc0;
    r.phi.tc2 = ModFormVec{2, fr.N, fr.tc2};
    if (static_cast<long>(fr.tc2.size()) != dim_mk(2, fr.N))
      throw std::logic_error("fixture row has wrong coordinate length");
    BorcherdsSpec spec{r.N, r.n, r.phi};
    auto e = borcherds_exponents(spec);
    for (int i = 0; i < 3; ++i) sol.exponents[i] += e[i];
    sol.weight += borcherds_weight(r.N, r.phi);
    specs.push_back(spec);
    sol.rows.push_back(std::move(r));
  }
  sol.p = minimal_power(specs);
  return sol;
}

VerifyReport verify_solution(const std::string& label, const Solution& sol) {
  const auto& row = class_row(label);
  VerifyReport report;
  Rat p(sol.p);

  // (a) p E(Phi_g) = sum_i E(B_{N_i}[p phi_i, n_i]), per divisor layer.
  long level = row.level;
  EVector lhs = phi_g(label).evec;
  for (auto& [d, entry] : lhs.entries) {
    entry.first *= p;
    entry.second = p * entry.second;
  }
  EVector rhs;
  rhs.comparison_level = level;
  for (const auto& r : sol.rows) {
    if (level % r.N) {
      report.fail("row level " + std::to_string(r.N) +
                  " does not divide the comparison level");
      return report;
    }
    BorcherdsSpec scaled{r.N, r.n, p * r.phi};
    rhs = rhs + borcherds_evector(scaled).embedded(level);
  }
  std::vector<long> all_layers;
  for (const auto& [d, e] : lhs.entries) all_layers.push_back(d);
  for (const auto& [d, e] : rhs.entries) all_layers.push_back(d);
  std::sort(all_layers.begin(), all_layers.end());
  all_layers.erase(std::unique(all_layers.begin(), all_layers.end()), all_layers.end());
  for (long d : all_layers) {
    auto lit = lhs.entries.find(d);
    auto rit = rhs.entries.find(d);
    Rat lm0 = lit == lhs.entries.end() ? Rat(0) : lit->second.first;
    Rat rm0 = rit == rhs.entries.end() ? Rat(0) : rit->second.first;
    ModFormVec lm2 = lit == lhs.entries.end() ? zero_form(2, level) : lit->second.second;
    ModFormVec rm2 = rit == rhs.entries.end() ? zero_form(2, level) : rit->second.second;
    if (lm0 == rm0 && lm2 == rm2) {
      report.pass("E-vector layer d = " + std::to_string(d));
    } else {
      report.fail("E-vector mismatch at d = " + std::to_string(d) + ": (" +
                  rat_to_string(lm0) + ", ...) vs (" + rat_to_string(rm0) + ", ...)");
    }
  }

  // (b) Exponent sums equal (p, p, p).
  std::array<Rat, 3> esum = {Rat(0), Rat(0), Rat(0)};
  for (const auto& r : sol.rows) {
    auto e = borcherds_exponents({r.N, r.n, p * r.phi});
    for (int i = 0; i < 3; ++i) esum[i] += e[i];
  }
  const char* names[3] = {"e_q1", "e_zeta", "e_q2"};
  for (int i = 0; i < 3; ++i) {
    if (esum[i] == p)
      report.pass(std::string(names[i]) + " sum = p");
    else
      report.fail(std::string(names[i]) + " sum is " + rat_to_string(esum[i]) +
                  ", expected " + rat_to_string(p));
  }

  // (c) Level divisibility n_i N_i | N'.
  for (const auto& r : sol.rows) {
    if (sol.target_level % (r.n * r.N) == 0)
      report.pass("level divisibility for block (" + std::to_string(r.N) + ", " +
                  std::to_string(r.n) + ")");
    else
      report.fail("block (" + std::to_string(r.N) + ", " + std::to_string(r.n) +
                  ") violates n N | " + std::to_string(sol.target_level));
  }

  // (d) Integrality hypothesis at Delta <= 0 for every scaled row and cusp.
  for (const auto& r : sol.rows) {
    JacobiForm01 scaled = p * r.phi;
    for (const auto& cusp : cusp_set(r.N)) {
      auto table = cusp_disc_table(scaled, cusp, 0);
      Rat scale = rat(cusp.width, cusp.nc);
      for (long d : {-1L, 0L}) {
        Rat v = scale * disc_lookup(table, d);
        if (is_integer(v))
          report.pass("integrality at (" + std::to_string(r.N) + ", " +
                      std::to_string(r.n) + "), cusp " + cusp.label() +
                      ", Delta = " + std::to_string(d));
        else
          report.fail("non-integral exponent " + rat_to_string(v) + " at (" +
                      std::to_string(r.N) + ", " + std::to_string(r.n) + "), cusp " +
                      cusp.label() + ", Delta = " + std::to_string(d));
      }
    }
  }

  // (e) Total weight p k_g.
  Rat weight(0);
  for (const auto& r : sol.rows) weight += borcherds_weight(r.N, r.phi);
  if (row.kg && weight == *row.kg)
    report.pass("total weight p k_g = " + rat_to_string(p * weight));
  else if (row.kg)
    report.fail("weight sum " + rat_to_string(weight) + " differs from k_g = " +
                rat_to_string(*row.kg));
  else
    report.pass("no expected weight on record");

  return report;
}

}  // namespace m24
