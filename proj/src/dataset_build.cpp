#include <stdexcept>

#include "arith.hpp"
#include "dataset.hpp"
#include "qseries.hpp"

namespace m24 {

namespace {

std::vector<Rat> dense_row(const QSeries& f, long qterms) {
  std::vector<Rat> row(qterms, Rat(0));
  for (long n = 0; n < qterms; ++n) row[n] = f.coeff_int(n);
  return row;
}

// Reduced row echelon form over Q; returns the nonzero rows.
std::vector<std::vector<Rat>> rref_rows(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return rows;
  size_t nrows = rows.size(), ncols = rows[0].size(), r = 0;
  for (size_t c = 0; c < ncols && r < nrows; ++c) {
    size_t piv = r;
    while (piv < nrows && rows[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(rows[r], rows[piv]);
    Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (size_t i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

void check_echelon_pivots(const std::vector<std::vector<Rat>>& rows, long N) {
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows.size(); ++j)
      if (rows[i][j] != Rat(i == j ? 1 : 0))
        throw std::logic_error("echelon basis of level " + std::to_string(N) +
                               " has pivots beyond the leading coefficients");
}

// t E_2(t tau) - E_2(tau); spans the weight-2 Eisenstein part as t runs over
// the divisors t > 1 of N.
QSeries eisenstein_diff(long t, long qterms) {
  QSeries e2 = eisenstein_e2(qterms);
  return Rat(t) * e2.dilated(t).truncated(Rat(qterms)) - e2;
}

// Theta series of the positive definite form a x^2 + b xy + c y^2.
QSeries theta_series(long a, long b, long c, long qterms) {
  QSeries f = QSeries::zero(1, Rat(qterms));
  long disc = 4 * a * c - b * b;
  if (disc <= 0) throw std::domain_error("form is not positive definite");
  long ybound = isqrt(4 * a * qterms / disc) + 1;
  for (long y = -ybound; y <= ybound; ++y) {
    long xbound = isqrt(qterms / a) + std::abs(b * y) / (2 * a) + 2;
    for (long x = -xbound; x <= xbound; ++x) {
      long v = a * x * x + b * x * y + c * y * y;
      if (v < qterms) f.set_coeff(Rat(v), f.coeff_int(v) + 1);
    }
  }
  return f;
}

std::vector<std::vector<Rat>> basis_for_level(long N, long qterms) {
  std::vector<QSeries> span;
  for (long t : divisors(N))
    if (t > 1) span.push_back(eisenstein_diff(t, qterms));

  if (N == 11) {
    // The cusp form eta(tau)^2 eta(11 tau)^2.
    QSeries e = euler_product(qterms);
    QSeries cusp = (e * e * (e.dilated(11).truncated(Rat(qterms))).pow(2)).shifted(1, 1);
    span.push_back(cusp.truncated(Rat(qterms)));
  }
  if (N == 23) {
    // Theta series of the two classes of binary quadratic forms of
    // discriminant -23; their pairwise products span weight 2 together with
    // the Eisenstein part.
    QSeries A = theta_series(1, 1, 6, qterms);
    QSeries B = theta_series(2, 1, 3, qterms);
    // Cross-check against an independent construction:
    // theta(1,1,6) - theta(2,1,3) = 2 eta(tau) eta(23 tau).
    QSeries e = euler_product(qterms);
    QSeries eta_prod = (e * e.dilated(23).truncated(Rat(qterms))).shifted(1, 1);
    if (!agree(A - B, Rat(2) * eta_prod.truncated(Rat(qterms))))
      throw std::logic_error("level-23 theta series fail the eta-product identity");
    span.push_back(A * A);
    span.push_back(A * B);
    span.push_back(B * B);
  }

  std::vector<std::vector<Rat>> rows;
  for (const auto& f : span) rows.push_back(dense_row(f.truncated(Rat(qterms)), qterms));
  rows = rref_rows(std::move(rows));
  check_echelon_pivots(rows, N);
  return rows;
}

std::vector<std::vector<Rat>> parse_matrix(const std::vector<std::vector<const char*>>& m) {
  std::vector<std::vector<Rat>> out;
  for (const auto& row : m) {
    std::vector<Rat> r;
    for (const char* s : row) r.push_back(rat_from_string(s));
    out.push_back(r);
  }
  return out;
}

std::vector<Rat> parse_rats(const std::vector<const char*>& v) {
  std::vector<Rat> out;
  for (const char* s : v) out.push_back(rat_from_string(s));
  return out;
}

}  // namespace

Dataset build_dataset(long qterms) {
  Dataset ds;
  ds.version = 1;
  ds.qterms = qterms;
  ds.levels = {1, 2, 3, 4, 5, 6, 7, 8, 11, 23};
  ds.full_levels = {1, 2, 3, 4, 5, 7, 8, 11, 23};

  for (long N : ds.levels) ds.bases_k2[N] = basis_for_level(N, qterms);

  const long expected_dim[] = {0, 1, 1, 2, 1, 3, 1, 3, 2, 3};
  for (size_t i = 0; i < ds.levels.size(); ++i)
    if (static_cast<long>(ds.bases_k2[ds.levels[i]].size()) != expected_dim[i])
      throw std::logic_error("unexpected dimension of M_2 at level " +
                             std::to_string(ds.levels[i]));

  ds.pi_fe_k2[2]["0/1"] = parse_matrix({{"-1/2"}});
  ds.pi_fe_k2[3]["0/1"] = parse_matrix({{"-1/3"}});
  ds.pi_fe_k2[4]["0/1"] = parse_matrix({{"-1/8", "-1/64"}, {"-3", "-3/8"}});
  ds.pi_fe_k2[4]["1/2"] = parse_matrix({{"-1/2", "1/16"}, {"12", "1/2"}});
  ds.pi_fe_k2[5]["0/1"] = parse_matrix({{"-1/5"}});
  ds.pi_fe_k2[7]["0/1"] = parse_matrix({{"-1/7"}});
  ds.pi_fe_k2[8]["0/1"] = parse_matrix({{"-1/32", "-1/64", "-1/256"},
                                        {"-3/4", "-3/8", "-3/32"},
                                        {"-3/4", "-3/8", "-3/32"}});
  ds.pi_fe_k2[8]["1/2"] = parse_matrix({{"-1/8", "1/16", "-1/64"},
                                        {"3", "1/2", "3/8"},
                                        {"-3", "3/2", "-3/8"}});
  ds.pi_fe_k2[8]["1/4"] = parse_matrix({{"-1/2", "0", "1/16"},
                                        {"0", "1", "0"},
                                        {"12", "0", "1/2"}});
  ds.pi_fe_k2[11]["0/1"] = parse_matrix({{"-1/11", "0"}, {"0", "-1/11"}});
  ds.pi_fe_k2[23]["0/1"] =
      parse_matrix({{"-1/23", "0", "0"}, {"0", "-1/23", "0"}, {"0", "0", "-1/23"}});

  ds.class_order = {"1A", "2A", "2B", "3A", "3B", "4A", "4B",
                    "4C", "5A", "7AB", "8A", "11A", "23AB", "6A"};

  auto add_class = [&](const std::string& label, long order, const char* chi,
                       long level, std::vector<const char*> tc2, long Ng,
                       const char* kg, long ansatz_level,
                       std::map<long, std::string> powers, bool probe = false) {
    Dataset::ClassRow row;
    row.label = label;
    row.order = order;
    row.chi = rat_from_string(chi);
    row.level = level;
    row.tc2 = parse_rats(tc2);
    row.Ng = Ng;
    if (kg) row.kg = rat_from_string(kg);
    row.ansatz_level = ansatz_level;
    row.probe = probe;
    row.powers = std::move(powers);
    ds.classes[label] = row;
  };

  add_class("1A", 1, "24", 1, {}, 1, "10", 1, {{1, "1A"}});
  add_class("2A", 2, "8", 2, {"4/3"}, 2, "6", 2, {{1, "2A"}, {2, "1A"}});
  add_class("2B", 2, "0", 4, {"2", "-16"}, 4, "4", 4, {{1, "2B"}, {2, "1A"}});
  add_class("3A", 3, "6", 3, {"3/2"}, 3, "4", 3, {{1, "3A"}, {3, "1A"}});
  add_class("3B", 3, "0", 3, {"2"}, 9, "2", 9, {{1, "3B"}, {3, "1A"}});
  add_class("4A", 4, "0", 8, {"2", "0", "-16"}, 8, "2", 8,
            {{1, "4A"}, {2, "2A"}, {4, "1A"}});
  add_class("4B", 4, "4", 4, {"5/3", "8"}, 4, "3", 4,
            {{1, "4B"}, {2, "2A"}, {4, "1A"}});
  add_class("4C", 4, "0", 4, {"2", "-8"}, 16, "1", 16,
            {{1, "4C"}, {2, "2B"}, {4, "1A"}});
  add_class("5A", 5, "4", 5, {"5/3"}, 5, "2", 5, {{1, "5A"}, {5, "1A"}});
  add_class("7AB", 7, "3", 7, {"7/4"}, 7, "1", 7, {{1, "7AB"}, {7, "1A"}});
  // The tabulated product factorization for 8A contains a block with
  // n*N = 16, so the default ansatz level is 16 rather than N_g = 8.
  add_class("8A", 8, "2", 8, {"11/6", "4", "12"}, 8, "1/2", 16,
            {{1, "8A"}, {2, "4A"}, {4, "2A"}, {8, "1A"}});
  add_class("11A", 11, "2", 11, {"11/6", "0"}, 11, "0", 11,
            {{1, "11A"}, {11, "1A"}});
  add_class("23AB", 23, "1", 23, {"23/12", "46/11", "-23/11"}, 23, "-1", 23,
            {{1, "23AB"}, {23, "1A"}});
  // Infeasibility probe data; the twisted genus of the composite class 6A in
  // echelon coordinates, -2L_2 - 2L_3 + 2L_6 in terms of the usual
  // eta-logarithm Eisenstein forms.
  add_class("6A", 6, "2", 6, {"11/6", "2", "14"}, 6, nullptr, 6,
            {{1, "6A"}, {2, "3A"}, {3, "2A"}, {6, "1A"}}, /*probe=*/true);

  // Every twisted genus has coefficient 2 at discriminant -1.
  for (const auto& [label, row] : ds.classes) {
    Rat constant = row.tc2.empty() ? Rat(0) : row.tc2[0];
    if (row.chi / 12 + constant != 2)
      throw std::logic_error("class " + label + " fails the D = -1 normalization");
  }

  auto add_solution = [&](const std::string& label,
                          std::vector<std::tuple<long, long, const char*,
                                                 std::vector<const char*>>> rows) {
    auto& dst = ds.solutions[label];
    for (auto& [N, n, tc0, tc2] : rows) {
      Dataset::SolutionRow r;
      r.N = N;
      r.n = n;
      r.tc0 = rat_from_string(tc0);
      r.tc2 = parse_rats(tc2);
      dst.push_back(r);
    }
  };

  add_solution("1A", {{1, 1, "24", {}}});
  add_solution("2A", {{2, 1, "8", {"4/3"}}});
  add_solution("2B", {{1, 1, "-12", {}}, {2, 1, "12", {"0"}}, {4, 1, "0", {"2", "-16"}}});
  add_solution("3A", {{3, 1, "6", {"3/2"}}});
  add_solution("3B", {{1, 1, "-8", {}}, {3, 1, "8", {"2"}}});
  add_solution("4A", {{1, 1, "-6", {}},
                      {2, 1, "2", {"-2/3"}},
                      {4, 1, "4", {"2/3", "16"}},
                      {8, 1, "0", {"2", "0", "-16"}}});
  add_solution("4B", {{4, 1, "4", {"5/3", "8"}}});
  add_solution("4C", {{1, 1, "-3", {}},
                      {2, 1, "-3", {"1/4"}},
                      {4, 1, "6", {"7/4", "-14"}},
                      {4, 2, "0", {"1", "-8"}}});
  add_solution("5A", {{5, 1, "4", {"5/3"}}});
  add_solution("7AB", {{7, 1, "3", {"7/4"}}});
  add_solution("8A", {{1, 1, "3/2", {}},
                      {2, 1, "-5/2", {"1/3"}},
                      {4, 1, "1", {"1/6", "-12"}},
                      {8, 1, "2", {"4/3", "8", "0"}},
                      {8, 2, "0", {"1", "0", "-8"}}});
  add_solution("11A", {{11, 1, "2", {"11/6", "0"}}});
  add_solution("23AB", {{23, 1, "1", {"23/12", "46/11", "-23/11"}}});

  return ds;
}

}  // namespace m24
