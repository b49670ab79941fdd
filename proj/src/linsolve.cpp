#include "linsolve.hpp"

#include <stdexcept>

namespace m24 {

RrefResult rref_augmented(std::vector<std::vector<Rat>> rows) {
  RrefResult res;
  if (rows.empty()) {
    res.mat = std::move(rows);
    return res;
  }
  size_t ncols = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != ncols) throw std::invalid_argument("ragged matrix");
  size_t r = 0;
  for (size_t c = 0; c + 1 < ncols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    res.pivot_cols.push_back(static_cast<long>(c));
    ++r;
  }
  // Any remaining nonzero row must be 0 = nonzero in the RHS column.
  for (size_t i = r; i < rows.size(); ++i)
    if (rows[i][ncols - 1] != 0) res.consistent = false;
  rows.resize(r);
  res.mat = std::move(rows);
  return res;
}

std::optional<std::vector<Rat>> solve_particular(const std::vector<std::vector<Rat>>& a,
                                                 const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("system shape mismatch");
  if (a.empty()) return std::vector<Rat>();
  size_t nvars = a[0].size();
  std::vector<std::vector<Rat>> aug = a;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  RrefResult res = rref_augmented(std::move(aug));
  if (!res.consistent) return std::nullopt;
  std::vector<Rat> x(nvars, Rat(0));
  for (size_t i = 0; i < res.pivot_cols.size(); ++i)
    x[res.pivot_cols[i]] = res.mat[i].back();
  return x;
}

}  // namespace m24
