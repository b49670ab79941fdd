#pragma once

#include <map>

#include "qseries.hpp"
#include "rat.hpp"

namespace m24 {

// Truncated two-variable expansion sum c(n, r) q^{n/h} zeta^r.  For each
// q-level only finitely many r carry a nonzero coefficient.  The public
// Jacobi-form expansions live on the integer lattice h = 1; the theta
// quotients that build the index-1 generators use h = 8 internally.
class QZSeries {
 public:
  QZSeries() : h_(1), prec_num_(0) {}
  static QZSeries zero(long h, const Rat& prec_q);

  long lattice() const { return h_; }
  Rat precision() const { return rat(prec_num_, h_); }

  Rat coeff(const Rat& q_exp, long r) const;
  Rat coeff_int(long n, long r) const { return coeff(Rat(n), r); }
  void add_term(long q_key, long r, const Rat& value);

  QZSeries operator-() const;
  QZSeries& operator+=(const QZSeries& g);
  friend QZSeries operator+(const QZSeries& f, const QZSeries& g);
  friend QZSeries operator*(const QZSeries& f, const QZSeries& g);
  friend QZSeries operator*(const Rat& a, const QZSeries& f);

  // Multiply by a one-variable series in q.
  QZSeries times(const QSeries& u) const;

  QZSeries with_lattice(long h) const;
  QZSeries truncated(const Rat& prec_q) const;

  // Collapse to the integer lattice; throws if a term sits at a fractional
  // exponent.
  QZSeries integral_part_strict() const;

  bool is_zero() const { return rows_.empty(); }

  // q-key -> (r -> coefficient)
  const std::map<long, std::map<long, Rat>>& rows() const { return rows_; }

 private:
  QZSeries(long h, long prec_num) : h_(h), prec_num_(prec_num) {}
  static void align(const QZSeries& f, const QZSeries& g, QZSeries& fa, QZSeries& ga);

  long h_;
  long prec_num_;
  std::map<long, std::map<long, Rat>> rows_;
};

}  // namespace m24
