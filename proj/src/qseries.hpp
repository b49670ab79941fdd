#pragma once

#include <map>
#include <vector>

#include "rat.hpp"

namespace m24 {

// Truncated q-expansion with exact rational coefficients and exponents in
// (1/h)Z.
//
// Terms are stored sparsely as exponent-numerator -> coefficient; the key k
// means the exponent k/h.  The precision P (also carried as a numerator over
// the same lattice) is a strict contract: every exponent < P has a
// determined coefficient (absent key = exact zero), and nothing is known
// from q^P on.  Every operation computes the tightest sound output
// precision; for products that is min(P1 + v2, P2 + v1) with v the valuation
// bound of the other factor.  Zero series use their precision as the
// valuation bound, since a term could hide just past the horizon.
class QSeries {
 public:
  // The default series is zero known to (empty) precision 0.
  QSeries() : h_(1), prec_num_(0) {}

  static QSeries zero(long h, const Rat& prec);
  static QSeries one(const Rat& prec);
  // coeff * q^{num/h}
  static QSeries monomial(const Rat& coeff, long num, long h, const Rat& prec);

  long lattice() const { return h_; }
  Rat precision() const { return rat(prec_num_, h_); }

  // Coefficient of q^e for e < precision; throws std::out_of_range beyond it.
  Rat coeff(const Rat& e) const;
  Rat coeff_int(long n) const { return coeff(Rat(n)); }
  void set_coeff(const Rat& e, const Rat& value);

  bool is_zero() const { return coeff_.empty(); }
  // Smallest stored exponent, or the precision when no term is stored.
  Rat valuation_bound() const;

  QSeries truncated(const Rat& prec) const;
  // Refine the exponent lattice to h (current lattice must divide h).
  QSeries with_lattice(long h) const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& g);
  friend QSeries operator+(const QSeries& f, const QSeries& g);
  friend QSeries operator-(const QSeries& f, const QSeries& g);
  friend QSeries operator*(const QSeries& f, const QSeries& g);
  friend QSeries operator*(const Rat& a, const QSeries& f);

  // Multiplication by q^{num/h}.
  QSeries shifted(long num, long h) const;
  // q -> q^t, i.e. tau -> t*tau.  Exponents and precision scale by t.
  QSeries dilated(long t) const;

  QSeries pow(long n) const;   // n >= 0, or n < 0 on a unit series
  QSeries inverse() const;     // requires nonzero constant term at exponent 0
  QSeries log() const;         // requires constant term exactly 1
  QSeries exp() const;         // requires valuation > 0

  // Exact equality of all coefficients below min(precision of both).
  friend bool agree(const QSeries& f, const QSeries& g);

  const std::map<long, Rat>& terms() const { return coeff_; }

 private:
  QSeries(long h, long prec_num) : h_(h), prec_num_(prec_num) {}
  // Common-lattice copies of f and g.
  static void align(const QSeries& f, const QSeries& g, QSeries& fa, QSeries& ga);
  void insert(long key, const Rat& value);
  long prec_key() const { return prec_num_; }

  long h_;
  long prec_num_;
  std::map<long, Rat> coeff_;
};

// 1 - 24 sum_{n>=1} sigma_1(n) q^n, truncated below q^prec.
QSeries eisenstein_e2(long prec);

// prod_{n>=1} (1 - q^n) on the integer lattice, by the pentagonal number
// series.
QSeries euler_product(long prec);

// q^{1/24} prod_{n>=1} (1 - q^n), on the lattice h = 24.
QSeries dedekind_eta(const Rat& prec);

}  // namespace m24
