#include "qzseries.hpp"

#include <stdexcept>

namespace m24 {

namespace {
long prec_to_key(const Rat& prec, long h) {
  Rat scaled = prec * h;
  if (!is_integer(scaled))
    throw std::invalid_argument("precision not representable on lattice");
  Int k = scaled.get_num();
  if (!k.fits_slong_p()) throw std::overflow_error("precision out of range");
  return k.get_si();
}
}  // namespace

QZSeries QZSeries::zero(long h, const Rat& prec_q) {
  if (h < 1) throw std::invalid_argument("lattice denominator must be >= 1");
  return QZSeries(h, prec_to_key(prec_q, h));
}

Rat QZSeries::coeff(const Rat& q_exp, long r) const {
  Rat scaled = q_exp * h_;
  if (!is_integer(scaled)) return Rat(0);
  Int k = scaled.get_num();
  if (!k.fits_slong_p() || k.get_si() >= prec_num_)
    throw std::out_of_range("coefficient requested beyond stored precision");
  auto row = rows_.find(k.get_si());
  if (row == rows_.end()) return Rat(0);
  auto it = row->second.find(r);
  return it == row->second.end() ? Rat(0) : it->second;
}

void QZSeries::add_term(long q_key, long r, const Rat& value) {
  if (q_key >= prec_num_ || value == 0) return;
  auto& row = rows_[q_key];
  auto [it, inserted] = row.try_emplace(r, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  }
  if (row.empty()) rows_.erase(q_key);
}

QZSeries QZSeries::operator-() const {
  QZSeries f(h_, prec_num_);
  for (const auto& [k, row] : rows_)
    for (const auto& [r, c] : row) f.rows_[k].emplace(r, -c);
  return f;
}

void QZSeries::align(const QZSeries& f, const QZSeries& g, QZSeries& fa, QZSeries& ga) {
  long h = lcm_long(f.h_, g.h_);
  fa = f.with_lattice(h);
  ga = g.with_lattice(h);
}

QZSeries QZSeries::with_lattice(long h) const {
  if (h % h_) throw std::invalid_argument("lattice refinement must be a multiple");
  long s = h / h_;
  if (s == 1) return *this;
  QZSeries f(h, prec_num_ * s);
  for (const auto& [k, row] : rows_) f.rows_.emplace(k * s, row);
  return f;
}

QZSeries QZSeries::truncated(const Rat& prec_q) const {
  long k = prec_to_key(prec_q, h_);
  QZSeries f(h_, std::min(k, prec_num_));
  for (const auto& [key, row] : rows_) {
    if (key >= f.prec_num_) break;
    f.rows_.emplace(key, row);
  }
  return f;
}

QZSeries QZSeries::integral_part_strict() const {
  QZSeries f(1, prec_num_ / h_);
  for (const auto& [key, row] : rows_) {
    if (key % h_)
      throw std::domain_error("series has terms at fractional q-exponents");
    f.rows_.emplace(key / h_, row);
  }
  return f;
}

QZSeries& QZSeries::operator+=(const QZSeries& g) {
  *this = *this + g;
  return *this;
}

QZSeries operator+(const QZSeries& f, const QZSeries& g) {
  QZSeries fa, ga;
  QZSeries::align(f, g, fa, ga);
  QZSeries r(fa.h_, std::min(fa.prec_num_, ga.prec_num_));
  for (const auto& [k, row] : fa.rows_) {
    if (k >= r.prec_num_) break;
    for (const auto& [z, c] : row) r.add_term(k, z, c);
  }
  for (const auto& [k, row] : ga.rows_) {
    if (k >= r.prec_num_) break;
    for (const auto& [z, c] : row) r.add_term(k, z, c);
  }
  return r;
}

QZSeries operator*(const QZSeries& f, const QZSeries& g) {
  QZSeries fa, ga;
  QZSeries::align(f, g, fa, ga);
  long vf = fa.rows_.empty() ? fa.prec_num_ : fa.rows_.begin()->first;
  long vg = ga.rows_.empty() ? ga.prec_num_ : ga.rows_.begin()->first;
  QZSeries r(fa.h_, std::min(fa.prec_num_ + vg, ga.prec_num_ + vf));
  for (const auto& [k1, row1] : fa.rows_) {
    for (const auto& [k2, row2] : ga.rows_) {
      if (k1 + k2 >= r.prec_num_) break;
      for (const auto& [r1, c1] : row1)
        for (const auto& [r2, c2] : row2) r.add_term(k1 + k2, r1 + r2, c1 * c2);
    }
  }
  return r;
}

QZSeries operator*(const Rat& a, const QZSeries& f) {
  QZSeries r = QZSeries::zero(f.lattice(), f.precision());
  if (a == 0) return r;
  for (const auto& [k, row] : f.rows())
    for (const auto& [z, c] : row) r.add_term(k, z, a * c);
  return r;
}

QZSeries QZSeries::times(const QSeries& u) const {
  long h = lcm_long(h_, u.lattice());
  QZSeries fa = with_lattice(h);
  QSeries ua = u.with_lattice(h);
  long vf = fa.rows_.empty() ? fa.prec_num_ : fa.rows_.begin()->first;
  long vu = ua.terms().empty() ? prec_to_key(ua.precision(), h) : ua.terms().begin()->first;
  long uprec = prec_to_key(ua.precision(), h);
  QZSeries r(h, std::min(fa.prec_num_ + vu, uprec + vf));
  for (const auto& [k1, row] : fa.rows_) {
    for (const auto& [k2, c2] : ua.terms()) {
      if (k1 + k2 >= r.prec_num_) break;
      for (const auto& [z, c1] : row) r.add_term(k1 + k2, z, c1 * c2);
    }
  }
  return r;
}

}  // namespace m24
