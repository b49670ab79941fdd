#include "qseries.hpp"

#include <stdexcept>

#include "arith.hpp"

namespace m24 {

namespace {

// Largest key k with k/h < prec, plus one; i.e. number bound on stored keys.
// Returns the smallest integer key that is already out of range.
long prec_to_key(const Rat& prec, long h) {
  Rat scaled = prec * h;
  if (!is_integer(scaled))
    throw std::invalid_argument("precision not representable on lattice");
  Int k = scaled.get_num();
  if (!k.fits_slong_p()) throw std::overflow_error("precision out of range");
  return k.get_si();
}

}  // namespace

QSeries QSeries::zero(long h, const Rat& prec) {
  if (h < 1) throw std::invalid_argument("lattice denominator must be >= 1");
  return QSeries(h, prec_to_key(prec, h));
}

QSeries QSeries::one(const Rat& prec) {
  QSeries f = zero(1, prec);
  f.insert(0, Rat(1));
  return f;
}

QSeries QSeries::monomial(const Rat& coeff, long num, long h, const Rat& prec) {
  QSeries f = zero(h, prec);
  if (num < f.prec_num_) f.insert(num, coeff);
  return f;
}

void QSeries::insert(long key, const Rat& value) {
  if (key >= prec_num_) return;
  if (value == 0) {
    coeff_.erase(key);
    return;
  }
  coeff_[key] = value;
}

Rat QSeries::coeff(const Rat& e) const {
  Rat scaled = e * h_;
  if (!is_integer(scaled)) return Rat(0);  // off-lattice exponents are exact zeros
  Int k = scaled.get_num();
  if (!k.fits_slong_p() || k.get_si() >= prec_num_)
    throw std::out_of_range("coefficient requested beyond stored precision");
  auto it = coeff_.find(k.get_si());
  return it == coeff_.end() ? Rat(0) : it->second;
}

void QSeries::set_coeff(const Rat& e, const Rat& value) {
  Rat scaled = e * h_;
  if (!is_integer(scaled))
    throw std::invalid_argument("exponent not on the lattice");
  Int k = scaled.get_num();
  if (!k.fits_slong_p() || k.get_si() >= prec_num_)
    throw std::out_of_range("exponent beyond stored precision");
  insert(k.get_si(), value);
}

Rat QSeries::valuation_bound() const {
  if (coeff_.empty()) return precision();
  return rat(coeff_.begin()->first, h_);
}

QSeries QSeries::truncated(const Rat& prec) const {
  long k = prec_to_key(prec, h_);
  QSeries f(h_, std::min(k, prec_num_));
  for (const auto& [key, c] : coeff_) {
    if (key >= f.prec_num_) break;
    f.coeff_.emplace(key, c);
  }
  return f;
}

QSeries QSeries::with_lattice(long h) const {
  if (h % h_) throw std::invalid_argument("lattice refinement must be a multiple");
  long s = h / h_;
  if (s == 1) return *this;
  QSeries f(h, prec_num_ * s);
  for (const auto& [key, c] : coeff_) f.coeff_.emplace(key * s, c);
  return f;
}

void QSeries::align(const QSeries& f, const QSeries& g, QSeries& fa, QSeries& ga) {
  long h = lcm_long(f.h_, g.h_);
  fa = f.with_lattice(h);
  ga = g.with_lattice(h);
}

QSeries QSeries::operator-() const {
  QSeries f(h_, prec_num_);
  for (const auto& [key, c] : coeff_) f.coeff_.emplace(key, -c);
  return f;
}

QSeries& QSeries::operator+=(const QSeries& g) {
  *this = *this + g;
  return *this;
}

QSeries operator+(const QSeries& f, const QSeries& g) {
  QSeries fa, ga;
  QSeries::align(f, g, fa, ga);
  QSeries r(fa.h_, std::min(fa.prec_num_, ga.prec_num_));
  for (const auto& [key, c] : fa.coeff_) r.insert(key, c);
  for (const auto& [key, c] : ga.coeff_) {
    auto it = r.coeff_.find(key);
    if (it == r.coeff_.end()) {
      r.insert(key, c);
    } else {
      it->second += c;
      if (it->second == 0) r.coeff_.erase(it);
    }
  }
  return r;
}

QSeries operator-(const QSeries& f, const QSeries& g) { return f + (-g); }

QSeries operator*(const QSeries& f, const QSeries& g) {
  QSeries fa, ga;
  QSeries::align(f, g, fa, ga);
  // Output precision: min(Pf + vg, Pg + vf), valuations capped by precision.
  long vf = fa.coeff_.empty() ? fa.prec_num_ : fa.coeff_.begin()->first;
  long vg = ga.coeff_.empty() ? ga.prec_num_ : ga.coeff_.begin()->first;
  QSeries r(fa.h_, std::min(fa.prec_num_ + vg, ga.prec_num_ + vf));
  for (const auto& [k1, c1] : fa.coeff_) {
    for (const auto& [k2, c2] : ga.coeff_) {
      if (k1 + k2 >= r.prec_num_) break;
      auto [it, inserted] = r.coeff_.try_emplace(k1 + k2, 0);
      it->second += c1 * c2;
    }
  }
  for (auto it = r.coeff_.begin(); it != r.coeff_.end();)
    it = (it->second == 0) ? r.coeff_.erase(it) : std::next(it);
  return r;
}

QSeries operator*(const Rat& a, const QSeries& f) {
  if (a == 0) {
    QSeries r = f;
    r.coeff_.clear();
    return r;
  }
  QSeries r(f.h_, f.prec_num_);
  for (const auto& [key, c] : f.coeff_) r.coeff_.emplace(key, a * c);
  return r;
}

QSeries QSeries::shifted(long num, long h) const {
  long hh = lcm_long(h_, h);
  QSeries f = with_lattice(hh);
  long d = num * (hh / h);
  QSeries r(hh, f.prec_num_ + d);
  for (const auto& [key, c] : f.coeff_) r.coeff_.emplace(key + d, c);
  return r;
}

QSeries QSeries::dilated(long t) const {
  if (t < 1) throw std::invalid_argument("dilation factor must be >= 1");
  QSeries r(h_, prec_num_ * t);
  for (const auto& [key, c] : coeff_) r.coeff_.emplace(key * t, c);
  return r;
}

QSeries QSeries::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  QSeries result = QSeries::one(precision() * std::max(1L, n));
  QSeries base = *this;
  // Repeated squaring; the precision rules of * propagate soundly.
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

QSeries QSeries::inverse() const {
  if (coeff_.empty() || coeff_.begin()->first != 0)
    throw std::domain_error("inverse needs a unit series");
  const Rat c0 = coeff_.begin()->second;
  // g*f = 1 solved term by term on the lattice.
  QSeries g(h_, prec_num_);
  std::vector<Rat> inv(std::max(prec_num_, 0L), Rat(0));
  if (!inv.empty()) {
    inv[0] = 1 / c0;
    g.coeff_.emplace(0, inv[0]);
  }
  for (long k = 1; k < static_cast<long>(inv.size()); ++k) {
    Rat s(0);
    for (const auto& [j, cj] : coeff_) {
      if (j > k) break;
      if (j == 0) continue;
      s += cj * inv[k - j];
    }
    if (s != 0) {
      inv[k] = -s / c0;
      g.coeff_.emplace(k, inv[k]);
    }
  }
  return g;
}

QSeries QSeries::log() const {
  if (coeff_.empty() || coeff_.begin()->first != 0 || coeff_.begin()->second != 1)
    throw std::domain_error("log needs constant term exactly 1");
  QSeries u = *this;
  u.coeff_.erase(u.coeff_.begin());
  // log(1+u) = sum (-1)^{k+1} u^k / k; u^k dies once k*val(u) >= precision.
  QSeries result = zero(h_, precision());
  QSeries up = u;
  long vu = u.coeff_.empty() ? u.prec_num_ : u.coeff_.begin()->first;
  if (vu <= 0) vu = 1;
  for (long k = 1; (k - 1) * vu < prec_num_; ++k) {
    if (!up.is_zero()) result += rat(k % 2 ? 1 : -1, k) * up;
    if (up.is_zero() && up.prec_num_ >= prec_num_) break;
    up = up * u;
  }
  return result.truncated(precision());
}

QSeries QSeries::exp() const {
  if (!coeff_.empty() && coeff_.begin()->first <= 0)
    throw std::domain_error("exp needs valuation > 0");
  QSeries result = one(precision()).with_lattice(h_);
  QSeries up = one(precision()).with_lattice(h_);
  long v = coeff_.empty() ? prec_num_ : coeff_.begin()->first;
  if (v <= 0) v = 1;
  Rat kfact(1);
  for (long k = 1; (k - 1) * v < prec_num_; ++k) {
    up = up * (*this);
    kfact *= k;
    if (!up.is_zero()) result += (1 / kfact) * up;
    if (up.is_zero() && up.prec_num_ >= prec_num_) break;
  }
  return result.truncated(precision());
}

bool agree(const QSeries& f, const QSeries& g) {
  QSeries fa, ga;
  QSeries::align(f, g, fa, ga);
  long bound = std::min(fa.prec_num_, ga.prec_num_);
  for (const auto& [key, c] : fa.coeff_) {
    if (key >= bound) break;
    auto it = ga.coeff_.find(key);
    if (it == ga.coeff_.end() || it->second != c) return false;
  }
  for (const auto& [key, c] : ga.coeff_) {
    if (key >= bound) break;
    if (fa.coeff_.find(key) == fa.coeff_.end()) return false;
  }
  return true;
}

QSeries eisenstein_e2(long prec) {
  if (prec < 1) throw std::invalid_argument("eisenstein_e2 needs prec >= 1");
  QSeries f = QSeries::zero(1, Rat(prec));
  f.set_coeff(Rat(0), Rat(1));
  for (long n = 1; n < prec; ++n) f.set_coeff(Rat(n), Rat(-24 * sigma1(n)));
  return f;
}

QSeries euler_product(long prec) {
  QSeries f = QSeries::zero(1, Rat(prec));
  // Pentagonal number theorem: sum_k (-1)^k q^{k(3k-1)/2}.
  for (long k = 0;; ++k) {
    long e1 = k * (3 * k - 1) / 2;
    long e2 = k * (3 * k + 1) / 2;
    if (e1 >= prec && e2 >= prec) break;
    Rat sign(k % 2 ? -1 : 1);
    if (e1 < prec) f.set_coeff(Rat(e1), sign);
    if (k > 0 && e2 < prec) f.set_coeff(Rat(e2), sign);
  }
  return f;
}

QSeries dedekind_eta(const Rat& prec) {
  if (prec < rat(1, 24)) throw std::invalid_argument("dedekind_eta needs prec >= 1/24");
  // q^{1/24} * euler_product, on lattice 24.
  Rat tail = prec - rat(1, 24);
  Int terms_z = (tail.get_num() + tail.get_den() - 1) / tail.get_den();
  long terms = std::max(1L, terms_z.get_si());
  QSeries e = euler_product(terms).with_lattice(24);
  return e.shifted(1, 24).truncated(prec);
}

}  // namespace m24
