#include "moonshine.hpp"

#include <stdexcept>

#include "arith.hpp"

namespace m24 {

EVector operator+(const EVector& a, const EVector& b) {
  if (a.comparison_level != b.comparison_level)
    throw std::invalid_argument("EVector addition across comparison levels");
  EVector r = a;
  for (const auto& [d, entry] : b.entries) {
    auto it = r.entries.find(d);
    if (it == r.entries.end()) {
      r.entries.emplace(d, entry);
    } else {
      it->second.first += entry.first;
      it->second.second = it->second.second + entry.second;
    }
  }
  return r;
}

EVector EVector::embedded(long level) const {
  EVector r;
  r.comparison_level = level;
  for (const auto& [d, entry] : entries)
    r.entries.emplace(d, std::make_pair(entry.first, embed_level(entry.second, level)));
  return r;
}

bool EVector::is_zero() const {
  for (const auto& [d, entry] : entries)
    if (entry.first != 0 || !entry.second.is_zero()) return false;
  return true;
}

std::vector<std::string> primepower_classes() {
  std::vector<std::string> out;
  for (const auto& label : dataset().class_order)
    if (!dataset().classes.at(label).probe) out.push_back(label);
  return out;
}

std::vector<std::string> all_classes() { return dataset().class_order; }

const Dataset::ClassRow& class_row(const std::string& label) {
  auto it = dataset().classes.find(label);
  if (it == dataset().classes.end())
    throw std::invalid_argument("unsupported conjugacy class " + label);
  return it->second;
}

ModFormVec class_tdT(const std::string& label) {
  const auto& row = class_row(label);
  ModFormVec v;
  v.k = 2;
  v.N = row.level;
  v.coords = row.tc2;
  return v;
}

JacobiForm01 twisted_genus(const std::string& label) {
  const auto& row = class_row(label);
  return {row.level, row.chi, class_tdT(label)};
}

std::string power_class(const std::string& label, long d) {
  const auto& row = class_row(label);
  auto it = row.powers.find(d);
  if (it == row.powers.end())
    throw std::invalid_argument("power map missing for " + label + "^" +
                                std::to_string(d));
  return it->second;
}

std::pair<Rat, ModFormVec> moebius_component(const std::string& label, long d) {
  const auto& row = class_row(label);
  if (d < 1 || row.order % d)
    throw std::invalid_argument("moebius_component needs d | order(g)");
  Rat m0(0);
  ModFormVec m2 = zero_form(2, row.level);
  for (long dp : divisors(d)) {
    int mu = moebius(d / dp);
    if (mu == 0) continue;
    const auto& pow_row = class_row(power_class(label, dp));
    m0 += Rat(mu) * pow_row.chi;
    m2 = m2 + Rat(mu) * embed_level(class_tdT(pow_row.label), row.level);
  }
  Rat inv_d = rat(1, d);
  return {inv_d * m0, inv_d * m2};
}

ProductExpansion phi_g(const std::string& label) {
  const auto& row = class_row(label);
  ProductExpansion p;
  p.exponents = {Rat(1), Rat(1), Rat(1)};
  p.evec.comparison_level = row.level;
  for (long d : divisors(row.order)) p.evec.entries.emplace(d, moebius_component(label, d));
  return p;
}

}  // namespace m24
