#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "jacobi.hpp"
#include "modforms.hpp"

namespace m24 {

// Finitely supported d -> (weight-0 part, weight-2 part), the linearization
// of a product expansion.  All weight-2 parts live at comparison_level.
struct EVector {
  long comparison_level = 1;
  std::map<long, std::pair<Rat, ModFormVec>> entries;

  friend EVector operator+(const EVector& a, const EVector& b);
  EVector embedded(long level) const;
  bool is_zero() const;
};

struct ProductExpansion {
  std::array<Rat, 3> exponents;  // (e_{q1}, e_zeta, e_{q2})
  EVector evec;
};

// The thirteen prime-power-level classes, in table order.
std::vector<std::string> primepower_classes();
// Theorem classes plus the composite probe rows.
std::vector<std::string> all_classes();

const Dataset::ClassRow& class_row(const std::string& label);

// tdT_g as echelon coordinates at its native level.
ModFormVec class_tdT(const std::string& label);

// The twisted genus Z_g = chi(g) phi_{0,1}/12 + tdT_g phi_{-2,1}.
JacobiForm01 twisted_genus(const std::string& label);

// Class of g^d for d | order(g).
std::string power_class(const std::string& label, long d);

// d^{-1} sum_{d' | d} mu(d/d') (chi(g^{d'}), tdT_{g^{d'}}), the degree-d
// layer of the product expansion, at the native level of tdT_g.
std::pair<Rat, ModFormVec> moebius_component(const std::string& label, long d);

// The full product expansion Phi_g: leading exponents (1, 1, 1) and the
// Moebius layers over the divisors of the element order.
ProductExpansion phi_g(const std::string& label);

}  // namespace m24
