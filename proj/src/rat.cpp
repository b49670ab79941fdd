#include "rat.hpp"

#include <numeric>
#include <stdexcept>

namespace m24 {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  q.canonicalize();
  if (q.get_den() <= 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  return q;
}

std::string rat_to_string(const Rat& x) {
  return x.get_str();
}

Int to_integer(const Rat& x) {
  if (!is_integer(x))
    throw std::domain_error("expected an integer, got " + rat_to_string(x));
  return x.get_num();
}

Rat rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

long lcm_long(long a, long b) {
  return std::lcm(a, b);
}

}  // namespace m24
