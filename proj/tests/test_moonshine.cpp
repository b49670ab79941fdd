#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arith.hpp"
#include <numeric>

#include "moonshine.hpp"

using namespace m24;

namespace {

// Expected E(Phi_g) layers: label -> d -> (m0, tc2 coordinates).
struct ZgRow {
  const char* label;
  long d;
  const char* m0;
  std::vector<const char*> m2;
};

const std::vector<ZgRow>& zg_table() {
  static const std::vector<ZgRow> rows = {
      {"1A", 1, "24", {}},
      {"2A", 1, "8", {"4/3"}},
      {"2A", 2, "8", {"-2/3"}},
      {"2B", 1, "0", {"2", "-16"}},
      {"2B", 2, "12", {"-1", "8"}},
      {"3A", 1, "6", {"3/2"}},
      {"3A", 3, "6", {"-1/2"}},
      {"3B", 1, "0", {"2"}},
      {"3B", 3, "8", {"-2/3"}},
      {"4A", 1, "0", {"2", "0", "-16"}},
      {"4A", 2, "4", {"-1/3", "16", "24"}},
      {"4A", 4, "4", {"-1/3", "-8", "-8"}},
      {"4B", 1, "4", {"5/3", "8"}},
      {"4B", 2, "2", {"-1/6", "12"}},
      {"4B", 4, "4", {"-1/3", "-8"}},
      {"4C", 1, "0", {"2", "-8"}},
      {"4C", 2, "0", {"0", "-4"}},
      {"4C", 4, "6", {"-1/2", "4"}},
      {"5A", 1, "4", {"5/3"}},
      {"5A", 5, "4", {"-1/3"}},
      {"7AB", 1, "3", {"7/4"}},
      {"7AB", 7, "3", {"-1/4"}},
      {"8A", 1, "2", {"11/6", "4", "12"}},
      {"8A", 2, "-1", {"1/12", "-2", "-14"}},
      {"8A", 4, "2", {"-1/6", "8", "12"}},
      {"8A", 8, "2", {"-1/6", "-4", "-4"}},
      {"11A", 1, "2", {"11/6", "0"}},
      {"11A", 11, "2", {"-1/6", "0"}},
      {"23AB", 1, "1", {"23/12", "46/11", "-23/11"}},
      {"23AB", 23, "1", {"-1/12", "-2/11", "1/11"}},
  };
  return rows;
}

}  // namespace

TEST_CASE("class data spot checks") {
  const auto& c2a = class_row("2A");
  CHECK(c2a.chi == 8);
  CHECK(c2a.Ng == 2);
  CHECK(*c2a.kg == 6);
  CHECK(class_tdT("2A").coords == std::vector<Rat>{rat(4, 3)});

  const auto& c1a = class_row("1A");
  CHECK(c1a.chi == 24);
  CHECK(class_tdT("1A").coords.empty());
  CHECK(*c1a.kg == 10);

  const auto& c23 = class_row("23AB");
  CHECK(c23.chi == 1);
  CHECK(class_tdT("23AB").coords ==
        std::vector<Rat>{rat(23, 12), rat(46, 11), rat(-23, 11)});
  CHECK(*c23.kg == -1);

  const auto& c8a = class_row("8A");
  CHECK(c8a.chi == 2);
  CHECK(class_tdT("8A").coords == std::vector<Rat>{rat(11, 6), Rat(4), Rat(12)});
  CHECK(*c8a.kg == rat(1, 2));

  CHECK(primepower_classes().size() == 13);
  CHECK_THROWS_AS(class_row("12A"), std::invalid_argument);
}

TEST_CASE("the full E-vector table is reproduced exactly") {
  for (const auto& row : zg_table()) {
    auto [m0, m2] = moebius_component(row.label, row.d);
    CHECK(m0 == rat_from_string(row.m0));
    REQUIRE(m2.coords.size() == row.m2.size());
    for (size_t i = 0; i < row.m2.size(); ++i)
      CHECK(m2.coords[i] == rat_from_string(row.m2[i]));
  }
}

TEST_CASE("moebius_component collapses to the class data at d = 1") {
  for (const auto& label : all_classes()) {
    auto [m0, m2] = moebius_component(label, 1);
    CHECK(m0 == class_row(label).chi);
    CHECK(m2 == class_tdT(label));
  }
}

TEST_CASE("Moebius inversion round-trip for every class and divisor") {
  for (const auto& label : all_classes()) {
    const auto& row = class_row(label);
    for (long k : divisors(row.order)) {
      Rat m0_sum(0);
      ModFormVec m2_sum = zero_form(2, row.level);
      for (long d : divisors(k)) {
        auto [m0, m2] = moebius_component(label, d);
        m0_sum += Rat(d) * m0;
        m2_sum = m2_sum + Rat(d) * m2;
      }
      const auto& target = class_row(power_class(label, k));
      CHECK(m0_sum == target.chi);
      CHECK(m2_sum == embed_level(class_tdT(target.label), row.level));
    }
  }
}

TEST_CASE("phi_g support is exactly the divisors of the element order") {
  for (const auto& label : all_classes()) {
    ProductExpansion p = phi_g(label);
    CHECK(p.exponents == std::array<Rat, 3>{Rat(1), Rat(1), Rat(1)});
    auto divs = divisors(class_row(label).order);
    REQUIRE(p.evec.entries.size() == divs.size());
    for (long d : divs) CHECK(p.evec.entries.count(d) == 1);
  }
  // Phi_{4A} layers straight from the table
  ProductExpansion p4a = phi_g("4A");
  CHECK(p4a.evec.entries.at(1).first == 0);
  CHECK(p4a.evec.entries.at(2).first == 4);
  CHECK(p4a.evec.entries.at(4).second.coords ==
        std::vector<Rat>{rat(-1, 3), Rat(-8), Rat(-8)});
}

TEST_CASE("probe class layers are integral Jacobi forms") {
  // The composite probe data is validated by the integrality of its Moebius
  // layers: every c_{6A,d}(D) must be an integer.
  for (long d : {1L, 2L, 3L, 6L}) {
    auto [m0, m2] = moebius_component("6A", d);
    auto table = disc_table(m0, expand(m2, 12), 41);
    for (const auto& [disc, c] : table) CHECK(is_integer(c));
  }
}

TEST_CASE("power map is order-compatible") {
  for (const auto& label : all_classes()) {
    const auto& row = class_row(label);
    CHECK(power_class(label, 1) == label);
    CHECK(power_class(label, row.order) == "1A");
    for (long d : divisors(row.order)) {
      const auto& target = class_row(power_class(label, d));
      CHECK(target.order == row.order / std::gcd(row.order, d));
    }
    CHECK_THROWS_AS(power_class(label, row.order + 1), std::invalid_argument);
  }
}
