#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "borcherds.hpp"
#include "solver.hpp"
#include "test_util.hpp"

using namespace m24;
using m24::testing::rand_int;

namespace {

JacobiForm01 make_phi(long N, const Rat& tc0, std::vector<Rat> coords) {
  return {N, tc0, ModFormVec{2, N, std::move(coords)}};
}

JacobiForm01 rand_phi(long N) {
  JacobiForm01 phi{N, Rat(rand_int(-9, 9)), zero_form(2, N)};
  for (auto& c : phi.tc2.coords) c = rat(rand_int(-6, 6), rand_int(1, 3));
  return phi;
}

}  // namespace

TEST_CASE("the worked level-3 case: E-vectors of B_3[3 phi_2, 1] and B_1[3 phi_1, 1]") {
  // B_3[3 phi_{3B,2}, 1]: evec(1) = (24, M_2(3)[6]), evec(3) = (24, M_2(3)[-2])
  JacobiForm01 phi2 = make_phi(3, Rat(8), {Rat(2)});
  EVector e3 = borcherds_evector({3, 1, Rat(3) * phi2});
  REQUIRE(e3.entries.count(1) == 1);
  REQUIRE(e3.entries.count(3) == 1);
  CHECK(e3.entries.at(1).first == 24);
  CHECK(e3.entries.at(1).second.coords == std::vector<Rat>{Rat(6)});
  CHECK(e3.entries.at(3).first == 24);
  CHECK(e3.entries.at(3).second.coords == std::vector<Rat>{Rat(-2)});

  // B_1[3 phi_{3B,1}, 1]: evec(1) = (-24, 0)
  JacobiForm01 phi1 = make_phi(1, Rat(-8), {});
  EVector e1 = borcherds_evector({1, 1, Rat(3) * phi1});
  REQUIRE(e1.entries.count(1) == 1);
  CHECK(e1.entries.at(1).first == -24);
  CHECK(e1.entries.at(1).second.is_zero());
}

TEST_CASE("rescaling shifts the E-vector support") {
  JacobiForm01 phi = make_phi(2, Rat(5), {rat(1, 3)});
  EVector e1 = borcherds_evector({2, 1, phi});
  EVector e2 = borcherds_evector({2, 2, phi});
  REQUIRE(e1.entries.size() == 2);
  for (const auto& [d, entry] : e1.entries) {
    CHECK(e2.entries.count(2 * d) == 1);
    CHECK(e2.entries.at(2 * d).first == entry.first);
    CHECK(e2.entries.at(2 * d).second == entry.second);
  }
}

TEST_CASE("exponents of the worked case") {
  JacobiForm01 phi2 = make_phi(3, Rat(8), {Rat(2)});
  auto e = borcherds_exponents({3, 1, Rat(3) * phi2});
  CHECK(e[0] == 4);
  CHECK(e[1] == 4);
  CHECK(e[2] == 4);

  JacobiForm01 phi1 = make_phi(1, Rat(-8), {});
  auto e1 = borcherds_exponents({1, 1, Rat(3) * phi1});
  CHECK(e1[0] == -1);
  CHECK(e1[1] == -1);

  // B_23[phi_{23AB,1}, 1] has exponents (1, 1, 1)
  JacobiForm01 phi23 = make_phi(23, Rat(1), {rat(23, 12), rat(46, 11), rat(-23, 11)});
  auto e23 = borcherds_exponents({23, 1, phi23});
  CHECK(e23 == std::array<Rat, 3>{Rat(1), Rat(1), Rat(1)});
}

TEST_CASE("exponent scaling and e_zeta = e_q2, randomized") {
  const long levels[] = {1, 2, 3, 4, 5, 7, 8, 11, 23};
  for (int i = 0; i < 120; ++i) {
    long N = levels[rand_int(0, 8)];
    JacobiForm01 phi = rand_phi(N);
    long n = rand_int(1, 4);
    auto base = borcherds_exponents({N, 1, phi});
    auto scaled = borcherds_exponents({N, n, phi});
    for (int j = 0; j < 3; ++j) CHECK(scaled[j] == Rat(n) * base[j]);
    CHECK(base[1] == base[2]);
  }
}

TEST_CASE("evector and exponents are additive and homogeneous in phi") {
  const long levels[] = {2, 4, 8, 11};
  for (int i = 0; i < 100; ++i) {
    long N = levels[rand_int(0, 3)];
    JacobiForm01 f = rand_phi(N), g = rand_phi(N);
    Rat s = rat(rand_int(-5, 5), rand_int(1, 3));
    long n = rand_int(1, 3);
    auto ef = borcherds_exponents({N, n, f});
    auto eg = borcherds_exponents({N, n, g});
    auto esum = borcherds_exponents({N, n, f + (s * g)});
    for (int j = 0; j < 3; ++j) CHECK(esum[j] == ef[j] + s * eg[j]);

    EVector vf = borcherds_evector({N, n, f});
    EVector vg = borcherds_evector({N, n, g});
    EVector vsum = borcherds_evector({N, n, f + (s * g)});
    for (const auto& [d, entry] : vsum.entries) {
      CHECK(entry.first == vf.entries.at(d).first + s * vg.entries.at(d).first);
      CHECK(entry.second ==
            vf.entries.at(d).second + (s * vg.entries.at(d).second));
    }
  }
}

TEST_CASE("weights reproduce the weight table for every class") {
  // (label, expected k_g); the fixture rows carry the solution data.
  for (const auto& label : primepower_classes()) {
    Solution sol = fixture_solution(label);
    Rat total(0);
    for (const auto& row : sol.rows) total += borcherds_weight(row.N, row.phi);
    CHECK(total == *class_row(label).kg);
  }
  // spot values: the Igusa case and the half-integral one
  JacobiForm01 phi1a = make_phi(1, Rat(24), {});
  CHECK(borcherds_weight(1, phi1a) == 10);
  JacobiForm01 phi2a = make_phi(2, Rat(8), {rat(4, 3)});
  CHECK(borcherds_weight(2, phi2a) == 6);
  JacobiForm01 phi23 = make_phi(23, Rat(1), {rat(23, 12), rat(46, 11), rat(-23, 11)});
  CHECK(borcherds_weight(23, phi23) == -1);
}

TEST_CASE("minimal powers match the theorem") {
  auto power_of = [](const std::string& label) {
    Solution sol = fixture_solution(label);
    std::vector<BorcherdsSpec> specs;
    for (const auto& row : sol.rows) specs.push_back({row.N, row.n, row.phi});
    return minimal_power(specs);
  };
  CHECK(power_of("3B") == 3);
  CHECK(power_of("4A") == 2);
  CHECK(power_of("4C") == 8);
  CHECK(power_of("8A") == 8);
  for (const char* label : {"1A", "2A", "2B", "3A", "4B", "5A", "7AB", "11A", "23AB"})
    CHECK(power_of(label) == 1);
}
