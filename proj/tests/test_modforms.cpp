#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "dataset.hpp"
#include "modforms.hpp"
#include "qseries.hpp"

using namespace m24;

namespace {

const CuspData& find_cusp(const std::vector<CuspData>& cusps, long f, long e) {
  for (const auto& c : cusps)
    if (!c.infinity && c.f == f && c.e == e) return c;
  throw std::runtime_error("cusp not found");
}

}  // namespace

TEST_CASE("cusp tables for all nine levels") {
  // (N, cusp label, width, N_c) rows
  struct Row {
    long N;
    const char* label;
    long width, nc;
  };
  const Row rows[] = {
      {2, "oo", 1, 1},  {2, "0", 2, 2},   {3, "oo", 1, 1},  {3, "0", 3, 3},
      {4, "oo", 1, 1},  {4, "0", 4, 4},   {4, "1/2", 1, 2}, {5, "oo", 1, 1},
      {5, "0", 5, 5},   {7, "oo", 1, 1},  {7, "0", 7, 7},   {8, "oo", 1, 1},
      {8, "0", 8, 8},   {8, "1/2", 2, 4}, {8, "1/4", 1, 2}, {11, "oo", 1, 1},
      {11, "0", 11, 11}, {23, "oo", 1, 1}, {23, "0", 23, 23},
  };
  std::map<long, long> counted;
  for (const auto& row : rows) {
    auto cusps = cusp_set(row.N);
    bool found = false;
    for (const auto& c : cusps) {
      if (c.label() != row.label) continue;
      found = true;
      CHECK(c.width == row.width);
      CHECK(c.nc == row.nc);
    }
    CHECK(found);
    counted[row.N] = static_cast<long>(cusps.size());
  }
  CHECK(counted[2] == 2);
  CHECK(counted[4] == 3);
  CHECK(counted[8] == 4);
  CHECK(counted[23] == 2);

  auto one = cusp_set(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].infinity);
  CHECK(one[0].width == 1);
  CHECK(one[0].nc == 1);

  CHECK_THROWS_AS(cusp_set(6), std::invalid_argument);
  CHECK_THROWS_AS(cusp_set(9), std::invalid_argument);
}

TEST_CASE("sum of widths equals the index of Gamma_0(N)") {
  for (long N : dataset().full_levels) {
    long total = 0;
    for (const auto& c : cusp_set(N)) total += c.width;
    CHECK(total == gamma0_index(N));
  }
  CHECK(gamma0_index(8) == 12);
  CHECK(gamma0_index(23) == 24);
}

TEST_CASE("width and N_c follow from the denominator") {
  for (long N : dataset().full_levels)
    for (const auto& c : cusp_set(N)) {
      CHECK(c.width == N / std::gcd(c.e * c.e, N));
      CHECK(c.nc == N / c.e);
      CHECK(std::gcd(c.f, c.e) == 1);
    }
}

TEST_CASE("echelon bases match the tabulated expansions") {
  // M_2(11): 1 + 12q^2 + 12q^3 + 12q^4 + 12q^5 and q - 2q^2 - q^3 + 2q^4 + q^5
  auto b11 = echelon_basis(2, 11, 6);
  REQUIRE(b11.size() == 2);
  const long f1[] = {1, 0, 12, 12, 12, 12};
  const long f2[] = {0, 1, -2, -1, 2, 1};
  for (long n = 0; n < 6; ++n) {
    CHECK(b11[0].coeff_int(n) == f1[n]);
    CHECK(b11[1].coeff_int(n) == f2[n]);
  }

  // M_0(N) is the constants
  auto b0 = echelon_basis(0, 5, 4);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0].coeff_int(0) == 1);
  CHECK(b0[0].coeff_int(2) == 0);

  // M_2(2): 2 E_2(2 tau) - E_2(tau)
  QSeries oracle = Rat(2) * eisenstein_e2(8).dilated(2).truncated(Rat(8)) - eisenstein_e2(8);
  auto b2 = echelon_basis(2, 2, 8);
  REQUIRE(b2.size() == 1);
  CHECK(agree(b2[0], oracle));

  CHECK_THROWS_AS(echelon_basis(2, 11, dataset().qterms + 1), std::out_of_range);
}

TEST_CASE("echelon normalization: leading block is the identity") {
  for (long N : dataset().levels) {
    long d = dim_mk(2, N);
    auto basis = echelon_basis(2, N, std::max(d, 1L));
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j) CHECK(basis[i].coeff_int(j) == Rat(i == j ? 1 : 0));
  }
}

TEST_CASE("embed_level examples and transitivity") {
  ModFormVec v{2, 2, {rat(4, 3)}};
  ModFormVec v4 = embed_level(v, 4);
  CHECK(v4.coords == std::vector<Rat>{rat(4, 3), Rat(32)});
  ModFormVec v8 = embed_level(v, 8);
  CHECK(v8.coords == std::vector<Rat>{rat(4, 3), Rat(32), Rat(32)});
  // transitivity: 2 -> 4 -> 8 equals 2 -> 8
  CHECK(embed_level(v4, 8) == v8);
  // identity embedding
  CHECK(embed_level(v, 2) == v);
  // q-expansions agree through the embedding
  CHECK(agree(expand(v, 40), expand(v8, 40)));

  CHECK_THROWS_AS(embed_level(v, 3), std::invalid_argument);
}

TEST_CASE("pi_fe matches the tabulated projection matrices") {
  // First column of Pi_FE(2, 8; 1/2) = (-1/8, 3, -3)
  auto c12 = find_cusp(cusp_set(8), 1, 2);
  ModFormVec e1{2, 8, {Rat(1), Rat(0), Rat(0)}};
  ModFormVec img = pi_fe(e1, c12);
  CHECK(img.coords == std::vector<Rat>{rat(-1, 8), Rat(3), Rat(-3)});

  // Pi_FE(2, 2; 0) on [4/3] is [-2/3]
  auto c0 = find_cusp(cusp_set(2), 0, 1);
  ModFormVec v{2, 2, {rat(4, 3)}};
  CHECK(pi_fe(v, c0).coords == std::vector<Rat>{rat(-2, 3)});

  // Pi_FE(2, 23; 0) is -1/23 times the identity
  auto c23 = find_cusp(cusp_set(23), 0, 1);
  for (long i = 0; i < 3; ++i) {
    ModFormVec e = zero_form(2, 23);
    e.coords[i] = 1;
    ModFormVec p = pi_fe(e, c23);
    for (long j = 0; j < 3; ++j) CHECK(p.coords[j] == (i == j ? rat(-1, 23) : Rat(0)));
  }

  // oo is the identity
  for (const auto& c : cusp_set(8))
    if (c.infinity) CHECK(pi_fe(e1, c) == e1);

  // constant term of the projection is the first coordinate
  CHECK(pi_fe(e1, c12).constant_term() == rat(-1, 8));
}

TEST_CASE("dataset round-trips bit-exactly and matches regeneration") {
  const Dataset& ds = dataset();
  std::string once = serialize_dataset(ds);
  // parse back and re-serialize
  std::string tmp = "/tmp/m24siegel_roundtrip.json";
  save_dataset(ds, tmp);
  Dataset reloaded = load_dataset(tmp);
  CHECK(serialize_dataset(reloaded) == once);

  Dataset rebuilt = build_dataset(ds.qterms);
  CHECK(serialize_dataset(rebuilt) == once);
}
