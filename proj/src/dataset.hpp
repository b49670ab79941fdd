#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rat.hpp"

namespace m24 {

// The embedded data file: echelon bases of M_2(Gamma_0(N)), the projection
// matrices Pi_FE(2, N, c), the conjugacy-class data, and the known
// product-factorization table used as a fixture.  Rationals are serialized
// as "p/q" strings so the file round-trips bit-exactly.
struct Dataset {
  int version = 0;
  long qterms = 0;               // stored coefficients per basis element
  std::vector<long> levels;      // levels with a stored weight-2 basis
  std::vector<long> full_levels; // levels with cusp + projection support

  // N -> list of basis elements, each a dense coefficient row of length qterms.
  std::map<long, std::vector<std::vector<Rat>>> bases_k2;

  // N -> cusp key "f/e" -> dim x dim matrix.  The cusp oo is the identity
  // and is not stored.
  std::map<long, std::map<std::string, std::vector<std::vector<Rat>>>> pi_fe_k2;

  struct ClassRow {
    std::string label;
    long order = 0;            // order n_g of the group element
    Rat chi;
    long level = 0;            // native level of tdT
    std::vector<Rat> tc2;      // tdT in echelon coordinates at `level`
    long Ng = 0;
    std::optional<Rat> kg;     // expected weight; absent for the 6A probe
    long ansatz_level = 0;     // default N' for the solver ansatz
    bool probe = false;
    std::map<long, std::string> powers;  // d | order -> label of g^d
  };
  std::vector<std::string> class_order;
  std::map<std::string, ClassRow> classes;

  struct SolutionRow {
    long N = 0, n = 0;
    Rat tc0;
    std::vector<Rat> tc2;
  };
  std::map<std::string, std::vector<SolutionRow>> solutions;
};

Dataset load_dataset(const std::string& path);
void save_dataset(const Dataset& ds, const std::string& path);
std::string serialize_dataset(const Dataset& ds);

// Process-wide dataset.  Resolution order for the file: explicit
// set_dataset_path(), the M24SIEGEL_DATA environment variable, then the
// compiled-in default.  Must be configured before first use.
const Dataset& dataset();
void set_dataset_path(const std::string& path);

// Regenerates the full dataset from first principles: Eisenstein spans of
// E_2(tau) - t E_2(t tau) row-reduced, the eta product for level 11, binary
// quadratic form theta series for level 23, plus the embedded projection
// matrices and class tables.
Dataset build_dataset(long qterms = 600);

}  // namespace m24
