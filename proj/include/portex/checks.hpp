#pragma once

#include "portex/activities.hpp"
#include "portex/circuits.hpp"

namespace portex::checks {

struct Options {
  int random = 100;
  uint64_t seed = 1;
  int max_size = 7;
};

struct Result {
  int checked = 0;
  bool pass = true;
  std::string counterexample;  // description of the first failure
};

// the bundled K4 example: network text, paper matrices, Fig. 2 data
const char* k4_network_text();
PortedExtensor k4_paper_extensor();

// M_E sum rule over random rational extensors
Result verify_sum(const Options& o);
// direct-sum product rule over random pairs
Result verify_product(const Options& o);
// PerpPerp / DeletePerp / ContractPerp / ProdPerp duality identities
Result verify_identities(const Options& o);
// Tutte equations for the corank-nullity polynomial R
Result verify_rankpoly(const Options& o);
// substitute_extensors(rank_poly) = m_e on K4 and random unimodular inputs
Result verify_substitution(const Options& o);
// interval partitions tile 2^E; binomial Tutte expression = R
Result verify_activities(const Options& o);
// flat expansion = R
Result verify_flats(const Options& o);
// transfer-resistance dual computation + series/parallel closed forms
Result verify_maxwell(const Options& o);
// Laplacian determinant = tree enumerator; [I L] presentation checks
Result verify_matrixtree(const Options& o);

// m_e = subset_expansion on K4 and random instances
Result verify_oracle(const Options& o);
// square-free degrees, N -> -N invariance, eps flip, E reorder
Result verify_homogeneity(const Options& o);
// the six two-port oriented matroids against their closed-form M_empty
Result verify_table1();
// the three published K4 coordinates
Result verify_k4();

// CLI dispatch over the nine named suites.
std::vector<std::string> suite_names();
Result run_suite(const std::string& kind, const Options& o);

}  // namespace portex::checks
