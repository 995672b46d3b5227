#pragma once

#include "portex/ported.hpp"

namespace portex {

// Sign map of an extensor's Plücker coordinates.
struct Chirotope {
  GroundSet ground;
  int rank = 0;
  std::map<std::vector<int>, int> signs;  // sorted keys, nonzero entries only

  int sign_positions(std::span<const int> seq) const;
  int sign(std::span<const std::string> seq) const;
};

// Requires parameter-free, nonzero coordinates.
Chirotope chirotope(const AltTensor& x);

int subset_rank(const AltTensor& x, const std::set<std::string>& a);

std::set<std::string> closure(const AltTensor& x, const std::set<std::string>& a);

// Coordinates all in {0, +c, -c} for one positive rational c.
bool is_unimodular(const AltTensor& x);
// Divides out the common coordinate scale; requires unimodularity.
AltTensor unimodular_normalize(const AltTensor& x);

// Partition of the ground set by circuit co-membership.
std::vector<std::vector<std::string>> connected_components(const Chirotope& c);

// Canonical orientation-faithful key; equal for c and -c.
std::string bracket_key(const Chirotope& c);

// Product of one bracket variable per connected component.
Monomial bracket_monomial(const Chirotope& c);

// Corank-nullity polynomial with oriented-matroid bracket variables,
// plus one representative minor extensor per occurring bracket monomial.
struct RankPoly {
  RingElem poly;
  std::map<Monomial, AltTensor> realizations;  // bracket monomial -> minor on P
};

// Extensor presenting the oriented minor N/A|P (coloops outside the kept
// set are contracted instead of deleted so the result stays nonzero).
AltTensor minor_on_ports(const PortedExtensor& n,
                         const std::set<std::string>& contracted);

RankPoly rank_poly(const PortedExtensor& n);

// u=0, v=0, then eps(P) eps(PE) M_empty(minor) for each bracket monomial.
AltTensor substitute_extensors(const RankPoly& r, const PortedExtensor& n,
                               const Orientation& o);

// R(N) = g_e R(N/e) + r_e R(N\e) for a non-separating e.
bool verify_rank_poly_sum(const PortedExtensor& n, const std::string& e);
// R(N1 (+) N2) = R(N1) R(N2)
bool verify_rank_poly_product(const PortedExtensor& n1, const PortedExtensor& n2);

}  // namespace portex
