#pragma once

#include <functional>
#include <memory>

#include "portex/matroid.hpp"

namespace portex {

// Binary deletion/contraction tree; a node is a leaf when every non-port
// element of its minor is a loop or coloop.
struct CompTreeNode {
  explicit CompTreeNode(PortedExtensor m) : minor(std::move(m)) {}
  PortedExtensor minor;
  std::string reduced;  // empty at leaves
  std::unique_ptr<CompTreeNode> contracted;
  std::unique_ptr<CompTreeNode> deleted;
  bool is_leaf() const { return reduced.empty(); }
};

struct CompTree {
  std::unique_ptr<CompTreeNode> root;
};

// Reduces the greatest non-separator under `order` (a permutation of E).
CompTree build_tree(const PortedExtensor& n, const std::vector<std::string>& order);
// Reduces an arbitrary (seeded) non-separator at every node.
CompTree build_tree_arbitrary(const PortedExtensor& n, uint64_t seed);

// Independent F <= E with F + P spanning.
std::vector<std::set<std::string>> p_subbases(const PortedExtensor& n);

struct ActivitySets {
  std::set<std::string> F, IA, IP, EA, EP;
};

// Descends by "contract iff e in fprime"; works for arbitrary subsets.
ActivitySets leaf_for(const CompTree& t, const std::set<std::string>& fprime);

struct Interval {
  std::set<std::string> lo, hi;
};

// Primal intervals [IP(F), F + EA(F)] and dual [EP(F), (E\F) + IA(F)].
std::pair<std::vector<Interval>, std::vector<Interval>> interval_partitions(
    const CompTree& t);

// sum over leaves of [N/F|P] x_IA g_IP y_EA r_EP
RingElem tutte_expression(
    const PortedExtensor& n, const CompTree& t,
    const std::function<RingElem(const std::string&)>& x,
    const std::function<RingElem(const std::string&)>& y);

// point values x_e = g_e + r_e u, y_e = r_e + g_e v; equals the corank-
// nullity polynomial for every tree
RingElem tutte_expression_binomials(const PortedExtensor& n, const CompTree& t);

// Flats of N restricted to E, i.e. all cl(A) intersect E.
std::vector<std::set<std::string>> flats_in_e(const PortedExtensor& n);

// Moebius expansion over the lattice of flats; Laurent in v inside,
// throws if negative powers of v survive.
RingElem flat_expansion(const PortedExtensor& n);

}  // namespace portex
