#pragma once

#include "portex/matroid.hpp"

namespace portex {

// Directed network edge; ports carry current/voltage variables, resistors
// carry g/r parameters (symbolic by default).
struct NetEdge {
  std::string name, tail, head;
  bool is_port = false;
  RingElem g, r;
};

struct Network {
  std::vector<std::string> vertices;  // declaration / first-seen order
  std::vector<NetEdge> edges;

  std::vector<std::string> port_names() const;
  std::vector<std::string> resistor_names() const;
  const NetEdge& edge(const std::string& name) const;
};

using Matrix = std::vector<std::vector<RingElem>>;

// Line grammar: `vertex <name>`, `edge <name> <tail> <head> [port]
// [g=<rat|sym>] [r=<rat|sym>]`; `#` starts a comment.
Network parse_network(const std::string& text);

// Reduced signed incidence extensor: +1 at tail, -1 at head, one
// lex-least reference vertex dropped per connected component; ground is
// ports then resistors in declared order.
PortedExtensor incidence_extensor(const Network& net);
// Same, with an explicit port column order.
PortedExtensor incidence_extensor(const Network& net,
                                  const std::vector<std::string>& port_order);

// Current equations K over (i_P, x_E) and voltage equations C over
// (v_P, x_E); K presents iota_g(N), C presents upsilon_r(N-perp).
std::pair<Matrix, Matrix> network_equations(const Network& net);

// M_E over the port space plus a best-effort matrix presentation of it.
struct PortConstraint {
  AltTensor me;
  Matrix matrix;
};

PortConstraint port_solution(const Network& net);

// Weighted reduced Laplacian over the non-grounded vertices; resistors
// only, requires every r_e = 1.
Matrix laplacian(const Network& net, const std::string& grounded);

// Determinant as the single maximal minor of a square symbolic matrix.
RingElem matrix_det(const Matrix& m);

// Spanning tree generating function sum_T g_T of the resistor subgraph.
RingElem spanning_tree_enumerator(const Network& net);

// Grounded-star check: add vertex "0" and ports 0 -> i, then [I_n L]
// must present M_E of the augmented network up to one global ratio.
bool id_laplacian_presentation_check(const Network& net);

// Transfer resistance -v2/i1 as a (numerator, denominator) pair, computed
// both from M_E coordinates and from signed 2-forest sums; throws if the
// two disagree.
std::pair<RingElem, RingElem> maxwell_rho21(const Network& net,
                                            const std::string& p1,
                                            const std::string& p2);

// One subset-expansion term of the M_E coordinate indexed by an ordered
// sequence of port-space ids (e.g. {"v1", "i1", "v3"}).
struct ForestContribution {
  std::set<std::string> a;  // contracted resistor set
  std::string bracket;      // canonical key of the port-only minor
  int sign = 0;
  RingElem weight;          // g_A r_{E\A}
};

std::vector<ForestContribution> signed_forest_contributions(
    const Network& net, const std::vector<std::string>& index);

}  // namespace portex
