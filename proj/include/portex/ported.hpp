#pragma once

#include <utility>

#include "portex/exterior.hpp"

namespace portex {

// Extensor with ground split into ports P and parametrized elements E.
// Declared P/E orders drive every sign prefactor; tests permute them.
struct PortedExtensor {
  AltTensor tensor;
  std::vector<std::string> ports;
  std::vector<std::string> nonports;
  // per-element parameters; default symbolic g_e, r_e
  std::map<std::string, std::pair<RingElem, RingElem>> params;

  const RingElem& gparam(const std::string& e) const;
  const RingElem& rparam(const std::string& e) const;
};

// Builds a ported extensor with symbolic parameters; checks the partition.
PortedExtensor make_ported(AltTensor tensor, std::vector<std::string> ports,
                           std::vector<std::string> nonports);

// Current/voltage copies of a port: "p7" -> "i7"/"v7", otherwise prefixed.
std::string iota_copy(const std::string& port);
std::string upsilon_copy(const std::string& port);

// P_iota then P_upsilon, each in declared port order.
GroundSet port_space(const std::vector<std::string>& ports);
// P_iota, P_upsilon, E.
GroundSet tripled_ground(const PortedExtensor& n);

// iota_g: ports to iota-copies, each e scaled by g_e; over P_iota then E.
AltTensor iota(const PortedExtensor& n);
// upsilon_r applied to a tensor over the same ground (normally the dual).
AltTensor upsilon(const PortedExtensor& n, const AltTensor& nperp);

// M(N) = iota_g(N) ^ upsilon_r(N-perp) in the tripled space.
AltTensor big_m(const PortedExtensor& n, const Orientation& o);
// M_E(N) = M(N)/E, contracted in declared E order; lives over the port space.
AltTensor m_e(const PortedExtensor& n, const Orientation& o);

// Closed form for E = {}: M[I_iota V_upsilon] = eps(Vbar V) N[I] N[Vbar].
AltTensor m_empty(const PortedExtensor& n, const Orientation& o);

// Brute-force oracle: M_E[I_iota V_upsilon] =
//   eps(Vbar V) eps(PE) eps(P) sum_{A<=E} N[IA] N[Vbar A] g_A r_{E\A}.
AltTensor subset_expansion(const PortedExtensor& n, const Orientation& o);

// M_E(N) = eps(PE) eps(PE') (g_e M_{E'}(N/e) + r_e M_{E'}(N\e))
bool verify_sum_rule(const PortedExtensor& n, const std::string& e,
                     const Orientation& o);

// M_E(N1N2) = eps(P1P2E) eps(P1E1) eps(P2E2) M_{E1}(N1) M_{E2}(N2)
bool verify_product_rule(const PortedExtensor& n1, const PortedExtensor& n2);

// Direct-sum input for the product rule: concatenated grounds and port lists.
PortedExtensor direct_sum(const PortedExtensor& n1, const PortedExtensor& n2);

// (eps(PE) M_E[P_iota], eps(PE) M_E[P_upsilon]): basis enumerators of N/P
// and N\P respectively.
std::pair<RingElem, RingElem> basis_enumerator_coords(const PortedExtensor& n,
                                                      const Orientation& o);

// restriction of an orientation to a smaller ground, keeping the flip
Orientation restrict_orientation(const Orientation& o, const GroundSet& small);

PortedExtensor minor_contract(const PortedExtensor& n, const std::string& e);
PortedExtensor minor_delete(const PortedExtensor& n, const std::string& e);

}  // namespace portex
