#include "portex/ported.hpp"

#include <algorithm>

namespace portex {

const RingElem& PortedExtensor::gparam(const std::string& e) const {
  auto it = params.find(e);
  if (it == params.end()) throw Error("no parameters for element " + e);
  return it->second.first;
}

const RingElem& PortedExtensor::rparam(const std::string& e) const {
  auto it = params.find(e);
  if (it == params.end()) throw Error("no parameters for element " + e);
  return it->second.second;
}

PortedExtensor make_ported(AltTensor tensor, std::vector<std::string> ports,
                           std::vector<std::string> nonports) {
  std::set<std::string> declared;
  for (const auto& p : ports)
    if (!declared.insert(p).second) throw Error("duplicate port " + p);
  for (const auto& e : nonports)
    if (!declared.insert(e).second) throw Error("duplicate element " + e);
  if (declared.size() != tensor.ground().size())
    throw Error("ports + nonports must partition the ground set");
  for (const auto& s : tensor.ground().elems())
    if (!declared.count(s)) throw Error("ground element not declared: " + s);
  PortedExtensor n{std::move(tensor), std::move(ports), std::move(nonports), {}};
  for (const auto& e : n.nonports)
    n.params[e] = {RingElem::variable(Variable::g(e)),
                   RingElem::variable(Variable::r(e))};
  return n;
}

namespace {

bool plain_port_name(const std::string& port) {
  if (port.size() < 2 || port[0] != 'p') return false;
  return std::all_of(port.begin() + 1, port.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::string iota_copy(const std::string& port) {
  return plain_port_name(port) ? "i" + port.substr(1) : "i_" + port;
}

std::string upsilon_copy(const std::string& port) {
  return plain_port_name(port) ? "v" + port.substr(1) : "v_" + port;
}

GroundSet port_space(const std::vector<std::string>& ports) {
  std::vector<std::string> elems;
  for (const auto& p : ports) elems.push_back(iota_copy(p));
  for (const auto& p : ports) elems.push_back(upsilon_copy(p));
  return GroundSet(std::move(elems));
}

GroundSet tripled_ground(const PortedExtensor& n) {
  std::vector<std::string> elems;
  for (const auto& p : n.ports) elems.push_back(iota_copy(p));
  for (const auto& p : n.ports) elems.push_back(upsilon_copy(p));
  for (const auto& e : n.nonports) elems.push_back(e);
  return GroundSet(std::move(elems));
}

AltTensor iota(const PortedExtensor& n) {
  std::vector<std::string> elems;
  for (const auto& p : n.ports) elems.push_back(iota_copy(p));
  for (const auto& e : n.nonports) elems.push_back(e);
  GroundSet target(std::move(elems));
  std::set<std::string> portset(n.ports.begin(), n.ports.end());
  return relabel(n.tensor, target, [&](const std::string& s) {
    if (portset.count(s)) return std::make_pair(iota_copy(s), RingElem::constant(1));
    return std::make_pair(s, n.gparam(s));
  });
}

AltTensor upsilon(const PortedExtensor& n, const AltTensor& nperp) {
  std::vector<std::string> elems;
  for (const auto& p : n.ports) elems.push_back(upsilon_copy(p));
  for (const auto& e : n.nonports) elems.push_back(e);
  GroundSet target(std::move(elems));
  std::set<std::string> portset(n.ports.begin(), n.ports.end());
  return relabel(nperp, target, [&](const std::string& s) {
    if (portset.count(s))
      return std::make_pair(upsilon_copy(s), RingElem::constant(1));
    return std::make_pair(s, n.rparam(s));
  });
}

AltTensor big_m(const PortedExtensor& n, const Orientation& o) {
  if (!(o.reference == n.tensor.ground()))
    throw Error("orientation must live on the ported extensor's ground set");
  GroundSet tripled = tripled_ground(n);
  AltTensor lhs = embed(iota(n), tripled);
  AltTensor rhs = embed(upsilon(n, dual(n.tensor, o)), tripled);
  return wedge(lhs, rhs);
}

AltTensor m_e(const PortedExtensor& n, const Orientation& o) {
  return contract(big_m(n, o), n.nonports);
}

AltTensor m_empty(const PortedExtensor& n, const Orientation& o) {
  if (!n.nonports.empty()) throw Error("m_empty requires E to be empty");
  GroundSet ps = port_space(n.ports);
  if (n.tensor.is_zero()) return AltTensor::zero(ps);
  int p = static_cast<int>(n.ports.size());
  AltTensor out(ps, p);
  int pairs = 1 << p;
  bool any = false;
  for (int imask = 0; imask < pairs; ++imask) {
    for (int vmask = 0; vmask < pairs; ++vmask) {
      if (__builtin_popcount(imask) + __builtin_popcount(vmask) != p) continue;
      std::vector<std::string> I, V, Vbar;
      for (int k = 0; k < p; ++k) {
        if (imask & (1 << k)) I.push_back(n.ports[k]);
        if (vmask & (1 << k)) V.push_back(n.ports[k]);
        else Vbar.push_back(n.ports[k]);
      }
      std::vector<std::string> vbar_v = Vbar;
      vbar_v.insert(vbar_v.end(), V.begin(), V.end());
      int sign = o.eps(vbar_v);
      if (sign == 0) continue;
      RingElem value =
          RingElem::constant(sign) * n.tensor.coord(I) * n.tensor.coord(Vbar);
      if (value.is_zero()) continue;
      std::vector<int> key;
      for (const auto& q : I) key.push_back(ps.pos(iota_copy(q)));
      for (const auto& q : V) key.push_back(ps.pos(upsilon_copy(q)));
      out.set_coord_positions(key, value);
      any = true;
    }
  }
  return any ? out : AltTensor::zero(ps);
}

AltTensor subset_expansion(const PortedExtensor& n, const Orientation& o) {
  GroundSet ps = port_space(n.ports);
  if (n.tensor.is_zero()) return AltTensor::zero(ps);
  int p = static_cast<int>(n.ports.size());
  int ecount = static_cast<int>(n.nonports.size());
  std::vector<std::string> pe = n.ports;
  pe.insert(pe.end(), n.nonports.begin(), n.nonports.end());
  int eps_pe = o.eps(pe);
  int eps_p = o.eps(std::span<const std::string>(n.ports.data(), n.ports.size()));
  AltTensor out(ps, p);
  bool any = false;
  for (int imask = 0; imask < (1 << p); ++imask) {
    for (int vmask = 0; vmask < (1 << p); ++vmask) {
      if (__builtin_popcount(imask) + __builtin_popcount(vmask) != p) continue;
      std::vector<std::string> I, V, Vbar;
      for (int k = 0; k < p; ++k) {
        if (imask & (1 << k)) I.push_back(n.ports[k]);
        if (vmask & (1 << k)) V.push_back(n.ports[k]);
        else Vbar.push_back(n.ports[k]);
      }
      std::vector<std::string> vbar_v = Vbar;
      vbar_v.insert(vbar_v.end(), V.begin(), V.end());
      int eps_vv = o.eps(vbar_v);
      if (eps_vv == 0) continue;
      RingElem total;
      for (int amask = 0; amask < (1 << ecount); ++amask) {
        std::vector<std::string> IA = I, VA = Vbar;
        RingElem weight = RingElem::constant(1);
        for (int k = 0; k < ecount; ++k) {
          const std::string& e = n.nonports[k];
          if (amask & (1 << k)) {
            IA.push_back(e);
            VA.push_back(e);
            weight = weight * n.gparam(e);
          } else {
            weight = weight * n.rparam(e);
          }
        }
        RingElem term = n.tensor.coord(IA) * n.tensor.coord(VA);
        if (term.is_zero()) continue;
        total += term * weight;
      }
      RingElem value = RingElem::constant(eps_vv * eps_pe * eps_p) * total;
      if (value.is_zero()) continue;
      std::vector<int> key;
      for (const auto& q : I) key.push_back(ps.pos(iota_copy(q)));
      for (const auto& q : V) key.push_back(ps.pos(upsilon_copy(q)));
      out.set_coord_positions(key, value);
      any = true;
    }
  }
  return any ? out : AltTensor::zero(ps);
}

Orientation restrict_orientation(const Orientation& o, const GroundSet& small) {
  return Orientation{small, o.flip};
}

PortedExtensor minor_contract(const PortedExtensor& n, const std::string& e) {
  PortedExtensor out = n;
  out.tensor = contract(n.tensor, std::vector<std::string>{e});
  out.nonports.erase(std::find(out.nonports.begin(), out.nonports.end(), e));
  out.params.erase(e);
  return out;
}

PortedExtensor minor_delete(const PortedExtensor& n, const std::string& e) {
  PortedExtensor out = n;
  out.tensor = delete_element(n.tensor, e);
  out.nonports.erase(std::find(out.nonports.begin(), out.nonports.end(), e));
  out.params.erase(e);
  return out;
}

bool verify_sum_rule(const PortedExtensor& n, const std::string& e,
                     const Orientation& o) {
  AltTensor lhs = m_e(n, o);
  PortedExtensor con = minor_contract(n, e);
  PortedExtensor del = minor_delete(n, e);
  Orientation osub = restrict_orientation(o, con.tensor.ground());
  AltTensor rhs_sum = add(scale(n.gparam(e), m_e(con, osub)),
                          scale(n.rparam(e), m_e(del, osub)));
  std::vector<std::string> pe = n.ports;
  pe.insert(pe.end(), n.nonports.begin(), n.nonports.end());
  std::vector<std::string> pe_prime = n.ports;
  for (const auto& f : n.nonports)
    if (f != e) pe_prime.push_back(f);
  int pre = o.eps(pe) * o.eps(pe_prime);
  return lhs == scale(RingElem::constant(pre), rhs_sum);
}

PortedExtensor direct_sum(const PortedExtensor& n1, const PortedExtensor& n2) {
  std::vector<std::string> elems = n1.tensor.ground().elems();
  for (const auto& s : n2.tensor.ground().elems()) elems.push_back(s);
  GroundSet big(elems);
  AltTensor tensor = wedge(embed(n1.tensor, big), embed(n2.tensor, big));
  std::vector<std::string> ports = n1.ports, nonports = n1.nonports;
  ports.insert(ports.end(), n2.ports.begin(), n2.ports.end());
  nonports.insert(nonports.end(), n2.nonports.begin(), n2.nonports.end());
  PortedExtensor out{std::move(tensor), std::move(ports), std::move(nonports),
                     n1.params};
  out.params.insert(n2.params.begin(), n2.params.end());
  return out;
}

bool verify_product_rule(const PortedExtensor& n1, const PortedExtensor& n2) {
  PortedExtensor ds = direct_sum(n1, n2);
  Orientation o_big{ds.tensor.ground()};
  AltTensor lhs = m_e(ds, o_big);

  AltTensor me1 = m_e(n1, Orientation{n1.tensor.ground()});
  AltTensor me2 = m_e(n2, Orientation{n2.tensor.ground()});
  GroundSet ps = port_space(ds.ports);
  AltTensor prod = wedge(embed(me1, ps), embed(me2, ps));

  std::vector<std::string> p1p2e = ds.ports;
  p1p2e.insert(p1p2e.end(), ds.nonports.begin(), ds.nonports.end());
  std::vector<std::string> p1e1 = n1.ports;
  p1e1.insert(p1e1.end(), n1.nonports.begin(), n1.nonports.end());
  std::vector<std::string> p2e2 = n2.ports;
  p2e2.insert(p2e2.end(), n2.nonports.begin(), n2.nonports.end());
  int pre = o_big.eps(p1p2e) * Orientation{n1.tensor.ground()}.eps(p1e1) *
            Orientation{n2.tensor.ground()}.eps(p2e2);
  return lhs == scale(RingElem::constant(pre), prod);
}

std::pair<RingElem, RingElem> basis_enumerator_coords(const PortedExtensor& n,
                                                      const Orientation& o) {
  AltTensor me = m_e(n, o);
  std::vector<std::string> pe = n.ports;
  pe.insert(pe.end(), n.nonports.begin(), n.nonports.end());
  RingElem eps_pe = RingElem::constant(o.eps(pe));
  std::vector<std::string> pi, pv;
  for (const auto& p : n.ports) {
    pi.push_back(iota_copy(p));
    pv.push_back(upsilon_copy(p));
  }
  return {eps_pe * me.coord(pi), eps_pe * me.coord(pv)};
}

}  // namespace portex
