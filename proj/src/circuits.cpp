#include "portex/circuits.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace portex {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int groups() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++n;
    return n;
  }
};

RingElem param_value(const std::string& text, VarKind kind,
                     const std::string& edge) {
  try {
    return RingElem::constant(parse_rational(text));
  } catch (const Error&) {
    // "g=g1" on edge e1 means the default symbol, not a fresh one
    Variable def = kind == VarKind::G ? Variable::g(edge) : Variable::r(edge);
    if (text == def.display()) return RingElem::variable(def);
    Variable v = kind == VarKind::G ? Variable::g(text) : Variable::r(text);
    return RingElem::variable(v);
  }
}

}  // namespace

std::vector<std::string> Network::port_names() const {
  std::vector<std::string> out;
  for (const auto& e : edges)
    if (e.is_port) out.push_back(e.name);
  return out;
}

std::vector<std::string> Network::resistor_names() const {
  std::vector<std::string> out;
  for (const auto& e : edges)
    if (!e.is_port) out.push_back(e.name);
  return out;
}

const NetEdge& Network::edge(const std::string& name) const {
  for (const auto& e : edges)
    if (e.name == name) return e;
  throw Error("unknown edge: " + name);
}

Network parse_network(const std::string& text) {
  Network net;
  std::set<std::string> vseen, eseen;
  auto add_vertex = [&](const std::string& v) {
    if (vseen.insert(v).second) net.vertices.push_back(v);
  };
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    std::string where = " (line " + std::to_string(lineno) + ")";
    if (tok[0] == "vertex") {
      if (tok.size() != 2) throw Error("parse error: vertex needs a name" + where);
      add_vertex(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() < 4)
        throw Error("parse error: edge needs name, tail, head" + where);
      NetEdge e;
      e.name = tok[1];
      e.tail = tok[2];
      e.head = tok[3];
      e.g = RingElem::variable(Variable::g(e.name));
      e.r = RingElem::variable(Variable::r(e.name));
      for (size_t k = 4; k < tok.size(); ++k) {
        if (tok[k] == "port")
          e.is_port = true;
        else if (tok[k].rfind("g=", 0) == 0)
          e.g = param_value(tok[k].substr(2), VarKind::G, e.name);
        else if (tok[k].rfind("r=", 0) == 0)
          e.r = param_value(tok[k].substr(2), VarKind::R, e.name);
        else
          throw Error("parse error: unknown token '" + tok[k] + "'" + where);
      }
      if (!eseen.insert(e.name).second)
        throw Error("duplicate edge: " + e.name + where);
      add_vertex(e.tail);
      add_vertex(e.head);
      net.edges.push_back(std::move(e));
    } else {
      throw Error("parse error: unknown directive '" + tok[0] + "'" + where);
    }
  }
  return net;
}

PortedExtensor incidence_extensor(const Network& net) {
  return incidence_extensor(net, net.port_names());
}

PortedExtensor incidence_extensor(const Network& net,
                                  const std::vector<std::string>& port_order) {
  if (net.vertices.empty()) throw Error("empty graph");
  int nv = static_cast<int>(net.vertices.size());
  std::map<std::string, int> vpos;
  for (int i = 0; i < nv; ++i) vpos[net.vertices[i]] = i;
  UnionFind uf(nv);
  for (const auto& e : net.edges) uf.unite(vpos[e.tail], vpos[e.head]);
  // lex-least vertex of each component becomes the dropped reference
  std::map<int, int> ref;
  for (int i = 0; i < nv; ++i) {
    int root = uf.find(i);
    auto it = ref.find(root);
    if (it == ref.end() || net.vertices[i] < net.vertices[it->second])
      ref[root] = i;
  }
  std::set<int> dropped;
  for (const auto& [root, i] : ref) dropped.insert(i);

  std::vector<std::string> cols = port_order;
  for (const auto& e : net.resistor_names()) cols.push_back(e);
  GroundSet ground(cols);
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < nv; ++i) {
    if (dropped.count(i)) continue;
    std::vector<Rational> row(cols.size());
    for (const auto& e : net.edges) {
      if (e.tail == e.head) continue;  // self-loop: zero column
      int c = ground.pos(e.name);
      if (vpos[e.tail] == i) row[c] = 1;
      if (vpos[e.head] == i) row[c] = -1;
    }
    rows.push_back(std::move(row));
  }
  AltTensor t = rows.empty() ? AltTensor::scalar(ground, RingElem::constant(1))
                             : from_matrix_rational(ground, rows);
  PortedExtensor out = make_ported(t, port_order, net.resistor_names());
  for (const auto& e : net.edges)
    if (!e.is_port) out.params[e.name] = {e.g, e.r};
  return out;
}

std::pair<Matrix, Matrix> network_equations(const Network& net) {
  PortedExtensor n = incidence_extensor(net);
  Orientation o{n.tensor.ground()};
  AltTensor k = iota(n);
  AltTensor c = upsilon(n, dual(n.tensor, o));
  auto rows_of = [](const AltTensor& x) {
    if (x.is_zero() || *x.rank() == 0) return Matrix{};
    return extensor_to_matrix(x);
  };
  return {rows_of(k), rows_of(c)};
}

PortConstraint port_solution(const Network& net) {
  PortedExtensor n = incidence_extensor(net);
  Orientation o{n.tensor.ground()};
  AltTensor me = m_e(n, o);
  Matrix m;
  if (!me.is_zero() && *me.rank() > 0) m = extensor_to_matrix(me);
  return {me, m};
}

Matrix laplacian(const Network& net, const std::string& grounded) {
  std::map<std::string, int> idx;
  std::vector<std::string> kept;
  for (const auto& v : net.vertices) {
    if (v == grounded) continue;
    idx[v] = static_cast<int>(kept.size());
    kept.push_back(v);
  }
  if (kept.size() == net.vertices.size())
    throw Error("unknown grounded vertex: " + grounded);
  Matrix l(kept.size(), std::vector<RingElem>(kept.size()));
  for (const auto& e : net.edges) {
    if (e.is_port || e.tail == e.head) continue;
    if (!(e.r == RingElem::constant(1)))
      throw Error("NonUnitR: resistor " + e.name + " needs r=1");
    auto a = idx.find(e.tail), b = idx.find(e.head);
    if (a != idx.end()) l[a->second][a->second] += e.g;
    if (b != idx.end()) l[b->second][b->second] += e.g;
    if (a != idx.end() && b != idx.end()) {
      l[a->second][b->second] = l[a->second][b->second] - e.g;
      l[b->second][a->second] = l[b->second][a->second] - e.g;
    }
  }
  return l;
}

RingElem matrix_det(const Matrix& m) {
  size_t n = m.size();
  if (n == 0) return RingElem::constant(1);
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i + 1));
  GroundSet g(names);
  AltTensor t = from_matrix(g, m);
  if (t.is_zero()) return RingElem::zero();
  return t.coord(std::span<const std::string>(names.data(), names.size()));
}

namespace {

// subsets of the resistor edges forming a spanning forest with exactly
// `trees` components on the full vertex set
template <typename Fn>
void for_each_forest(const Network& net, int trees, Fn fn) {
  std::vector<const NetEdge*> res;
  for (const auto& e : net.edges)
    if (!e.is_port) res.push_back(&e);
  int nv = static_cast<int>(net.vertices.size());
  std::map<std::string, int> vpos;
  for (int i = 0; i < nv; ++i) vpos[net.vertices[i]] = i;
  int m = static_cast<int>(res.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (__builtin_popcount(mask) != nv - trees) continue;
    UnionFind uf(nv);
    bool cycle = false;
    for (int k = 0; k < m && !cycle; ++k) {
      if (!(mask & (1 << k))) continue;
      int a = vpos[res[k]->tail], b = vpos[res[k]->head];
      if (uf.find(a) == uf.find(b)) cycle = true;
      uf.unite(a, b);
    }
    if (cycle || uf.groups() != trees) continue;
    std::set<std::string> f;
    RingElem weight = RingElem::constant(1);
    for (int k = 0; k < m; ++k) {
      if (mask & (1 << k)) {
        f.insert(res[k]->name);
        weight = weight * res[k]->g;
      }
    }
    fn(f, weight, uf, vpos);
  }
}

}  // namespace

RingElem spanning_tree_enumerator(const Network& net) {
  RingElem total;
  for_each_forest(net, 1,
                  [&](const std::set<std::string>&, const RingElem& w,
                      UnionFind&, const std::map<std::string, int>&) {
                    total += w;
                  });
  return total;
}

bool id_laplacian_presentation_check(const Network& net) {
  Network star;
  star.vertices.push_back("0");
  std::set<std::string> names;
  for (const auto& e : net.edges) names.insert(e.name);
  for (size_t k = 0; k < net.vertices.size(); ++k) {
    star.vertices.push_back(net.vertices[k]);
    NetEdge p;
    p.name = "p" + std::to_string(k + 1);
    if (names.count(p.name)) throw Error("edge name clash: " + p.name);
    p.tail = "0";
    p.head = net.vertices[k];
    p.is_port = true;
    star.edges.push_back(std::move(p));
  }
  for (const auto& e : net.edges) {
    if (e.is_port) continue;
    star.edges.push_back(e);
    star.edges.back().r = RingElem::constant(1);
  }
  PortedExtensor n = incidence_extensor(star);
  Orientation o{n.tensor.ground()};
  AltTensor me = m_e(n, o);

  // [I_n L] over (i_1..i_n, v_1..v_n): KCL at node k reads i_k + (Lv)_k = 0
  Matrix l = laplacian(star, "0");
  size_t nn = net.vertices.size();
  Matrix rows(nn, std::vector<RingElem>(2 * nn));
  for (size_t k = 0; k < nn; ++k) {
    rows[k][k] = RingElem::constant(1);
    for (size_t j = 0; j < nn; ++j) rows[k][nn + j] = l[k][j];
  }
  AltTensor x = from_matrix(port_space(n.ports), rows);
  if (me.is_zero() || x.is_zero()) return false;
  if (me.coords().size() != x.coords().size()) return false;
  // single global ratio: cross-multiply against the lex-least coordinate
  auto ref = me.coords().begin();
  auto xref = x.coords().find(ref->first);
  if (xref == x.coords().end()) return false;
  for (const auto& [key, val] : me.coords()) {
    auto it = x.coords().find(key);
    if (it == x.coords().end()) return false;
    if (!(val * xref->second == ref->second * it->second)) return false;
  }
  return true;
}

std::pair<RingElem, RingElem> maxwell_rho21(const Network& net,
                                            const std::string& p1,
                                            const std::string& p2) {
  std::vector<std::string> ports = net.port_names();
  if (ports.size() != 2 ||
      std::set<std::string>{p1, p2} != std::set<std::string>(ports.begin(),
                                                             ports.end()))
    throw Error("maxwell needs exactly the two declared ports");
  PortedExtensor n = incidence_extensor(net, {p1, p2});
  Orientation o{n.tensor.ground()};
  AltTensor me = m_e(n, o);
  RingElem num_ext = me.coord({upsilon_copy(p1), iota_copy(p1)});
  RingElem den_ext = me.coord({upsilon_copy(p1), upsilon_copy(p2)});

  const NetEdge& e1 = net.edge(p1);
  const NetEdge& e2 = net.edge(p2);
  std::vector<std::string> res = net.resistor_names();
  auto rweight = [&](const std::set<std::string>& f) {
    RingElem w = RingElem::constant(1);
    for (const auto& e : res)
      if (!f.count(e)) w = w * net.edge(e).r;
    return w;
  };
  RingElem num_forest, den_forest;
  for_each_forest(net, 1,
                  [&](const std::set<std::string>& f, const RingElem& w,
                      UnionFind&, const std::map<std::string, int>&) {
                    den_forest += w * rweight(f);
                  });
  for_each_forest(
      net, 2,
      [&](const std::set<std::string>& f, const RingElem& w, UnionFind& uf,
          const std::map<std::string, int>& vpos) {
        int a = uf.find(vpos.at(e1.tail)), b = uf.find(vpos.at(e1.head));
        int c = uf.find(vpos.at(e2.tail)), d = uf.find(vpos.at(e2.head));
        if (a == b || c == d) return;
        if (a == c && b == d) num_forest += w * rweight(f);
        if (a == d && b == c) num_forest += -(w * rweight(f));
      });
  if (den_forest.is_zero() || den_ext.is_zero())
    throw Error("degenerate denominator: no spanning tree of E");
  if (!(num_ext * den_forest == num_forest * den_ext))
    throw Error("maxwell cross-check failed");
  return {num_forest, den_forest};
}

std::vector<ForestContribution> signed_forest_contributions(
    const Network& net, const std::vector<std::string>& index) {
  PortedExtensor n = incidence_extensor(net);
  Orientation o{n.tensor.ground()};
  int p = static_cast<int>(n.ports.size());
  if (static_cast<int>(index.size()) != p)
    throw Error("coordinate index has the wrong size");
  // resolve the ordered index against the port space; the permutation to
  // the canonical I-then-V order contributes its sign
  GroundSet ps = port_space(n.ports);
  std::vector<int> given;
  for (const auto& id : index) given.push_back(ps.pos(id));
  int perm = perm_sign(given);
  if (perm == 0) throw Error("repeated index element");
  std::vector<std::string> iota_ports, V, Vbar;
  std::set<std::string> iset, vset;
  for (const auto& q : n.ports) {
    for (const auto& id : index) {
      if (id == iota_copy(q)) iset.insert(q);
      if (id == upsilon_copy(q)) vset.insert(q);
    }
  }
  for (const auto& q : n.ports) {
    if (iset.count(q)) iota_ports.push_back(q);
    (vset.count(q) ? V : Vbar).push_back(q);
  }
  std::vector<std::string> vbar_v = Vbar;
  vbar_v.insert(vbar_v.end(), V.begin(), V.end());
  std::vector<std::string> pe = n.ports;
  pe.insert(pe.end(), n.nonports.begin(), n.nonports.end());
  int pre = perm * o.eps(vbar_v) *
            o.eps(std::span<const std::string>(n.ports.data(), n.ports.size())) *
            o.eps(pe);
  std::vector<ForestContribution> out;
  if (pre == 0) return out;
  int ecount = static_cast<int>(n.nonports.size());
  for (int amask = 0; amask < (1 << ecount); ++amask) {
    std::vector<std::string> IA = iota_ports, VA = Vbar;
    std::set<std::string> a;
    RingElem weight = RingElem::constant(1);
    for (int k = 0; k < ecount; ++k) {
      const std::string& e = n.nonports[k];
      if (amask & (1 << k)) {
        IA.push_back(e);
        VA.push_back(e);
        a.insert(e);
        weight = weight * n.gparam(e);
      } else {
        weight = weight * n.rparam(e);
      }
    }
    RingElem term = n.tensor.coord(IA) * n.tensor.coord(VA);
    if (term.is_zero()) continue;
    ForestContribution fc;
    fc.a = a;
    fc.bracket = bracket_key(chirotope(minor_on_ports(n, a)));
    fc.sign = pre * (term.constant_value() > 0 ? 1 : -1);
    fc.weight = weight;
    out.push_back(std::move(fc));
  }
  return out;
}

}  // namespace portex
