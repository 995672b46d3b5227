#include "portex/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace portex {

int Chirotope::sign_positions(std::span<const int> seq) const {
  if (static_cast<int>(seq.size()) != rank) return 0;
  int s = perm_sign(seq);
  if (s == 0) return 0;
  std::vector<int> key(seq.begin(), seq.end());
  std::sort(key.begin(), key.end());
  auto it = signs.find(key);
  return it == signs.end() ? 0 : s * it->second;
}

int Chirotope::sign(std::span<const std::string> seq) const {
  std::vector<int> pos;
  pos.reserve(seq.size());
  for (const auto& id : seq) pos.push_back(ground.pos(id));
  return sign_positions(pos);
}

Chirotope chirotope(const AltTensor& x) {
  if (x.is_zero()) throw Error("chirotope of the zero tensor");
  Chirotope c{x.ground(), *x.rank(), {}};
  for (const auto& [key, val] : x.coords()) {
    if (!val.is_constant())
      throw Error("chirotope requires parameter-free coordinates");
    Rational q = val.constant_value();
    c.signs[key] = q > 0 ? 1 : -1;
  }
  return c;
}

int subset_rank(const AltTensor& x, const std::set<std::string>& a) {
  if (x.is_zero()) throw Error("rank query on the zero tensor");
  std::vector<bool> in(x.ground().size(), false);
  for (const auto& id : a) in[x.ground().pos(id)] = true;
  int best = 0;
  for (const auto& [key, val] : x.coords()) {
    int hit = 0;
    for (int q : key)
      if (in[q]) ++hit;
    best = std::max(best, hit);
  }
  return best;
}

std::set<std::string> closure(const AltTensor& x, const std::set<std::string>& a) {
  int base = subset_rank(x, a);
  std::set<std::string> out;
  for (const auto& s : x.ground().elems()) {
    std::set<std::string> ext = a;
    ext.insert(s);
    if (subset_rank(x, ext) == base) out.insert(s);
  }
  return out;
}

bool is_unimodular(const AltTensor& x) {
  if (x.is_zero()) return false;
  Rational c(0);
  for (const auto& [key, val] : x.coords()) {
    if (!val.is_constant()) return false;
    Rational q = abs(val.constant_value());
    if (c == 0) c = q;
    if (q != c) return false;
  }
  return true;
}

AltTensor unimodular_normalize(const AltTensor& x) {
  if (!is_unimodular(x)) throw Error("extensor is not unimodular");
  Rational c = abs(x.coords().begin()->second.constant_value());
  return scale(RingElem::constant(Rational(1) / c), x);
}

std::vector<std::vector<std::string>> connected_components(const Chirotope& c) {
  int n = static_cast<int>(c.ground.size());
  // rank of a position subset straight off the basis keys
  auto rank_of = [&](const std::vector<bool>& in) {
    int best = 0;
    for (const auto& [key, s] : c.signs) {
      int hit = 0;
      for (int q : key)
        if (in[q]) ++hit;
      best = std::max(best, hit);
    }
    return best;
  };
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  // circuits: minimal dependent subsets; any dependent set that stays
  // dependent under one-element removal checks are enough at desk scale
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<bool> in(n, false);
    std::vector<int> members;
    for (int q = 0; q < n; ++q)
      if (mask & (1 << q)) {
        in[q] = true;
        members.push_back(q);
      }
    int sz = static_cast<int>(members.size());
    if (rank_of(in) != sz - 1) continue;
    bool minimal = true;
    for (int q : members) {
      in[q] = false;
      if (rank_of(in) < sz - 1) minimal = false;
      in[q] = true;
    }
    if (!minimal) continue;
    for (int q : members) {
      int a = find(q), b = find(members[0]);
      if (a != b) parent[a] = b;
    }
  }
  std::map<int, std::vector<std::string>> groups;
  for (int q = 0; q < n; ++q) groups[find(q)].push_back(c.ground.at(q));
  std::vector<std::vector<std::string>> out;
  for (auto& [root, elems] : groups) out.push_back(std::move(elems));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// chirotope of one direct-sum component, normalized so the lex-least
// nonzero basis has sign +1
std::string component_key(const Chirotope& c, const std::vector<std::string>& comp) {
  std::vector<int> cpos;
  for (const auto& id : comp) cpos.push_back(c.ground.pos(id));
  std::sort(cpos.begin(), cpos.end());
  const std::vector<int>& b0 = c.signs.begin()->first;  // lex-least basis
  std::vector<int> rest;
  for (int q : b0)
    if (!std::binary_search(cpos.begin(), cpos.end(), q)) rest.push_back(q);
  int crank = static_cast<int>(b0.size() - rest.size());
  // enumerate sorted crank-subsets of the component in lex order
  std::vector<std::pair<std::vector<int>, int>> entries;
  std::vector<int> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(cur.size()) == crank) {
      std::vector<int> seq = cur;
      seq.insert(seq.end(), rest.begin(), rest.end());
      int s = c.sign_positions(seq);
      if (s != 0) entries.emplace_back(cur, s);
      return;
    }
    for (size_t i = start; i < cpos.size(); ++i) {
      cur.push_back(cpos[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  int norm = entries.empty() ? 1 : entries.front().second;
  std::ostringstream out;
  out << "ports=";
  for (size_t i = 0; i < comp.size(); ++i) out << (i ? "," : "") << comp[i];
  out << ";rank=" << crank << ";chi=";
  bool first = true;
  for (const auto& [key, s] : entries) {
    if (!first) out << ",";
    first = false;
    for (size_t i = 0; i < key.size(); ++i)
      out << (i ? " " : "") << c.ground.at(key[i]);
    out << ":" << (s * norm > 0 ? "+" : "-");
  }
  return out.str();
}

}  // namespace

Monomial bracket_monomial(const Chirotope& c) {
  Monomial m;
  for (const auto& comp : connected_components(c))
    m[Variable::bracket(component_key(c, comp))] += 1;
  return m;
}

std::string bracket_key(const Chirotope& c) {
  std::vector<std::string> parts;
  for (const auto& comp : connected_components(c))
    parts.push_back(component_key(c, comp));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? "|" : "") + parts[i];
  return out;
}

AltTensor minor_on_ports(const PortedExtensor& n,
                         const std::set<std::string>& contracted) {
  // contract a maximal independent subset of A, then reduce away the
  // remaining non-ports one at a time
  AltTensor cur = n.tensor;
  std::vector<std::string> leftovers;
  for (const auto& e : n.nonports) {
    if (!contracted.count(e)) {
      leftovers.push_back(e);
      continue;
    }
    std::set<std::string> single = {e};
    if (subset_rank(cur, single) == 1)
      cur = contract(cur, std::vector<std::string>{e});
    else
      leftovers.push_back(e);  // became a loop, handled below
  }
  for (const auto& e : leftovers) {
    auto [loops, coloops] = loops_and_coloops(cur);
    if (coloops.count(e))
      cur = contract(cur, std::vector<std::string>{e});
    else
      cur = delete_element(cur, e);
  }
  return cur;
}

RankPoly rank_poly(const PortedExtensor& n) {
  if (n.tensor.is_zero()) throw Error("rank polynomial of the zero tensor");
  int rho = *n.tensor.rank();
  int ecount = static_cast<int>(n.nonports.size());
  std::set<std::string> pset(n.ports.begin(), n.ports.end());
  RankPoly out;
  for (int mask = 0; mask < (1 << ecount); ++mask) {
    std::set<std::string> a;
    RingElem weight = RingElem::constant(1);
    for (int k = 0; k < ecount; ++k) {
      const std::string& e = n.nonports[k];
      if (mask & (1 << k)) {
        a.insert(e);
        weight = weight * n.gparam(e);
      } else {
        weight = weight * n.rparam(e);
      }
    }
    int rho_a = subset_rank(n.tensor, a);
    std::set<std::string> pa = a;
    pa.insert(pset.begin(), pset.end());
    int rho_minor = subset_rank(n.tensor, pa) - rho_a;
    AltTensor minor = minor_on_ports(n, a);
    Monomial bracket =
        n.ports.empty() ? Monomial{} : bracket_monomial(chirotope(minor));
    Monomial mono = bracket;
    int uexp = rho - rho_minor - rho_a;
    int vexp = static_cast<int>(a.size()) - rho_a;
    if (uexp) mono[Variable::u()] = uexp;
    if (vexp) mono[Variable::v()] = vexp;
    RingElem bterm;
    bterm.add_term(mono, Rational(1));
    out.poly += bterm * weight;
    if (!n.ports.empty() && !out.realizations.count(bracket))
      out.realizations.emplace(bracket, minor);
  }
  return out;
}

AltTensor substitute_extensors(const RankPoly& r, const PortedExtensor& n,
                               const Orientation& o) {
  GroundSet ps = port_space(n.ports);
  std::vector<std::string> pe = n.ports;
  pe.insert(pe.end(), n.nonports.begin(), n.nonports.end());
  int pre = o.eps(std::span<const std::string>(n.ports.data(), n.ports.size())) *
            o.eps(pe);
  AltTensor total = AltTensor::zero(ps);
  Orientation oports{GroundSet(n.ports)};
  for (const auto& [mono, coeff] : r.poly.terms()) {
    Monomial bracket, rest;
    bool has_uv = false;
    for (const auto& [var, exp] : mono) {
      if (var.kind == VarKind::U || var.kind == VarKind::V) has_uv = true;
      else if (var.kind == VarKind::Bracket) bracket[var] = exp;
      else rest[var] = exp;
    }
    if (has_uv) continue;
    AltTensor minor(GroundSet(n.ports), 0);
    if (n.ports.empty()) {
      minor = AltTensor::scalar(GroundSet(n.ports), RingElem::constant(1));
    } else {
      auto it = r.realizations.find(bracket);
      if (it == r.realizations.end())
        throw Error("no realization for a bracket monomial");
      minor = unimodular_normalize(it->second);
    }
    AltTensor sub =
        m_empty(make_ported(minor, n.ports, {}), oports);
    RingElem weight;
    weight.add_term(rest, coeff);
    total = add(total, scale(RingElem::constant(pre) * weight, sub));
  }
  return total;
}

bool verify_rank_poly_sum(const PortedExtensor& n, const std::string& e) {
  auto [loops, coloops] = loops_and_coloops(n.tensor);
  if (loops.count(e) || coloops.count(e))
    throw Error("element is a separator: " + e);
  RingElem lhs = rank_poly(n).poly;
  RingElem rhs = n.gparam(e) * rank_poly(minor_contract(n, e)).poly +
                 n.rparam(e) * rank_poly(minor_delete(n, e)).poly;
  return lhs == rhs;
}

bool verify_rank_poly_product(const PortedExtensor& n1,
                              const PortedExtensor& n2) {
  PortedExtensor ds = direct_sum(n1, n2);
  return rank_poly(ds).poly == rank_poly(n1).poly * rank_poly(n2).poly;
}

}  // namespace portex
