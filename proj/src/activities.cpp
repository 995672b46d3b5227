#include "portex/activities.hpp"

#include <algorithm>
#include <random>

namespace portex {

namespace {

// non-separators = elements of E that are neither loops nor coloops
std::vector<std::string> non_separators(const PortedExtensor& n) {
  if (n.tensor.is_zero()) return {};
  auto [loops, coloops] = loops_and_coloops(n.tensor);
  std::vector<std::string> out;
  for (const auto& e : n.nonports)
    if (!loops.count(e) && !coloops.count(e)) out.push_back(e);
  return out;
}

std::unique_ptr<CompTreeNode> build_node(
    const PortedExtensor& n,
    const std::function<std::string(const std::vector<std::string>&)>& pick) {
  auto node = std::make_unique<CompTreeNode>(n);
  std::vector<std::string> candidates = non_separators(n);
  if (candidates.empty()) return node;
  node->reduced = pick(candidates);
  node->contracted = build_node(minor_contract(n, node->reduced), pick);
  node->deleted = build_node(minor_delete(n, node->reduced), pick);
  return node;
}

}  // namespace

CompTree build_tree(const PortedExtensor& n, const std::vector<std::string>& order) {
  if (n.tensor.is_zero()) throw Error("computation tree of the zero tensor");
  std::map<std::string, int> prio;
  for (size_t i = 0; i < order.size(); ++i) prio[order[i]] = static_cast<int>(i);
  auto pick = [&](const std::vector<std::string>& cands) {
    std::string best = cands.front();
    for (const auto& e : cands) {
      auto it = prio.find(e);
      if (it == prio.end()) throw Error("element missing from order: " + e);
      if (it->second > prio.at(best)) best = e;
    }
    return best;
  };
  return CompTree{build_node(n, pick)};
}

CompTree build_tree_arbitrary(const PortedExtensor& n, uint64_t seed) {
  if (n.tensor.is_zero()) throw Error("computation tree of the zero tensor");
  auto rng = std::make_shared<std::mt19937_64>(seed);
  auto pick = [rng](const std::vector<std::string>& cands) {
    return cands[(*rng)() % cands.size()];
  };
  return CompTree{build_node(n, pick)};
}

std::vector<std::set<std::string>> p_subbases(const PortedExtensor& n) {
  if (n.tensor.is_zero()) throw Error("P-subbases of the zero tensor");
  int rho = *n.tensor.rank();
  std::set<std::string> pset(n.ports.begin(), n.ports.end());
  int ecount = static_cast<int>(n.nonports.size());
  std::vector<std::set<std::string>> out;
  for (int mask = 0; mask < (1 << ecount); ++mask) {
    std::set<std::string> f;
    for (int k = 0; k < ecount; ++k)
      if (mask & (1 << k)) f.insert(n.nonports[k]);
    if (subset_rank(n.tensor, f) != static_cast<int>(f.size())) continue;
    std::set<std::string> fp = f;
    fp.insert(pset.begin(), pset.end());
    if (subset_rank(n.tensor, fp) != rho) continue;
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

ActivitySets activities_at(const CompTreeNode& leaf, std::set<std::string> ip,
                           std::set<std::string> ep) {
  ActivitySets a;
  a.IP = std::move(ip);
  a.EP = std::move(ep);
  if (!leaf.minor.tensor.is_zero()) {
    auto [loops, coloops] = loops_and_coloops(leaf.minor.tensor);
    for (const auto& e : leaf.minor.nonports) {
      if (coloops.count(e)) a.IA.insert(e);
      if (loops.count(e)) a.EA.insert(e);
    }
  }
  a.F = a.IP;
  a.F.insert(a.IA.begin(), a.IA.end());
  return a;
}

void walk_leaves(const CompTreeNode& node, std::set<std::string>& ip,
                 std::set<std::string>& ep,
                 const std::function<void(const CompTreeNode&,
                                          const std::set<std::string>&,
                                          const std::set<std::string>&)>& fn) {
  if (node.is_leaf()) {
    fn(node, ip, ep);
    return;
  }
  ip.insert(node.reduced);
  walk_leaves(*node.contracted, ip, ep, fn);
  ip.erase(node.reduced);
  ep.insert(node.reduced);
  walk_leaves(*node.deleted, ip, ep, fn);
  ep.erase(node.reduced);
}

}  // namespace

ActivitySets leaf_for(const CompTree& t, const std::set<std::string>& fprime) {
  const CompTreeNode* node = t.root.get();
  std::set<std::string> ip, ep;
  while (!node->is_leaf()) {
    if (fprime.count(node->reduced)) {
      ip.insert(node->reduced);
      node = node->contracted.get();
    } else {
      ep.insert(node->reduced);
      node = node->deleted.get();
    }
  }
  return activities_at(*node, std::move(ip), std::move(ep));
}

std::pair<std::vector<Interval>, std::vector<Interval>> interval_partitions(
    const CompTree& t) {
  std::vector<Interval> primal, dual;
  std::set<std::string> all_e(t.root->minor.nonports.begin(),
                              t.root->minor.nonports.end());
  std::set<std::string> ip, ep;
  walk_leaves(*t.root, ip, ep,
              [&](const CompTreeNode& leaf, const std::set<std::string>& cip,
                  const std::set<std::string>& cep) {
                ActivitySets a = activities_at(leaf, cip, cep);
                Interval pr{a.IP, a.F};
                pr.hi.insert(a.EA.begin(), a.EA.end());
                primal.push_back(std::move(pr));
                Interval du{a.EP, {}};
                for (const auto& e : all_e)
                  if (!a.F.count(e)) du.hi.insert(e);
                du.hi.insert(a.IA.begin(), a.IA.end());
                dual.push_back(std::move(du));
              });
  return {primal, dual};
}

RingElem tutte_expression(
    const PortedExtensor& n, const CompTree& t,
    const std::function<RingElem(const std::string&)>& x,
    const std::function<RingElem(const std::string&)>& y) {
  RingElem total;
  std::set<std::string> ip, ep;
  walk_leaves(*t.root, ip, ep,
              [&](const CompTreeNode& leaf, const std::set<std::string>& cip,
                  const std::set<std::string>& cep) {
                ActivitySets a = activities_at(leaf, cip, cep);
                RingElem term = RingElem::constant(1);
                if (!n.ports.empty()) {
                  Chirotope c = chirotope(minor_on_ports(n, a.F));
                  RingElem b;
                  b.add_term(bracket_monomial(c), Rational(1));
                  term = term * b;
                }
                for (const auto& e : a.IA) term = term * x(e);
                for (const auto& e : a.IP) term = term * n.gparam(e);
                for (const auto& e : a.EA) term = term * y(e);
                for (const auto& e : a.EP) term = term * n.rparam(e);
                total += term;
              });
  return total;
}

RingElem tutte_expression_binomials(const PortedExtensor& n, const CompTree& t) {
  RingElem u = RingElem::variable(Variable::u());
  RingElem v = RingElem::variable(Variable::v());
  return tutte_expression(
      n, t, [&](const std::string& e) { return n.gparam(e) + n.rparam(e) * u; },
      [&](const std::string& e) { return n.rparam(e) + n.gparam(e) * v; });
}

std::vector<std::set<std::string>> flats_in_e(const PortedExtensor& n) {
  if (n.tensor.is_zero()) throw Error("flats of the zero tensor");
  int ecount = static_cast<int>(n.nonports.size());
  std::set<std::set<std::string>> seen;
  for (int mask = 0; mask < (1 << ecount); ++mask) {
    std::set<std::string> a;
    for (int k = 0; k < ecount; ++k)
      if (mask & (1 << k)) a.insert(n.nonports[k]);
    std::set<std::string> cl = closure(n.tensor, a);
    std::set<std::string> fe;
    for (const auto& e : n.nonports)
      if (cl.count(e)) fe.insert(e);
    seen.insert(std::move(fe));
  }
  std::vector<std::set<std::string>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [](const std::set<std::string>& a, const std::set<std::string>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

RingElem flat_expansion(const PortedExtensor& n) {
  std::vector<std::set<std::string>> flats = flats_in_e(n);
  int fcount = static_cast<int>(flats.size());
  auto leq = [&](int g, int f) {
    return std::includes(flats[f].begin(), flats[f].end(), flats[g].begin(),
                         flats[g].end());
  };
  // Moebius function of the flat lattice by recursive inversion
  std::vector<std::vector<Int>> mu(fcount, std::vector<Int>(fcount, 0));
  for (int g = 0; g < fcount; ++g) {
    for (int f = 0; f < fcount; ++f) {
      if (!leq(g, f)) continue;
      if (g == f) {
        mu[g][f] = 1;
        continue;
      }
      Int acc = 0;
      for (int h = 0; h < fcount; ++h)
        if (h != f && leq(g, h) && leq(h, f)) acc += mu[g][h];
      mu[g][f] = -acc;
    }
  }
  int rho = *n.tensor.rank();
  RingElem total;
  for (int f = 0; f < fcount; ++f) {
    int rho_f = subset_rank(n.tensor, flats[f]);
    std::set<std::string> pf(n.ports.begin(), n.ports.end());
    pf.insert(flats[f].begin(), flats[f].end());
    int rho_q = subset_rank(n.tensor, pf) - rho_f;
    RingElem bracket = RingElem::constant(1);
    if (!n.ports.empty()) {
      Chirotope c = chirotope(minor_on_ports(n, flats[f]));
      RingElem b;
      b.add_term(bracket_monomial(c), Rational(1));
      bracket = b;
    }
    RingElem inner;
    for (int g = 0; g < fcount; ++g) {
      if (!leq(g, f) || mu[g][f] == 0) continue;
      RingElem prod = RingElem::constant(Rational(mu[g][f]));
      for (const auto& e : n.nonports) {
        if (flats[g].count(e))
          prod = prod * (n.rparam(e) + n.gparam(e) * RingElem::variable(Variable::v()));
        else
          prod = prod * n.rparam(e);
      }
      inner += prod;
    }
    RingElem upow = RingElem::constant(1);
    for (int k = 0; k < rho - rho_q - rho_f; ++k)
      upow = upow * RingElem::variable(Variable::u());
    total += bracket * upow * RingElem::v_power(-rho_f, true) * inner;
  }
  if (!total.is_polynomial())
    throw Error("Laurent residue: negative v powers survive the flat expansion");
  return total;
}

}  // namespace portex
