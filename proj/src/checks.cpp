#include "portex/checks.hpp"

#include <random>
#include <sstream>

#include "portex/json_io.hpp"

namespace portex::checks {

namespace {

const char* kK4Net = R"(# ported K4, Fig. 1
vertex 1
vertex 2
vertex 3
vertex 4
edge p1 3 1 port
edge p2 2 4 port
edge p3 1 2 port
edge e1 1 2
edge e2 1 4
edge e3 2 3
edge e4 4 3
)";

AltTensor k4_matrix_extensor() {
  GroundSet g({"p1", "p2", "p3", "e1", "e2", "e3", "e4"});
  std::vector<std::vector<Rational>> rows = {
      {-1, 0, 1, 1, 1, 0, 0}, {0, 1, -1, -1, 0, 1, 0}, {-1, -1, 1, 1, 0, 0, 1}};
  return from_matrix_rational(g, rows);
}

Rational random_entry(std::mt19937_64& rng) {
  int num = static_cast<int>(rng() % 7) - 3;
  int den = 1 + static_cast<int>(rng() % 2);
  return Rational(num) / den;
}

AltTensor random_tensor(std::mt19937_64& rng, const GroundSet& g, int rank) {
  std::vector<std::vector<Rational>> rows(rank,
                                          std::vector<Rational>(g.size()));
  for (auto& row : rows)
    for (auto& v : row) v = random_entry(rng);
  return from_matrix_rational(g, rows);
}

PortedExtensor random_ported(std::mt19937_64& rng, int pcount, int ecount,
                             const std::string& pp = "p",
                             const std::string& ep = "e") {
  std::vector<std::string> ports, nonports, all;
  for (int i = 0; i < pcount; ++i) ports.push_back(pp + std::to_string(i + 1));
  for (int i = 0; i < ecount; ++i)
    nonports.push_back(ep + std::to_string(i + 1));
  all = ports;
  all.insert(all.end(), nonports.begin(), nonports.end());
  GroundSet g(all);
  int size = pcount + ecount;
  int rank = 1 + static_cast<int>(rng() % std::max(1, size - 1));
  return make_ported(random_tensor(rng, g, rank), ports, nonports);
}

Network random_network(std::mt19937_64& rng, int vertices, int edges,
                       int port_count, bool unit_r) {
  Network net;
  for (int i = 0; i < vertices; ++i)
    net.vertices.push_back("w" + std::to_string(i + 1));
  for (int i = 0; i < edges; ++i) {
    NetEdge e;
    e.is_port = i < port_count;
    e.name = (e.is_port ? "p" : "e") +
             std::to_string(e.is_port ? i + 1 : i - port_count + 1);
    int a = static_cast<int>(rng() % vertices);
    int b = static_cast<int>(rng() % vertices);
    while (b == a) b = static_cast<int>(rng() % vertices);
    e.tail = net.vertices[a];
    e.head = net.vertices[b];
    e.g = RingElem::variable(Variable::g(e.name));
    e.r = unit_r ? RingElem::constant(1)
                 : RingElem::variable(Variable::r(e.name));
    net.edges.push_back(std::move(e));
  }
  return net;
}

std::string describe(const PortedExtensor& n) {
  Json j = tensor_to_json(n.tensor);
  j["ports"] = n.ports;
  j["nonports"] = n.nonports;
  return j.dump();
}

std::string describe(const Network& net) {
  std::ostringstream out;
  for (const auto& e : net.edges)
    out << "edge " << e.name << " " << e.tail << " " << e.head
        << (e.is_port ? " port" : "") << "\n";
  return out.str();
}

std::string pick_non_separator(const PortedExtensor& n) {
  if (n.tensor.is_zero()) return "";
  auto [loops, coloops] = loops_and_coloops(n.tensor);
  for (const auto& e : n.nonports)
    if (!loops.count(e) && !coloops.count(e)) return e;
  return "";
}

}  // namespace

const char* k4_network_text() { return kK4Net; }

PortedExtensor k4_paper_extensor() {
  return make_ported(k4_matrix_extensor(), {"p1", "p2", "p3"},
                     {"e1", "e2", "e3", "e4"});
}

Result verify_sum(const Options& o) {
  Result res;
  std::mt19937_64 rng(o.seed);
  while (res.checked < o.random) {
    int p = static_cast<int>(rng() % 3);
    int e = 2 + static_cast<int>(rng() % std::max(1, o.max_size - p - 1));
    if (p + e > o.max_size) continue;
    PortedExtensor n = random_ported(rng, p, e);
    if (n.tensor.is_zero()) continue;
    std::string elem = pick_non_separator(n);
    if (elem.empty()) continue;
    Orientation ori{n.tensor.ground(), res.checked % 4 == 3};
    if (!verify_sum_rule(n, elem, ori)) {
      res.pass = false;
      res.counterexample = "sum rule fails at " + elem + ": " + describe(n);
      return res;
    }
    ++res.checked;
  }
  return res;
}

Result verify_product(const Options& o) {
  Result res;
  std::mt19937_64 rng(o.seed);
  while (res.checked < o.random) {
    int half = std::max(2, o.max_size / 2);
    PortedExtensor n1 = random_ported(rng, 1 + static_cast<int>(rng() % 2),
                                      1 + static_cast<int>(rng() % (half - 1)));
    PortedExtensor n2 =
        random_ported(rng, static_cast<int>(rng() % 2),
                      1 + static_cast<int>(rng() % (half - 1)), "q", "f");
    if (n1.tensor.is_zero() || n2.tensor.is_zero()) continue;
    if (!verify_product_rule(n1, n2)) {
      res.pass = false;
      res.counterexample =
          "product rule fails: " + describe(n1) + " with " + describe(n2);
      return res;
    }
    ++res.checked;
  }
  return res;
}

Result verify_identities(const Options& o) {
  Result res;
  std::mt19937_64 rng(o.seed);
  auto c = [](int v) { return RingElem::constant(Rational(v)); };
  while (res.checked < o.random) {
    int n = 3 + static_cast<int>(rng() % std::max(1, o.max_size - 2));
    int r = 1 + static_cast<int>(rng() % (n - 1));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("s" + std::to_string(i + 1));
    GroundSet g(names);
    AltTensor x = random_tensor(rng, g, r);
    if (x.is_zero()) continue;
    Orientation ori{g};
    int rd = n - r;
    std::string fail;
    if (dual(dual(x, ori), ori) != scale(c((r * rd) % 2 ? -1 : 1), x))
      fail = "PerpPerp";
    std::string e = g.at(n - 1);
    GroundSet gs = g.without(e);
    Orientation os{gs};
    std::vector<std::string> sprime = gs.elems();
    std::vector<std::string> sprime_x = sprime;
    sprime_x.push_back(e);
    int pre = ori.eps(sprime) * ori.eps(sprime_x);
    if (fail.empty() &&
        dual(delete_element(x, e), os) !=
            scale(c(pre), contract(dual(x, ori), std::vector<std::string>{e})))
      fail = "DeletePerp";
    int extra = ((n - r) % 2 == 0) ? 1 : -1;
    if (fail.empty() &&
        dual(contract(x, std::vector<std::string>{e}), os) !=
            scale(c(pre * extra), delete_element(dual(x, ori), e)))
      fail = "ContractPerp";
    if (fail.empty()) {
      AltTensor y = random_tensor(
          rng, GroundSet({"t1", "t2", "t3"}), 1 + static_cast<int>(rng() % 2));
      if (!y.is_zero()) {
        std::vector<std::string> all = names;
        for (const auto& t : y.ground().elems()) all.push_back(t);
        GroundSet big(all);
        AltTensor prod = wedge(embed(x, big), embed(y, big));
        if (!prod.is_zero()) {
          int sign = (((n - r) * *y.rank()) % 2 == 0) ? 1 : -1;
          AltTensor rhs = scale(
              c(sign), wedge(embed(dual(x, ori), big),
                             embed(dual(y, Orientation{y.ground()}), big)));
          if (dual(prod, Orientation{big}) != rhs) fail = "ProdPerp";
        }
      }
    }
    if (!fail.empty()) {
      res.pass = false;
      res.counterexample = fail + " fails: " + tensor_to_json(x).dump();
      return res;
    }
    ++res.checked;
  }
  return res;
}

Result verify_rankpoly(const Options& o) {
  Result res;
  std::mt19937_64 rng(o.seed);
  while (res.checked < o.random) {
    int p = static_cast<int>(rng() % 3);
    int e = 2 + static_cast<int>(rng() % 3);
    if (p + e > o.max_size) continue;
    PortedExtensor n = random_ported(rng, p, e);
    if (n.tensor.is_zero()) continue;
    std::string elem = pick_non_separator(n);
    if (elem.empty()) continue;
    if (!verify_rank_poly_sum(n, elem)) {
      res.pass = false;
      res.counterexample = "R sum rule fails at " + elem + ": " + describe(n);
      return res;
    }
    PortedExtensor n2 = random_ported(rng, static_cast<int>(rng() % 2),
                                      1 + static_cast<int>(rng() % 2), "q", "f");
    if (!n2.tensor.is_zero() && !verify_rank_poly_product(n, n2)) {
      res.pass = false;
      res.counterexample =
          "R product rule fails: " + describe(n) + " with " + describe(n2);
      return res;
    }
    ++res.checked;
  }
  return res;
}

Result verify_substitution(const Options& o) {
  Result res;
  PortedExtensor k4 = k4_paper_extensor();
  if (substitute_extensors(rank_poly(k4), k4,
                           Orientation{k4.tensor.ground()}) !=
      m_e(k4, Orientation{k4.tensor.ground()})) {
    res.pass = false;
    res.counterexample = "substitution fails on the bundled K4";
    return res;
  }
  ++res.checked;
  std::mt19937_64 rng(o.seed);
  while (res.checked < o.random + 1) {
    int vertices = 3 + static_cast<int>(rng() % 3);
    int edges = 3 + static_cast<int>(rng() % 3);
    int pcount = 1 + static_cast<int>(rng() % 2);
    Network net = random_network(rng, vertices, edges, pcount, false);
    PortedExtensor n = incidence_extensor(net);
    if (n.tensor.is_zero()) continue;
    n.tensor = unimodular_normalize(n.tensor);
    Orientation ori{n.tensor.ground()};
    if (substitute_extensors(rank_poly(n), n, ori) != m_e(n, ori)) {
      res.pass = false;
      res.counterexample = "substitution fails on:\n" + describe(net);
      return res;
    }
    ++res.checked;
  }
  return res;
}

namespace {

bool interval_contains(const Interval& iv, const std::set<std::string>& s) {
  return std::includes(s.begin(), s.end(), iv.lo.begin(), iv.lo.end()) &&
         std::includes(iv.hi.begin(), iv.hi.end(), s.begin(), s.end());
}

bool tiles_once(const std::vector<Interval>& ivs,
                const std::vector<std::string>& e) {
  int n = static_cast<int>(e.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::set<std::string> s;
    for (int k = 0; k < n; ++k)
      if (mask & (1 << k)) s.insert(e[k]);
    int hits = 0;
    for (const auto& iv : ivs)
      if (interval_contains(iv, s)) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace

Result verify_activities(const Options& o) {
  Result res;
  std::mt19937_64 rng(o.seed);
  while (res.checked < o.random) {
    int p = static_cast<int>(rng() % 3);
    int e = 2 + static_cast<int>(rng() % 3);  // |E| <= 4
    PortedExtensor n = random_ported(rng, p, e);
    if (n.tensor.is_zero()) continue;
    RingElem r = rank_poly(n).poly;
    std::vector<std::string> order = n.nonports;
    std::shuffle(order.begin(), order.end(), rng);
    CompTree t1 = build_tree(n, order);
    CompTree t2 = build_tree_arbitrary(n, rng());
    for (const CompTree* t : {&t1, &t2}) {
      auto [primal, dual_ivs] = interval_partitions(*t);
      if (!tiles_once(primal, n.nonports) || !tiles_once(dual_ivs, n.nonports)) {
        res.pass = false;
        res.counterexample = "interval partition fails: " + describe(n);
        return res;
      }
      if (tutte_expression_binomials(n, *t) != r) {
        res.pass = false;
        res.counterexample = "Tutte expression differs from R: " + describe(n);
        return res;
      }
    }
    ++res.checked;
  }
  return res;
}

Result verify_flats(const Options& o) {
  Result res;
  std::mt19937_64 rng(o.seed);
  while (res.checked < o.random) {
    int p = static_cast<int>(rng() % 3);
    int e = 2 + static_cast<int>(rng() % 4);  // |E| <= 5
    PortedExtensor n = random_ported(rng, p, e);
    if (n.tensor.is_zero()) continue;
    if (flat_expansion(n) != rank_poly(n).poly) {
      res.pass = false;
      res.counterexample = "flat expansion differs from R: " + describe(n);
      return res;
    }
    ++res.checked;
  }
  return res;
}

Result verify_maxwell(const Options& o) {
  Result res;
  auto gv = [](const std::string& e) {
    return RingElem::variable(Variable::g(e));
  };
  Network series = parse_network(
      "edge p1 a c port\nedge p2 a c port\nedge e1 a b r=1\nedge e2 b c r=1");
  auto [n2, d2] = maxwell_rho21(series, "p1", "p2");
  if (n2 * (gv("e1") * gv("e2")) != d2 * (gv("e1") + gv("e2"))) {
    res.pass = false;
    res.counterexample = "series closed form 1/g1 + 1/g2 fails";
    return res;
  }
  Network par = parse_network(
      "edge p1 a b port\nedge p2 a b port\nedge e1 a b r=1\nedge e2 a b r=1");
  auto [n3, d3] = maxwell_rho21(par, "p1", "p2");
  if (n3 * (gv("e1") + gv("e2")) != d3) {
    res.pass = false;
    res.counterexample = "parallel closed form 1/(g1+g2) fails";
    return res;
  }
  res.checked = 2;
  std::mt19937_64 rng(o.seed);
  while (res.checked < o.random + 2) {
    int vertices = 3 + static_cast<int>(rng() % 4);
    int edges = vertices + static_cast<int>(rng() % 4);
    Network net = random_network(rng, vertices, edges, 2, true);
    if (spanning_tree_enumerator(net).is_zero()) continue;
    try {
      maxwell_rho21(net, "p1", "p2");  // throws on disagreement
    } catch (const Error& err) {
      res.pass = false;
      res.counterexample = std::string(err.what()) + " on:\n" + describe(net);
      return res;
    }
    ++res.checked;
  }
  return res;
}

Result verify_matrixtree(const Options& o) {
  Result res;
  Network tri = parse_network("edge e1 a b\nedge e2 b c\nedge e3 c a");
  Network k4r = parse_network(
      "edge e1 1 2\nedge e2 1 4\nedge e3 2 3\nedge e4 4 3");
  if (!id_laplacian_presentation_check(tri) ||
      !id_laplacian_presentation_check(k4r)) {
    res.pass = false;
    res.counterexample = "[I L] presentation check fails on a bundled graph";
    return res;
  }
  res.checked = 2;
  std::mt19937_64 rng(o.seed);
  while (res.checked < o.random + 2) {
    int vertices = 3 + static_cast<int>(rng() % 4);
    int edges = vertices - 1 + static_cast<int>(rng() % 4);
    Network net = random_network(rng, vertices, edges, 0, true);
    RingElem trees = spanning_tree_enumerator(net);
    if (trees.is_zero()) continue;
    if (matrix_det(laplacian(net, net.vertices[0])) != trees) {
      res.pass = false;
      res.counterexample = "Laplacian determinant mismatch on:\n" + describe(net);
      return res;
    }
    AltTensor me = port_solution(net).me;
    if (me.rank() != 0 ||
        me.coord(std::vector<std::string>{}) != trees) {
      res.pass = false;
      res.counterexample = "tree enumerator mismatch on:\n" + describe(net);
      return res;
    }
    ++res.checked;
  }
  return res;
}

Result verify_oracle(const Options& o) {
  Result res;
  PortedExtensor k4 = k4_paper_extensor();
  for (bool flip : {false, true}) {
    Orientation ori{k4.tensor.ground(), flip};
    if (m_e(k4, ori) != subset_expansion(k4, ori)) {
      res.pass = false;
      res.counterexample = "oracle mismatch on the bundled K4";
      return res;
    }
    ++res.checked;
  }
  std::mt19937_64 rng(o.seed);
  while (res.checked < o.random + 2) {
    int p = 1 + static_cast<int>(rng() % 3);
    int e = 1 + static_cast<int>(rng() % 4);
    if (p + e > 8) continue;
    PortedExtensor n = random_ported(rng, p, e);
    if (n.tensor.is_zero()) continue;
    Orientation ori{n.tensor.ground(), res.checked % 3 == 0};
    if (m_e(n, ori) != subset_expansion(n, ori)) {
      res.pass = false;
      res.counterexample = "oracle mismatch: " + describe(n);
      return res;
    }
    ++res.checked;
  }
  return res;
}

Result verify_homogeneity(const Options& o) {
  Result res;
  std::mt19937_64 rng(o.seed);
  while (res.checked < o.random) {
    int p = 1 + static_cast<int>(rng() % 2);
    int e = 1 + static_cast<int>(rng() % 3);
    PortedExtensor n = random_ported(rng, p, e);
    if (n.tensor.is_zero()) continue;
    Orientation ori{n.tensor.ground()};
    AltTensor me = m_e(n, ori);
    if (me.is_zero()) continue;
    int rho = *n.tensor.rank();
    int rho_perp = static_cast<int>(n.tensor.ground().size()) - rho;
    // square-free terms with g-degree rho - |I| and r-degree rho-perp - |V|
    for (const auto& [key, val] : me.coords()) {
      int icount = 0;
      for (int q : key)
        if (me.ground().at(q).rfind("i", 0) == 0) ++icount;
      int vcount = static_cast<int>(key.size()) - icount;
      for (const auto& [mono, coeff] : val.terms()) {
        int gdeg = 0, rdeg = 0;
        bool sf = true;
        for (const auto& [var, exp] : mono) {
          if (exp != 1) sf = false;
          if (var.kind == VarKind::G) gdeg += exp;
          if (var.kind == VarKind::R) rdeg += exp;
        }
        if (!sf || gdeg != rho - icount || rdeg != rho_perp - vcount) {
          res.pass = false;
          res.counterexample = "degree/square-free violation: " + describe(n);
          return res;
        }
      }
    }
    // N -> -N invariance
    PortedExtensor neg = n;
    neg.tensor = scale(RingElem::constant(-1), n.tensor);
    if (m_e(neg, ori) != me) {
      res.pass = false;
      res.counterexample = "M_E not invariant under N -> -N: " + describe(n);
      return res;
    }
    // eps flip negates
    if (m_e(n, Orientation{n.tensor.ground(), true}) !=
        scale(RingElem::constant(-1), me)) {
      res.pass = false;
      res.counterexample = "eps flip behavior fails: " + describe(n);
      return res;
    }
    // E reorder: eps(PE) M_E is invariant
    PortedExtensor perm = n;
    std::shuffle(perm.nonports.begin(), perm.nonports.end(), rng);
    std::vector<std::string> pe1 = n.ports, pe2 = perm.ports;
    pe1.insert(pe1.end(), n.nonports.begin(), n.nonports.end());
    pe2.insert(pe2.end(), perm.nonports.begin(), perm.nonports.end());
    AltTensor lhs = scale(RingElem::constant(ori.eps(pe1)), me);
    AltTensor rhs =
        scale(RingElem::constant(ori.eps(pe2)), m_e(perm, ori));
    if (lhs != rhs) {
      res.pass = false;
      res.counterexample = "E reorder behavior fails: " + describe(n);
      return res;
    }
    ++res.checked;
  }
  return res;
}

Result verify_table1() {
  Result res;
  GroundSet g({"p1", "p2"});
  GroundSet ps = port_space({"p1", "p2"});
  auto unit = [&](const std::string& id) {
    std::vector<std::vector<Rational>> row(1, std::vector<Rational>(4));
    row[0][ps.pos(id)] = 1;
    return from_matrix_rational(ps, row);
  };
  auto vec = [&](const std::map<std::string, int>& entries) {
    std::vector<std::vector<Rational>> row(1, std::vector<Rational>(2));
    for (const auto& [id, v] : entries) row[0][g.pos(id)] = v;
    return from_matrix_rational(g, row);
  };
  AltTensor i1 = unit("i1"), i2 = unit("i2"), v1 = unit("v1"), v2 = unit("v2");
  struct Row {
    const char* name;
    AltTensor n;
    AltTensor expect;
  };
  std::vector<Row> rows;
  rows.push_back({"N0+N0", AltTensor::scalar(g, RingElem::constant(1)),
                  wedge(v1, v2)});
  rows.push_back({"N0+N1", vec({{"p2", 1}}), wedge(v1, i2)});
  rows.push_back({"N1+N0", vec({{"p1", 1}}), wedge(i1, v2)});
  rows.push_back({"N1+N1", wedge(vec({{"p1", 1}}), vec({{"p2", 1}})),
                  wedge(i1, i2)});
  rows.push_back({"N1-", vec({{"p1", 1}, {"p2", -1}}),
                  wedge(add(i1, scale(RingElem::constant(-1), i2)),
                        add(v1, v2))});
  rows.push_back({"N1+", vec({{"p1", 1}, {"p2", 1}}),
                  wedge(add(i1, i2),
                        add(v2, scale(RingElem::constant(-1), v1)))});
  Orientation o{g};
  for (const auto& row : rows) {
    PortedExtensor n = make_ported(row.n, {"p1", "p2"}, {});
    if (m_empty(n, o) != row.expect || m_e(n, o) != row.expect) {
      res.pass = false;
      res.counterexample = std::string("table row ") + row.name + " differs";
      return res;
    }
    ++res.checked;
  }
  return res;
}

Result verify_k4() {
  Result res;
  PortConstraint pc = port_solution(parse_network(kK4Net));
  struct Coord {
    std::vector<std::string> index;
    const char* expect;
  };
  std::vector<Coord> coords = {
      {{"v1", "v2", "v3"},
       "1 g1 g2 g3 r4 + 1 g1 g2 g4 r3 + 1 g1 g3 g4 r2 + 1 g2 g3 g4 r1"},
      {{"i1", "v2", "v3"},
       "1 g1 g2 r3 r4 + 1 g1 g4 r2 r3 + 1 g2 g3 r1 r4 + 1 g3 g4 r1 r2"},
      {{"v1", "i1", "v3"}, "-1 g1 g4 r2 r3 + 1 g2 g3 r1 r4"}};
  for (const auto& c : coords) {
    std::string got =
        pc.me.coord(std::span<const std::string>(c.index.data(), c.index.size()))
            .render();
    if (got != c.expect) {
      res.pass = false;
      res.counterexample = "coordinate mismatch, got: " + got;
      return res;
    }
    ++res.checked;
  }
  if (pc.me != m_e(k4_paper_extensor(),
                   Orientation{k4_paper_extensor().tensor.ground()})) {
    res.pass = false;
    res.counterexample = "network and matrix presentations disagree";
  }
  return res;
}

std::vector<std::string> suite_names() {
  return {"sum",        "product",     "identities", "rankpoly", "substitution",
          "activities", "flats",       "maxwell",    "matrixtree"};
}

Result run_suite(const std::string& kind, const Options& o) {
  if (kind == "sum") return verify_sum(o);
  if (kind == "product") return verify_product(o);
  if (kind == "identities") return verify_identities(o);
  if (kind == "rankpoly") return verify_rankpoly(o);
  if (kind == "substitution") return verify_substitution(o);
  if (kind == "activities") return verify_activities(o);
  if (kind == "flats") return verify_flats(o);
  if (kind == "maxwell") return verify_maxwell(o);
  if (kind == "matrixtree") return verify_matrixtree(o);
  throw Error("unknown verify kind: " + kind);
}

}  // namespace portex::checks
