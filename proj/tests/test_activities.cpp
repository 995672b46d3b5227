#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "k4_data.hpp"
#include "portex/activities.hpp"

using namespace portex;

namespace {

RingElem c(int n) { return RingElem::constant(Rational(n)); }
RingElem gv(const std::string& e) { return RingElem::variable(Variable::g(e)); }
RingElem rv(const std::string& e) { return RingElem::variable(Variable::r(e)); }
RingElem uv() { return RingElem::variable(Variable::u()); }
RingElem vv() { return RingElem::variable(Variable::v()); }

AltTensor vec(const GroundSet& g, const std::map<std::string, int>& entries) {
  std::vector<std::vector<Rational>> row(1, std::vector<Rational>(g.size()));
  for (const auto& [e, val] : entries) row[0][g.pos(e)] = val;
  return from_matrix_rational(g, row);
}

PortedExtensor k4_ported() {
  return make_ported(k4_extensor(), {"p1", "p2", "p3"},
                     {"e1", "e2", "e3", "e4"});
}

PortedExtensor triangle() {
  GroundSet g({"e1", "e2", "e3"});
  std::vector<std::vector<Rational>> rows = {{1, 0, -1}, {-1, 1, 0}};
  return make_ported(from_matrix_rational(g, rows), {}, {"e1", "e2", "e3"});
}

// does [lo, hi] contain s?
bool contains(const Interval& iv, const std::set<std::string>& s) {
  return std::includes(s.begin(), s.end(), iv.lo.begin(), iv.lo.end()) &&
         std::includes(iv.hi.begin(), iv.hi.end(), s.begin(), s.end());
}

void check_tiling(const std::vector<Interval>& ivs,
                  const std::vector<std::string>& e) {
  int n = static_cast<int>(e.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::set<std::string> s;
    for (int k = 0; k < n; ++k)
      if (mask & (1 << k)) s.insert(e[k]);
    int hits = 0;
    for (const auto& iv : ivs)
      if (contains(iv, s)) ++hits;
    CHECK(hits == 1);
  }
}

PortedExtensor random_graphic(std::mt19937_64& rng, int vertices, int edges,
                              int port_count) {
  std::uniform_int_distribution<int> pick(0, vertices - 1);
  std::vector<std::string> ports, nonports, all;
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < edges; ++i) {
    std::string name = (i < port_count ? "p" : "e") +
                       std::to_string(i < port_count ? i + 1 : i - port_count + 1);
    (i < port_count ? ports : nonports).push_back(name);
    all.push_back(name);
    ends.emplace_back(pick(rng), pick(rng));
  }
  GroundSet g(all);
  std::vector<std::vector<Rational>> rows(vertices - 1,
                                          std::vector<Rational>(edges));
  for (int i = 0; i < edges; ++i) {
    auto [a, b] = ends[i];
    if (a == b) continue;
    if (a < vertices - 1) rows[a][i] = 1;
    if (b < vertices - 1) rows[b][i] = -1;
  }
  AltTensor t = from_matrix_rational(g, rows);
  while (t.is_zero() && !rows.empty()) {
    rows.pop_back();
    t = from_matrix_rational(g, rows);
  }
  return make_ported(t, ports, nonports);
}

}  // namespace

TEST_CASE("separator-only extensors give single-leaf trees") {
  GroundSet ge({"e1"});
  PortedExtensor coloop = make_ported(vec(ge, {{"e1", 1}}), {}, {"e1"});
  CompTree t = build_tree(coloop, {"e1"});
  CHECK(t.root->is_leaf());
  ActivitySets a = leaf_for(t, {});
  CHECK(a.IA == std::set<std::string>{"e1"});
  CHECK(a.EA.empty());
  CHECK(tutte_expression_binomials(coloop, t) == gv("e1") + rv("e1") * uv());

  PortedExtensor loop = make_ported(AltTensor::scalar(ge, c(1)), {}, {"e1"});
  CompTree tl = build_tree(loop, {"e1"});
  CHECK(tl.root->is_leaf());
  CHECK(leaf_for(tl, {}).EA == std::set<std::string>{"e1"});
  CHECK(tutte_expression_binomials(loop, tl) == rv("e1") + gv("e1") * vv());
}

TEST_CASE("triangle tree and activities") {
  PortedExtensor tri = triangle();
  CompTree t = build_tree(tri, {"e1", "e2", "e3"});
  // root reduces e3; contraction leaves e1,e2 parallel, deletion leaves
  // two coloops
  CHECK(t.root->reduced == "e3");
  CHECK_FALSE(t.root->contracted->is_leaf());
  CHECK(t.root->deleted->is_leaf());
  CHECK(tutte_expression_binomials(tri, t) == rank_poly(tri).poly);
  auto [primal, dual] = interval_partitions(t);
  check_tiling(primal, tri.nonports);
  check_tiling(dual, tri.nonports);
}

TEST_CASE("leaf F-sets are exactly the P-subbases") {
  PortedExtensor k4 = k4_ported();
  auto subbases = p_subbases(k4);
  CompTree t = build_tree(k4, {"e1", "e2", "e3", "e4"});
  auto [primal, dual] = interval_partitions(t);
  CHECK(primal.size() == subbases.size());
  std::set<std::set<std::string>> from_tree;
  int ecount = static_cast<int>(k4.nonports.size());
  for (int mask = 0; mask < (1 << ecount); ++mask) {
    std::set<std::string> fp;
    for (int k = 0; k < ecount; ++k)
      if (mask & (1 << k)) fp.insert(k4.nonports[k]);
    from_tree.insert(leaf_for(t, fp).F);
  }
  std::set<std::set<std::string>> expect(subbases.begin(), subbases.end());
  CHECK(from_tree == expect);
}

TEST_CASE("interval partitions tile the boolean lattice for every order") {
  PortedExtensor k4 = k4_ported();
  std::vector<std::string> order = {"e1", "e2", "e3", "e4"};
  std::sort(order.begin(), order.end());
  do {
    CompTree t = build_tree(k4, order);
    auto [primal, dual] = interval_partitions(t);
    check_tiling(primal, k4.nonports);
    check_tiling(dual, k4.nonports);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("descent rule recovers the interval of any subset") {
  PortedExtensor k4 = k4_ported();
  CompTree t = build_tree_arbitrary(k4, 17);
  int ecount = static_cast<int>(k4.nonports.size());
  for (int mask = 0; mask < (1 << ecount); ++mask) {
    std::set<std::string> fp;
    for (int k = 0; k < ecount; ++k)
      if (mask & (1 << k)) fp.insert(k4.nonports[k]);
    ActivitySets a = leaf_for(t, fp);
    std::set<std::string> hi = a.F;
    hi.insert(a.EA.begin(), a.EA.end());
    CHECK(std::includes(fp.begin(), fp.end(), a.IP.begin(), a.IP.end()));
    CHECK(std::includes(hi.begin(), hi.end(), fp.begin(), fp.end()));
  }
}

TEST_CASE("binomial tutte expression equals the rank polynomial") {
  PortedExtensor k4 = k4_ported();
  RingElem r = rank_poly(k4).poly;
  std::vector<std::string> order = {"e1", "e2", "e3", "e4"};
  std::sort(order.begin(), order.end());
  do {
    CHECK(tutte_expression_binomials(k4, build_tree(k4, order)) == r);
  } while (std::next_permutation(order.begin(), order.end()));
  for (uint64_t seed = 1; seed <= 6; ++seed)
    CHECK(tutte_expression_binomials(k4, build_tree_arbitrary(k4, seed)) == r);
}

TEST_CASE("tutte expressions on random graphic extensors") {
  std::mt19937_64 rng(509);
  int checked = 0;
  while (checked < 12) {
    int vertices = 3 + static_cast<int>(rng() % 3);
    int edges = 3 + static_cast<int>(rng() % 3);
    int pcount = static_cast<int>(rng() % 3);
    PortedExtensor n = random_graphic(rng, vertices, edges, pcount);
    if (n.tensor.is_zero()) continue;
    RingElem r = rank_poly(n).poly;
    CHECK(tutte_expression_binomials(n, build_tree_arbitrary(n, rng())) == r);
    auto [primal, dual] = interval_partitions(build_tree_arbitrary(n, rng()));
    check_tiling(primal, n.nonports);
    check_tiling(dual, n.nonports);
    ++checked;
  }
}

TEST_CASE("flats of the triangle") {
  PortedExtensor tri = triangle();
  auto flats = flats_in_e(tri);
  // empty set, the three singletons, and everything
  REQUIRE(flats.size() == 5);
  CHECK(flats.front().empty());
  CHECK(flats.back().size() == 3);
}

TEST_CASE("flat expansion matches the rank polynomial") {
  GroundSet ge({"e1"});
  PortedExtensor coloop = make_ported(vec(ge, {{"e1", 1}}), {}, {"e1"});
  CHECK(flat_expansion(coloop) == rank_poly(coloop).poly);
  PortedExtensor loop = make_ported(AltTensor::scalar(ge, c(1)), {}, {"e1"});
  CHECK(flat_expansion(loop) == rank_poly(loop).poly);
  PortedExtensor tri = triangle();
  CHECK(flat_expansion(tri) == rank_poly(tri).poly);
  PortedExtensor k4 = k4_ported();
  CHECK(flat_expansion(k4) == rank_poly(k4).poly);
}

TEST_CASE("flat expansion on random graphic extensors") {
  std::mt19937_64 rng(733);
  int checked = 0;
  while (checked < 12) {
    int vertices = 3 + static_cast<int>(rng() % 3);
    int edges = 3 + static_cast<int>(rng() % 3);
    int pcount = static_cast<int>(rng() % 3);
    PortedExtensor n = random_graphic(rng, vertices, edges, pcount);
    if (n.tensor.is_zero()) continue;
    CHECK(flat_expansion(n) == rank_poly(n).poly);
    ++checked;
  }
}
