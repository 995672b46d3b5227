#include "portex/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace portex {

Json ring_to_json(const RingElem& e) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json mono = Json::object();
    for (const auto& [var, exp] : m) mono[var.display()] = exp;
    terms.push_back({{"coeff", render_rational(c)}, {"monomial", mono}});
  }
  return Json{{"terms", terms}};
}

Variable variable_from_display(const std::string& s) {
  if (s == "u") return Variable::u();
  if (s == "v") return Variable::v();
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']')
    return Variable::bracket(s.substr(1, s.size() - 2));
  if (s.size() >= 2 && (s[0] == 'g' || s[0] == 'r')) {
    std::string rest = s.substr(1);
    bool digits = std::all_of(rest.begin(), rest.end(), [](unsigned char ch) {
      return std::isdigit(ch);
    });
    std::string elem = digits ? "e" + rest : rest;
    return s[0] == 'g' ? Variable::g(elem) : Variable::r(elem);
  }
  throw Error("unknown variable: " + s);
}

RingElem ring_from_json(const Json& j) {
  RingElem out;
  for (const auto& term : j.at("terms")) {
    Monomial m;
    for (const auto& [key, exp] : term.at("monomial").items())
      m[variable_from_display(key)] = exp.get<int>();
    out.add_term(m, parse_rational(term.at("coeff").get<std::string>()));
  }
  return out;
}

RingElem parse_ring(const std::string& text) {
  if (text == "0") return RingElem::zero();
  RingElem out;
  std::istringstream in(text);
  std::string tok;
  bool expect_coeff = true;
  Monomial mono;
  Rational coeff(0);
  auto flush = [&] {
    if (!expect_coeff) out.add_term(mono, coeff);
    mono.clear();
    expect_coeff = true;
  };
  while (in >> tok) {
    if (tok == "+") {
      flush();
      continue;
    }
    if (expect_coeff) {
      coeff = parse_rational(tok);
      expect_coeff = false;
      continue;
    }
    int exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      exp = std::stoi(tok.substr(caret + 1));
      tok.erase(caret);
    }
    mono[variable_from_display(tok)] += exp;
  }
  flush();
  return out;
}

Json tensor_to_json(const AltTensor& x) {
  Json out;
  out["ground"] = x.ground().elems();
  if (!x.is_zero()) out["rank"] = *x.rank();
  Json coords = Json::object();
  for (const auto& [key, val] : x.coords()) {
    std::string name;
    for (size_t i = 0; i < key.size(); ++i)
      name += (i ? "," : "") + x.ground().at(key[i]);
    coords[name] = val.render();
  }
  out["coords"] = coords;
  return out;
}

AltTensor tensor_from_json(const Json& j) {
  GroundSet g(j.at("ground").get<std::vector<std::string>>());
  if (!j.contains("rank")) return AltTensor::zero(g);
  AltTensor out(g, j.at("rank").get<int>());
  for (const auto& [name, val] : j.at("coords").items()) {
    std::vector<int> key;
    std::istringstream in(name);
    for (std::string id; std::getline(in, id, ',');) key.push_back(g.pos(id));
    out.set_coord_positions(key, parse_ring(val.get<std::string>()));
  }
  if (out.coords().empty()) return AltTensor::zero(g);
  return out;
}

namespace {

RingElem entry_from_json(const Json& v) {
  if (v.is_number_integer()) return RingElem::constant(Rational(v.get<long long>()));
  return parse_ring(v.get<std::string>());
}

}  // namespace

PortedExtensor ported_from_json(const Json& j) {
  std::vector<std::string> ports = j.at("ports").get<std::vector<std::string>>();
  std::vector<std::string> nonports =
      j.at("nonports").get<std::vector<std::string>>();
  std::vector<std::string> all = ports;
  all.insert(all.end(), nonports.begin(), nonports.end());
  GroundSet g(all);
  Matrix rows;
  for (const auto& row : j.at("matrix")) {
    std::vector<RingElem> r;
    for (const auto& v : row) r.push_back(entry_from_json(v));
    if (r.size() != g.size()) throw Error("matrix row width mismatch");
    rows.push_back(std::move(r));
  }
  PortedExtensor out = make_ported(from_matrix(g, rows), ports, nonports);
  if (j.contains("params")) {
    for (const auto& [e, pv] : j.at("params").items()) {
      if (!out.params.count(e)) throw Error("params for unknown element: " + e);
      RingElem gp = pv.contains("g") ? entry_from_json(pv.at("g"))
                                     : out.gparam(e);
      RingElem rp = pv.contains("r") ? entry_from_json(pv.at("r"))
                                     : out.rparam(e);
      out.params[e] = {gp, rp};
    }
  }
  return out;
}

Json ported_to_json(const PortedExtensor& n) {
  Json out;
  out["ports"] = n.ports;
  out["nonports"] = n.nonports;
  Matrix rows;
  if (!n.tensor.is_zero() && *n.tensor.rank() > 0)
    rows = extensor_to_matrix(n.tensor);
  Json jrows = Json::array();
  for (const auto& row : rows) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(v.render());
    jrows.push_back(jr);
  }
  out["matrix"] = jrows;
  Json params = Json::object();
  for (const auto& [e, pr] : n.params)
    params[e] = {{"g", pr.first.render()}, {"r", pr.second.render()}};
  out["params"] = params;
  return out;
}

Json port_constraint_to_json(const PortConstraint& pc) {
  Json out;
  Json t = tensor_to_json(pc.me);
  out["coords"] = t["coords"];
  out["ground"] = t["ground"];
  if (t.contains("rank")) out["rank"] = t["rank"];
  Json rows = Json::array();
  for (const auto& row : pc.matrix) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(v.render());
    rows.push_back(jr);
  }
  out["matrix"] = rows;
  // row presentation minors equal coord(B0)^(rows-1) times the coordinates
  RingElem denom = RingElem::constant(1);
  if (!pc.me.is_zero() && !pc.matrix.empty()) {
    const auto& ref = pc.me.coords().begin()->second;
    for (size_t i = 1; i < pc.matrix.size(); ++i) denom = denom * ref;
  }
  out["denominator"] = denom.render();
  return out;
}

}  // namespace portex
