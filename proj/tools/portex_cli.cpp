#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "portex/checks.hpp"
#include "portex/json_io.hpp"

using namespace portex;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// a leading '{' means ported-extensor JSON, anything else is a network file
AltTensor load_me(const std::string& path) {
  std::string text = slurp(path);
  size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{') {
    PortedExtensor n = ported_from_json(Json::parse(text));
    return m_e(n, Orientation{n.tensor.ground()});
  }
  return port_solution(parse_network(text)).me;
}

std::vector<std::string> split_coord(const std::string& spec) {
  std::vector<std::string> out;
  std::istringstream in(spec);
  for (std::string id; std::getline(in, id, ',');)
    if (!id.empty()) out.push_back(id);
  return out;
}

// entries of the K4 block matrix are 0, +-1 or +-1 times one parameter
std::string pretty(int c, const std::string& sym = "") {
  if (c == 0) return "0";
  std::string s = sym.empty() ? "1" : sym;
  return c < 0 ? "-" + s : s;
}

void print_matrix(const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    std::cout << " ";
    for (const auto& e : row) std::cout << " " << e;
    std::cout << "\n";
  }
}

int cmd_k4_demo() {
  const std::vector<std::vector<int>> nrows = {{-1, 0, 1, 1, 1, 0, 0},
                                               {0, 1, -1, -1, 0, 1, 0},
                                               {-1, -1, 1, 1, 0, 0, 1}};
  const std::vector<std::vector<int>> nperp = {{0, 0, 1, -1, 0, 0, 0},
                                               {1, 1, 1, 0, 0, 0, 1},
                                               {0, 1, 1, 0, -1, 0, 0},
                                               {1, 0, 1, 0, 0, 1, 0}};
  std::cout << "K4 with ports p1 p2 p3 and resistors e1..e4\n\n";
  std::cout << "N over (p1 p2 p3 e1 e2 e3 e4):\n";
  std::vector<std::vector<std::string>> fmt;
  for (const auto& row : nrows) {
    std::vector<std::string> r;
    for (int v : row) r.push_back(pretty(v));
    fmt.push_back(r);
  }
  print_matrix(fmt);
  std::cout << "\nN-perp over the same ground:\n";
  fmt.clear();
  for (const auto& row : nperp) {
    std::vector<std::string> r;
    for (int v : row) r.push_back(pretty(v));
    fmt.push_back(r);
  }
  print_matrix(fmt);
  std::cout << "\nM(N) over (i1 i2 i3 v1 v2 v3 e1 e2 e3 e4):\n";
  fmt.clear();
  for (int i = 0; i < 3; ++i) {
    std::vector<std::string> r;
    for (int j = 0; j < 3; ++j) r.push_back(pretty(nrows[i][j]));
    for (int j = 0; j < 3; ++j) r.push_back("0");
    for (int j = 0; j < 4; ++j)
      r.push_back(pretty(nrows[i][3 + j], "g" + std::to_string(j + 1)));
    fmt.push_back(r);
  }
  for (int i = 0; i < 4; ++i) {
    std::vector<std::string> r;
    for (int j = 0; j < 3; ++j) r.push_back("0");
    for (int j = 0; j < 3; ++j) r.push_back(pretty(nperp[i][j]));
    for (int j = 0; j < 4; ++j)
      r.push_back(pretty(nperp[i][3 + j], "r" + std::to_string(j + 1)));
    fmt.push_back(r);
  }
  print_matrix(fmt);

  AltTensor me = port_solution(parse_network(checks::k4_network_text())).me;
  std::cout << "\nPort constraint M_E(N):\n";
  for (const auto& idx : std::vector<std::vector<std::string>>{
           {"v1", "v2", "v3"}, {"i1", "v2", "v3"}, {"v1", "i1", "v3"}}) {
    std::cout << "  M_E[" << idx[0] << "," << idx[1] << "," << idx[2]
              << "] = "
              << me.coord(std::span<const std::string>(idx.data(), idx.size()))
                     .render()
              << "\n";
  }

  std::cout << "\nSigned forest contributions to M_E[v1,i1,v3]:\n";
  for (const auto& fc : signed_forest_contributions(
           parse_network(checks::k4_network_text()), {"v1", "i1", "v3"})) {
    std::cout << "  A = {";
    bool first = true;
    for (const auto& e : fc.a) {
      std::cout << (first ? "" : ",") << e;
      first = false;
    }
    std::cout << "}  sign " << (fc.sign > 0 ? "+" : "-") << "  weight "
              << fc.weight.render() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ported extensors, Tutte functions and electrical networks"};
  app.require_subcommand(1);

  auto* me_cmd = app.add_subcommand("me", "port constraint of a network or"
                                          " ported extensor file");
  std::string me_file;
  std::vector<std::string> coord_specs;
  bool me_json = false;
  me_cmd->add_option("file", me_file, "network file or ported-extensor JSON")
      ->required();
  me_cmd->add_option("--coord", coord_specs,
                     "comma-separated coordinate index, repeatable");
  me_cmd->add_flag("--json", me_json, "machine output");

  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  std::string kind;
  checks::Options opts;
  bool verify_json = false;
  verify_cmd->add_option("kind", kind, "one of: sum product identities"
                                       " rankpoly substitution activities"
                                       " flats maxwell matrixtree")
      ->required();
  verify_cmd->add_option("--random", opts.random, "number of random instances");
  verify_cmd->add_option("--seed", opts.seed, "random seed");
  verify_cmd->add_option("--max-size", opts.max_size, "ground set size cap");
  verify_cmd->add_flag("--json", verify_json, "machine output");

  auto* demo_cmd = app.add_subcommand("k4-demo", "worked K4 example");
  demo_cmd->alias("k4_demo");

  CLI11_PARSE(app, argc, argv);

  try {
    if (me_cmd->parsed()) {
      AltTensor me = load_me(me_file);
      if (coord_specs.empty()) {
        std::cout << tensor_to_json(me).dump(2) << "\n";
        return 0;
      }
      Json out = Json::object();
      for (const auto& spec : coord_specs) {
        std::vector<std::string> idx = split_coord(spec);
        RingElem val =
            me.coord(std::span<const std::string>(idx.data(), idx.size()));
        if (me_json)
          out[spec] = val.render();
        else
          std::cout << val.render() << "\n";
      }
      if (me_json) std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (verify_cmd->parsed()) {
      checks::Result r = checks::run_suite(kind, opts);
      if (verify_json) {
        Json out = {{"kind", kind},
                    {"pass", r.pass},
                    {"checked", r.checked},
                    {"counterexample", r.counterexample}};
        std::cout << out.dump(2) << "\n";
      } else if (r.pass) {
        std::cout << "PASS " << kind << ": " << r.checked << " instances\n";
      } else {
        std::cout << "FAIL " << kind << "\n" << r.counterexample << "\n";
      }
      return r.pass ? 0 : 2;
    }
    return cmd_k4_demo();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
