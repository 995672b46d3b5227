#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "portex/checks.hpp"
#include "portex/json_io.hpp"

namespace py = pybind11;
using namespace portex;

namespace {

AltTensor me_of_text(const std::string& text) {
  size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{') {
    PortedExtensor n = ported_from_json(Json::parse(text));
    return m_e(n, Orientation{n.tensor.ground()});
  }
  return port_solution(parse_network(text)).me;
}

PortedExtensor ported_of_json(const std::string& text) {
  return ported_from_json(Json::parse(text));
}

}  // namespace

PYBIND11_MODULE(portex, m) {
  m.doc() = "ported extensors, Tutte functions and electrical networks";

  py::register_exception<Error>(m, "PortexError");

  m.def("me", [](const std::string& input) {
    return tensor_to_json(me_of_text(input)).dump();
  },
        "M_E of a network file or ported-extensor JSON, as tensor JSON");

  m.def("coord",
        [](const std::string& input, const std::vector<std::string>& index) {
          AltTensor t = me_of_text(input);
          return t.coord(std::span<const std::string>(index.data(),
                                                      index.size()))
              .render();
        },
        "one rendered Pluecker coordinate of M_E");

  m.def("subset_expansion", [](const std::string& ported_json) {
    PortedExtensor n = ported_of_json(ported_json);
    return tensor_to_json(subset_expansion(n, Orientation{n.tensor.ground()}))
        .dump();
  });

  m.def("rank_poly", [](const std::string& ported_json) {
    return rank_poly(ported_of_json(ported_json)).poly.render();
  });

  m.def("flat_expansion", [](const std::string& ported_json) {
    return flat_expansion(ported_of_json(ported_json)).render();
  });

  m.def("tutte_expression",
        [](const std::string& ported_json, uint64_t seed) {
          PortedExtensor n = ported_of_json(ported_json);
          return tutte_expression_binomials(n, build_tree_arbitrary(n, seed))
              .render();
        },
        py::arg("ported_json"), py::arg("seed") = 0);

  m.def("maxwell",
        [](const std::string& network, const std::string& p1,
           const std::string& p2) {
          auto [num, den] = maxwell_rho21(parse_network(network), p1, p2);
          return py::make_tuple(num.render(), den.render());
        });

  m.def("spanning_trees", [](const std::string& network) {
    return spanning_tree_enumerator(parse_network(network)).render();
  });

  m.def("laplacian_det",
        [](const std::string& network, const std::string& grounded) {
          Network net = parse_network(network);
          return matrix_det(laplacian(net, grounded)).render();
        });

  m.def("verify",
        [](const std::string& kind, int random, uint64_t seed, int max_size) {
          checks::Result r =
              checks::run_suite(kind, checks::Options{random, seed, max_size});
          py::dict out;
          out["pass"] = r.pass;
          out["checked"] = r.checked;
          out["counterexample"] = r.counterexample;
          return out;
        },
        py::arg("kind"), py::arg("random") = 50, py::arg("seed") = 1,
        py::arg("max_size") = 6);

  m.def("suite_names", [] { return checks::suite_names(); });
  m.def("k4_network", [] { return std::string(checks::k4_network_text()); });
}
