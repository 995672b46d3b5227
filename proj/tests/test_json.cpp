#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k4_data.hpp"
#include "portex/json_io.hpp"

using namespace portex;

namespace {

RingElem gv(const std::string& e) { return RingElem::variable(Variable::g(e)); }
RingElem rv(const std::string& e) { return RingElem::variable(Variable::r(e)); }

}  // namespace

TEST_CASE("ring json round trip") {
  RingElem e = RingElem::constant(Rational(-3) / 2) * gv("e1") * gv("e1") +
               rv("e2") * RingElem::variable(Variable::u());
  Json j = ring_to_json(e);
  CHECK(ring_from_json(j) == e);
  CHECK(ring_from_json(ring_to_json(RingElem::zero())) == RingElem::zero());
}

TEST_CASE("parse_ring inverts render") {
  RingElem e = gv("e1") * gv("e4") * rv("e2") * (RingElem::constant(-1)) +
               gv("e2") * gv("e3") * rv("e1");
  CHECK(parse_ring(e.render()) == e);
  CHECK(parse_ring("0") == RingElem::zero());
  RingElem pow = gv("e1") * gv("e1") * RingElem::constant(Rational(7) / 3);
  CHECK(parse_ring(pow.render()) == pow);
  CHECK(parse_ring("-1 g1 g4 r2 r3 + 1 g2 g3 r1 r4").render() ==
        "-1 g1 g4 r2 r3 + 1 g2 g3 r1 r4");
}

TEST_CASE("tensor json round trip") {
  AltTensor n = k4_extensor();
  CHECK(tensor_from_json(tensor_to_json(n)) == n);
  AltTensor z = AltTensor::zero(k4_ground());
  CHECK(tensor_from_json(tensor_to_json(z)).is_zero());
}

TEST_CASE("ported extensor json input") {
  Json j = {{"ports", {"p1"}},
            {"nonports", {"e1", "e2"}},
            {"matrix", {{1, 1, 0}, {0, -1, 1}}},
            {"params", {{"e1", {{"g", "2"}, {"r", "1"}}}}}};
  PortedExtensor n = ported_from_json(j);
  CHECK(n.tensor.rank() == 2);
  CHECK(n.gparam("e1") == RingElem::constant(2));
  CHECK(n.rparam("e1") == RingElem::constant(1));
  CHECK(n.gparam("e2") == gv("e2"));
  PortedExtensor back = ported_from_json(ported_to_json(n));
  CHECK(back.tensor.coords().size() == n.tensor.coords().size());
  CHECK(back.gparam("e1") == n.gparam("e1"));
}
