#pragma once

#include <json.hpp>

#include "portex/circuits.hpp"

namespace portex {

using Json = nlohmann::json;

// {"terms":[{"coeff":"p/q","monomial":{"g1":1,...}}]}
Json ring_to_json(const RingElem& e);
RingElem ring_from_json(const Json& j);

// Inverse of Variable::display; numeric suffixes resolve to "e<digits>".
Variable variable_from_display(const std::string& s);

// Parses the canonical render format ("-1 g1 g4 r2 r3 + 1 g2 g3 r1 r4").
RingElem parse_ring(const std::string& text);

// {"ground":[...],"rank":3,"coords":{"p1,p2,p3":"1",...}}; the zero tensor
// has no "rank" and empty coords.
Json tensor_to_json(const AltTensor& x);
AltTensor tensor_from_json(const Json& j);

// {"ports":[...],"nonports":[...],"matrix":[[...]],"params":{"e1":{"g":...}}}
// Matrix entries are rationals or ring renders; params are optional.
PortedExtensor ported_from_json(const Json& j);
Json ported_to_json(const PortedExtensor& n);

// {"coords":{...},"matrix":[[...]],"denominator":"..."}
Json port_constraint_to_json(const PortConstraint& pc);

}  // namespace portex
