#pragma once

// Wheatstone-bridge example: 3 port edges, 4 resistor edges on K4.
// Column order p1 p2 p3 e1 e2 e3 e4; the rows of N code oriented cutsets,
// the rows of NPERP oriented cycles.

#include <vector>

#include "portex/exterior.hpp"

inline portex::GroundSet k4_ground() {
  return portex::GroundSet({"p1", "p2", "p3", "e1", "e2", "e3", "e4"});
}

inline std::vector<std::vector<portex::Rational>> k4_n_rows() {
  return {
      {-1, 0, 1, 1, 1, 0, 0},
      {0, 1, -1, -1, 0, 1, 0},
      {-1, -1, 1, 1, 0, 0, 1},
  };
}

inline std::vector<std::vector<portex::Rational>> k4_nperp_rows() {
  return {
      {0, 0, 1, -1, 0, 0, 0},
      {1, 1, 1, 0, 0, 0, 1},
      {0, 1, 1, 0, -1, 0, 0},
      {1, 0, 1, 0, 0, 1, 0},
  };
}

inline portex::AltTensor k4_extensor() {
  return portex::from_matrix_rational(k4_ground(), k4_n_rows());
}
