#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "portex/rational.hpp"

namespace portex {

// Compares "e2" < "e10": digit runs compare numerically, the rest bytewise.
int natural_compare(const std::string& a, const std::string& b);

enum class VarKind { G, R, U, V, Bracket };

// A polynomial variable: g_e / r_e per ground element, the corank-nullity
// variables u and v, or a bracket variable keyed by a canonical oriented
// matroid string.
struct Variable {
  VarKind kind;
  std::string key;  // element id for G/R, canonical key for Bracket, "" for U/V

  static Variable g(const std::string& elem) { return {VarKind::G, elem}; }
  static Variable r(const std::string& elem) { return {VarKind::R, elem}; }
  static Variable u() { return {VarKind::U, ""}; }
  static Variable v() { return {VarKind::V, ""}; }
  static Variable bracket(const std::string& canonical_key) {
    return {VarKind::Bracket, canonical_key};
  }

  std::string display() const;

  bool operator==(const Variable& o) const {
    return kind == o.kind && key == o.key;
  }
  bool operator<(const Variable& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    if (kind == VarKind::Bracket) return key < o.key;
    return natural_compare(key, o.key) < 0;
  }
};

// Exponent map with no zero entries.  V may carry a negative exponent when a
// Laurent intermediate is permitted (flat expansion only).
using Monomial = std::map<Variable, int>;

long long monomial_degree(const Monomial& m);

// Canonical term order: lower total degree first, ties broken so the
// lexicographically heavier exponent vector (w.r.t. the variable order)
// renders first.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class RingElem {
 public:
  using Terms = std::map<Monomial, Rational, TermOrder>;

  RingElem() = default;
  static RingElem zero() { return RingElem(); }
  static RingElem constant(const Rational& c);
  static RingElem variable(const Variable& v);
  // v^exp; negative exp requires allow_laurent.
  static RingElem v_power(int exp, bool allow_laurent = false);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant value; throws if non-constant.
  Rational constant_value() const;
  const Terms& terms() const { return terms_; }

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator-() const;
  RingElem operator*(const RingElem& o) const;
  RingElem& operator+=(const RingElem& o);
  bool operator==(const RingElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  // Exact evaluation; every occurring variable must be assigned.
  Rational eval(const std::map<Variable, Rational>& assignment) const;

  std::string render() const;

  // True if no V variable carries a negative exponent.
  bool is_polynomial() const;

  void add_term(const Monomial& m, const Rational& coeff);

 private:
  Terms terms_;
};

inline RingElem operator*(const Rational& c, const RingElem& e) {
  return RingElem::constant(c) * e;
}

}  // namespace portex
