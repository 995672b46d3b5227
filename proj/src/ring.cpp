#include "portex/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace portex {

int natural_compare(const std::string& a, const std::string& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) &&
        std::isdigit(static_cast<unsigned char>(b[j]))) {
      size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      std::string da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
      // strip leading zeros for numeric comparison
      auto strip = [](std::string& s) {
        size_t k = 0;
        while (k + 1 < s.size() && s[k] == '0') ++k;
        s = s.substr(k);
      };
      std::string na = da, nb = db;
      strip(na);
      strip(nb);
      if (na.size() != nb.size()) return na.size() < nb.size() ? -1 : 1;
      if (na != nb) return na < nb ? -1 : 1;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
      ++i;
      ++j;
    }
  }
  if (i == a.size() && j == b.size()) return 0;
  return i == a.size() ? -1 : 1;
}

std::string Variable::display() const {
  switch (kind) {
    case VarKind::G:
    case VarKind::R: {
      // "e4" -> "g4"; ids without a digit suffix keep the full id.
      std::string suffix = key;
      size_t k = 0;
      while (k < key.size() && std::isalpha(static_cast<unsigned char>(key[k]))) ++k;
      if (k > 0 && k < key.size()) suffix = key.substr(k);
      return (kind == VarKind::G ? "g" : "r") + suffix;
    }
    case VarKind::U:
      return "u";
    case VarKind::V:
      return "v";
    case VarKind::Bracket:
      return "[" + key + "]";
  }
  return "?";
}

long long monomial_degree(const Monomial& m) {
  long long d = 0;
  for (const auto& [var, exp] : m) d += exp;
  return d;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  long long da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db;
  // walk both exponent maps in variable order; larger exponent on the
  // earliest differing variable sorts first
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) return true;   // a has the earlier variable
    if (ib->first < ia->first) return false;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  if (ia != a.end()) return true;
  return false;
}

RingElem RingElem::constant(const Rational& c) {
  RingElem e;
  if (c != 0) e.terms_[Monomial{}] = c;
  return e;
}

RingElem RingElem::variable(const Variable& v) {
  RingElem e;
  e.terms_[Monomial{{v, 1}}] = Rational(1);
  return e;
}

RingElem RingElem::v_power(int exp, bool allow_laurent) {
  if (exp < 0 && !allow_laurent)
    throw Error("negative v exponent requires Laurent mode");
  RingElem e;
  if (exp == 0)
    e.terms_[Monomial{}] = Rational(1);
  else
    e.terms_[Monomial{{Variable::v(), exp}}] = Rational(1);
  return e;
}

bool RingElem::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational RingElem::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("non-constant ring element: " + render());
  return terms_.begin()->second;
}

void RingElem::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElem& RingElem::operator+=(const RingElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RingElem RingElem::operator+(const RingElem& o) const {
  RingElem out = *this;
  out += o;
  return out;
}

RingElem RingElem::operator-() const {
  RingElem out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
  RingElem out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (const auto& [var, exp] : mb) {
        int& e = m[var];
        e += exp;
        if (e == 0) m.erase(var);
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Rational RingElem::eval(const std::map<Variable, Rational>& assignment) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [var, exp] : m) {
      auto it = assignment.find(var);
      if (it == assignment.end())
        throw Error("missing assignment for variable " + var.display());
      if (it->second == 0 && exp < 0)
        throw Error("division by zero: " + var.display() + "^" +
                    std::to_string(exp) + " at 0");
      Rational p(1);
      int n = exp < 0 ? -exp : exp;
      for (int i = 0; i < n; ++i) p *= it->second;
      term *= exp < 0 ? Rational(1) / p : p;
    }
    total += term;
  }
  return total;
}

std::string RingElem::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << render_rational(c);
    for (const auto& [var, exp] : m) {
      out << " " << var.display();
      if (exp != 1) out << "^" << exp;
    }
  }
  return out.str();
}

bool RingElem::is_polynomial() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [var, exp] : m)
      if (exp < 0) return false;
  return true;
}

}  // namespace portex
