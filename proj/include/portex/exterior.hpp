#pragma once

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "portex/ring.hpp"

namespace portex {

// Ordered ground set; the declared order is the reference order for signs.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> elems);

  const std::vector<std::string>& elems() const { return elems_; }
  size_t size() const { return elems_.size(); }
  int pos(const std::string& id) const;  // throws on unknown element
  bool contains(const std::string& id) const;
  const std::string& at(size_t i) const { return elems_[i]; }

  GroundSet without(const std::string& id) const;
  bool operator==(const GroundSet& o) const { return elems_ == o.elems_; }

 private:
  std::vector<std::string> elems_;
  std::map<std::string, int> index_;
};

// Ground set orientation derived from the reference order by inversion
// parity.  `flip` negates every value (the -eps variant used by sign tests).
struct Orientation {
  GroundSet reference;
  bool flip = false;

  int eps(std::span<const std::string> seq) const;
  int eps(std::initializer_list<std::string> seq) const {
    return eps(std::span<const std::string>(seq.begin(), seq.size()));
  }
};

// Inversion parity of a sequence of distinct integers; 0 on repeats.
int perm_sign(std::span<const int> seq);

// Homogeneous alternating tensor in sparse Pluecker-coordinate form.  The
// zero tensor has empty coords and no rank.  Coordinates are stored under
// canonically sorted position keys; sign normalization happens on access.
class AltTensor {
 public:
  explicit AltTensor(GroundSet ground) : ground_(std::move(ground)) {}
  AltTensor(GroundSet ground, int rank) : ground_(std::move(ground)), rank_(rank) {}

  static AltTensor zero(GroundSet ground) { return AltTensor(std::move(ground)); }
  // rank-0 tensor with coefficient c (zero tensor if c == 0)
  static AltTensor scalar(GroundSet ground, RingElem c);

  const GroundSet& ground() const { return ground_; }
  bool is_zero() const { return !rank_.has_value(); }
  std::optional<int> rank() const { return rank_; }
  const std::map<std::vector<int>, RingElem>& coords() const { return coords_; }

  // Sign-adjusted coordinate access by element-id sequence; 0 on repeats or
  // wrong length.
  RingElem coord(std::span<const std::string> seq) const;
  RingElem coord(std::initializer_list<std::string> seq) const {
    return coord(std::span<const std::string>(seq.begin(), seq.size()));
  }
  RingElem coord_positions(std::span<const int> seq) const;

  // Inserts coeff at the canonical key for seq (positions, arbitrary order).
  void set_coord_positions(std::span<const int> seq, const RingElem& value);

  bool operator==(const AltTensor& o) const;
  bool operator!=(const AltTensor& o) const { return !(*this == o); }

 private:
  GroundSet ground_;
  std::optional<int> rank_;
  std::map<std::vector<int>, RingElem> coords_;
};

using Extensor = AltTensor;

// Extensor whose coordinates are the maximal minors of the given rows;
// zero tensor when the rows are dependent.
AltTensor from_matrix(const GroundSet& ground,
                      const std::vector<std::vector<RingElem>>& rows);
AltTensor from_matrix_rational(const GroundSet& ground,
                               const std::vector<std::vector<Rational>>& rows);

AltTensor wedge(const AltTensor& x, const AltTensor& y);
AltTensor add(const AltTensor& x, const AltTensor& y);
AltTensor scale(const RingElem& c, const AltTensor& x);
AltTensor delete_element(const AltTensor& x, const std::string& e);
AltTensor delete_elements(const AltTensor& x, std::span<const std::string> seq);
// N/A = N/a_k/.../a_1 so that (N/A)[X] = N[XA].
AltTensor contract(const AltTensor& x, std::span<const std::string> seq);
AltTensor dual(const AltTensor& x, const Orientation& o);

// Exhaustive Grassmann-Pluecker check over all sorted rank-subsets.
bool gp_check(const AltTensor& t);

std::pair<std::set<std::string>, std::set<std::string>> loops_and_coloops(
    const AltTensor& x);

// Row presentation recovered by single-element substitutions against the
// lex-least nonzero coordinate key; maximal minors are proportional to the
// tensor's coordinates.
std::vector<std::vector<RingElem>> extensor_to_matrix(const AltTensor& x);

// Reinterprets x over a larger ground set whose order need not extend the
// old one; each coordinate picks up the resorting sign.
AltTensor embed(const AltTensor& x, const GroundSet& big);

// Applies a ground-element relabeling/scaling map (vector substitution
// e -> scale * new_e) and re-sorts keys in the target reference order.
AltTensor relabel(
    const AltTensor& x, const GroundSet& target,
    const std::function<std::pair<std::string, RingElem>(const std::string&)>& f);

}  // namespace portex
