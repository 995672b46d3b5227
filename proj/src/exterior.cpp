#include "portex/exterior.hpp"

#include <algorithm>

namespace portex {

GroundSet::GroundSet(std::vector<std::string> elems) : elems_(std::move(elems)) {
  for (size_t i = 0; i < elems_.size(); ++i) {
    auto [it, ok] = index_.emplace(elems_[i], static_cast<int>(i));
    if (!ok) throw Error("duplicate ground element: " + elems_[i]);
  }
}

int GroundSet::pos(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error("unknown ground element: " + id);
  return it->second;
}

bool GroundSet::contains(const std::string& id) const {
  return index_.count(id) != 0;
}

GroundSet GroundSet::without(const std::string& id) const {
  pos(id);  // existence check
  std::vector<std::string> out;
  out.reserve(elems_.size() - 1);
  for (const auto& e : elems_)
    if (e != id) out.push_back(e);
  return GroundSet(std::move(out));
}

int perm_sign(std::span<const int> seq) {
  int sign = 1;
  for (size_t i = 0; i < seq.size(); ++i) {
    for (size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) sign = -sign;
    }
  }
  return sign;
}

int Orientation::eps(std::span<const std::string> seq) const {
  std::vector<int> pos;
  pos.reserve(seq.size());
  for (const auto& id : seq) pos.push_back(reference.pos(id));
  int s = perm_sign(pos);
  return flip ? -s : s;
}

AltTensor AltTensor::scalar(GroundSet ground, RingElem c) {
  if (c.is_zero()) return zero(std::move(ground));
  AltTensor t(std::move(ground), 0);
  t.coords_[{}] = std::move(c);
  return t;
}

RingElem AltTensor::coord(std::span<const std::string> seq) const {
  std::vector<int> pos;
  pos.reserve(seq.size());
  for (const auto& id : seq) pos.push_back(ground_.pos(id));
  return coord_positions(pos);
}

RingElem AltTensor::coord_positions(std::span<const int> seq) const {
  if (is_zero() || static_cast<int>(seq.size()) != *rank_) return RingElem::zero();
  int sign = perm_sign(seq);
  if (sign == 0) return RingElem::zero();
  std::vector<int> key(seq.begin(), seq.end());
  std::sort(key.begin(), key.end());
  auto it = coords_.find(key);
  if (it == coords_.end()) return RingElem::zero();
  return sign == 1 ? it->second : -it->second;
}

void AltTensor::set_coord_positions(std::span<const int> seq, const RingElem& value) {
  if (is_zero()) throw Error("cannot set coordinate of rankless tensor");
  if (static_cast<int>(seq.size()) != *rank_)
    throw Error("coordinate key has wrong length");
  int sign = perm_sign(seq);
  if (sign == 0) {
    if (!value.is_zero()) throw Error("repeated element in coordinate key");
    return;
  }
  std::vector<int> key(seq.begin(), seq.end());
  std::sort(key.begin(), key.end());
  RingElem v = sign == 1 ? value : -value;
  if (v.is_zero())
    coords_.erase(key);
  else
    coords_[key] = std::move(v);
}

bool AltTensor::operator==(const AltTensor& o) const {
  return ground_ == o.ground_ && rank_ == o.rank_ && coords_ == o.coords_;
}

namespace {

// drops all-zero coordinates and demotes to the zero tensor when none remain
AltTensor normalized(AltTensor t, std::map<std::vector<int>, RingElem> coords,
                     const GroundSet& ground, int rank) {
  (void)t;
  AltTensor out(ground, rank);
  bool any = false;
  for (auto& [k, v] : coords) {
    if (v.is_zero()) continue;
    out.set_coord_positions(k, v);
    any = true;
  }
  if (!any) return AltTensor::zero(ground);
  return out;
}

}  // namespace

AltTensor from_matrix(const GroundSet& ground,
                      const std::vector<std::vector<RingElem>>& rows) {
  int n = static_cast<int>(ground.size());
  int r = static_cast<int>(rows.size());
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != n) throw Error("matrix row width mismatch");
  // minors by Laplace expansion along each added row
  std::map<std::vector<int>, RingElem> cur;
  cur[{}] = RingElem::constant(1);
  for (int i = 0; i < r; ++i) {
    std::map<std::vector<int>, RingElem> next;
    for (const auto& [sub, det] : cur) {
      if (det.is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        if (std::binary_search(sub.begin(), sub.end(), c)) continue;
        if (rows[i][c].is_zero()) continue;
        std::vector<int> key = sub;
        auto it = std::lower_bound(key.begin(), key.end(), c);
        int j = static_cast<int>(it - key.begin());
        key.insert(it, c);
        int sign = ((i + j) % 2 == 0) ? 1 : -1;
        RingElem contrib = rows[i][c] * det;
        next[key] += sign == 1 ? contrib : -contrib;
      }
    }
    cur = std::move(next);
  }
  return normalized(AltTensor::zero(ground), std::move(cur), ground, r);
}

AltTensor from_matrix_rational(const GroundSet& ground,
                               const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<RingElem>> conv;
  conv.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<RingElem> out;
    out.reserve(row.size());
    for (const auto& q : row) out.push_back(RingElem::constant(q));
    conv.push_back(std::move(out));
  }
  return from_matrix(ground, conv);
}

AltTensor wedge(const AltTensor& x, const AltTensor& y) {
  if (!(x.ground() == y.ground())) throw Error("wedge over different ground sets");
  if (x.is_zero() || y.is_zero()) return AltTensor::zero(x.ground());
  int rx = *x.rank(), ry = *y.rank();
  std::map<std::vector<int>, RingElem> coords;
  for (const auto& [a, xa] : x.coords()) {
    for (const auto& [b, yb] : y.coords()) {
      // shuffle sign: inversions between sorted blocks a and b
      int inv = 0;
      bool clash = false;
      for (int ai : a) {
        for (int bj : b) {
          if (ai == bj) clash = true;
          else if (ai > bj) ++inv;
        }
      }
      if (clash) continue;
      int sign = (inv % 2 == 0) ? 1 : -1;
      std::vector<int> key;
      key.resize(a.size() + b.size());
      std::merge(a.begin(), a.end(), b.begin(), b.end(), key.begin());
      RingElem contrib = xa * yb;
      coords[key] += sign == 1 ? contrib : -contrib;
    }
  }
  return normalized(AltTensor::zero(x.ground()), std::move(coords), x.ground(),
                    rx + ry);
}

AltTensor add(const AltTensor& x, const AltTensor& y) {
  if (!(x.ground() == y.ground())) throw Error("sum over different ground sets");
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (*x.rank() != *y.rank())
    throw Error("sum of tensors of different ranks");
  std::map<std::vector<int>, RingElem> coords(x.coords().begin(), x.coords().end());
  for (const auto& [k, v] : y.coords()) coords[k] += v;
  return normalized(AltTensor::zero(x.ground()), std::move(coords), x.ground(),
                    *x.rank());
}

AltTensor scale(const RingElem& c, const AltTensor& x) {
  if (x.is_zero() || c.is_zero()) return AltTensor::zero(x.ground());
  std::map<std::vector<int>, RingElem> coords;
  for (const auto& [k, v] : x.coords()) coords[k] = c * v;
  return normalized(AltTensor::zero(x.ground()), std::move(coords), x.ground(),
                    *x.rank());
}

AltTensor delete_element(const AltTensor& x, const std::string& e) {
  int p = x.ground().pos(e);
  GroundSet small = x.ground().without(e);
  if (x.is_zero()) return AltTensor::zero(small);
  std::map<std::vector<int>, RingElem> coords;
  for (const auto& [k, v] : x.coords()) {
    if (std::binary_search(k.begin(), k.end(), p)) continue;
    std::vector<int> key;
    key.reserve(k.size());
    for (int q : k) key.push_back(q < p ? q : q - 1);
    coords[key] = v;
  }
  return normalized(AltTensor::zero(small), std::move(coords), small, *x.rank());
}

AltTensor delete_elements(const AltTensor& x, std::span<const std::string> seq) {
  AltTensor out = x;
  for (const auto& e : seq) out = delete_element(out, e);
  return out;
}

AltTensor contract(const AltTensor& x, std::span<const std::string> seq) {
  {
    std::set<std::string> uniq(seq.begin(), seq.end());
    if (uniq.size() != seq.size()) throw Error("repeated element in contraction");
  }
  // N/A = N/a_k/.../a_1: peel from the back of the sequence
  AltTensor cur = x;
  for (size_t idx = seq.size(); idx-- > 0;) {
    const std::string& e = seq[idx];
    int p = cur.ground().pos(e);
    GroundSet small = cur.ground().without(e);
    if (cur.is_zero()) {
      cur = AltTensor::zero(small);
      continue;
    }
    int r = *cur.rank();
    if (r == 0) {
      cur = AltTensor::zero(small);
      continue;
    }
    std::map<std::vector<int>, RingElem> coords;
    for (const auto& [k, v] : cur.coords()) {
      auto it = std::lower_bound(k.begin(), k.end(), p);
      if (it == k.end() || *it != p) continue;
      // (x/e)[X] = x[Xe]; moving e to its sorted slot passes the tail of X
      int after = static_cast<int>(k.end() - it) - 1;
      std::vector<int> key;
      key.reserve(k.size() - 1);
      for (int q : k)
        if (q != p) key.push_back(q < p ? q : q - 1);
      coords[key] = (after % 2 == 0) ? v : -v;
    }
    cur = normalized(AltTensor::zero(small), std::move(coords), small, r - 1);
  }
  return cur;
}

AltTensor dual(const AltTensor& x, const Orientation& o) {
  if (!(x.ground() == o.reference))
    throw Error("orientation reference does not match ground set");
  int n = static_cast<int>(x.ground().size());
  if (x.is_zero()) return AltTensor::zero(x.ground());
  int r = *x.rank();
  std::map<std::vector<int>, RingElem> coords;
  for (const auto& [a, v] : x.coords()) {
    std::vector<int> comp;
    comp.reserve(n - r);
    {
      size_t j = 0;
      for (int q = 0; q < n; ++q) {
        if (j < a.size() && a[j] == q) {
          ++j;
          continue;
        }
        comp.push_back(q);
      }
    }
    // N'[X] = N[Xbar] eps(Xbar X) with Xbar = a, X = comp, both sorted
    std::vector<int> concat = a;
    concat.insert(concat.end(), comp.begin(), comp.end());
    int sign = perm_sign(concat);
    if (o.flip) sign = -sign;
    coords[comp] = sign == 1 ? v : -v;
  }
  return normalized(AltTensor::zero(x.ground()), std::move(coords), x.ground(),
                    n - r);
}

namespace {

void sorted_subsets(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == r) {
      fn(cur);
      return;
    }
    for (int q = start; q <= n - (r - static_cast<int>(cur.size())); ++q) {
      cur.push_back(q);
      rec(q + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

bool gp_check(const AltTensor& t) {
  if (t.is_zero()) return true;
  int n = static_cast<int>(t.ground().size());
  int r = *t.rank();
  if (r == 0) return true;
  std::vector<std::vector<int>> subs;
  sorted_subsets(n, r, [&](const std::vector<int>& s) { subs.push_back(s); });
  for (const auto& a : subs) {
    for (const auto& b : subs) {
      // x[a] x[b] = sum_i x[b_i a_2..a_r] x[b_1..a_1@i..b_r]
      RingElem lhs = t.coord_positions(a) * t.coord_positions(b);
      RingElem rhs;
      for (int i = 0; i < r; ++i) {
        std::vector<int> left = a;
        left[0] = b[i];
        std::vector<int> right = b;
        right[i] = a[0];
        rhs += t.coord_positions(left) * t.coord_positions(right);
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::pair<std::set<std::string>, std::set<std::string>> loops_and_coloops(
    const AltTensor& x) {
  std::set<std::string> loops, coloops;
  if (x.is_zero()) return {loops, coloops};
  int n = static_cast<int>(x.ground().size());
  std::vector<bool> ever(n, false), always(n, true);
  for (const auto& [k, v] : x.coords()) {
    std::vector<bool> in(n, false);
    for (int q : k) in[q] = true;
    for (int q = 0; q < n; ++q) {
      if (in[q]) ever[q] = true;
      else always[q] = false;
    }
  }
  for (int q = 0; q < n; ++q) {
    if (!ever[q]) loops.insert(x.ground().at(q));
    if (always[q]) coloops.insert(x.ground().at(q));
  }
  return {loops, coloops};
}

std::vector<std::vector<RingElem>> extensor_to_matrix(const AltTensor& x) {
  if (x.is_zero()) return {};
  int n = static_cast<int>(x.ground().size());
  int r = *x.rank();
  const std::vector<int>& basis = x.coords().begin()->first;  // lex-least key
  std::vector<std::vector<RingElem>> rows;
  rows.reserve(r);
  for (int i = 0; i < r; ++i) {
    std::vector<RingElem> row;
    row.reserve(n);
    for (int s = 0; s < n; ++s) {
      std::vector<int> key = basis;
      key[i] = s;
      row.push_back(x.coord_positions(key));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

AltTensor embed(const AltTensor& x, const GroundSet& big) {
  return relabel(x, big, [](const std::string& e) {
    return std::make_pair(e, RingElem::constant(1));
  });
}

AltTensor relabel(
    const AltTensor& x, const GroundSet& target,
    const std::function<std::pair<std::string, RingElem>(const std::string&)>& f) {
  if (x.is_zero()) return AltTensor::zero(target);
  std::map<std::vector<int>, RingElem> coords;
  for (const auto& [k, v] : x.coords()) {
    std::vector<int> seq;
    seq.reserve(k.size());
    RingElem value = v;
    for (int q : k) {
      auto [id, sc] = f(x.ground().at(q));
      seq.push_back(target.pos(id));
      value = value * sc;
    }
    int sign = perm_sign(seq);
    if (sign == 0 || value.is_zero()) continue;
    std::sort(seq.begin(), seq.end());
    coords[seq] += sign == 1 ? value : -value;
  }
  return normalized(AltTensor::zero(target), std::move(coords), target, *x.rank());
}

}  // namespace portex
