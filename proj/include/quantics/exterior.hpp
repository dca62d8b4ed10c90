#pragma once

#include <array>
#include <vector>

#include "quantics/scalar.hpp"

namespace quantics {

namespace detail {

inline long long choose_ll(int n, int k) { return binomial(n, k); }

/// Lexicographic rank of a strictly increasing index tuple among the
/// k-subsets of {0..dim-1}.
inline int subset_rank(const std::vector<int>& t, int dim) {
  int rank = 0;
  int prev = -1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int v = prev + 1; v < t[i]; ++v)
      rank += static_cast<int>(choose_ll(dim - 1 - v, static_cast<int>(t.size() - 1 - i)));
    prev = t[i];
  }
  return rank;
}

inline std::vector<int> subset_unrank(int rank, int k, int dim) {
  std::vector<int> t;
  int v = 0;
  for (int slot = k; slot >= 1; --slot) {
    while (true) {
      const int count = static_cast<int>(choose_ll(dim - 1 - v, slot - 1));
      if (rank < count) break;
      rank -= count;
      ++v;
    }
    t.push_back(v++);
  }
  return t;
}

}  // namespace detail

/// Alternating p-form on a dim-dimensional space, stored on strictly
/// increasing index tuples (antisymmetry is structural).
template <class K>
class AlternatingForm {
 public:
  AlternatingForm(int degree, int dim)
      : degree_(degree), dim_(dim),
        c_(static_cast<std::size_t>(binomial(dim, degree)), ScalarOps<K>::from_int(0)) {
    if (degree < 0 || degree > dim) throw DomainError("form degree out of range");
  }

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const std::vector<K>& components() const { return c_; }

  const K& at(const std::vector<int>& tuple) const {
    return c_[detail::subset_rank(tuple, dim_)];
  }
  K& at(const std::vector<int>& tuple) { return c_[detail::subset_rank(tuple, dim_)]; }

  AlternatingForm& operator+=(const AlternatingForm& o) {
    if (o.degree_ != degree_ || o.dim_ != dim_) throw DomainError("form shape mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }

  AlternatingForm scaled(const K& s) const {
    AlternatingForm out = *this;
    for (auto& v : out.c_) v *= s;
    return out;
  }

 private:
  int degree_, dim_;
  std::vector<K> c_;
};

/// Interior product into the first slot: (U . f)(V1..Vp-1) = f(U, V1, ..).
template <class K>
AlternatingForm<K> contract(const std::vector<K>& u, const AlternatingForm<K>& f) {
  if (static_cast<int>(u.size()) != f.dim()) throw DomainError("vector dimension mismatch");
  if (f.degree() < 1) throw DomainError("cannot contract a 0-form");
  AlternatingForm<K> out(f.degree() - 1, f.dim());
  const int nt = static_cast<int>(binomial(f.dim(), f.degree() - 1));
  for (int r = 0; r < nt; ++r) {
    std::vector<int> t = detail::subset_unrank(r, f.degree() - 1, f.dim());
    K acc = ScalarOps<K>::from_int(0);
    for (int i = 0; i < f.dim(); ++i) {
      if (ScalarOps<K>::is_zero(u[i])) continue;
      // insert i into t; skip if already present
      bool dup = false;
      int pos = 0;
      for (int v : t) {
        if (v == i) dup = true;
        if (v < i) ++pos;
      }
      if (dup) continue;
      std::vector<int> full = t;
      full.insert(full.begin() + pos, i);
      const K sign = ScalarOps<K>::from_int(pos % 2 ? -1 : 1);
      acc += sign * u[i] * f.at(full);
    }
    out.at(t) = acc;
  }
  return out;
}

/// Wedge product with shuffle signs.
template <class K>
AlternatingForm<K> wedge(const AlternatingForm<K>& f, const AlternatingForm<K>& g) {
  if (f.dim() != g.dim()) throw DomainError("form dimension mismatch");
  const int p = f.degree(), q = g.degree(), dim = f.dim();
  if (p + q > dim) throw DomainError("wedge degree exceeds the dimension");
  AlternatingForm<K> out(p + q, dim);
  const int nf = static_cast<int>(binomial(dim, p));
  const int ng = static_cast<int>(binomial(dim, q));
  for (int rf = 0; rf < nf; ++rf) {
    const std::vector<int> s = detail::subset_unrank(rf, p, dim);
    const K& fs = f.components()[rf];
    if (ScalarOps<K>::is_zero(fs)) continue;
    for (int rg = 0; rg < ng; ++rg) {
      const std::vector<int> t = detail::subset_unrank(rg, q, dim);
      const K& gt = g.components()[rg];
      if (ScalarOps<K>::is_zero(gt)) continue;
      // disjointness + inversion count of the concatenation (s, t)
      bool overlap = false;
      int inversions = 0;
      for (int a : s)
        for (int b : t) {
          if (a == b) overlap = true;
          if (a > b) ++inversions;
        }
      if (overlap) continue;
      std::vector<int> merged;
      merged.reserve(s.size() + t.size());
      std::size_t i = 0, j = 0;
      while (i < s.size() || j < t.size()) {
        if (j == t.size() || (i < s.size() && s[i] < t[j])) merged.push_back(s[i++]);
        else merged.push_back(t[j++]);
      }
      const K sign = ScalarOps<K>::from_int(inversions % 2 ? -1 : 1);
      out.at(merged) += sign * fs * gt;
    }
  }
  return out;
}

}  // namespace quantics
