#pragma once

#include <utility>
#include <vector>

#include "quantics/point.hpp"
#include "quantics/quantic.hpp"

namespace quantics {

/// Multiset of CP^1 points with multiplicities summing to the degree of the
/// associated quantic. Construction merges projectively equal entries, so no
/// two listed points coincide.
template <class K>
class RootConfiguration {
 public:
  struct Entry {
    PointCP1<K> point;
    int multiplicity;
  };

  RootConfiguration() = default;

  explicit RootConfiguration(const std::vector<Entry>& entries, double coincide_tol = 1e-8) {
    for (const auto& e : entries) add(e.point, e.multiplicity, coincide_tol);
  }

  void add(const PointCP1<K>& p, int multiplicity = 1, double coincide_tol = 1e-8) {
    if (multiplicity <= 0) throw DomainError("multiplicity must be positive");
    for (auto& e : entries_) {
      if (points_coincide(e.point, p, coincide_tol)) {
        e.multiplicity += multiplicity;
        return;
      }
    }
    entries_.push_back({p, multiplicity});
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_.at(i); }

  int total_multiplicity() const {
    int t = 0;
    for (const auto& e : entries_) t += e.multiplicity;
    return t;
  }

  /// Flat list with each point repeated by its multiplicity.
  std::vector<PointCP1<K>> flatten() const {
    std::vector<PointCP1<K>> out;
    for (const auto& e : entries_)
      for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.point);
    return out;
  }

 private:
  std::vector<Entry> entries_;
};

/// Product of the linear factors (beta_i x + alpha_i y)^m_i, rescaled so the
/// largest-modulus binomial coefficient is 1. A root at infinity contributes
/// a factor of y.
template <class K>
Quantic<K> from_roots(const RootConfiguration<K>& roots) {
  if (roots.empty()) throw DomainError("from_roots: empty configuration");
  std::vector<K> acc{ScalarOps<K>::from_int(1)};
  for (const auto& e : roots.entries()) {
    std::vector<K> lin{e.point.beta, e.point.alpha};
    if constexpr (!ScalarOps<K>::exact) {
      // unit-size factors keep the coefficient dynamic range small
      const double m = std::max(abs_value(lin[0]), abs_value(lin[1]));
      lin[0] = lin[0] / K(m);
      lin[1] = lin[1] / K(m);
    }
    for (int i = 0; i < e.multiplicity; ++i) acc = detail::plain_mul(acc, lin);
  }
  return normalize_scale(Quantic<K>::from_plain(acc));
}

template <class K>
Quantic<K> from_points(const std::vector<PointCP1<K>>& pts) {
  RootConfiguration<K> cfg;
  for (const auto& p : pts) cfg.add(p);
  return from_roots(cfg);
}

/// All m roots of a nonzero degree-m quantic, with multiplicities. Leading
/// plain coefficients below tol_inf * bombieri_norm are treated as zero and
/// produce a root at infinity of the corresponding multiplicity. Finite roots
/// come from the eigenvalues of the companion matrix of the deflated
/// polynomial, Newton-polished and clustered into multiple roots.
RootConfiguration<Complex> roots_of(const Quantic<Complex>& q, double tol = 1e-8,
                                    double tol_inf = 1e-10);

}  // namespace quantics
