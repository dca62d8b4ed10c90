#pragma once

#include <cmath>
#include <vector>

#include "quantics/quantic.hpp"
#include "quantics/scalar.hpp"

namespace quantics {

/// Point of CP^1 as a homogeneous pair (alpha : beta).
/// Conventions, fixed project-wide:
///   * affine coordinate x = -alpha/beta when beta != 0,
///   * infinity is (1 : 0),
///   * the linear form vanishing at the point is beta*x + alpha*y,
/// so the point with affine coordinate r is (-r : 1) and its factor is x - r y.
template <class K>
struct PointCP1 {
  K alpha{};
  K beta{};

  PointCP1(K a, K b) : alpha(std::move(a)), beta(std::move(b)) {
    if (ScalarOps<K>::is_zero(alpha) && ScalarOps<K>::is_zero(beta))
      throw DomainError("(0,0) is not a point of CP^1");
  }

  static PointCP1 from_affine(const K& x) { return PointCP1(-x, ScalarOps<K>::from_int(1)); }
  static PointCP1 infinity() {
    return PointCP1(ScalarOps<K>::from_int(1), ScalarOps<K>::from_int(0));
  }

  bool is_infinity() const { return ScalarOps<K>::is_zero(beta); }
  K affine() const {
    if (is_infinity()) throw DomainError("point at infinity has no affine coordinate");
    return -alpha / beta;
  }

  /// Linear form beta*x + alpha*y with this point as its root.
  Quantic<K> linear_form() const { return Quantic<K>(1, {beta, alpha}); }
};

template <class K>
K cross_bracket(const PointCP1<K>& p, const PointCP1<K>& q) {
  return p.alpha * q.beta - q.alpha * p.beta;
}

/// Projective distance |a1 b2 - a2 b1| / (|p1| |p2|), the scale-free
/// coincidence measure. Exact scalars compare against zero instead.
inline double projective_distance(const PointCP1<Complex>& p, const PointCP1<Complex>& q) {
  double np = std::sqrt(std::norm(p.alpha) + std::norm(p.beta));
  double nq = std::sqrt(std::norm(q.alpha) + std::norm(q.beta));
  return std::abs(cross_bracket(p, q)) / (np * nq);
}

template <class K>
bool points_coincide(const PointCP1<K>& p, const PointCP1<K>& q, double tol = 1e-8) {
  if constexpr (ScalarOps<K>::exact) {
    (void)tol;
    return ScalarOps<K>::is_zero(cross_bracket(p, q));
  } else {
    return projective_distance(p, q) <= tol;
  }
}

using PointC = PointCP1<Complex>;
using PointQ = PointCP1<GaussianRational>;

}  // namespace quantics
