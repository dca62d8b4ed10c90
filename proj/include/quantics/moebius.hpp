#pragma once

#include <vector>

#include "quantics/point.hpp"
#include "quantics/quantic.hpp"
#include "quantics/scalar.hpp"

namespace quantics {

/// Invertible fractional-linear map x -> (a x + b) / (c x + d).
template <class K>
struct MoebiusMap {
  K a, b, c, d;

  MoebiusMap(K a_, K b_, K c_, K d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (ScalarOps<K>::is_zero(det())) throw DomainError("Moebius map must have ad - bc != 0");
  }

  static MoebiusMap identity() {
    const K one = ScalarOps<K>::from_int(1);
    const K zero = ScalarOps<K>::from_int(0);
    return MoebiusMap(one, zero, zero, one);
  }

  K det() const { return a * d - b * c; }

  /// Projective inverse (no division by the determinant).
  MoebiusMap inverse() const { return MoebiusMap(d, -b, -c, a); }

  /// Composition as maps: (g * h)(x) = g(h(x)).
  friend MoebiusMap operator*(const MoebiusMap& g, const MoebiusMap& h) {
    return MoebiusMap(g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
                      g.c * h.b + g.d * h.d);
  }
};

/// Direct action on points: the image of x under x -> (ax+b)/(cx+d), written
/// on homogeneous pairs in the (alpha, beta) convention of PointCP1.
template <class K>
PointCP1<K> apply_moebius(const PointCP1<K>& p, const MoebiusMap<K>& g) {
  return PointCP1<K>(g.a * p.alpha - g.b * p.beta, -g.c * p.alpha + g.d * p.beta);
}

/// Coefficient substitution x = a x~ + b y~, y = c x~ + d y~, re-expanded in
/// the binomial convention. Roots move by the inverse point action:
/// roots_of(transform(q, g)) = { apply_moebius(r, g.inverse()) : r roots of q }.
template <class K>
Quantic<K> transform(const Quantic<K>& q, const MoebiusMap<K>& g) {
  const int m = q.degree();
  const std::vector<K> plain = q.plain();
  std::vector<K> acc(m + 1, ScalarOps<K>::from_int(0));
  // (a x + b y)^(m-k) (c x + d y)^k, accumulated with the plain coefficients.
  std::vector<K> top{ScalarOps<K>::from_int(1)};  // (a x + b y)^0
  std::vector<std::vector<K>> top_pows(m + 1);
  top_pows[0] = top;
  for (int i = 1; i <= m; ++i) top_pows[i] = detail::plain_mul(top_pows[i - 1], {g.a, g.b});
  std::vector<std::vector<K>> bot_pows(m + 1);
  bot_pows[0] = top;
  for (int i = 1; i <= m; ++i) bot_pows[i] = detail::plain_mul(bot_pows[i - 1], {g.c, g.d});
  for (int k = 0; k <= m; ++k) {
    if (ScalarOps<K>::is_zero(plain[k])) continue;
    std::vector<K> term = detail::plain_mul(top_pows[m - k], bot_pows[k]);
    for (int t = 0; t <= m; ++t) acc[t] += plain[k] * term[t];
  }
  return Quantic<K>::from_plain(acc);
}

/// The unique Moebius map sending three distinct points to (0, 1, infinity).
template <class K>
MoebiusMap<K> normalize_three(const PointCP1<K>& p1, const PointCP1<K>& p2,
                              const PointCP1<K>& p3) {
  if (points_coincide(p1, p2) || points_coincide(p2, p3) || points_coincide(p1, p3))
    throw DomainError("normalize_three needs three distinct points");
  // Rows fixed by g(p1) = 0 and g(p3) = infinity; the scale of each row is
  // then pinned by g(p2) = 1.
  const K t = ScalarOps<K>::from_int(1) / (p1.alpha * p2.beta - p1.beta * p2.alpha);
  const K u = ScalarOps<K>::from_int(1) / (p3.alpha * p2.beta - p3.beta * p2.alpha);
  return MoebiusMap<K>(t * p1.beta, t * p1.alpha, u * p3.beta, u * p3.alpha);
}

using MoebiusC = MoebiusMap<Complex>;
using MoebiusQ = MoebiusMap<GaussianRational>;

}  // namespace quantics
