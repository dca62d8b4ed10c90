#pragma once

#include <optional>
#include <vector>

#include "quantics/roots.hpp"
#include "quantics/transvectant.hpp"

namespace quantics {

/// Sylvester canonical sextic
///   C u^6 + A v^6 + B w^6 + u v w (u - v)(v - w)(w - u)
/// with u = x, v = y, w = -x - y, expanded in the binomial convention.
/// Its quadratic invariant is exactly 2CA + 2CB + 2BA - 2.
template <class K>
Quantic<K> sylvester_sextic(const K& A, const K& B, const K& C) {
  using V = std::vector<K>;
  const K one = ScalarOps<K>::from_int(1);
  const K zero = ScalarOps<K>::from_int(0);
  const V u{one, zero};          // x
  const V v{zero, one};          // y
  const V w{-one, -one};         // -x - y
  auto sub = [](const V& a, const V& b) { return V{a[0] - b[0], a[1] - b[1]}; };
  auto pow6 = [](const V& l) {
    V acc{ScalarOps<K>::from_int(1)};
    for (int i = 0; i < 6; ++i) acc = detail::plain_mul(acc, l);
    return acc;
  };
  V prod = detail::plain_mul(u, v);
  prod = detail::plain_mul(prod, w);
  prod = detail::plain_mul(prod, sub(u, v));
  prod = detail::plain_mul(prod, sub(v, w));
  prod = detail::plain_mul(prod, sub(w, u));
  V acc(7, zero);
  const V cu = pow6(u), av = pow6(v), bw = pow6(w);
  for (int t = 0; t <= 6; ++t) acc[t] = C * cu[t] + A * av[t] + B * bw[t] + prod[t];
  return Quantic<K>::from_plain(acc);
}

/// Parameters of the solved-A slice: B = (b+c)/(3b-3c), C = (6-b-c)/(3b-3c),
/// A = (1 - CB)/(C + B). Requires b != c.
template <class K>
struct SylvesterSlice {
  K A, B, C;
};

template <class K>
SylvesterSlice<K> sylvester_slice_params(const K& b, const K& c) {
  const K den = ScalarOps<K>::from_int(3) * (b - c);
  if (ScalarOps<K>::is_zero(den)) throw DomainError("sylvester slice needs b != c");
  SylvesterSlice<K> s{ScalarOps<K>::from_int(0), (b + c) / den,
                      (ScalarOps<K>::from_int(6) - b - c) / den};
  const K cb = s.C + s.B;
  if (ScalarOps<K>::is_zero(cb)) throw DomainError("sylvester slice needs C + B != 0");
  s.A = (ScalarOps<K>::from_int(1) - s.C * s.B) / cb;
  return s;
}

/// The two-parameter family of self-apolar sextics
///   x^6 + 2b x^5 + 5b x^4 + (10/3)(b+c) x^3 + 5c x^2 + 2c x
///     + (b+c)^2/36 + (b-c)^2/4,
/// whose quadratic invariant vanishes identically in (b, c).
template <class K>
Quantic<K> self_apolar_sample(const K& b, const K& c) {
  auto ratio = [](long long n, long long d) { return ScalarOps<K>::from_ratio(n, d); };
  const K three = ScalarOps<K>::from_int(3);
  const K six = ScalarOps<K>::from_int(6);
  std::vector<K> coeffs{
      ScalarOps<K>::from_int(1),
      b / three,
      b / three,
      (b + c) / six,
      c / three,
      c / three,
      (b + c) * (b + c) * ratio(1, 36) + (b - c) * (b - c) * ratio(1, 4),
  };
  return Quantic<K>(6, std::move(coeffs));
}

/// Power-sum decomposition result: constants c_i with
/// sum_i c_i (beta_i x + alpha_i y)^m ~ q, plus the least-squares residual
/// relative to the Bombieri norm of q. The residual is the apolarity
/// certificate: ~0 exactly when the quadratic invariant vanishes.
struct PowerSumResult {
  std::vector<PointC> points;
  std::vector<Complex> constants;
  double residual = 0.0;  // Bombieri-relative
};

/// Least-squares route (floating): solve the (m+1) x m linear system in the
/// c_i over the Bombieri inner product. Requires m distinct roots.
PowerSumResult power_sum_decompose(const QuanticC& q, double tol = 1e-8);

/// Exact route via the closed formula from iterated first contractions:
/// the factor-spinor of root i is mu_i = (beta_i, alpha_i); contracting the
/// coefficient spinor of q with every mu_j, j != i, leaves t_i * mu_i and
///   c_i = t_i / prod_{j != i} (mu_j x mu_i).
/// Exact whenever q has the given exact roots and vanishing invariant; the
/// reconstruction then reproduces q identically.
template <class K>
std::vector<K> power_sum_constants(const Quantic<K>& q, const std::vector<PointCP1<K>>& pts) {
  const int m = q.degree();
  if (static_cast<int>(pts.size()) != m)
    throw DomainError("power_sum_constants: need one point per degree");
  auto bracket = [](const PointCP1<K>& p, const PointCP1<K>& r) {
    // epsilon-pairing of the factor spinors (beta, alpha)
    return p.beta * r.alpha - p.alpha * r.beta;
  };
  std::vector<K> out;
  for (int i = 0; i < m; ++i) {
    std::vector<K> w = q.coeffs();
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      // single contraction with the raised factor spinor of root j
      std::vector<K> next(w.size() - 1);
      for (std::size_t k = 0; k + 1 < w.size(); ++k)
        next[k] = w[k] * pts[j].alpha - w[k + 1] * pts[j].beta;
      w = std::move(next);
    }
    // w must be proportional to (beta_i, alpha_i)
    K t;
    if (ScalarOps<K>::abs2(pts[i].beta) >= ScalarOps<K>::abs2(pts[i].alpha))
      t = w[0] / pts[i].beta;
    else
      t = w[1] / pts[i].alpha;
    K denom = ScalarOps<K>::from_int(1);
    for (int j = 0; j < m; ++j)
      if (j != i) denom *= bracket(pts[i], pts[j]);
    if (ScalarOps<K>::is_zero(denom)) throw DomainError("power_sum_constants: repeated roots");
    out.push_back(t / denom);
  }
  return out;
}

/// sum_i c_i (linear form of pts[i])^m as a plain coefficient vector
/// (identically zero allowed).
template <class K>
std::vector<K> power_sum_combination(const std::vector<PointCP1<K>>& pts,
                                     const std::vector<K>& constants, int m) {
  std::vector<K> acc(m + 1, ScalarOps<K>::from_int(0));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<K> pw{ScalarOps<K>::from_int(1)};
    const std::vector<K> lin{pts[i].beta, pts[i].alpha};
    for (int d = 0; d < m; ++d) pw = detail::plain_mul(pw, lin);
    for (int t = 0; t <= m; ++t) acc[t] += constants[i] * pw[t];
  }
  return acc;
}

}  // namespace quantics
