#pragma once

#include <optional>
#include <vector>

#include "quantics/quantic.hpp"

namespace quantics {

/// kth transvectant in the crossed-derivative form
///   sum_{j=0..k} (-1)^j C(k,j) d^k phi / dx^(k-j) dy^j * d^k psi / dx^j dy^(k-j),
/// a form of degree deg(phi) + deg(psi) - 2k in the binomial convention.
/// The summation starts at j = 0, which is what makes <rho, rho>_1 vanish for
/// every linear form. An identically zero result is reported as nullopt, not
/// as an error. No factorial prefactor is applied; see calibration.hpp for
/// the scale relating this to the epsilon-contraction form.
template <class K>
std::optional<Quantic<K>> transvectant(const Quantic<K>& phi, const Quantic<K>& psi, int k) {
  const int m = phi.degree();
  const int n = psi.degree();
  if (k < 0 || k > std::min(m, n)) throw DomainError("transvectant order out of range");
  const int out_deg = m + n - 2 * k;
  std::vector<K> acc(out_deg + 1, ScalarOps<K>::from_int(0));
  const std::vector<K> pphi = phi.plain();
  const std::vector<K> ppsi = psi.plain();
  for (int j = 0; j <= k; ++j) {
    std::vector<K> d1 = detail::plain_derivative(pphi, k - j, j);
    std::vector<K> d2 = detail::plain_derivative(ppsi, j, k - j);
    std::vector<K> term = detail::plain_mul(d1, d2);
    const K w = ScalarOps<K>::from_int(((j % 2) ? -1 : 1) * binomial(k, j));
    for (int t = 0; t <= out_deg; ++t) acc[t] += w * term[t];
  }
  if (detail::all_zero(acc)) return std::nullopt;
  return Quantic<K>::from_plain(acc);
}

/// Quadratic invariant sum_k (-1)^k C(2n,k) psi_k psi_{2n-k}. For a sextic
/// this is 2 psi0 psi6 - 12 psi1 psi5 + 30 psi2 psi4 - 20 psi3^2. Odd-degree
/// forms return exactly zero (they are apolar to themselves).
template <class K>
K quadratic_invariant(const Quantic<K>& q) {
  const int m = q.degree();
  if (m % 2 != 0) return ScalarOps<K>::from_int(0);
  K acc = ScalarOps<K>::from_int(0);
  for (int k = 0; k <= m; ++k) {
    const K w = ScalarOps<K>::from_int(((k % 2) ? -1 : 1) * binomial(m, k));
    acc += w * (q.coeff(k) * q.coeff(m - k));
  }
  return acc;
}

/// Full pairing of two equal-degree forms in the scale of the quadratic
/// invariant: sum_k (-1)^k C(m,k) a_k b_{m-k}. Equals quadratic_invariant
/// when a == b, and the crossed-derivative full transvectant divided by (m!)^2.
template <class K>
K apolar_pairing(const Quantic<K>& a, const Quantic<K>& b) {
  if (a.degree() != b.degree()) throw DomainError("apolar_pairing needs equal degrees");
  const int m = a.degree();
  K acc = ScalarOps<K>::from_int(0);
  for (int k = 0; k <= m; ++k) {
    const K w = ScalarOps<K>::from_int(((k % 2) ? -1 : 1) * binomial(m, k));
    acc += w * (a.coeff(k) * b.coeff(m - k));
  }
  return acc;
}

/// phi (degree <= deg psi) is apolar to psi when <psi, phi>_{deg phi}
/// vanishes. The test is scale-free: the transvectant is brought to the
/// contraction scale and compared against tol * |psi| * |phi| in Bombieri
/// norms, coefficient by coefficient.
template <class K>
bool is_apolar(const Quantic<K>& psi, const Quantic<K>& phi, double tol = 1e-9) {
  const int m = psi.degree();
  const int n = phi.degree();
  if (n > m) throw DomainError("is_apolar: deg phi must not exceed deg psi");
  auto t = transvectant(psi, phi, n);
  if (!t.has_value()) return true;
  if constexpr (ScalarOps<K>::exact) {
    return false;  // nonzero transvectant is exactly not apolar
  } else {
    // raw / (m!/(m-n)! * n!) is the contraction-scale transvectant
    const double scale = static_cast<double>(falling_factorial(m, n)) *
                         static_cast<double>(falling_factorial(n, n));
    const double bound = tol * bombieri_norm(psi) * bombieri_norm(phi) * scale;
    for (int k = 0; k <= t->degree(); ++k)
      if (std::abs(t->coeff(k)) > bound) return false;
    return true;
  }
}

}  // namespace quantics
