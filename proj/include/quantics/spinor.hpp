#pragma once

#include <vector>

#include "quantics/quantic.hpp"

namespace quantics {

/// Symmetric two-component spinor of valence m, stored as the m+1
/// independent components indexed by the number of 1-indices:
/// s[k] = psi_{1...1 0...0} (k ones). A quantic and its coefficient spinor
/// are the same data: psi_k = s[k]. Unlike Quantic, the zero spinor is a
/// valid value (contractions may vanish).
template <class K>
struct SymmetricSpinor {
  int valence = 0;
  std::vector<K> components;  // size valence + 1

  SymmetricSpinor(int v, std::vector<K> c) : valence(v), components(std::move(c)) {
    if (valence < 0 || static_cast<int>(components.size()) != valence + 1)
      throw DomainError("spinor component count must be valence + 1");
  }

  static SymmetricSpinor from_quantic(const Quantic<K>& q) {
    return SymmetricSpinor(q.degree(), q.coeffs());
  }

  bool is_zero() const { return detail::all_zero(components); }

  /// Throws on the zero spinor, which has no quantic counterpart.
  Quantic<K> to_quantic() const { return Quantic<K>(valence, components); }
};

/// Lower every index with eps_{AB}, eps_01 = 1, treating the stored
/// components as upper ones: psi_{A...C} = psi^{P...R} eps_{PA} ... eps_{RC}.
/// Component effect: out[k] = (-1)^(m-k) * in[m-k]. Lowering twice is the
/// identity on even valence and minus the identity on odd valence.
template <class K>
SymmetricSpinor<K> lower_all(const SymmetricSpinor<K>& s) {
  const int m = s.valence;
  std::vector<K> out(m + 1);
  for (int k = 0; k <= m; ++k) {
    const K v = s.components[m - k];
    out[k] = ((m - k) % 2) ? -v : v;
  }
  return SymmetricSpinor<K>(m, std::move(out));
}

/// Full self-contraction psi_{A...C} psi^{A...C}
///   = sum_k (-1)^k C(m,k) s_k s_{m-k}.
/// Equals the quadratic invariant of the corresponding quantic for even
/// valence; identically zero for odd valence (returned exactly).
template <class K>
K spinor_invariant(const SymmetricSpinor<K>& s) {
  const int m = s.valence;
  if (m % 2 != 0) return ScalarOps<K>::from_int(0);
  K acc = ScalarOps<K>::from_int(0);
  for (int k = 0; k <= m; ++k) {
    const K w = ScalarOps<K>::from_int(((k % 2) ? -1 : 1) * binomial(m, k));
    acc += w * (s.components[k] * s.components[m - k]);
  }
  return acc;
}

/// kth transvectant as k epsilon-contractions followed by symmetrisation of
/// the remaining indices, computed combinatorially on the m+1 stored
/// components with multinomial weights. Proportional to the
/// crossed-derivative transvectant with the (m, n, k)-dependent constant
/// calib::deriv_scale.
template <class K>
SymmetricSpinor<K> spinor_transvectant(const SymmetricSpinor<K>& s, const SymmetricSpinor<K>& t,
                                       int k) {
  const int m = s.valence;
  const int n = t.valence;
  if (k < 0 || k > std::min(m, n)) throw DomainError("spinor transvectant order out of range");
  const int out_val = m + n - 2 * k;
  std::vector<K> out(out_val + 1, ScalarOps<K>::from_int(0));
  for (int r = 0; r <= out_val; ++r) {
    K acc = ScalarOps<K>::from_int(0);
    for (int r1 = std::max(0, r - (n - k)); r1 <= std::min(m - k, r); ++r1) {
      const int r2 = r - r1;
      K contracted = ScalarOps<K>::from_int(0);
      for (int j = 0; j <= k; ++j) {
        const K w = ScalarOps<K>::from_int(((j % 2) ? -1 : 1) * binomial(k, j));
        contracted += w * (s.components[j + r1] * t.components[(k - j) + r2]);
      }
      acc += ScalarOps<K>::from_int(binomial(m - k, r1) * binomial(n - k, r2)) * contracted;
    }
    out[r] = acc / ScalarOps<K>::from_int(binomial(out_val, r));
  }
  return SymmetricSpinor<K>(out_val, std::move(out));
}

}  // namespace quantics
