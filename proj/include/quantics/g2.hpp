#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "quantics/calibration.hpp"
#include "quantics/exterior.hpp"
#include "quantics/transvectant.hpp"

namespace quantics {

/// Vectors of the 7-dimensional sextic space are the 7 binomial
/// coefficients. Basis vector e_k is the quantic with psi_k = 1.
template <class K>
Quantic<K> sextic_basis_vector(int k) {
  std::vector<K> c(7, ScalarOps<K>::from_int(0));
  c[k] = ScalarOps<K>::from_int(1);
  return Quantic<K>(6, std::move(c));
}

/// Trilinear structure scalar: the full pairing of <U, V>_3 with W (all
/// crossed-derivative transvectants, scale included). Antisymmetric in all
/// three slots.
template <class K>
K structure_scalar(const Quantic<K>& u, const Quantic<K>& v, const Quantic<K>& w) {
  auto inner = transvectant(u, v, 3);
  if (!inner) return ScalarOps<K>::from_int(0);
  auto outer = transvectant(*inner, w, 6);
  return outer ? outer->coeff(0) : ScalarOps<K>::from_int(0);
}

/// The three-form Psi(U, V, W) on the sextic space, assembled over the
/// standard basis. Total antisymmetry of the raw trilinear map is verified
/// during assembly; a residue beyond 1e-12 (relative) would mean a
/// transvectant-convention bug and throws.
template <class K>
AlternatingForm<K> structure_three_form() {
  AlternatingForm<K> psi(3, 7);
  std::array<Quantic<K>, 7> basis{
      sextic_basis_vector<K>(0), sextic_basis_vector<K>(1), sextic_basis_vector<K>(2),
      sextic_basis_vector<K>(3), sextic_basis_vector<K>(4), sextic_basis_vector<K>(5),
      sextic_basis_vector<K>(6)};

  // components on sorted triples
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k)
        psi.at({i, j, k}) = structure_scalar(basis[i], basis[j], basis[k]);

  // antisymmetry audit on a full pass of ordered triples
  typename ScalarOps<K>::Real max_abs2(0);
  for (const auto& c : psi.components()) max_abs2 = std::max(max_abs2, ScalarOps<K>::abs2(c));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) {
        const K val = structure_scalar(basis[i], basis[j], basis[k]);
        K expected = ScalarOps<K>::from_int(0);
        if (i != j && j != k && i != k) {
          std::vector<int> t{i, j, k};
          int inversions = 0;
          for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
              if (t[a] > t[b]) ++inversions;
          std::vector<int> sorted = t;
          std::sort(sorted.begin(), sorted.end());
          expected = psi.at(sorted);
          if (inversions % 2) expected = -expected;
        }
        const K diff = val - expected;
        if constexpr (ScalarOps<K>::exact) {
          if (!ScalarOps<K>::is_zero(diff))
            throw std::logic_error("three-form is not antisymmetric");
        } else {
          if (ScalarOps<K>::abs2(diff) > 1e-24 * max_abs2)
            throw std::logic_error("three-form antisymmetry beyond tolerance");
        }
      }
  return psi;
}

/// The cached floating three-form (immutable after first use).
const AlternatingForm<Complex>& structure_three_form_cached();

/// Single component of (U . Psi) ^ (U . Psi) ^ Psi, the 7-form measuring
/// compatibility: proportional to the quadratic invariant of U, so it
/// vanishes exactly on the null sextics. Quadratic in U.
template <class K>
K compatibility_scalar(const std::vector<K>& u, const AlternatingForm<K>& psi) {
  AlternatingForm<K> iota = contract(u, psi);
  AlternatingForm<K> four = wedge(iota, iota);
  AlternatingForm<K> top = wedge(four, psi);
  return top.components()[0];
}

inline Complex compatibility_scalar(const Quantic<Complex>& u) {
  if (u.degree() != 6) throw DomainError("compatibility scalar needs a sextic");
  return compatibility_scalar(u.coeffs(), structure_three_form_cached());
}

}  // namespace quantics
