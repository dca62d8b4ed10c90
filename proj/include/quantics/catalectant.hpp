#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "quantics/calibration.hpp"
#include "quantics/transvectant.hpp"

namespace quantics {

template <class K>
using Matrix4 = std::array<std::array<K, 4>, 4>;

/// Matrix of the endomorphism phi -> <psi, phi>_3 of the cubics, in the
/// basis {x^3, x^2 y, x y^2, y^3}. psi must be a sextic.
template <class K>
Matrix4<K> cubic_action_matrix(const Quantic<K>& psi) {
  if (psi.degree() != 6) throw DomainError("cubic_action_matrix needs degree 6");
  Matrix4<K> m;
  for (int col = 0; col < 4; ++col) {
    std::vector<K> basis_plain(4, ScalarOps<K>::from_int(0));
    basis_plain[col] = ScalarOps<K>::from_int(1);
    const Quantic<K> phi = Quantic<K>::from_plain(basis_plain);
    auto image = transvectant(psi, phi, 3);
    std::vector<K> plain =
        image ? image->plain() : std::vector<K>(4, ScalarOps<K>::from_int(0));
    for (int row = 0; row < 4; ++row) m[row][col] = plain[row];
  }
  return m;
}

namespace detail {

// Faddeev-LeVerrier: characteristic polynomial coefficients of a 4x4 matrix,
// det(lambda I - M) = lambda^4 + c[1] lambda^3 + c[2] lambda^2 + c[3] lambda + c[4].
// Only exact divisions by small integers occur, so this works over Q(i) too.
template <class K>
std::array<K, 5> char_poly4(const Matrix4<K>& m) {
  auto mat_mul = [](const Matrix4<K>& a, const Matrix4<K>& b) {
    Matrix4<K> r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        K acc = ScalarOps<K>::from_int(0);
        for (int k = 0; k < 4; ++k) acc += a[i][k] * b[k][j];
        r[i][j] = acc;
      }
    return r;
  };
  auto trace = [](const Matrix4<K>& a) {
    return a[0][0] + a[1][1] + a[2][2] + a[3][3];
  };
  std::array<K, 5> c;
  c[0] = ScalarOps<K>::from_int(1);
  Matrix4<K> mk = m;
  for (int k = 1; k <= 4; ++k) {
    if (k > 1) {
      Matrix4<K> shifted = mk;
      for (int i = 0; i < 4; ++i) shifted[i][i] += c[k - 1];
      mk = mat_mul(m, shifted);
    }
    c[k] = -(trace(mk) / ScalarOps<K>::from_int(k));
  }
  return c;
}

}  // namespace detail

template <class K>
struct CharacteristicQuartic {
  K invariant_i;        // from the lambda^2 coefficient
  K invariant_j;        // from the constant coefficient
  std::array<K, 5> monic;  // det(lambda I - M), descending powers
};

/// Characteristic quartic of the cubic action. The lambda^3 and lambda
/// coefficients vanish identically; a residue beyond tolerance indicates a
/// transvectant-convention bug and throws. I and J are read off the even
/// coefficients in the normalisation 8 lambda^4 + 4 I lambda^2 - J.
template <class K>
CharacteristicQuartic<K> characteristic_quartic(const Quantic<K>& psi, double tol = 1e-10) {
  const Matrix4<K> m = cubic_action_matrix(psi);
  std::array<K, 5> c = detail::char_poly4(m);
  if constexpr (ScalarOps<K>::exact) {
    if (!ScalarOps<K>::is_zero(c[1]) || !ScalarOps<K>::is_zero(c[3]))
      throw std::logic_error("characteristic quartic has odd terms");
  } else {
    // The coefficient of lambda^(4-k) scales like the kth power of the
    // matrix entries; compare each against its own dimension.
    double mscale = 1e-300;
    for (const auto& row : m)
      for (const auto& v : row) mscale = std::max(mscale, std::abs(v));
    if (std::abs(c[1]) > tol * mscale || std::abs(c[3]) > tol * mscale * mscale * mscale)
      throw std::logic_error("characteristic quartic has odd terms beyond tolerance");
  }
  CharacteristicQuartic<K> out{calib::scalar_constant<K>(calib::kCharI) * c[2],
                               calib::scalar_constant<K>(calib::kCharJ) * c[4], c};
  return out;
}

/// Degree-four invariant J (the catalectant) through transvectants alone:
/// J = a * <i, i>_4 + b * I^2 with i = <psi, psi>_4 and exact-calibrated
/// constants a, b. Vanishes exactly when the sextic admits an apolar cubic.
template <class K>
K catalectant(const Quantic<K>& psi) {
  if (psi.degree() != 6) throw DomainError("catalectant needs degree 6");
  auto i_cov = transvectant(psi, psi, 4);
  K b_part = ScalarOps<K>::from_int(0);
  if (i_cov) {
    auto paired = transvectant(*i_cov, *i_cov, 4);
    if (paired) b_part = paired->coeff(0);
  }
  const K i_inv = quadratic_invariant(psi);
  return calib::scalar_constant<K>(calib::kCatalectantB) * b_part +
         calib::scalar_constant<K>(calib::kCatalectantI2) * (i_inv * i_inv);
}

}  // namespace quantics
