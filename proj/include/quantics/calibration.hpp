#pragma once

#include "quantics/quantic.hpp"
#include "quantics/scalar.hpp"

// Scale factors tying the crossed-derivative transvectant to the
// epsilon-contraction (spinor) conventions and to the invariant
// normalisation in which the octahedron sextic x^5 y - x y^5 has I = 1/3.
//
// The numeric constants below are generated by tools/derive_calibration,
// which recomputes every one of them over exact rationals and fails loudly
// on any mismatch. Regenerate with:  derive-calibration --write <this file>

namespace quantics {
namespace calib {

/// raw <phi,psi>_k = deriv_scale(m, n, k) * contraction-form <phi,psi>_k.
inline Rational deriv_scale(int m, int n, int k) {
  return Rational(falling_factorial(m, k)) * Rational(falling_factorial(n, k));
}

inline double deriv_scale_d(int m, int n, int k) { return to_double(deriv_scale(m, n, k)); }

/// I(psi) = raw <psi,psi>_m / (m!)^2 for even degree m.
inline Rational invariant_from_raw_scale(int m) {
  const Rational f = deriv_scale(m, m, m);  // (m!)^2
  return Rational(1) / f;
}

// Characteristic polynomial of the raw cubic action, det(lambda I - M) =
// lambda^4 + c2 lambda^2 + c0:
//   I = kCharI * c2,   J = kCharJ * c0.
// The eigenvalue scale between the raw action and the normalised quartic
// 8 lambda^4 + 4 I lambda^2 - J is 6!.
inline const Rational kCharI = Rational(2) / (Rational(720) * Rational(720));
inline const Rational kCharJ =
    Rational(-8) / (Rational(720) * Rational(720) * Rational(720) * Rational(720));

// BEGIN GENERATED CONSTANTS (derive-calibration)
// Catalectant from the transvectant route: with B = raw<raw<p,p>_4, raw<p,p>_4>_4,
//   J = kCatalectantB * B + kCatalectantI2 * I^2.
inline const Rational kCatalectantB = Rational("1/3224862720000");
inline const Rational kCatalectantI2 = Rational("-1/2");

// Split identity I(kappa * rho) = -kSplitC * I(raw<kappa, rho>_1).
inline const Rational kSplitC = Rational("1/30");

// Compatibility scalar of the exterior three-form: scalar(U) = kPsiRatio * I(U).
inline const Rational kPsiRatio = Rational("11231718727873462272000000000000");
// END GENERATED CONSTANTS

inline double kCharI_d() { return to_double(kCharI); }
inline double kCharJ_d() { return to_double(kCharJ); }
inline double kCatalectantB_d() { return to_double(kCatalectantB); }
inline double kCatalectantI2_d() { return to_double(kCatalectantI2); }
inline double kSplitC_d() { return to_double(kSplitC); }
inline double kPsiRatio_d() { return to_double(kPsiRatio); }

template <class K>
K scalar_constant(const Rational& r) {
  if constexpr (ScalarOps<K>::exact) {
    return GaussianRational(r);
  } else {
    return Complex(to_double(r), 0.0);
  }
}

}  // namespace calib
}  // namespace quantics
