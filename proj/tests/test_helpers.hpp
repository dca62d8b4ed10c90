#pragma once

#include <random>
#include <vector>

#include "quantics/apolar.hpp"
#include "quantics/moebius.hpp"
#include "quantics/roots.hpp"

namespace quantics::testing {

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  return {n(rng), n(rng)};
}

/// Fubini-Study-uniform point from a complex Gaussian homogeneous pair.
inline PointC random_point(std::mt19937_64& rng) {
  while (true) {
    Complex a = random_complex(rng), b = random_complex(rng);
    if (std::abs(a) + std::abs(b) > 1e-3) return PointC(a, b);
  }
}

/// Random points with pairwise projective separation at least min_sep.
inline std::vector<PointC> random_separated_points(std::mt19937_64& rng, int count,
                                                   double min_sep = 5e-2) {
  std::vector<PointC> pts;
  while (static_cast<int>(pts.size()) < count) {
    PointC p = random_point(rng);
    bool ok = true;
    for (const auto& q : pts)
      if (projective_distance(p, q) < min_sep) ok = false;
    if (ok) pts.push_back(p);
  }
  return pts;
}

inline MoebiusC random_moebius(std::mt19937_64& rng, bool unimodular = true) {
  while (true) {
    Complex a = random_complex(rng), b = random_complex(rng);
    Complex c = random_complex(rng), d = random_complex(rng);
    Complex det = a * d - b * c;
    if (std::abs(det) < 1e-2) continue;
    if (unimodular) {
      Complex s = std::sqrt(det);
      return MoebiusC(a / s, b / s, c / s, d / s);
    }
    return MoebiusC(a, b, c, d);
  }
}

/// Invariant of the even form with the given roots plus one more root s, as
/// a quadratic in s, recovered by exact-degree interpolation at s = 0, 1, -1.
/// Test-side generator machinery, independent of fifth_point.
struct CompletionQuadratic {
  Complex a, b, c;  // I(s) = a s^2 + b s + c
};

inline CompletionQuadratic completion_quadratic(const std::vector<PointC>& base) {
  // Raw factor product, no rescaling: the coefficients stay linear in s and
  // the invariant is honestly quadratic, so three-point interpolation is
  // exact.
  auto value = [&](Complex s) {
    std::vector<Complex> plain{Complex(1.0)};
    for (const auto& p : base)
      plain = detail::plain_mul(plain, std::vector<Complex>{p.beta, p.alpha});
    plain = detail::plain_mul(plain, std::vector<Complex>{Complex(1.0), -s});
    return quadratic_invariant(QuanticC::from_plain(plain));
  };
  const Complex f0 = value(Complex(0.0));
  const Complex f1 = value(Complex(1.0));
  const Complex fm = value(Complex(-1.0));
  CompletionQuadratic q;
  q.c = f0;
  q.a = (f1 + fm) / 2.0 - f0;
  q.b = (f1 - fm) / 2.0;
  return q;
}

/// Random self-apolar form of even degree 2n with distinct roots: draw 2n-1
/// separated points and solve the quadratic for the completing root.
/// The scale of the from_roots output is normalised, so |I| <= tol * norm^2
/// is the meaningful smallness statement.
inline std::optional<std::vector<PointC>> self_apolar_roots(std::mt19937_64& rng, int degree,
                                                            double min_sep = 5e-2) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<PointC> base = random_separated_points(rng, degree - 1, min_sep);
    const CompletionQuadratic q = completion_quadratic(base);
    if (std::abs(q.a) < 1e-12) continue;
    const Complex disc = std::sqrt(q.b * q.b - 4.0 * q.a * q.c);
    for (Complex root : {(-q.b + disc) / (2.0 * q.a), (-q.b - disc) / (2.0 * q.a)}) {
      PointC cand = PointC::from_affine(root);
      bool ok = true;
      for (const auto& p : base)
        if (projective_distance(cand, p) < min_sep) ok = false;
      if (!ok) continue;
      std::vector<PointC> all = base;
      all.push_back(cand);
      return all;
    }
  }
  return std::nullopt;
}

inline QuanticC random_quantic(std::mt19937_64& rng, int degree) {
  std::vector<Complex> c;
  for (int k = 0; k <= degree; ++k) c.push_back(random_complex(rng));
  return QuanticC(degree, std::move(c));
}

/// Generic sextic with distinct, well-separated roots and an invariant
/// bounded away from zero relative to its norm.
inline QuanticC random_generic_sextic(std::mt19937_64& rng) {
  while (true) {
    const QuanticC q = from_points(random_separated_points(rng, 6));
    if (std::abs(quadratic_invariant(q)) >= 1e-3 * bombieri_norm2(q)) return q;
  }
}

/// True when the two configurations contain the same points with the same
/// multiplicities (up to matching within tol).
inline bool same_configuration(const RootConfiguration<Complex>& a,
                               const RootConfiguration<Complex>& b, double tol = 1e-7) {
  if (a.size() != b.size() || a.total_multiplicity() != b.total_multiplicity()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& ea : a.entries()) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j] || b[j].multiplicity != ea.multiplicity) continue;
      if (points_coincide(ea.point, b[j].point, tol)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace quantics::testing
