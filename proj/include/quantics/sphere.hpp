#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "quantics/moebius.hpp"
#include "quantics/roots.hpp"
#include "quantics/transvectant.hpp"

namespace quantics {

/// Stereographic chart value: a finite complex number or the point at
/// infinity of the chart.
struct ChartValue {
  bool infinite = false;
  Complex value{0.0, 0.0};

  static ChartValue inf() { return {true, {0.0, 0.0}}; }
  static ChartValue finite(Complex z) { return {false, z}; }
};

/// Canonical chart map sending the pole to infinity: the identity chart when
/// the pole already is infinity, else x -> 1/(x - p). Returns the chart
/// coordinate of p, infinite when p equals the pole.
inline ChartValue project_from(const PointC& pole, const PointC& p, double coincide_tol = 1e-8) {
  if (points_coincide(pole, p, coincide_tol)) return ChartValue::inf();
  if (pole.is_infinity()) {
    if (p.is_infinity()) return ChartValue::inf();
    return ChartValue::finite(p.affine());
  }
  const Complex c = pole.affine();
  if (p.is_infinity()) return ChartValue::finite(Complex(0.0, 0.0));
  return ChartValue::finite(1.0 / (p.affine() - c));
}

/// The chart map of project_from as a Moebius map.
inline MoebiusC pole_chart(const PointC& pole) {
  if (pole.is_infinity()) return MoebiusC::identity();
  return MoebiusC(Complex(0), Complex(1), Complex(1), -pole.affine());
}

enum class CentroidCheck {
  Holds,
  Fails,
  PoleHitsPoint,  // the pole coincides with one of the inputs
};

/// True when, after projecting from the pole, the sixth point is the
/// arithmetic mean of the five projections, within tol times the largest
/// projected modulus.
inline CentroidCheck centroid_condition(const std::vector<PointC>& five, const PointC& sixth,
                                        const PointC& pole, double tol = 1e-9) {
  if (five.size() != 5) throw DomainError("centroid_condition needs exactly five points");
  Complex mean(0.0, 0.0);
  double scale = 1.0;
  for (const auto& p : five) {
    ChartValue v = project_from(pole, p);
    if (v.infinite) return CentroidCheck::PoleHitsPoint;
    mean += v.value / 5.0;
    scale = std::max(scale, std::abs(v.value));
  }
  ChartValue v6 = project_from(pole, sixth);
  if (v6.infinite) return CentroidCheck::PoleHitsPoint;
  scale = std::max(scale, std::abs(v6.value));
  return std::abs(v6.value - mean) <= tol * scale ? CentroidCheck::Holds : CentroidCheck::Fails;
}

/// Cross ratio with the ordering convention cross_ratio(0, 1, inf, lambda)
/// = lambda. Returns nullopt for the value infinity. Values 0, 1, infinity
/// signal a coincidence among the points; three or more coincident points
/// are rejected.
template <class K>
std::optional<K> cross_ratio(const PointCP1<K>& p1, const PointCP1<K>& p2, const PointCP1<K>& p3,
                             const PointCP1<K>& p4) {
  const std::vector<const PointCP1<K>*> pts{&p1, &p2, &p3, &p4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int l = j + 1; l < 4; ++l)
        if (points_coincide(*pts[i], *pts[j]) && points_coincide(*pts[j], *pts[l]) &&
            points_coincide(*pts[i], *pts[l]))
          throw DomainError("cross ratio of three coincident points");
  const K num = cross_bracket(p1, p4) * cross_bracket(p3, p2);
  const K den = cross_bracket(p1, p2) * cross_bracket(p3, p4);
  if constexpr (ScalarOps<K>::exact) {
    if (ScalarOps<K>::is_zero(den)) return std::nullopt;
    return num / den;
  } else {
    double s = 1.0;
    for (auto* p : pts) s = std::max(s, std::max(std::abs(p->alpha), std::abs(p->beta)));
    const double s4 = s * s * s * s;
    if (std::abs(den) <= 1e-14 * s4 && std::abs(num) > 1e-14 * s4) return std::nullopt;
    return num / den;
  }
}

enum class QuarticClass { Generic, Harmonic, Equianharmonic, Degenerate };

struct CrossRatioClass {
  QuarticClass tag = QuarticClass::Generic;
  std::vector<int> partition;  // multiplicities, descending; {1,1,1,1} when distinct
};

/// Hankel determinant det [[d0,d1,d2],[d1,d2,d3],[d2,d3,d4]] of a binary
/// quartic, the degree-three invariant whose vanishing is the harmonic
/// condition.
template <class K>
K quartic_hankel(const Quantic<K>& q) {
  if (q.degree() != 4) throw DomainError("quartic invariant needs degree 4");
  const auto& d = q.coeffs();
  return d[0] * (d[2] * d[4] - d[3] * d[3]) - d[1] * (d[1] * d[4] - d[3] * d[2]) +
         d[2] * (d[1] * d[3] - d[2] * d[2]);
}

/// Classify the root configuration of a quartic. Repeated roots win and are
/// reported with their multiplicity partition; otherwise the invariant tests
/// decide: equianharmonic iff the quadratic invariant vanishes, harmonic iff
/// the Hankel determinant vanishes. Invariants are used instead of cross
/// ratios to stay independent of root ordering.
inline CrossRatioClass classify_quartic(const QuanticC& q, double tol = 1e-9) {
  if (q.degree() != 4) throw DomainError("classify_quartic needs degree 4");
  CrossRatioClass out;
  const RootConfiguration<Complex> roots = roots_of(q);
  for (const auto& e : roots.entries()) out.partition.push_back(e.multiplicity);
  std::sort(out.partition.begin(), out.partition.end(), std::greater<int>());
  if (out.partition.front() > 1) {
    out.tag = QuarticClass::Degenerate;
    return out;
  }
  const double n2 = bombieri_norm2(q);
  if (std::abs(quadratic_invariant(q)) <= tol * n2) {
    out.tag = QuarticClass::Equianharmonic;
  } else if (std::abs(quartic_hankel(q)) <= tol * n2 * bombieri_norm(q)) {
    out.tag = QuarticClass::Harmonic;
  } else {
    out.tag = QuarticClass::Generic;
  }
  return out;
}

/// True for the quartics of Moebius-regular tetrahedra: equianharmonic with
/// distinct roots, or a root of multiplicity at least three.
inline bool is_regular_tetrahedron_class(const QuanticC& q, double tol = 1e-9) {
  const CrossRatioClass c = classify_quartic(q, tol);
  if (c.tag == QuarticClass::Equianharmonic) return true;
  return c.tag == QuarticClass::Degenerate && c.partition.front() >= 3;
}

inline const char* quartic_class_name(QuarticClass c) {
  switch (c) {
    case QuarticClass::Generic: return "Generic";
    case QuarticClass::Harmonic: return "Harmonic";
    case QuarticClass::Equianharmonic: return "Equianharmonic";
    case QuarticClass::Degenerate: return "Degenerate";
  }
  return "?";
}

}  // namespace quantics
