#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "quantics/calibration.hpp"
#include "quantics/sphere.hpp"

namespace quantics {

/// Result of splitting a sextic psi = kappa * rho at one root and forming
/// the quartic delta = <kappa, rho>_1 whose roots are the X-points.
struct XPointResult {
  int split = 0;                      // index into roots_of(psi).entries()
  PointC p6 = PointC::infinity();     // the root taken as the linear factor
  std::optional<QuanticC> quartic;    // delta; empty when it vanishes identically
  RootConfiguration<Complex> xpoints; // roots of delta, with multiplicity
};

/// Split the sextic at the root selected by `which` (an index into the
/// distinct-root list of roots_of) and return delta and its roots.
inline XPointResult x_points(const QuanticC& psi, int which, double tol = 1e-8) {
  if (psi.degree() != 6) throw DomainError("x_points needs degree 6");
  const RootConfiguration<Complex> roots = roots_of(psi, tol);
  if (which < 0 || which >= static_cast<int>(roots.size()))
    throw DomainError("x_points: root index out of range");

  XPointResult out;
  out.split = which;
  out.p6 = roots[which].point;

  RootConfiguration<Complex> rest;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    int mult = roots[i].multiplicity - (static_cast<int>(i) == which ? 1 : 0);
    if (mult > 0) rest.add(roots[i].point, mult, tol);
  }
  const QuanticC kappa = from_roots(rest);
  const QuanticC rho = out.p6.linear_form();
  out.quartic = transvectant(kappa, rho, 1);
  if (out.quartic) out.xpoints = roots_of(*out.quartic, tol);
  return out;
}

/// General even degree: given 2n-1 points (the roots of kappa) and the last
/// point, the degree-(2n-2) form in X from <kappa, chi>_{2n-1} = 0 with
/// chi = rho * (linear form of X)^(2n-2), returned as its root multiset.
/// For 2n = 6 this agrees with x_points up to scale.
inline RootConfiguration<Complex> x_points_general(const std::vector<PointC>& points,
                                                   const PointC& last, double tol = 1e-8) {
  if (points.size() < 3 || points.size() % 2 == 0)
    throw DomainError("x_points_general needs an odd number 2n-1 >= 3 of points");
  const int m = static_cast<int>(points.size());  // 2n - 1
  const int dX = m - 1;                           // 2n - 2, degree in X

  RootConfiguration<Complex> cfg;
  for (const auto& p : points) cfg.add(p, 1, tol);
  const QuanticC kappa = from_roots(cfg);

  // chi = rho * (v x + u y)^(2n-2), with X = (u : v); each binomial
  // coefficient of chi is a monomial in (u, v). The full pairing
  // sum_i (-1)^i C(m,i) kappa_i chi_{m-i} assembles into a binary form
  // G(u,v) of degree 2n-2 whose projective zeros are the X-points.
  const Complex beta_r = last.beta;
  const Complex alpha_r = last.alpha;
  const auto& kc = kappa.coeffs();

  // G accumulated in plain coefficients over v-power t: G = sum_t g[t] u^(dX-t) v^t.
  std::vector<Complex> g(dX + 1, Complex(0.0));
  for (int i = 0; i <= m; ++i) {
    // chi_i (binomial) = [beta_r * L_i + alpha_r * L_{i-1}] / C(m, i) with
    // L_k = C(dX,k) v^(dX-k) u^k the plain coefficients of (v x + u y)^dX.
    const double cmi = static_cast<double>(binomial(m, i));
    const Complex w = ((m - i) % 2 ? -1.0 : 1.0) * static_cast<double>(binomial(m, m - i)) *
                      kc[m - i] / cmi;
    if (w == Complex(0.0)) continue;
    // term beta_r * L_i: contributes to u^i v^(dX-i)  -> t = dX - i
    if (i <= dX) g[dX - i] += w * beta_r * static_cast<double>(binomial(dX, i));
    // term alpha_r * L_{i-1}: u^(i-1) v^(dX-i+1) -> t = dX - i + 1
    if (i >= 1 && i - 1 <= dX) g[dX - i + 1] += w * alpha_r * static_cast<double>(binomial(dX, i - 1));
  }
  // The zeros of G as variable ratios are (-alpha : beta) of the X-points;
  // substituting v -> -v re-labels them so roots_of returns X directly.
  for (int t = 1; t <= dX; t += 2) g[t] = -g[t];
  if (detail::all_zero(g)) throw DomainError("x_points_general: zero form");
  return roots_of(QuanticC::from_plain(g), tol);
}

// ---------------------------------------------------------------------------
// Fifth-point quadratic
// ---------------------------------------------------------------------------

enum class FifthPointStatus {
  TwoSolutions,
  OneSolution,
  AllValuesFail,     // a = b = 0, c != 0: no sixth point works
  IdenticallyZero,   // a = b = c = 0: every sixth point works
};

template <class K>
struct FifthPointQuadratic {
  K a, b, c;  // I(x5) = a x5^2 + 2 b x5 + c
};

/// Coefficients of the invariant of y * gamma(x,y) * (x - x5 y) as a
/// quadratic in x5, from the elementary symmetric functions of the four
/// affine roots of the quartic gamma (which must not vanish at infinity):
///   a = 2/15 e2 - 1/20 e1^2
///   b = 1/60 e1 e2 - 1/10 e3
///   c = -1/3 e4 + 2/15 e1 e3 - 1/20 e2^2
template <class K>
FifthPointQuadratic<K> fifth_point_quadratic(const Quantic<K>& gamma) {
  if (gamma.degree() != 4) throw DomainError("fifth_point_quadratic needs a quartic");
  std::vector<K> p = gamma.plain();
  if (ScalarOps<K>::is_zero(p[0]))
    throw DomainError("fifth_point_quadratic: quartic has a root at infinity");
  const K lead = p[0];
  for (auto& v : p) v = v / lead;
  const K e1 = -p[1], e2 = p[2], e3 = -p[3], e4 = p[4];
  auto ratio = [](long long n, long long d) { return ScalarOps<K>::from_ratio(n, d); };
  FifthPointQuadratic<K> q;
  q.a = ratio(2, 15) * e2 - ratio(1, 20) * (e1 * e1);
  q.b = ratio(1, 60) * (e1 * e2) - ratio(1, 10) * e3;
  q.c = ratio(-1, 3) * e4 + ratio(2, 15) * (e1 * e3) - ratio(1, 20) * (e2 * e2);
  return q;
}

struct FifthPointResult {
  FifthPointQuadratic<Complex> quadratic{};
  FifthPointStatus status = FifthPointStatus::TwoSolutions;
  std::vector<Complex> solutions;  // 0, 1 or 2 finite values of x5
};

/// Fifth points of four distinct affine points (the sixth root fixed at
/// infinity): the finite x5 with vanishing invariant, via the symbolic
/// quadratic above.
inline FifthPointResult fifth_point(const std::vector<Complex>& x, double tol = 1e-12) {
  if (x.size() != 4) throw DomainError("fifth_point needs four affine points");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(x[i] - x[j]) <= 1e-8 * (1.0 + std::abs(x[i])))
        throw DomainError("fifth_point: coincident points");
  std::vector<PointC> pts;
  for (Complex v : x) pts.push_back(PointC::from_affine(v));
  const QuanticC gamma = from_points(pts);

  FifthPointResult out;
  out.quadratic = fifth_point_quadratic(gamma);
  const Complex a = out.quadratic.a, b = out.quadratic.b, c = out.quadratic.c;
  const double s = std::max({std::abs(a), 2.0 * std::abs(b), std::abs(c)});
  if (s == 0.0) {
    out.status = FifthPointStatus::IdenticallyZero;
    return out;
  }
  const bool a0 = std::abs(a) <= tol * s;
  const bool b0 = std::abs(b) <= tol * s;
  if (a0 && b0) {
    out.status = FifthPointStatus::AllValuesFail;
    return out;
  }
  if (a0) {
    out.status = FifthPointStatus::OneSolution;
    out.solutions = {-c / (2.0 * b)};
    return out;
  }
  // Stable quadratic roots: pick the sign avoiding cancellation.
  const Complex disc = std::sqrt(b * b - a * c);
  const Complex q = (std::abs(-b - disc) > std::abs(-b + disc)) ? (-b - disc) : (-b + disc);
  out.status = FifthPointStatus::TwoSolutions;
  out.solutions = {q / a, c / q};
  if (out.solutions[0].real() > out.solutions[1].real())
    std::swap(out.solutions[0], out.solutions[1]);
  return out;
}

// ---------------------------------------------------------------------------
// Maximally separated quintics
// ---------------------------------------------------------------------------

struct SeparationPoleRecord {
  int pole = 0;
  FifthPointQuadratic<Complex> quadratic{};
  bool degenerate = false;  // a ~ 0 and b ~ 0 in this chart
};

struct SeparationResult {
  bool maximally_separated = false;
  int apex = -1;  // witnessing projection: the pole whose chart shows a = b = 0
  std::optional<MoebiusC> to_square_pyramid;  // maps the five points onto {1,-1,i,-i,inf}
  std::vector<SeparationPoleRecord> poles;
};

/// Five distinct points are maximally separated when no sixth point
/// completes them to a sextic with vanishing invariant. In the chart
/// projected from the apex the fifth-point quadratic degenerates to
/// a = b = 0, c != 0; the other four charts place the double root of the
/// quadratic at the apex image instead. The witness map normalises the
/// configuration to the standard square pyramid {1, -1, i, -i, inf}.
inline SeparationResult is_maximally_separated(const std::vector<PointC>& points,
                                               double tol = 1e-9) {
  if (points.size() != 5) throw DomainError("is_maximally_separated needs five points");
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (points_coincide(points[i], points[j])) throw DomainError("coincident points");

  SeparationResult out;
  for (int pole = 0; pole < 5; ++pole) {
    std::vector<Complex> chart;
    for (int j = 0; j < 5; ++j) {
      if (j == pole) continue;
      ChartValue v = project_from(points[pole], points[j]);
      chart.push_back(v.value);  // distinct points cannot hit the pole
    }
    // Rescale the chart to unit size; the a = b = 0 locus is stable under
    // the affine stabiliser of infinity, and this keeps the quadratic's
    // coefficients (of affine weights 2, 3, 4) comparable.
    double chart_scale = 0.0;
    for (Complex v : chart) chart_scale = std::max(chart_scale, std::abs(v));
    if (chart_scale == 0.0) chart_scale = 1.0;
    std::vector<PointC> pts;
    for (Complex v : chart) pts.push_back(PointC::from_affine(v / chart_scale));
    const QuanticC gamma = from_points(pts);
    SeparationPoleRecord rec;
    rec.pole = pole;
    rec.quadratic = fifth_point_quadratic(gamma);
    const double s = std::max(
        {std::abs(rec.quadratic.a), 2.0 * std::abs(rec.quadratic.b), std::abs(rec.quadratic.c)});
    rec.degenerate = s > 0.0 && std::abs(rec.quadratic.a) <= tol * s &&
                     std::abs(rec.quadratic.b) <= tol * s;
    out.poles.push_back(rec);
    if (rec.degenerate && out.apex < 0) {
      out.apex = pole;

      // Base quartic in the apex chart: gamma = (x - alpha)^4 + (b4 - b1^4),
      // roots alpha + beta i^k. The map (x - alpha)/beta sends them to the
      // fourth roots of unity and keeps the apex at infinity.
      std::vector<Complex> p = gamma.plain();
      const Complex b1 = p[1] / (4.0 * p[0]);
      const Complex b4 = p[4] / p[0];
      const Complex alpha = -b1;
      const Complex beta4 = b1 * b1 * b1 * b1 - b4;
      if (std::abs(beta4) > 1e-14 * (1.0 + std::norm(b4))) {
        const Complex beta = std::pow(beta4, 0.25);
        const MoebiusC affine_norm(1.0 / beta, -alpha / beta, Complex(0.0), Complex(1.0));
        const MoebiusC rescale(1.0 / chart_scale, Complex(0.0), Complex(0.0), Complex(1.0));
        out.to_square_pyramid = affine_norm * rescale * pole_chart(points[pole]);
      }
    }
  }
  out.maximally_separated = out.apex >= 0;
  return out;
}

// ---------------------------------------------------------------------------
// Tetrahedron verdict for a sextic
// ---------------------------------------------------------------------------

struct XPointCheck {
  PointC xpoint = PointC::infinity();
  int multiplicity = 1;
  CentroidCheck centroid = CentroidCheck::Fails;
};

struct SplitRecord {
  XPointResult xp;
  CrossRatioClass cls;
  bool tetrahedral = false;
  bool delta_zero = false;  // delta vanished identically (sextuple root)
  std::vector<XPointCheck> checks;
};

struct TetrahedronReport {
  Complex invariant{};              // of the input sextic, input chart
  double relative_invariant = 0.0;  // |I| / norm^2 of the balanced representative
  bool invariant_zero = false;
  MoebiusC balance = MoebiusC::identity();  // maps input points to the analysis chart
  std::vector<SplitRecord> splits;
  bool splits_consistent = false;  // the same verdict from every split
  bool verdict_holds = false;      // (I ~ 0) <=> tetrahedral class
};

/// Check, over every choice of the split root P6, that the vanishing of the
/// quadratic invariant is equivalent to the X-points being a regular
/// tetrahedron up to Moebius maps (or >= 3 of them coinciding), and that
/// each X-point sees the sixth root in the centroid of the other five.
///
/// Every quantity is Moebius-invariant, so the analysis runs in a balanced
/// chart (three well-separated roots at 0, 1, infinity) regardless of how the
/// input is presented; this keeps the split quartics well-conditioned. The
/// reported P6 and X-points are mapped back to the input chart; the delta
/// coefficients are those of the balanced representative.
inline TetrahedronReport verify_tetrahedron(const QuanticC& psi, double tol = 1e-9) {
  if (psi.degree() != 6) throw DomainError("verify_tetrahedron needs degree 6");
  TetrahedronReport rep;
  rep.invariant = quadratic_invariant(psi);

  const RootConfiguration<Complex> input_roots = roots_of(psi);
  if (input_roots.size() >= 3) {
    // three mutually separated anchors for the chart
    std::size_t a = 0, b = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < input_roots.size(); ++i)
      for (std::size_t j = i + 1; j < input_roots.size(); ++j) {
        const double d = projective_distance(input_roots[i].point, input_roots[j].point);
        if (d > best) {
          best = d;
          a = i;
          b = j;
        }
      }
    std::size_t c = 0;
    double best_c = -1.0;
    for (std::size_t i = 0; i < input_roots.size(); ++i) {
      if (i == a || i == b) continue;
      const double d = std::min(projective_distance(input_roots[i].point, input_roots[a].point),
                                projective_distance(input_roots[i].point, input_roots[b].point));
      if (d > best_c) {
        best_c = d;
        c = i;
      }
    }
    rep.balance =
        normalize_three(input_roots[a].point, input_roots[b].point, input_roots[c].point);
  }
  const MoebiusC back = rep.balance.inverse();

  RootConfiguration<Complex> roots;
  for (const auto& e : input_roots.entries())
    roots.add(apply_moebius(e.point, rep.balance), e.multiplicity);
  const QuanticC balanced = from_roots(roots);
  rep.relative_invariant = std::abs(quadratic_invariant(balanced)) / bombieri_norm2(balanced);
  rep.invariant_zero = rep.relative_invariant <= tol;

  for (int split = 0; split < static_cast<int>(roots.size()); ++split) {
    SplitRecord rec;
    rec.xp.split = split;
    rec.xp.p6 = apply_moebius(roots[split].point, back);

    RootConfiguration<Complex> rest;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const int mult = roots[i].multiplicity - (static_cast<int>(i) == split ? 1 : 0);
      if (mult > 0) rest.add(roots[i].point, mult);
    }
    const QuanticC kappa = from_roots(rest);
    rec.xp.quartic = transvectant(kappa, roots[split].point.linear_form(), 1);
    if (!rec.xp.quartic.has_value()) {
      // kappa proportional to rho^5: everything coincides, the degenerate
      // branch of the statement.
      rec.delta_zero = true;
      rec.tetrahedral = true;
      rec.cls.tag = QuarticClass::Degenerate;
      rec.cls.partition = {4};
      rep.splits.push_back(std::move(rec));
      continue;
    }
    rec.cls = classify_quartic(*rec.xp.quartic, tol);
    rec.tetrahedral = is_regular_tetrahedron_class(*rec.xp.quartic, tol);

    std::vector<PointC> five;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const int mult = roots[i].multiplicity - (static_cast<int>(i) == split ? 1 : 0);
      for (int k = 0; k < mult; ++k) five.push_back(roots[i].point);
    }
    const RootConfiguration<Complex> xroots = roots_of(*rec.xp.quartic);
    for (const auto& xe : xroots.entries()) {
      XPointCheck chk;
      chk.xpoint = apply_moebius(xe.point, back);
      chk.multiplicity = xe.multiplicity;
      chk.centroid = centroid_condition(five, roots[split].point, xe.point, tol);
      rec.checks.push_back(chk);
      rec.xp.xpoints.add(chk.xpoint, xe.multiplicity);
    }
    rep.splits.push_back(std::move(rec));
  }

  rep.splits_consistent = true;
  for (const auto& s : rep.splits)
    if (s.tetrahedral != rep.splits.front().tetrahedral) rep.splits_consistent = false;
  rep.verdict_holds =
      rep.splits_consistent && !rep.splits.empty() &&
      (rep.invariant_zero == rep.splits.front().tetrahedral);
  return rep;
}

}  // namespace quantics
