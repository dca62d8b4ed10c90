#include <doctest.h>

#include "quantics/apolar.hpp"
#include "test_helpers.hpp"

using namespace quantics;
using namespace quantics::testing;

namespace {

const QuanticC& pentagon_pyramid() {
  static const QuanticC q = QuanticC::from_plain({0, 1, 0, 0, 0, 0, -1});
  return q;
}

const QuanticC& octahedron() {
  static const QuanticC q = QuanticC::from_plain({0, 1, 0, 0, 0, -1, 0});
  return q;
}

int split_of(const QuanticC& psi, const PointC& p) {
  const auto roots = roots_of(psi);
  for (int i = 0; i < static_cast<int>(roots.size()); ++i)
    if (points_coincide(roots[i].point, p, 1e-7)) return i;
  REQUIRE(false);
  return -1;
}

std::vector<PointC> pentagon_base() {
  std::vector<PointC> pts;
  for (int k = 1; k < 5; ++k)
    pts.push_back(PointC::from_affine(std::polar(1.0, 2.0 * M_PI * k / 5.0)));
  return pts;
}

}  // namespace

TEST_CASE("x_points on the pentagonal pyramid") {
  SUBCASE("split at infinity: quadruple X-point at zero") {
    const int s = split_of(pentagon_pyramid(), PointC::infinity());
    const XPointResult r = x_points(pentagon_pyramid(), s);
    REQUIRE(r.quartic.has_value());
    CHECK(proportional(*r.quartic, QuanticC::from_plain({1, 0, 0, 0, 0}), 1e-10));
    REQUIRE(r.xpoints.size() == 1);
    CHECK(points_coincide(r.xpoints[0].point, PointC::from_affine(Complex(0.0)), 1e-7));
    CHECK(r.xpoints[0].multiplicity == 4);
  }
  SUBCASE("split at one: the explicit equianharmonic quartic") {
    const int s = split_of(pentagon_pyramid(), PointC::from_affine(Complex(1.0)));
    const XPointResult r = x_points(pentagon_pyramid(), s);
    REQUIRE(r.quartic.has_value());
    CHECK(proportional(*r.quartic, QuanticC::from_plain({1, 6, 6, 6, 6}), 1e-9));
    CHECK(classify_quartic(*r.quartic).tag == QuarticClass::Equianharmonic);
    CHECK(r.xpoints.total_multiplicity() == 4);
    CHECK(r.xpoints.size() == 4);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(x_points(QuanticC::from_plain({1, 0, 0, 0, 0}), 0), DomainError);
    CHECK_THROWS_AS(x_points(pentagon_pyramid(), 17), DomainError);
  }
}

TEST_CASE("octahedron splits are never tetrahedral") {
  const auto roots = roots_of(octahedron());
  for (int s = 0; s < static_cast<int>(roots.size()); ++s) {
    const XPointResult r = x_points(octahedron(), s);
    REQUIRE(r.quartic.has_value());
    CHECK_FALSE(is_regular_tetrahedron_class(*r.quartic));
  }
}

TEST_CASE("x_points_general") {
  SUBCASE("pentagon with the last point at infinity") {
    std::vector<PointC> five = pentagon_base();
    five.push_back(PointC::from_affine(Complex(1.0)));
    const auto cfg = x_points_general(five, PointC::infinity());
    REQUIRE(cfg.size() == 1);
    CHECK(points_coincide(cfg[0].point, PointC::from_affine(Complex(0.0)), 1e-7));
    CHECK(cfg[0].multiplicity == 4);
  }
  SUBCASE("pentagon with the last point at one") {
    std::vector<PointC> firstfive = pentagon_base();
    firstfive.push_back(PointC::infinity());
    const auto cfg = x_points_general(firstfive, PointC::from_affine(Complex(1.0)));
    const auto expected = roots_of(QuanticC::from_plain({1, 6, 6, 6, 6}));
    CHECK(same_configuration(cfg, expected, 1e-7));
  }
  SUBCASE("agreement with x_points over random sextics") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
      const auto pts = random_separated_points(rng, 6);
      const QuanticC psi = from_points(pts);
      const int s = split_of(psi, pts[5]);
      const XPointResult via_split = x_points(psi, s);
      std::vector<PointC> first(pts.begin(), pts.end() - 1);
      const auto via_general = x_points_general(first, pts[5]);
      REQUIRE(via_split.quartic.has_value());
      CHECK(same_configuration(via_split.xpoints, via_general, 1e-6));
    }
  }
}

TEST_CASE("verify_tetrahedron") {
  SUBCASE("pentagonal pyramid: invariant vanishes, every split tetrahedral") {
    const TetrahedronReport rep = verify_tetrahedron(pentagon_pyramid());
    CHECK(rep.invariant_zero);
    CHECK(rep.splits.size() == 6);
    for (const auto& s : rep.splits) {
      CHECK(s.tetrahedral);
      for (const auto& c : s.checks) CHECK(c.centroid == CentroidCheck::Holds);
    }
    CHECK(rep.splits_consistent);
    CHECK(rep.verdict_holds);
  }
  SUBCASE("octahedron: invariant 1/3, no split tetrahedral") {
    const TetrahedronReport rep = verify_tetrahedron(octahedron());
    CHECK_FALSE(rep.invariant_zero);
    CHECK(std::abs(rep.invariant - Complex(1.0 / 3.0)) <= 1e-14);
    for (const auto& s : rep.splits) CHECK_FALSE(s.tetrahedral);
    CHECK(rep.verdict_holds);
  }
  SUBCASE("sextuple root: the degenerate branch") {
    RootConfiguration<Complex> cfg;
    cfg.add(PointC::from_affine(Complex(0.5, -0.25)), 6);
    const TetrahedronReport rep = verify_tetrahedron(from_roots(cfg));
    CHECK(rep.invariant_zero);
    REQUIRE(rep.splits.size() == 1);
    CHECK(rep.splits[0].delta_zero);
    CHECK(rep.verdict_holds);
  }
  SUBCASE("repeated roots are reported with their pattern") {
    RootConfiguration<Complex> cfg;
    cfg.add(PointC::from_affine(Complex(1.0)), 2);
    cfg.add(PointC::from_affine(Complex(-1.0)), 1);
    cfg.add(PointC::from_affine(Complex(0.0, 2.0)), 1);
    cfg.add(PointC::from_affine(Complex(0.0, -2.0)), 1);
    cfg.add(PointC::infinity(), 1);
    const QuanticC psi = from_roots(cfg);
    const TetrahedronReport rep = verify_tetrahedron(psi);
    CHECK(rep.splits.size() == 5);  // five distinct roots
    CHECK(rep.splits_consistent);
  }
}

TEST_CASE("fifth_point") {
  SUBCASE("pentagon base: 1 and -3") {
    std::vector<Complex> xs;
    for (int k = 1; k < 5; ++k) xs.push_back(std::polar(1.0, 2.0 * M_PI * k / 5.0));
    const FifthPointResult r = fifth_point(xs);
    CHECK(r.status == FifthPointStatus::TwoSolutions);
    REQUIRE(r.solutions.size() == 2);
    CHECK(std::abs(r.solutions[0] - Complex(-3.0)) <= 1e-10);
    CHECK(std::abs(r.solutions[1] - Complex(1.0)) <= 1e-10);
  }
  SUBCASE("square base: no fifth point, invariant stuck at 1/3") {
    const std::vector<Complex> xs{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    const FifthPointResult r = fifth_point(xs);
    CHECK(r.status == FifthPointStatus::AllValuesFail);
    CHECK(std::abs(r.quadratic.c - Complex(1.0 / 3.0)) <= 1e-14);
  }
  SUBCASE("quadratic matches the invariant of the assembled sextic") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Complex> xs;
      for (int i = 0; i < 4; ++i) xs.push_back(random_complex(rng, 2.0));
      bool distinct = true;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (std::abs(xs[i] - xs[j]) < 1e-3) distinct = false;
      if (!distinct) continue;
      const FifthPointResult r = fifth_point(xs);
      const Complex x5 = random_complex(rng, 2.0);
      // invariant of y * prod (x - x_i y) * (x - x5 y), coefficient route
      std::vector<Complex> plain{1.0};
      for (const Complex& root : xs)
        plain = detail::plain_mul(plain, std::vector<Complex>{1.0, -root});
      plain = detail::plain_mul(plain, std::vector<Complex>{1.0, -x5});
      plain = detail::plain_mul(plain, std::vector<Complex>{0.0, 1.0});  // times y
      const Complex direct = quadratic_invariant(QuanticC::from_plain(plain));
      const Complex via_quadratic =
          r.quadratic.a * x5 * x5 + 2.0 * r.quadratic.b * x5 + r.quadratic.c;
      CHECK(std::abs(direct - via_quadratic) <= 1e-10 * (1.0 + std::abs(direct)));
    }
  }
  SUBCASE("solutions substituted back annihilate the invariant") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 20; ++trial) {
      const auto pts = random_separated_points(rng, 4);
      std::vector<Complex> xs;
      bool affine = true;
      for (const auto& p : pts) {
        if (p.is_infinity()) affine = false;
        else xs.push_back(p.affine());
      }
      if (!affine) continue;
      const FifthPointResult r = fifth_point(xs);
      for (const Complex& s : r.solutions) {
        RootConfiguration<Complex> cfg;
        for (const Complex& x : xs) cfg.add(PointC::from_affine(x));
        cfg.add(PointC::from_affine(s));
        cfg.add(PointC::infinity());
        if (cfg.total_multiplicity() != 6) continue;  // solution collided with an input
        const QuanticC psi = from_roots(cfg);
        CHECK(std::abs(quadratic_invariant(psi)) <= 1e-9 * bombieri_norm2(psi));
      }
    }
  }
  SUBCASE("exact pentagon quadratic is (s - 1)(s + 3) up to scale") {
    // elementary symmetric values of the pentagon base are rational
    const QuanticQ gamma = QuanticQ::from_plain({GaussianRational(1), GaussianRational(1),
                                                 GaussianRational(1), GaussianRational(1),
                                                 GaussianRational(1)});
    const auto q = fifth_point_quadratic(gamma);
    // (a, 2b, c) proportional to (1, 2, -3): the factorisation (1-s)(-3-s)
    CHECK(q.a == q.b);
    CHECK(q.c == q.a * GaussianRational(-3));
    CHECK_FALSE(q.a.is_zero());
  }
  SUBCASE("coincident inputs rejected") {
    CHECK_THROWS_AS(fifth_point({Complex(1), Complex(1), Complex(2), Complex(3)}), DomainError);
  }
}

TEST_CASE("is_maximally_separated") {
  const std::vector<PointC> pyramid{
      PointC::from_affine(Complex(1, 0)), PointC::from_affine(Complex(-1, 0)),
      PointC::from_affine(Complex(0, 1)), PointC::from_affine(Complex(0, -1)),
      PointC::infinity()};
  const std::vector<PointC> standard = pyramid;

  auto matches_standard = [&](const std::vector<PointC>& pts, const MoebiusC& g) {
    std::vector<bool> used(5, false);
    for (const auto& p : pts) {
      const PointC img = apply_moebius(p, g);
      bool matched = false;
      for (std::size_t j = 0; j < standard.size(); ++j) {
        if (used[j]) continue;
        if (projective_distance(img, standard[j]) <= 1e-8) {
          used[j] = true;
          matched = true;
          break;
        }
      }
      if (!matched) return false;
    }
    return true;
  };

  SUBCASE("the standard square pyramid") {
    const SeparationResult r = is_maximally_separated(pyramid);
    CHECK(r.maximally_separated);
    CHECK(r.apex == 4);
    REQUIRE(r.to_square_pyramid.has_value());
    CHECK(matches_standard(pyramid, *r.to_square_pyramid));
    int degenerate_charts = 0;
    for (const auto& rec : r.poles) degenerate_charts += rec.degenerate ? 1 : 0;
    CHECK(degenerate_charts == 1);  // exactly the apex chart
  }
  SUBCASE("a rational square pyramid in disguise") {
    const std::vector<PointC> disguised{
        PointC::from_affine(Complex(0, 0)), PointC::from_affine(Complex(1, 0)),
        PointC::from_affine(Complex(0, 1)), PointC::from_affine(Complex(-1, 0)),
        PointC::infinity()};
    const SeparationResult r = is_maximally_separated(disguised);
    CHECK(r.maximally_separated);
    CHECK(points_coincide(disguised[static_cast<std::size_t>(r.apex)],
                          PointC::from_affine(Complex(0, 1)), 1e-9));
    REQUIRE(r.to_square_pyramid.has_value());
    CHECK(matches_standard(disguised, *r.to_square_pyramid));
  }
  SUBCASE("five pentagon points are not maximally separated") {
    std::vector<PointC> pts = pentagon_base();
    pts.push_back(PointC::from_affine(Complex(1.0)));
    CHECK_FALSE(is_maximally_separated(pts).maximally_separated);
  }
  SUBCASE("Moebius invariance with a working witness") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 50; ++trial) {
      const MoebiusC g = random_moebius(rng);
      std::vector<PointC> moved;
      for (const auto& p : pyramid) moved.push_back(apply_moebius(p, g));
      const SeparationResult r = is_maximally_separated(moved);
      CHECK(r.maximally_separated);
      REQUIRE(r.to_square_pyramid.has_value());
      CHECK(matches_standard(moved, *r.to_square_pyramid));
    }
  }
  SUBCASE("random five points are generically not maximally separated") {
    std::mt19937_64 rng(101);
    int separated = 0;
    for (int trial = 0; trial < 20; ++trial) {
      if (is_maximally_separated(random_separated_points(rng, 5)).maximally_separated)
        ++separated;
    }
    CHECK(separated == 0);
  }
  SUBCASE("coincident points rejected") {
    std::vector<PointC> bad = pyramid;
    bad[1] = bad[0];
    CHECK_THROWS_AS(is_maximally_separated(bad), DomainError);
  }
}
