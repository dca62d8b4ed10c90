#include <doctest.h>

#include "quantics/canonical.hpp"
#include "quantics/g2.hpp"
#include "test_helpers.hpp"

using namespace quantics;
using namespace quantics::testing;

namespace {

std::vector<Complex> random_vector(std::mt19937_64& rng, int n) {
  std::vector<Complex> v;
  for (int i = 0; i < n; ++i) v.push_back(random_complex(rng));
  return v;
}

AlternatingForm<Complex> random_form(std::mt19937_64& rng, int degree, int dim) {
  AlternatingForm<Complex> f(degree, dim);
  AlternatingForm<Complex> out = f;
  const int n = static_cast<int>(binomial(dim, degree));
  for (int r = 0; r < n; ++r)
    out.at(detail::subset_unrank(r, degree, dim)) = random_complex(rng);
  return out;
}

}  // namespace

TEST_CASE("exterior algebra basics") {
  std::mt19937_64 rng(3);
  SUBCASE("interior product squares to zero and is linear") {
    const auto psi = random_form(rng, 3, 7);
    const auto u = random_vector(rng, 7);
    const auto once = contract(u, psi);
    CHECK(once.degree() == 2);
    const auto twice = contract(u, once);
    for (const auto& c : twice.components()) CHECK(std::abs(c) <= 1e-12);

    const auto v = random_vector(rng, 7);
    std::vector<Complex> w(7);
    const Complex s{0.5, -2.0};
    for (int i = 0; i < 7; ++i) w[static_cast<std::size_t>(i)] =
        u[static_cast<std::size_t>(i)] + s * v[static_cast<std::size_t>(i)];
    const auto lhs = contract(w, psi);
    auto rhs = contract(u, psi);
    rhs += contract(v, psi).scaled(s);
    for (std::size_t i = 0; i < lhs.components().size(); ++i)
      CHECK(std::abs(lhs.components()[i] - rhs.components()[i]) <= 1e-12);
  }
  SUBCASE("wedge sign symmetry and degree bookkeeping") {
    const auto f = random_form(rng, 2, 7);
    const auto g = random_form(rng, 3, 7);
    const auto fg = wedge(f, g);
    const auto gf = wedge(g, f);
    CHECK(fg.degree() == 5);
    for (std::size_t i = 0; i < fg.components().size(); ++i)
      CHECK(std::abs(fg.components()[i] - gf.components()[i]) <= 1e-12);  // (-1)^(2*3) = +1

    const auto h = random_form(rng, 1, 7);
    const auto hf = wedge(h, f);
    const auto fh = wedge(f, h);
    for (std::size_t i = 0; i < hf.components().size(); ++i)
      CHECK(std::abs(hf.components()[i] - fh.components()[i]) <= 1e-12);  // (-1)^(1*2) = +1
    const auto k1 = random_form(rng, 1, 7);
    const auto anti = wedge(h, k1);
    const auto anti2 = wedge(k1, h);
    for (std::size_t i = 0; i < anti.components().size(); ++i)
      CHECK(std::abs(anti.components()[i] + anti2.components()[i]) <= 1e-12);
  }
  SUBCASE("a scalar wedge is a scaling") {
    AlternatingForm<Complex> scalar(0, 7);
    scalar.at({}) = Complex(3.0, -1.0);
    const auto f = random_form(rng, 3, 7);
    const auto fg = wedge(scalar, f);
    for (std::size_t i = 0; i < f.components().size(); ++i)
      CHECK(fg.components()[i] == Complex(3.0, -1.0) * f.components()[i]);
  }
  SUBCASE("(2,2,3) wedges to the single top component") {
    const auto a = random_form(rng, 2, 7);
    const auto b = random_form(rng, 2, 7);
    const auto c = random_form(rng, 3, 7);
    const auto top = wedge(wedge(a, b), c);
    CHECK(top.degree() == 7);
    CHECK(top.components().size() == 1);
  }
  SUBCASE("degree overflow is rejected") {
    const auto a = random_form(rng, 4, 7);
    CHECK_THROWS_AS(wedge(a, a), DomainError);
  }
}

TEST_CASE("structure three-form") {
  const auto& psi = structure_three_form_cached();  // assembly asserts antisymmetry
  SUBCASE("nonzero") {
    double max_c = 0.0;
    for (const auto& c : psi.components()) max_c = std::max(max_c, std::abs(c));
    CHECK(max_c > 1e-6);
  }
  SUBCASE("stored components equal the direct trilinear values") {
    const Complex direct = structure_scalar(sextic_basis_vector<Complex>(1),
                                            sextic_basis_vector<Complex>(2),
                                            sextic_basis_vector<Complex>(3));
    CHECK(std::abs(psi.at({1, 2, 3}) - direct) <= 1e-12 * (1.0 + std::abs(direct)));
  }
  SUBCASE("alternating in the first two slots for random vectors") {
    std::mt19937_64 rng(5);
    double psi_scale = 0.0;
    for (const auto& c : psi.components()) psi_scale = std::max(psi_scale, std::abs(c));
    for (int trial = 0; trial < 10; ++trial) {
      const auto u = random_vector(rng, 7);
      const auto w = random_vector(rng, 7);
      // Psi(U, U, W) via contractions
      const auto iota_u = contract(u, psi);
      const auto again = contract(u, iota_u);
      Complex acc = 0.0;
      for (int i = 0; i < 7; ++i)
        acc += w[static_cast<std::size_t>(i)] * again.components()[static_cast<std::size_t>(i)];
      CHECK(std::abs(acc) <= 1e-12 * psi_scale);
    }
  }
}

TEST_CASE("compatibility scalar") {
  std::mt19937_64 rng(7);
  SUBCASE("null family lands on zero, generic vectors do not") {
    const QuanticC pyramid = QuanticC::from_plain({0, 1, 0, 0, 0, 0, -1});
    const double n2p = bombieri_norm2(pyramid);
    CHECK(std::abs(compatibility_scalar(pyramid)) <= 1e-9 * calib::kPsiRatio_d() * n2p);
    const QuanticC octa = QuanticC::from_plain({0, 1, 0, 0, 0, -1, 0});
    CHECK(std::abs(compatibility_scalar(octa)) >=
          1e-3 * calib::kPsiRatio_d() * bombieri_norm2(octa));
  }
  SUBCASE("quadratic homogeneity in U") {
    const QuanticC u = random_quantic(rng, 6);
    const Complex s{1.7, -0.3};
    const Complex lhs = compatibility_scalar(u.scaled(s));
    const Complex rhs = s * s * compatibility_scalar(u);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(rhs));
  }
  SUBCASE("the ratio to the invariant is the calibrated constant") {
    for (int trial = 0; trial < 25; ++trial) {
      const QuanticC u = random_quantic(rng, 6);
      const Complex i = quadratic_invariant(u);
      if (std::abs(i) < 1e-2 * bombieri_norm2(u)) continue;
      const Complex ratio = compatibility_scalar(u) / i;
      CHECK(std::abs(ratio - Complex(calib::kPsiRatio_d())) <=
            1e-8 * calib::kPsiRatio_d());
    }
  }
  SUBCASE("equivalence of the two zero loci over mixed samples") {
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
      QuanticC u = trial % 2 == 0
                       ? self_apolar_sample(random_complex(rng), random_complex(rng))
                       : random_quantic(rng, 6);
      const double n2 = bombieri_norm2(u);
      const bool i_zero = std::abs(quadratic_invariant(u)) <= 1e-9 * n2;
      const bool s_zero =
          std::abs(compatibility_scalar(u)) <= 1e-9 * calib::kPsiRatio_d() * n2;
      CHECK(i_zero == s_zero);
      ++checked;
    }
    CHECK(checked == 60);
  }
}
