// Exact-rational derivation of every calibration constant used by the
// library. Each relation is recomputed over Q(i) on random rational inputs
// and the run aborts on the first mismatch, so a passing run is a proof by
// exact evaluation. With --write FILE the generated block of the calibration
// header is replaced in place.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "quantics/calibration.hpp"
#include "quantics/canonical.hpp"
#include "quantics/catalectant.hpp"
#include "quantics/g2.hpp"
#include "quantics/json_io.hpp"
#include "quantics/roots.hpp"
#include "quantics/spinor.hpp"
#include "quantics/transvectant.hpp"

using namespace quantics;

namespace {

std::mt19937_64 rng(20240425u);

GaussianRational random_scalar() {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  return {Rational(num(rng)) / den(rng), Rational(num(rng)) / den(rng)};
}

QuanticQ random_quantic(int degree) {
  while (true) {
    std::vector<GaussianRational> c;
    for (int k = 0; k <= degree; ++k) c.push_back(random_scalar());
    if (!detail::all_zero(c)) return QuanticQ(degree, std::move(c));
  }
}

int failures = 0;

void check(bool ok, const std::string& what) {
  std::cout << (ok ? "  ok  " : "  FAIL") << "  " << what << "\n";
  if (!ok) ++failures;
}


// --------------------------------------------------------------------------

void derive_transvectant_scales() {
  std::cout << "derivative/contraction transvectant scale:\n";
  bool all = true;
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= std::min(m, n); ++k) {
        const QuanticQ phi = random_quantic(m);
        const QuanticQ psi = random_quantic(n);
        auto raw = transvectant(phi, psi, k);
        auto sp = spinor_transvectant(SymmetricSpinor<GaussianRational>::from_quantic(phi),
                                      SymmetricSpinor<GaussianRational>::from_quantic(psi), k);
        const GaussianRational scale{calib::deriv_scale(m, n, k)};
        if (!raw.has_value()) {
          all = all && sp.is_zero();
          continue;
        }
        for (int r = 0; r <= raw->degree(); ++r)
          if (!(raw->coeff(r) == scale * sp.components[r])) all = false;
      }
  check(all, "raw<,>_k = m!/(m-k)! * n!/(n-k)! * contraction<,>_k for all m,n <= 6");
}

void derive_invariant_scale() {
  std::cout << "quadratic invariant vs full transvectant:\n";
  bool all = true;
  for (int m = 2; m <= 10; m += 2) {
    const QuanticQ q = random_quantic(m);
    auto full = transvectant(q, q, m);
    const GaussianRational raw =
        full ? full->coeff(0) : GaussianRational(0);
    const GaussianRational expected =
        GaussianRational(calib::invariant_from_raw_scale(m)) * raw;
    if (!(quadratic_invariant(q) == expected)) all = false;
    // spinor invariant agrees with no extra constant
    if (!(spinor_invariant(SymmetricSpinor<GaussianRational>::from_quantic(q)) ==
          quadratic_invariant(q)))
      all = false;
  }
  check(all, "I = raw<psi,psi>_m / (m!)^2 and I = spinor contraction, m = 2..10");
}

void derive_char_scale() {
  std::cout << "characteristic quartic of the cubic action:\n";
  bool all = true;
  for (int t = 0; t < 10; ++t) {
    const QuanticQ q = random_quantic(6);
    const auto cq = characteristic_quartic(q);  // throws if odd terms appear
    if (!(cq.invariant_i == quadratic_invariant(q))) all = false;
  }
  check(all, "lambda^3, lambda^1 vanish and I = 2 c2 / (6!)^2 on random sextics");
}

void derive_catalectant() {
  std::cout << "catalectant from the transvectant route:\n";
  // J as defined by the determinant route: J = kCharJ * c0.
  auto j_det = [](const QuanticQ& q) { return characteristic_quartic(q).invariant_j; };
  auto b_part = [](const QuanticQ& q) {
    auto i_cov = transvectant(q, q, 4);
    if (!i_cov) return GaussianRational(0);
    auto paired = transvectant(*i_cov, *i_cov, 4);
    return paired ? paired->coeff(0) : GaussianRational(0);
  };
  // Solve J = a * B + b * I^2 from two pinned sextics.
  const QuanticQ p1 = QuanticQ::from_plain(
      {GaussianRational(1), GaussianRational(0), GaussianRational(0), GaussianRational(0),
       GaussianRational(0), GaussianRational(0), GaussianRational(1)});  // x^6 + y^6
  const QuanticQ p2 = QuanticQ::from_plain(
      {GaussianRational(0), GaussianRational(1), GaussianRational(0), GaussianRational(0),
       GaussianRational(0), GaussianRational(-1), GaussianRational(0)});  // x^5 y - x y^5
  const GaussianRational B1 = b_part(p1), I1 = quadratic_invariant(p1), J1 = j_det(p1);
  const GaussianRational B2 = b_part(p2), I2 = quadratic_invariant(p2), J2 = j_det(p2);
  // [B1 I1^2; B2 I2^2] [a; b] = [J1; J2]
  const GaussianRational det = B1 * (I2 * I2) - B2 * (I1 * I1);
  const GaussianRational a = (J1 * (I2 * I2) - J2 * (I1 * I1)) / det;
  const GaussianRational b = (B1 * J2 - B2 * J1) / det;
  bool all = a.im == 0 && b.im == 0;
  for (int t = 0; t < 10; ++t) {
    const QuanticQ q = random_quantic(6);
    const GaussianRational i = quadratic_invariant(q);
    if (!(j_det(q) == a * b_part(q) + b * (i * i))) all = false;
  }
  check(all, "J = a * raw<raw<p,p>_4,raw<p,p>_4>_4 + b * I^2 on random sextics");
  std::cout << "    kCatalectantB  = " << format_rational(a.re) << "\n";
  std::cout << "    kCatalectantI2 = " << format_rational(b.re) << "\n";
  check(a.re == calib::kCatalectantB && b.re == calib::kCatalectantI2,
        "matches the constants embedded in calibration.hpp");
}

void derive_split_constant() {
  std::cout << "split identity I(kappa rho) = -c I(<kappa,rho>_1):\n";
  GaussianRational c(0);
  bool all = true;
  bool have = false;
  for (int t = 0; t < 20; ++t) {
    const QuanticQ kappa = random_quantic(5);
    const QuanticQ rho = random_quantic(1);
    const QuanticQ psi = kappa * rho;
    auto delta = transvectant(kappa, rho, 1);
    if (!delta) continue;
    const GaussianRational i_psi = quadratic_invariant(psi);
    const GaussianRational i_delta = quadratic_invariant(*delta);
    if (i_delta.is_zero()) {
      if (!i_psi.is_zero()) all = false;
      continue;
    }
    const GaussianRational r = -(i_psi / i_delta);
    if (!have) {
      c = r;
      have = true;
    } else if (!(c == r)) {
      all = false;
    }
  }
  check(all && have && c.im == 0, "ratio constant across 20 random splits");
  std::cout << "    kSplitC = " << format_rational(c.re) << "\n";
  check(c.re == calib::kSplitC, "matches the constant embedded in calibration.hpp");
}

GaussianRational derive_psi_ratio() {
  std::cout << "compatibility scalar of the three-form:\n";
  const AlternatingForm<GaussianRational> psi = structure_three_form<GaussianRational>();
  GaussianRational ratio(0);
  bool all = true;
  bool have = false;
  for (int t = 0; t < 8; ++t) {
    const QuanticQ u = random_quantic(6);
    const GaussianRational i = quadratic_invariant(u);
    const GaussianRational s = compatibility_scalar(u.coeffs(), psi);
    if (i.is_zero()) {
      if (!s.is_zero()) all = false;
      continue;
    }
    const GaussianRational r = s / i;
    if (!have) {
      ratio = r;
      have = true;
    } else if (!(ratio == r)) {
      all = false;
    }
  }
  check(all && have && ratio.im == 0, "scalar(U) / I(U) constant over random U");
  std::cout << "    kPsiRatio = " << format_rational(ratio.re) << "\n";
  check(ratio.re == calib::kPsiRatio, "matches the constant embedded in calibration.hpp");
  return ratio;
}

void verify_power_sum() {
  std::cout << "power-sum decomposition, exact route:\n";
  // Self-apolar sextic with Gaussian-rational roots: {inf, 3i, -3i, 5, 3, 3/8}.
  std::vector<PointQ> pts{
      PointQ::infinity(),
      PointQ::from_affine(GaussianRational(Rational(0), Rational(3))),
      PointQ::from_affine(GaussianRational(Rational(0), Rational(-3))),
      PointQ::from_affine(GaussianRational(5)),
      PointQ::from_affine(GaussianRational(3)),
      PointQ::from_affine(GaussianRational(Rational(3) / 8)),
  };
  RootConfiguration<GaussianRational> cfg;
  for (const auto& p : pts) cfg.add(p);
  const QuanticQ psi = from_roots(cfg);
  check(quadratic_invariant(psi).is_zero(), "frozen configuration has I = 0 exactly");
  const auto constants = power_sum_constants(psi, pts);
  const auto combo = power_sum_combination(pts, constants, 6);
  const QuanticQ rebuilt = QuanticQ::from_plain(combo);
  check(rebuilt == psi, "sum of sixth powers of the factors reproduces psi exactly");
}

void verify_sylvester() {
  std::cout << "Sylvester canonical form:\n";
  bool all = true;
  for (int t = 0; t < 10; ++t) {
    const GaussianRational A = random_scalar(), B = random_scalar(), C = random_scalar();
    const QuanticQ s = sylvester_sextic(A, B, C);
    const GaussianRational expect =
        GaussianRational(2) * (C * A + C * B + B * A) - GaussianRational(2);
    if (!(quadratic_invariant(s) == expect)) all = false;
  }
  check(all, "I = 2CA + 2CB + 2BA - 2 exactly");
  bool slice_ok = true;
  for (int t = 0; t < 10; ++t) {
    GaussianRational b = random_scalar(), c = random_scalar();
    if (b == c) continue;
    const auto p = sylvester_slice_params(b, c);
    const QuanticQ via_sub = sylvester_sextic(p.A, p.B, p.C);
    const QuanticQ direct = self_apolar_sample(b, c);
    if (!proportional(via_sub, direct)) slice_ok = false;
    if (!quadratic_invariant(direct).is_zero()) slice_ok = false;
  }
  check(slice_ok, "(b,c) slice matches the substitution route and has I = 0");
}

void write_header(const std::string& path, const GaussianRational& cat_a,
                  const GaussianRational& cat_b, const GaussianRational& split_c,
                  const GaussianRational& psi_ratio) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream keep;
  std::string line;
  bool skipping = false;
  while (std::getline(in, line)) {
    if (line.find("// BEGIN GENERATED CONSTANTS") != std::string::npos) {
      skipping = true;
      keep << line << "\n";
      keep << "// Catalectant from the transvectant route: with B = "
              "raw<raw<p,p>_4, raw<p,p>_4>_4,\n";
      keep << "//   J = kCatalectantB * B + kCatalectantI2 * I^2.\n";
      keep << "inline const Rational kCatalectantB = Rational(\"" << format_rational(cat_a.re)
           << "\");\n";
      keep << "inline const Rational kCatalectantI2 = Rational(\"" << format_rational(cat_b.re)
           << "\");\n\n";
      keep << "// Split identity I(kappa * rho) = -kSplitC * I(raw<kappa, rho>_1).\n";
      keep << "inline const Rational kSplitC = Rational(\"" << format_rational(split_c.re)
           << "\");\n\n";
      keep << "// Compatibility scalar of the exterior three-form: scalar(U) = kPsiRatio * "
              "I(U).\n";
      keep << "inline const Rational kPsiRatio = Rational(\"" << format_rational(psi_ratio.re)
           << "\");\n";
      continue;
    }
    if (line.find("// END GENERATED CONSTANTS") != std::string::npos) skipping = false;
    if (!skipping) keep << line << "\n";
  }
  in.close();
  std::ofstream out(path);
  out << keep.str();
  std::cout << "wrote " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string write_path;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--write" && i + 1 < argc) write_path = argv[++i];
  }

  derive_transvectant_scales();
  derive_invariant_scale();
  derive_char_scale();

  // Recompute the generated constants from scratch.
  auto j_det = [](const QuanticQ& q) { return characteristic_quartic(q).invariant_j; };
  auto b_part = [](const QuanticQ& q) {
    auto i_cov = transvectant(q, q, 4);
    if (!i_cov) return GaussianRational(0);
    auto paired = transvectant(*i_cov, *i_cov, 4);
    return paired ? paired->coeff(0) : GaussianRational(0);
  };
  const QuanticQ p1 = QuanticQ::from_plain(
      {GaussianRational(1), GaussianRational(0), GaussianRational(0), GaussianRational(0),
       GaussianRational(0), GaussianRational(0), GaussianRational(1)});
  const QuanticQ p2 = QuanticQ::from_plain(
      {GaussianRational(0), GaussianRational(1), GaussianRational(0), GaussianRational(0),
       GaussianRational(0), GaussianRational(-1), GaussianRational(0)});
  const GaussianRational B1 = b_part(p1), I1 = quadratic_invariant(p1), J1 = j_det(p1);
  const GaussianRational B2 = b_part(p2), I2 = quadratic_invariant(p2), J2 = j_det(p2);
  const GaussianRational det = B1 * (I2 * I2) - B2 * (I1 * I1);
  const GaussianRational cat_a = (J1 * (I2 * I2) - J2 * (I1 * I1)) / det;
  const GaussianRational cat_b = (B1 * J2 - B2 * J1) / det;

  derive_catalectant();

  GaussianRational split_c(0);
  {
    // one clean split for the report value
    const QuanticQ kappa = random_quantic(5);
    const QuanticQ rho = random_quantic(1);
    auto delta = transvectant(kappa, rho, 1);
    const GaussianRational i_delta = delta ? quadratic_invariant(*delta) : GaussianRational(0);
    if (!i_delta.is_zero()) split_c = -(quadratic_invariant(kappa * rho) / i_delta);
  }
  derive_split_constant();
  const GaussianRational psi_ratio = derive_psi_ratio();
  verify_power_sum();
  verify_sylvester();

  if (!write_path.empty() && failures == 0)
    write_header(write_path, cat_a, cat_b, split_c, psi_ratio);

  std::cout << (failures == 0 ? "all derivations passed\n" : "DERIVATION FAILURES\n");
  return failures == 0 ? 0 : 1;
}
