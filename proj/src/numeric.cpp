#include <Eigen/Dense>
#include <cmath>

#include "quantics/canonical.hpp"
#include "quantics/g2.hpp"

namespace quantics {

PowerSumResult power_sum_decompose(const QuanticC& q, double tol) {
  const int m = q.degree();
  const RootConfiguration<Complex> roots = roots_of(q, tol);
  for (const auto& e : roots.entries())
    if (e.multiplicity > 1) throw DomainError("power_sum_decompose: repeated roots");
  if (roots.total_multiplicity() != m)
    throw DomainError("power_sum_decompose: inconsistent root count");

  PowerSumResult out;
  for (const auto& e : roots.entries()) out.points.push_back(e.point);

  // Rows are the binomial coefficients of (beta_i x + alpha_i y)^m, weighted
  // by sqrt(C(m,k)) so that the residual norm is the Bombieri distance.
  Eigen::MatrixXcd a(m + 1, m);
  Eigen::VectorXcd b(m + 1);
  for (int k = 0; k <= m; ++k) {
    const double wk = std::sqrt(static_cast<double>(binomial(m, k)));
    b(k) = q.coeff(k) * wk;
    for (int i = 0; i < m; ++i) {
      Complex beta_p = 1.0, alpha_p = 1.0;
      for (int t = 0; t < m - k; ++t) beta_p *= out.points[i].beta;
      for (int t = 0; t < k; ++t) alpha_p *= out.points[i].alpha;
      a(k, i) = beta_p * alpha_p * wk;
    }
  }
  Eigen::VectorXcd c = a.colPivHouseholderQr().solve(b);
  out.constants.assign(c.data(), c.data() + m);
  out.residual = (a * c - b).norm() / b.norm();
  return out;
}

const AlternatingForm<Complex>& structure_three_form_cached() {
  static const AlternatingForm<Complex> psi = structure_three_form<Complex>();
  return psi;
}

}  // namespace quantics
