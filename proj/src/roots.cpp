#include "quantics/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace quantics {
namespace {

Complex horner(const std::vector<Complex>& c, Complex x) {
  Complex acc = c.front();
  for (std::size_t i = 1; i < c.size(); ++i) acc = acc * x + c[i];
  return acc;
}

std::vector<Complex> poly_derivative(const std::vector<Complex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n <= 0) return {Complex(0.0)};
  std::vector<Complex> d(n);
  for (int i = 0; i < n; ++i) d[i] = c[i] * static_cast<double>(n - i);
  return d;
}

// Up to `steps` Newton iterations; bails out when the derivative is
// noise-dominated (multiple roots are re-polished from their cluster later).
Complex newton_polish(const std::vector<Complex>& c, const std::vector<Complex>& d, Complex x,
                      int steps) {
  for (int i = 0; i < steps; ++i) {
    Complex f = horner(c, x);
    Complex fp = horner(d, x);
    if (std::abs(fp) < 1e-13 * (1.0 + std::abs(x))) break;
    Complex step = f / fp;
    x -= step;
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(x))) break;
  }
  return x;
}

std::vector<Complex> companion_eigenvalues(const std::vector<Complex>& monic) {
  const int n = static_cast<int>(monic.size()) - 1;
  if (n == 0) return {};
  if (n == 1) return {-monic[1]};
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -monic[n - i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, /*computeEigenvectors=*/false);
  std::vector<Complex> out(n);
  for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

struct Cluster {
  Complex center;
  int size = 1;
  std::vector<Complex> members;
};

// A candidate k-fold root must annihilate the polynomial and its first k-1
// derivatives to within rounding noise of their coefficient scales. This is
// what separates the eps^(1/k) ring of a true multiple root from k nearby
// simple roots.
class MultiplicityGate {
 public:
  explicit MultiplicityGate(const std::vector<Complex>& monic) {
    derivs_.push_back(monic);
    while (derivs_.back().size() > 1) derivs_.push_back(poly_derivative(derivs_.back()));
    for (const auto& d : derivs_) {
      double m = 0.0;
      for (Complex c : d) m = std::max(m, std::abs(c));
      coeff_scale_.push_back(std::max(m, 1e-300));
    }
  }

  /// Newton on the (k-1)th derivative, where a k-fold root is simple.
  Complex refine(Complex c, int k) const {
    const auto& f = derivs_[static_cast<std::size_t>(k - 1)];
    if (f.size() < 2) return c;
    return newton_polish(f, poly_derivative(f), c, 20);
  }

  bool accepts(Complex c, int k, double rel_tol) const {
    const double grow = std::max(1.0, std::abs(c));
    for (int j = 0; j < k; ++j) {
      const auto& f = derivs_[static_cast<std::size_t>(j)];
      const int deg = static_cast<int>(f.size()) - 1;
      double scale = coeff_scale_[static_cast<std::size_t>(j)];
      for (int t = 0; t < deg; ++t) scale *= grow;
      if (std::abs(horner(f, c)) > rel_tol * scale) return false;
    }
    return true;
  }

 private:
  std::vector<std::vector<Complex>> derivs_;
  std::vector<double> coeff_scale_;
};

std::vector<Cluster> cluster_roots(const std::vector<Complex>& pts,
                                   const MultiplicityGate& gate, double tol, int degree) {
  // Containment radius: a genuine m-fold root perturbed at rounding level
  // scatters its copies within roughly eps^(1/m); anything farther from the
  // refined center than this cannot belong to the cluster. The polynomial
  // degree bounds every multiplicity that can occur.
  const double contain = 5.0 * std::pow(1e-12, 1.0 / static_cast<double>(std::max(degree, 1)));

  std::vector<Cluster> clusters;
  for (Complex p : pts) clusters.push_back({p, 1, {p}});
  while (clusters.size() > 1) {
    // candidate merges ordered by center distance; take the closest that
    // either sits inside the plain distance tolerance or passes the gate
    std::size_t bi = 0, bj = 0;
    bool found = false;
    double best = 0.0;
    for (std::size_t i = 0; i < clusters.size(); ++i)
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        const double d = std::abs(clusters[i].center - clusters[j].center);
        if (found && d >= best) continue;
        const int k = clusters[i].size + clusters[j].size;
        Complex c = (clusters[i].center * static_cast<double>(clusters[i].size) +
                     clusters[j].center * static_cast<double>(clusters[j].size)) /
                    static_cast<double>(k);
        const bool close = d <= tol * (1.0 + std::abs(c));
        if (!close) {
          c = gate.refine(c, k);
          if (!gate.accepts(c, k, 1e-9)) continue;
          // the refined root must actually contain every member
          const double radius = contain * (1.0 + std::abs(c));
          bool contained = true;
          for (const auto* cl : {&clusters[i], &clusters[j]})
            for (Complex m : cl->members)
              if (std::abs(m - c) > radius) contained = false;
          if (!contained) continue;
        }
        best = d;
        bi = i;
        bj = j;
        found = true;
      }
    if (!found) break;
    const int k = clusters[bi].size + clusters[bj].size;
    Complex c = (clusters[bi].center * static_cast<double>(clusters[bi].size) +
                 clusters[bj].center * static_cast<double>(clusters[bj].size)) /
                static_cast<double>(k);
    std::vector<Complex> members = clusters[bi].members;
    members.insert(members.end(), clusters[bj].members.begin(), clusters[bj].members.end());
    clusters[bi] = {gate.refine(c, k), k, std::move(members)};
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
  }
  return clusters;
}

}  // namespace

RootConfiguration<Complex> roots_of(const Quantic<Complex>& q, double tol, double tol_inf) {
  const int m = q.degree();
  std::vector<Complex> plain = q.plain();
  const double norm = bombieri_norm(q);

  RootConfiguration<Complex> out;

  // Roots at infinity: vanishing leading plain coefficients.
  int inf_mult = 0;
  while (inf_mult < m && std::abs(plain[inf_mult]) <= tol_inf * norm) ++inf_mult;
  if (inf_mult > 0) out.add(PointC::infinity(), inf_mult, tol);

  const int n = m - inf_mult;  // degree of the affine part
  if (n == 0) return out;

  std::vector<Complex> monic(plain.begin() + inf_mult, plain.end());
  for (auto& c : monic) c /= plain[inf_mult];

  std::vector<Complex> raw = companion_eigenvalues(monic);
  std::vector<Complex> deriv = poly_derivative(monic);
  for (auto& r : raw) r = newton_polish(monic, deriv, r, 10);

  const MultiplicityGate gate(monic);
  for (const Cluster& cl : cluster_roots(raw, gate, tol, n)) {
    out.add(PointC::from_affine(gate.refine(cl.center, cl.size)), cl.size, tol);
  }
  return out;
}

}  // namespace quantics
