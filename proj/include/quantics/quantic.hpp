#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "quantics/scalar.hpp"

namespace quantics {

namespace detail {

// Plain (monomial-basis) coefficient vectors c[t] * x^(m-t) y^t, m = size-1.
// These helpers tolerate identically-zero polynomials; the Quantic wrapper
// below does not.

template <class K>
std::vector<K> plain_mul(const std::vector<K>& a, const std::vector<K>& b) {
  std::vector<K> out(a.size() + b.size() - 1, K(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// d^(dx+dy) / dx^dx dy^dy of a degree-m homogeneous form.
template <class K>
std::vector<K> plain_derivative(const std::vector<K>& c, int dx, int dy) {
  const int m = static_cast<int>(c.size()) - 1;
  const int md = m - dx - dy;
  if (md < 0) return {};
  std::vector<K> out(md + 1, K(0));
  for (int t = 0; t <= md; ++t) {
    const int s = t + dy;  // y-power in the source term
    const long long f = falling_factorial(m - s, dx) * falling_factorial(s, dy);
    out[t] = c[s] * ScalarOps<K>::from_int(f);
  }
  return out;
}

template <class K>
bool all_zero(const std::vector<K>& c) {
  for (const auto& v : c)
    if (!ScalarOps<K>::is_zero(v)) return false;
  return true;
}

}  // namespace detail

/// Binary quantic of degree m, stored in the binomial convention:
/// the form is sum_k C(m,k) * coeff(k) * x^(m-k) y^k.
/// The identically-zero form is rejected at construction.
template <class K>
class Quantic {
 public:
  Quantic(int degree, std::vector<K> binomial_coeffs)
      : degree_(degree), c_(std::move(binomial_coeffs)) {
    if (degree_ < 0) throw DomainError("negative degree");
    if (static_cast<int>(c_.size()) != degree_ + 1)
      throw DomainError("coefficient count must be degree + 1");
    if (detail::all_zero(c_)) throw DomainError("the zero form is not a quantic");
  }

  static Quantic from_plain(const std::vector<K>& plain) {
    const int m = static_cast<int>(plain.size()) - 1;
    std::vector<K> c(plain.size());
    for (int k = 0; k <= m; ++k) c[k] = plain[k] / ScalarOps<K>::from_int(binomial(m, k));
    return Quantic(m, std::move(c));
  }

  int degree() const { return degree_; }
  const std::vector<K>& coeffs() const { return c_; }
  const K& coeff(int k) const { return c_.at(k); }

  std::vector<K> plain() const {
    std::vector<K> p(c_.size());
    for (int k = 0; k <= degree_; ++k) p[k] = c_[k] * ScalarOps<K>::from_int(binomial(degree_, k));
    return p;
  }

  K evaluate(const K& x, const K& y) const {
    // Horner in x/y over the plain coefficients.
    std::vector<K> p = plain();
    K acc = p[0];
    for (int k = 1; k <= degree_; ++k) acc = acc * x + p[k] * pow_int(y, k);
    return acc;
  }

  Quantic scaled(const K& s) const {
    std::vector<K> c = c_;
    for (auto& v : c) v = v * s;
    return Quantic(degree_, std::move(c));
  }

  friend Quantic operator*(const Quantic& a, const Quantic& b) {
    return Quantic::from_plain(detail::plain_mul(a.plain(), b.plain()));
  }

  friend bool operator==(const Quantic& a, const Quantic& b) {
    return a.degree_ == b.degree_ && a.c_ == b.c_;
  }

 private:
  static K pow_int(const K& v, int n) {
    K r = ScalarOps<K>::from_int(1);
    for (int i = 0; i < n; ++i) r = r * v;
    return r;
  }

  int degree_;
  std::vector<K> c_;
};

/// Bombieri norm sqrt(sum_k C(m,k) |psi_k|^2); the scale reference for all
/// floating zero-tests.
template <class K>
typename ScalarOps<K>::Real bombieri_norm2(const Quantic<K>& q) {
  typename ScalarOps<K>::Real acc(0);
  for (int k = 0; k <= q.degree(); ++k)
    acc += ScalarOps<K>::abs2(q.coeff(k)) * static_cast<typename ScalarOps<K>::Real>(
                                                binomial(q.degree(), k));
  return acc;
}

template <class K>
double bombieri_norm(const Quantic<K>& q) {
  if constexpr (ScalarOps<K>::exact) {
    return std::sqrt(to_double(bombieri_norm2(q)));
  } else {
    return std::sqrt(bombieri_norm2(q));
  }
}

/// Largest-modulus binomial coefficient becomes exactly 1 (ties broken by
/// lowest index), which makes factored constructions deterministic.
template <class K>
Quantic<K> normalize_scale(const Quantic<K>& q) {
  int best = 0;
  auto best_a2 = ScalarOps<K>::abs2(q.coeff(0));
  for (int k = 1; k <= q.degree(); ++k) {
    auto a2 = ScalarOps<K>::abs2(q.coeff(k));
    if (a2 > best_a2) {
      best_a2 = a2;
      best = k;
    }
  }
  return q.scaled(ScalarOps<K>::from_int(1) / q.coeff(best));
}

/// True when a and b are the same form up to one overall scale, testing
/// cross products |a_i b_j - a_j b_i| against tol and the coefficient scale.
template <class K>
bool proportional(const Quantic<K>& a, const Quantic<K>& b, double tol = 1e-9) {
  if (a.degree() != b.degree()) return false;
  if constexpr (ScalarOps<K>::exact) {
    for (int i = 0; i <= a.degree(); ++i)
      for (int j = i + 1; j <= a.degree(); ++j)
        if (!(a.coeff(i) * b.coeff(j) == a.coeff(j) * b.coeff(i))) return false;
    return true;
  } else {
    double sa = 0, sb = 0;
    for (int k = 0; k <= a.degree(); ++k) {
      sa = std::max(sa, std::abs(a.coeff(k)));
      sb = std::max(sb, std::abs(b.coeff(k)));
    }
    for (int i = 0; i <= a.degree(); ++i)
      for (int j = i + 1; j <= a.degree(); ++j) {
        double cross = std::abs(a.coeff(i) * b.coeff(j) - a.coeff(j) * b.coeff(i));
        if (cross > tol * sa * sb) return false;
      }
    return true;
  }
}

using QuanticC = Quantic<Complex>;
using QuanticQ = Quantic<GaussianRational>;

}  // namespace quantics
