#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace quantics {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a mathematical precondition of an operation is violated
/// (wrong degree, coincident points, singular map, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown on malformed external input (JSON schema violations).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of Q(i), used by the exact calibration mode. Field operations
/// are exact; there is no ordering beyond the squared modulus.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(long long n) : re(n) {}       // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Rational abs2() const { return re * re + im * im; }

  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.abs2();
    if (n == 0) throw DomainError("division by zero in Q(i)");
    GaussianRational p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline Complex to_complex(const GaussianRational& z) { return {to_double(z.re), to_double(z.im)}; }

/// Exact rational value of a double (every finite double is a dyadic rational).
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value has no rational image");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, 0.5 <= |m| < 1
  // 53 doublings make the mantissa integral.
  long long mant = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rational r(mant);
  if (exp >= 0) {
    r *= Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(2), exp));
  } else {
    r /= Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(2), -exp));
  }
  return r;
}

/// "p/q", "p", or a decimal like "-0.25" -> exact rational.
Rational rational_from_string(const std::string& text);

// Scalar traits used by the templated kernels. K is std::complex<double>
// in floating mode and GaussianRational in exact mode.
template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Complex> {
  static constexpr bool exact = false;
  using Real = double;
  static Complex from_int(long long n) { return Complex(static_cast<double>(n), 0.0); }
  static Complex from_ratio(long long p, long long q) {
    return Complex(static_cast<double>(p) / static_cast<double>(q), 0.0);
  }
  static Real abs2(const Complex& z) { return std::norm(z); }
  static bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }
  static Complex conj(const Complex& z) { return std::conj(z); }
};

template <>
struct ScalarOps<GaussianRational> {
  static constexpr bool exact = true;
  using Real = Rational;
  static GaussianRational from_int(long long n) { return GaussianRational(n); }
  static GaussianRational from_ratio(long long p, long long q) {
    return GaussianRational(Rational(p) / Rational(q));
  }
  static Real abs2(const GaussianRational& z) { return z.abs2(); }
  static bool is_zero(const GaussianRational& z) { return z.is_zero(); }
  static GaussianRational conj(const GaussianRational& z) { return z.conj(); }
};

inline double abs_value(const Complex& z) { return std::abs(z); }
inline double abs_value(const GaussianRational& z) { return std::sqrt(to_double(z.abs2())); }

/// Binomial coefficient as a 64-bit integer; exact for every (n, k) this
/// library touches (degrees stay far below overflow).
inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long long falling_factorial(int n, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

}  // namespace quantics
