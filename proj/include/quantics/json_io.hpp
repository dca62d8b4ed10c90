#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "quantics/apolar.hpp"
#include "quantics/point.hpp"
#include "quantics/quantic.hpp"

namespace quantics {

using Json = nlohmann::json;

// Shared formats.
//   polynomial: {"degree": m, "convention": "binomial"|"plain",
//                "coeffs": [[re,im], ...]}  (m+1 entries; a bare number is
//                accepted for a real coefficient)
//   point:      [re,im] | "inf" | {"alpha":[re,im], "beta":[re,im]}
// Exact-mode parsing accepts strings like "2/3" or "-0.25" anywhere a
// number is allowed, and converts doubles to their exact rational values.

QuanticC parse_quantic(const Json& j);
QuanticQ parse_quantic_exact(const Json& j);
PointC parse_point(const Json& j);
PointQ parse_point_exact(const Json& j);
std::vector<PointC> parse_points(const Json& j);

Json quantic_json(const QuanticC& q);
Json quantic_json(const QuanticQ& q);
Json point_json(const PointC& p);
Json complex_json(const Complex& z);

Json tetrahedron_report_json(const TetrahedronReport& rep);
std::string tetrahedron_report_text(const TetrahedronReport& rep);

/// "a+bi" with 10 significant digits; pure reals print without the
/// imaginary part, infinity prints as "inf".
std::string format_complex(const Complex& z);

/// Exact rationals print as "p/q" (or "p" for integers).
std::string format_rational(const Rational& r);
std::string format_gaussian(const GaussianRational& z);

}  // namespace quantics
