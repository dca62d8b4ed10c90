#include "quantics/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace quantics {

namespace {

double number_from(const Json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return to_double(rational_from_string(j.get<std::string>()));
    } catch (const std::exception&) {
      throw InputError(std::string("cannot parse ") + what + " from string");
    }
  }
  throw InputError(std::string(what) + " must be a number");
}

Rational rational_from(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) return rational_from_double(j.get<double>());
  if (j.is_string()) {
    try {
      return rational_from_string(j.get<std::string>());
    } catch (const std::exception&) {
      throw InputError(std::string("cannot parse ") + what + " from string");
    }
  }
  throw InputError(std::string(what) + " must be a number or rational string");
}

template <class K, class Num>
K complex_from(const Json& j, Num num, const char* what) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError(std::string(what) + " must be [re, im]");
    return K(num(j[0], what), num(j[1], what));
  }
  return K(num(j, what), num(Json(0.0), what));
}

Complex parse_complex(const Json& j, const char* what = "coefficient") {
  return complex_from<Complex>(j, [](const Json& v, const char* w) { return number_from(v, w); },
                               what);
}

GaussianRational parse_gaussian(const Json& j, const char* what = "coefficient") {
  return complex_from<GaussianRational>(
      j, [](const Json& v, const char* w) { return rational_from(v, w); }, what);
}

template <class K, class ParseCoeff>
Quantic<K> parse_quantic_impl(const Json& j, ParseCoeff parse_coeff) {
  if (!j.is_object()) throw InputError("polynomial must be a JSON object");
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    throw InputError("polynomial needs an integer \"degree\"");
  const int degree = j["degree"].get<int>();
  std::string convention = "binomial";
  if (j.contains("convention")) {
    if (!j["convention"].is_string()) throw InputError("\"convention\" must be a string");
    convention = j["convention"].get<std::string>();
    if (convention != "binomial" && convention != "plain")
      throw InputError("\"convention\" must be \"binomial\" or \"plain\"");
  }
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw InputError("polynomial needs a \"coeffs\" array");
  const auto& arr = j["coeffs"];
  if (static_cast<int>(arr.size()) != degree + 1)
    throw InputError("polynomial needs degree + 1 coefficients");
  std::vector<K> coeffs;
  for (const auto& e : arr) coeffs.push_back(parse_coeff(e));
  if (convention == "plain") return Quantic<K>::from_plain(coeffs);
  return Quantic<K>(degree, std::move(coeffs));
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  // "p/q", "p", or a decimal string
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational num(boost::multiprecision::cpp_int(text.substr(0, slash)));
    Rational den(boost::multiprecision::cpp_int(text.substr(slash + 1)));
    if (den == 0) throw DomainError("zero denominator");
    return num / den;
  }
  auto dot = text.find('.');
  auto epos = text.find_first_of("eE");
  if (dot == std::string::npos && epos == std::string::npos)
    return Rational(boost::multiprecision::cpp_int(text));
  // decimal (possibly with exponent): digits -> integer / 10^frac * 10^exp
  std::string mantissa = epos == std::string::npos ? text : text.substr(0, epos);
  long long exp10 = epos == std::string::npos ? 0 : std::stoll(text.substr(epos + 1));
  std::string digits;
  long long frac = 0;
  bool seen_dot = false;
  for (char c : mantissa) {
    if (c == '.') {
      seen_dot = true;
      continue;
    }
    digits.push_back(c);
    if (seen_dot) ++frac;
  }
  Rational r{boost::multiprecision::cpp_int(digits)};
  long long net = exp10 - frac;
  boost::multiprecision::cpp_int p10 =
      boost::multiprecision::pow(boost::multiprecision::cpp_int(10),
                                 static_cast<unsigned>(net < 0 ? -net : net));
  if (net >= 0) r *= Rational(p10);
  else r /= Rational(p10);
  return r;
}

QuanticC parse_quantic(const Json& j) {
  return parse_quantic_impl<Complex>(j, [](const Json& e) { return parse_complex(e); });
}

QuanticQ parse_quantic_exact(const Json& j) {
  return parse_quantic_impl<GaussianRational>(j,
                                              [](const Json& e) { return parse_gaussian(e); });
}

PointC parse_point(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return PointC::infinity();
    return PointC::from_affine(Complex(to_double(rational_from_string(j.get<std::string>())), 0));
  }
  if (j.is_number()) return PointC::from_affine(Complex(j.get<double>(), 0.0));
  if (j.is_array()) return PointC::from_affine(parse_complex(j, "point"));
  if (j.is_object()) {
    if (!j.contains("alpha") || !j.contains("beta"))
      throw InputError("homogeneous point needs \"alpha\" and \"beta\"");
    return PointC(parse_complex(j["alpha"], "alpha"), parse_complex(j["beta"], "beta"));
  }
  throw InputError("unrecognised point format");
}

PointQ parse_point_exact(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return PointQ::infinity();
    return PointQ::from_affine(GaussianRational(rational_from_string(j.get<std::string>())));
  }
  if (j.is_number() || j.is_array()) return PointQ::from_affine(parse_gaussian(j, "point"));
  if (j.is_object()) {
    if (!j.contains("alpha") || !j.contains("beta"))
      throw InputError("homogeneous point needs \"alpha\" and \"beta\"");
    return PointQ(parse_gaussian(j["alpha"], "alpha"), parse_gaussian(j["beta"], "beta"));
  }
  throw InputError("unrecognised point format");
}

std::vector<PointC> parse_points(const Json& j) {
  if (!j.is_array()) throw InputError("points must be a JSON array");
  std::vector<PointC> out;
  for (const auto& e : j) out.push_back(parse_point(e));
  return out;
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json quantic_json(const QuanticC& q) {
  Json coeffs = Json::array();
  for (const auto& c : q.coeffs()) coeffs.push_back(complex_json(c));
  return Json{{"degree", q.degree()}, {"convention", "binomial"}, {"coeffs", coeffs}};
}

Json quantic_json(const QuanticQ& q) {
  Json coeffs = Json::array();
  for (const auto& c : q.coeffs())
    coeffs.push_back(Json::array({format_rational(c.re), format_rational(c.im)}));
  return Json{{"degree", q.degree()}, {"convention", "binomial"}, {"coeffs", coeffs}};
}

Json point_json(const PointC& p) {
  if (p.is_infinity()) return Json("inf");
  const Complex z = p.affine();
  return complex_json(z);
}

std::string format_complex(const Complex& z) {
  char buf[64];
  const double scale = std::max(1.0, std::abs(z.real()));
  if (std::abs(z.imag()) <= 1e-12 * scale) {
    std::snprintf(buf, sizeof buf, "%.10g", z.real());
    return buf;
  }
  std::string out;
  std::snprintf(buf, sizeof buf, "%.10g", z.real());
  out = buf;
  std::snprintf(buf, sizeof buf, "%.10g", std::abs(z.imag()));
  out += (z.imag() < 0 ? "-" : "+");
  out += buf;
  out += "i";
  return out;
}

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string format_gaussian(const GaussianRational& z) {
  if (z.im == 0) return format_rational(z.re);
  std::string out = format_rational(z.re);
  out += (z.im < 0 ? " - " : " + ");
  Rational a = z.im < 0 ? Rational(-z.im) : z.im;
  out += format_rational(a) + "*i";
  return out;
}

namespace {

const char* centroid_name(CentroidCheck c) {
  switch (c) {
    case CentroidCheck::Holds: return "holds";
    case CentroidCheck::Fails: return "fails";
    case CentroidCheck::PoleHitsPoint: return "pole-on-configuration";
  }
  return "?";
}

Json class_json(const CrossRatioClass& c) {
  Json j{{"tag", quartic_class_name(c.tag)}};
  if (c.tag == QuarticClass::Degenerate) j["partition"] = c.partition;
  return j;
}

}  // namespace

Json tetrahedron_report_json(const TetrahedronReport& rep) {
  Json splits = Json::array();
  for (const auto& s : rep.splits) {
    Json sj{{"split", s.xp.split},
            {"p6", point_json(s.xp.p6)},
            {"class", class_json(s.cls)},
            {"tetrahedral", s.tetrahedral}};
    if (s.delta_zero) {
      sj["delta"] = nullptr;
    } else {
      sj["delta_coeffs"] = quantic_json(*s.xp.quartic)["coeffs"];
      Json xs = Json::array();
      for (const auto& c : s.checks)
        xs.push_back(Json{{"xpoint", point_json(c.xpoint)},
                          {"multiplicity", c.multiplicity},
                          {"centroid", centroid_name(c.centroid)}});
      sj["xpoints"] = xs;
    }
    splits.push_back(sj);
  }
  return Json{{"I", complex_json(rep.invariant)},
              {"I_relative", rep.relative_invariant},
              {"I_zero", rep.invariant_zero},
              {"splits", splits},
              {"splits_consistent", rep.splits_consistent},
              {"verdict", rep.verdict_holds}};
}

std::string tetrahedron_report_text(const TetrahedronReport& rep) {
  std::ostringstream os;
  os << "I = " << format_complex(rep.invariant)
     << (rep.invariant_zero ? "  (vanishes)" : "  (nonzero)") << "\n";
  for (const auto& s : rep.splits) {
    os << "split " << s.xp.split << "  P6 = ";
    os << (s.xp.p6.is_infinity() ? std::string("inf") : format_complex(s.xp.p6.affine()));
    if (s.delta_zero) {
      os << "  delta = 0 (all roots coincide)\n";
      continue;
    }
    os << "  class = " << quartic_class_name(s.cls.tag);
    if (s.cls.tag == QuarticClass::Degenerate) {
      os << " (";
      for (std::size_t i = 0; i < s.cls.partition.size(); ++i)
        os << (i ? "+" : "") << s.cls.partition[i];
      os << ")";
    }
    os << (s.tetrahedral ? "  [tetrahedral]" : "  [not tetrahedral]") << "\n";
    for (const auto& c : s.checks) {
      os << "    X = "
         << (c.xpoint.is_infinity() ? std::string("inf") : format_complex(c.xpoint.affine()))
         << " x" << c.multiplicity << "  centroid " << centroid_name(c.centroid) << "\n";
    }
  }
  os << "verdict: " << (rep.verdict_holds ? "consistent" : "INCONSISTENT") << "\n";
  return os.str();
}

}  // namespace quantics
