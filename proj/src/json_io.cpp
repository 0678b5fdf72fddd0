#include "slicereg/json_io.hpp"

#include <cmath>

#include "slicereg/error.hpp"

namespace slicereg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, "json: " + what); }

double number(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string("expected a number for ") + what);
  return j.get<double>();
}

const Json& array_of(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) bad(std::string("expected an array of ") + std::to_string(n) + " for " + what);
  return j;
}

template <std::size_t N>
Json complex_array(const std::array<Complex, N>& z) {
  Json out = Json::array();
  for (const Complex c : z) out.push_back(to_json(c));
  return out;
}

template <std::size_t N>
std::array<Complex, N> complex_array_from(const Json& j, const char* what) {
  array_of(j, N, what);
  std::array<Complex, N> out;
  for (std::size_t n = 0; n < N; ++n) out[n] = complex_from_json(j[n]);
  return out;
}

}  // namespace

Json to_json(const Quaternion& q) { return Json::array({q.w, q.x, q.y, q.z}); }

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const RegularSeries& f) {
  Json coeffs = Json::array();
  for (const auto& a : f.coeffs()) coeffs.push_back(to_json(a));
  Json out{{"coeffs", coeffs}};
  if (f.is_polynomial())
    out["radius"] = "inf";
  else
    out["radius"] = f.radius();
  return out;
}

Json to_json(const ProjectivePoint3& z) { return complex_array(z.coords()); }

Json to_json(const KleinPoint& zeta) { return complex_array(zeta.coords()); }

Json to_json(const RealLinearMap4& m) {
  Json out = Json::array();
  for (const double x : m.row_major()) out.push_back(x);
  return out;
}

Json to_json(const ZeroSet& zs) {
  Json spheres = Json::array(), points = Json::array();
  for (const auto& s : zs.spheres) spheres.push_back({{"x", s.sphere.x}, {"y", s.sphere.y}, {"multiplicity", s.multiplicity}});
  for (const auto& p : zs.points) points.push_back({{"point", to_json(p.point)}, {"multiplicity", p.multiplicity}});
  return {{"spheres", spheres}, {"points", points}, {"total_multiplicity", zs.total_multiplicity()}};
}

Json complex_poly_to_json(const ComplexPoly& p) {
  Json out = Json::array();
  for (const Complex c : p) out.push_back(to_json(c));
  return out;
}

Json to_json(const SplitPair& p) {
  return {{"g", complex_poly_to_json(p.g)},
          {"h", complex_poly_to_json(p.h)},
          {"g_hat", complex_poly_to_json(p.g_hat)},
          {"h_hat", complex_poly_to_json(p.h_hat)}};
}

Json to_json(const RationalFunction& r) {
  return {{"num", complex_poly_to_json(r.num)}, {"den", complex_poly_to_json(r.den)}};
}

Json to_json(const Reconstruction& r) {
  Json poles = Json::array();
  for (const Complex p : r.poles) poles.push_back(to_json(p));
  Json out{{"polynomial", r.polynomial}, {"symmetric", r.symmetric}, {"residual", r.residual}, {"poles", poles}};
  if (r.polynomial) out["pair"] = to_json(r.pair);
  out["g"] = to_json(r.g);
  out["h"] = to_json(r.h);
  out["g_hat"] = to_json(r.g_hat);
  out["h_hat"] = to_json(r.h_hat);
  return out;
}

Json to_json(const FiberIntersections& fi) {
  Json params = Json::array(), points = Json::array(), z1 = Json::array(), z0 = Json::array();
  for (const Complex v : fi.parameters) params.push_back(to_json(v));
  for (const auto& p : fi.points) points.push_back(to_json(p));
  for (const Complex v : fi.z1_axis_parameters) z1.push_back(to_json(v));
  for (const Complex v : fi.z0_axis_parameters) z0.push_back(to_json(v));
  return {{"class", std::string(to_string(fi.kind))},
          {"D", fi.discriminant},
          {"parameters", params},
          {"points", points},
          {"z1_axis_point", to_json(fi.z1_axis_point)},
          {"z0_axis_point", to_json(fi.z0_axis_point)},
          {"z1_axis_parameters", z1},
          {"z0_axis_parameters", z0}};
}

Json to_json(std::span<const CurveSample> curve) {
  Json out = Json::array();
  for (const auto& s : curve) out.push_back({{"v", to_json(s.v)}, {"zeta", to_json(s.zeta)}});
  return out;
}

Quaternion quaternion_from_json(const Json& j) {
  array_of(j, 4, "a quaternion");
  return {number(j[0], "w"), number(j[1], "x"), number(j[2], "y"), number(j[3], "z")};
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  array_of(j, 2, "a complex number");
  return {number(j[0], "re"), number(j[1], "im")};
}

RegularSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) bad("a polynomial needs a \"coeffs\" array");
  std::vector<Quaternion> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(quaternion_from_json(c));
  double radius = kInfiniteRadius;
  if (j.contains("radius")) {
    const Json& r = j["radius"];
    if (r.is_string()) {
      if (r.get<std::string>() != "inf") bad("radius must be a number or \"inf\"");
    } else {
      radius = number(r, "radius");
    }
  }
  return RegularSeries(std::move(coeffs), radius);
}

ProjectivePoint3 projective_point_from_json(const Json& j) { return ProjectivePoint3(complex_array_from<4>(j, "a point of CP^3")); }

KleinPoint klein_point_from_json(const Json& j) { return KleinPoint(complex_array_from<6>(j, "a Klein point")); }

RealLinearMap4 linear_map_from_json(const Json& j) {
  array_of(j, 16, "a 4x4 real matrix");
  RealLinearMap4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.matrix(r, c) = number(j[static_cast<std::size_t>(4 * r + c)], "a matrix entry");
  return m;
}

ComplexPoly complex_poly_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of complex coefficients");
  ComplexPoly out;
  for (const auto& c : j) out.push_back(complex_from_json(c));
  return out;
}

std::vector<CurveSample> curve_from_json(const Json& j) {
  if (!j.is_array()) bad("a curve is an array of {v, zeta} samples");
  std::vector<CurveSample> out;
  for (const auto& s : j) {
    if (!s.is_object() || !s.contains("v") || !s.contains("zeta")) bad("curve samples need \"v\" and \"zeta\"");
    out.push_back({complex_from_json(s["v"]), klein_point_from_json(s["zeta"])});
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
}

}  // namespace slicereg
