#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slicereg/differential.hpp"
#include "slicereg/error.hpp"
#include "slicereg/expression.hpp"
#include "slicereg/parabola.hpp"
#include "slicereg/twistor.hpp"
#include "slicereg/verify.hpp"

namespace py = pybind11;
using namespace slicereg;

// Python sees quaternions as 4-tuples (w, x, y, z) and polynomials either as
// expression strings or as lists of such tuples, lowest degree first.
namespace {

using QTuple = std::array<double, 4>;

Quaternion to_q(const QTuple& t) { return {t[0], t[1], t[2], t[3]}; }
QTuple from_q(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

RegularSeries to_series(const py::object& poly) {
  if (py::isinstance<py::str>(poly)) return parse_polynomial(poly.cast<std::string>());
  std::vector<Quaternion> coeffs;
  for (const auto& c : poly.cast<std::vector<QTuple>>()) coeffs.push_back(to_q(c));
  return RegularSeries(std::move(coeffs));
}

std::vector<QTuple> from_series(const RegularSeries& f) {
  std::vector<QTuple> out;
  for (const auto& c : f.coeffs()) out.push_back(from_q(c));
  return out;
}

std::optional<Complex> u_arg(const py::object& u) {
  if (u.is_none()) return std::nullopt;
  return u.cast<Complex>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Slice-regular quaternionic polynomials, twistor lifts and the quartic scroll of q^2 + qi";

  py::register_exception<Error>(m, "SliceregError");

  m.def("parse", [](const std::string& text) { return from_series(parse_polynomial(text)); }, py::arg("expression"));
  m.def("eval", [](const py::object& f, const QTuple& q) { return from_q(eval(to_series(f), to_q(q))); },
        py::arg("poly"), py::arg("q"));
  m.def("star_mul", [](const py::object& f, const py::object& g) {
    return from_series(star_mul(to_series(f), to_series(g)));
  });
  m.def("zeros", [](const py::object& f) {
    const ZeroSet zs = zeros(to_series(f));
    py::list spheres, points;
    for (const auto& s : zs.spheres) spheres.append(py::make_tuple(s.sphere.x, s.sphere.y, s.multiplicity));
    for (const auto& p : zs.points) points.append(py::make_tuple(from_q(p.point), p.multiplicity));
    py::dict out;
    out["spheres"] = spheres;
    out["points"] = points;
    return out;
  });

  m.def("phi", [](Complex u, Complex v) { return from_q(phi(u, v)); }, py::arg("u"), py::arg("v"));
  m.def("differential", [](const py::object& f, const QTuple& q) {
    return Eigen::Matrix4d(differential_at(to_series(f), to_q(q)).matrix);
  });
  m.def("rank", [](const py::object& f, const QTuple& q) {
    return static_cast<int>(rank_classify(to_series(f), to_q(q)).rank);
  });
  m.def("is_singular", [](const py::object& f, const QTuple& q) {
    const auto cert = is_singular(to_series(f), to_q(q));
    return py::make_tuple(cert.singular, cert.witness ? py::cast(from_q(*cert.witness)) : py::none());
  });

  m.def("lift", [](const py::object& f, const py::object& u, Complex v) {
    return lift(to_series(f), u_arg(u), v).coords();
  }, py::arg("poly"), py::arg("u"), py::arg("v"));
  m.def("twistor_transform", [](const py::object& f, Complex v) {
    return twistor_transform(to_series(f), v).coords();
  });
  m.def("reconstruct", [](const std::vector<Complex>& vs, const std::vector<std::array<Complex, 6>>& zetas,
                          bool record_poles) {
    if (vs.size() != zetas.size()) throw Error(ErrorKind::InvalidArgument, "need one zeta per node");
    std::vector<CurveSample> curve;
    for (std::size_t k = 0; k < vs.size(); ++k) curve.push_back({vs[k], KleinPoint(zetas[k])});
    ReconstructOptions options;
    options.poles = record_poles ? PolePolicy::Record : PolePolicy::Throw;
    const Reconstruction r = reconstruct(curve, options);
    py::dict out;
    out["g"] = r.pair.g;
    out["h"] = r.pair.h;
    out["polynomial"] = r.polynomial;
    out["symmetric"] = r.symmetric;
    out["poles"] = r.poles;
    out["residual"] = r.residual;
    return out;
  }, py::arg("v"), py::arg("zeta"), py::arg("record_poles") = false);

  m.def("f_par", [](const QTuple& q) { return from_q(f_par(to_q(q))); });
  m.def("preimages", [](const QTuple& c) {
    std::vector<QTuple> out;
    for (const auto& q : preimages(to_q(c))) out.push_back(from_q(q));
    return out;
  });
  m.def("j_plus", [](const QTuple& c) { return from_q(j_plus(to_q(c)).unit()); });
  m.def("j_minus", [](const QTuple& c) { return from_q(j_minus(to_q(c)).unit()); });
  m.def("quartic_K", [](const std::array<Complex, 4>& z) { return quartic_K(ProjectivePoint3(z)); });
  m.def("discriminant", [](const QTuple& c) { return discriminant_D(to_q(c)); });
  m.def("fiber_class", [](const QTuple& c) { return std::string(to_string(fiber_intersections(to_q(c)).kind)); });

  m.def("suites", [] {
    std::vector<std::string> names;
    for (const auto& s : verify::suites()) names.push_back(s.name);
    return names;
  });
  m.def("verify", [](const std::string& name, std::uint64_t seed, int samples) {
    verify::SuiteConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    const auto r = verify::run_suite(name, cfg);
    py::dict out;
    out["passed"] = r.passed;
    out["checks"] = r.checks;
    out["failures"] = r.failures;
    out["max_residual"] = r.max_residual;
    out["notes"] = r.notes;
    return out;
  }, py::arg("name"), py::arg("seed") = 20240917, py::arg("samples") = 0);
}
