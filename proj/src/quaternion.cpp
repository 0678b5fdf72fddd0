#include "slicereg/quaternion.hpp"

#include <algorithm>

#include "slicereg/error.hpp"

namespace slicereg {

bool is_real(const Quaternion& q) { return q.imag_norm() <= 1e-10 * std::max(1.0, q.norm()); }

UnitImaginary::UnitImaginary(const Quaternion& q) {
  if (is_real(q)) throw Error(ErrorKind::RealArgument, "imaginary unit of a real quaternion");
  unit_ = q.imag() / q.imag_norm();
}

UnitImaginary imag_unit(const Quaternion& q) { return UnitImaginary(q); }

bool Sphere::contains(const Quaternion& q, double tol) const {
  const double scale = std::max(1.0, std::abs(x) + y);
  return std::abs(q.real() - x) <= tol * scale && std::abs(q.imag_norm() - y) <= tol * scale;
}

Sphere sphere_of(const Quaternion& q) { return {q.real(), q.imag_norm()}; }

Quaternion phi(Complex u, Complex v) {
  const Quaternion qu = Quaternion::from_split(1.0, u);
  return qu.inverse() * Quaternion::from_complex(v) * qu;
}

Quaternion phi(const ChartPoint& c) {
  if (!c.u) throw Error(ErrorKind::InvalidArgument, "phi is undefined on the u = infinity chart");
  return phi(*c.u, c.v);
}

ChartPoint phi_inverse(const Quaternion& q) {
  const Quaternion unit = imag_unit(q);
  const Complex v{q.real(), q.imag_norm()};
  const double a = unit.x;
  // I = -i is the pole of the stereographic chart.
  if (1.0 + a <= 1e-14) return {std::nullopt, v};
  const Complex bc{unit.y, unit.z};
  const Complex u = Complex{0.0, -1.0} * bc / (1.0 + a);
  return {u, v};
}

}  // namespace slicereg
