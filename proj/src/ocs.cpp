#include "slicereg/ocs.hpp"

#include <algorithm>
#include <cmath>

#include "slicereg/differential.hpp"
#include "slicereg/error.hpp"

namespace slicereg {

Eigen::Matrix4d OCSValue::matrix() const {
  const std::array<Quaternion, 4> basis{kOne, kI, kJ, kK};
  Eigen::Matrix4d out;
  for (int c = 0; c < 4; ++c) {
    const Quaternion image = apply(basis[static_cast<std::size_t>(c)]);
    out.col(c) << image.w, image.x, image.y, image.z;
  }
  return out;
}

std::array<Quaternion, 4> OCSValue::adapted_basis() const {
  // Project whichever of j, i is less aligned with I.
  const Quaternion seed = std::abs(unit_.y) < 0.9 ? kJ : kI;
  Quaternion other = seed - unit_ * dot(seed, unit_);
  other = other / other.norm();
  return {kOne, unit_, other, unit_ * other};
}

Eigen::Matrix4d OCSValue::adapted_matrix() {
  Eigen::Matrix4d out = Eigen::Matrix4d::Zero();
  out(1, 0) = 1.0;
  out(0, 1) = -1.0;
  out(3, 2) = 1.0;
  out(2, 3) = -1.0;
  return out;
}

OCSValue j_standard(const Quaternion& q) { return OCSValue(imag_unit(q)); }

InducedStructure induced_ocs(const RegularSeries& f, const Quaternion& q) {
  const UnitImaginary unit = imag_unit(q);
  if (is_singular(f, q)) throw Error(ErrorKind::SingularPoint, "the differential is not invertible here");
  return {eval(f, q), OCSValue(unit)};
}

MobiusCoeffs::MobiusCoeffs(const Quaternion& a, const Quaternion& b, const Quaternion& c, const Quaternion& d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (std::abs(invertibility_scalar(a, b, c, d)) <= 1e-12)
    throw Error(ErrorKind::NotInvertible, "Mobius coefficients are not invertible");
}

double MobiusCoeffs::invertibility_scalar(const Quaternion& a, const Quaternion& b, const Quaternion& c,
                                          const Quaternion& d) {
  return a.norm2() * d.norm2() + b.norm2() * c.norm2() - 2.0 * (b.conj() * d * c.conj() * a).real();
}

Quaternion mobius(const MobiusCoeffs& m, const Quaternion& q) {
  const Quaternion den = q * m.c() + m.d();
  if (den.norm() <= 1e-12) throw Error(ErrorKind::PoleHit, "q c + d vanishes");
  return den.inverse() * (q * m.a() + m.b());
}

bool is_so2h(const MobiusCoeffs& m) {
  const std::array<Quaternion, 4> coeffs{m.a(), m.b(), m.c(), m.d()};
  const auto largest = std::max_element(coeffs.begin(), coeffs.end(),
                                        [](const Quaternion& p, const Quaternion& q) { return p.norm() < q.norm(); });
  const double scale = largest->norm();
  const Quaternion eps = *largest / scale;
  return std::all_of(coeffs.begin(), coeffs.end(), [&](const Quaternion& c) {
    return (c - eps * dot(c, eps)).norm() <= 1e-10 * scale;
  });
}

Quaternion conj_by_unit(const Quaternion& eps, const Quaternion& q) {
  if (std::abs(eps.norm() - 1.0) > 1e-12) throw Error(ErrorKind::NotUnit, "conjugation needs a unit quaternion");
  return eps.inverse() * q * eps;
}

}  // namespace slicereg
