#include "slicereg/differential.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "slicereg/error.hpp"

namespace slicereg {

namespace {

Eigen::Vector4d as_vector(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }
Quaternion as_quaternion(const Eigen::Vector4d& v) { return {v(0), v(1), v(2), v(3)}; }

const std::array<Quaternion, 4> kBasis{kOne, kI, kJ, kK};

struct FirstCoefficients {
  Quaternion a1;
  Quaternion a2;
};

FirstCoefficients first_coefficients(const RegularSeries& f, const Quaternion& q0) {
  const auto e = spherical_expansion(f, sphere_of(q0), q0, 2);
  return {e.coeffs[1], e.coeffs[2]};
}

// Magnitude reference for deciding that an expansion coefficient vanishes.
double coefficient_scale(const RegularSeries& f, const Quaternion& q0) {
  return std::max(f.magnitude_bound(std::max(1.0, q0.norm())), 1e-300);
}

// |Im q0| below this is handled by the real-point statements.
bool on_real_axis(const Quaternion& q0) { return q0.imag_norm() == 0.0 || is_real(q0); }

}  // namespace

Quaternion RealLinearMap4::apply(const Quaternion& v) const { return as_quaternion(matrix * as_vector(v)); }

std::array<double, 16> RealLinearMap4::row_major() const {
  std::array<double, 16> out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[static_cast<std::size_t>(4 * r + c)] = matrix(r, c);
  return out;
}

int numerical_rank(const RealLinearMap4& map, double rel_tol, double abs_tol) {
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(map.matrix);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (int k = 0; k < 4; ++k)
    if (s(k) > rel_tol * s(0) && s(k) > abs_tol) ++rank;
  return rank;
}

Quaternion directional_derivative(const RegularSeries& f, const Quaternion& q0, const Quaternion& v) {
  const double n = v.norm();
  if (n == 0.0) throw Error(ErrorKind::InvalidArgument, "zero direction");
  const Quaternion u = v / n;
  const auto [a1, a2] = first_coefficients(f, q0);
  return u * a1 + (q0 * u - u * q0.conj()) * a2;
}

RealLinearMap4 differential_at(const RegularSeries& f, const Quaternion& q0) {
  const auto [a1, a2] = first_coefficients(f, q0);
  RealLinearMap4 out;
  if (on_real_axis(q0)) {
    for (int c = 0; c < 4; ++c) out.matrix.col(c) = as_vector(kBasis[static_cast<std::size_t>(c)] * a1);
    return out;
  }
  const Quaternion unit = imag_unit(q0);
  const Quaternion slice_factor = a1 + q0.imag() * 2.0 * a2;
  for (int c = 0; c < 4; ++c) {
    const Quaternion e = kBasis[static_cast<std::size_t>(c)];
    // e = u + w with u in L_I = span{1, I} and w orthogonal to it
    const Quaternion u = Quaternion{dot(e, kOne)} + unit * dot(e, unit);
    const Quaternion w = e - u;
    out.matrix.col(c) = as_vector(u * slice_factor + w * a1);
  }
  return out;
}

CheckedDifferential differential_at_checked(const RegularSeries& f, const Quaternion& q0) {
  CheckedDifferential out{differential_at(f, q0), false, 0.0};
  const double im = q0.imag_norm();
  if (im > 0.0 && im < 1e-6) {
    const Quaternion x0{q0.real()};
    const RealLinearMap4 limit = differential_at(f, x0);
    out.real_limit_gap = (out.map.matrix - limit.matrix).cwiseAbs().maxCoeff();
    out.conditioning_warning = out.real_limit_gap > 1e-6;
  }
  return out;
}

RankClass rank_classify(const RegularSeries& f, const Quaternion& q0) {
  const auto [a1, a2] = first_coefficients(f, q0);
  const double tol = 1e-10 * coefficient_scale(f, q0);
  const bool a1_zero = a1.norm() <= tol;
  const bool a2_zero = a2.norm() <= tol;
  if (on_real_axis(q0)) return {a1_zero ? Rank::Rank0 : Rank::Rank4, a1, a2};
  if (a1_zero) return {a2_zero ? Rank::Rank0 : Rank::Rank2, a1, a2};

  const Quaternion unit = imag_unit(q0);
  const Quaternion p = kOne + q0.imag() * 2.0 * a2 * a1.inverse();
  const double member_tol = 1e-9 * (1.0 + p.norm());
  const bool perpendicular = std::abs(dot(p, kOne)) <= member_tol && std::abs(dot(p, unit)) <= member_tol;
  return {perpendicular ? Rank::Rank2 : Rank::Rank4, a1, a2};
}

SingularityCertificate is_singular(const RegularSeries& f, const Quaternion& q0) {
  const RegularSeries shifted = f - RegularSeries::constant(eval(f, q0));
  const RegularSeries g = divide_linear(shifted, q0).quotient;
  const double scale = coefficient_scale(f, q0);

  if (on_real_axis(q0)) {
    if (eval(g, q0).norm() <= 1e-10 * scale) return {true, q0};
    return {false, std::nullopt};
  }

  const Sphere sphere = sphere_of(q0);
  const auto [alpha, beta] = slice_representation(g, sphere);
  if (alpha.norm() <= 1e-10 * scale && beta.norm() <= 1e-10 * scale) return {true, q0.conj()};
  if (const auto witness = isolated_zero_on_sphere(g, sphere, 1e-9)) return {true, *witness};
  return {false, std::nullopt};
}

bool is_degenerate_sphere(const RegularSeries& f, const Sphere& sphere) {
  if (!(sphere.y > 0.0)) throw Error(ErrorKind::InvalidArgument, "degenerate spheres need a positive radius");
  const Quaternion q0{sphere.x, sphere.y};
  const auto e = spherical_expansion(f, sphere, q0, 1);
  const double scale = coefficient_scale(f, q0);
  if (e.coeffs[1].norm() > 1e-10 * scale) return false;
  // Constancy at sample points of the sphere confirms A1 = 0.
  const Quaternion value = e.coeffs[0];
  static const std::array<Quaternion, 8> units{
      kI, -kI, kJ, -kK, Quaternion{0, 1, 1, 1} / std::sqrt(3.0), Quaternion{0, -1, 2, 0} / std::sqrt(5.0),
      Quaternion{0, 0.6, 0, 0.8}, Quaternion{0, 2, -1, -2} / 3.0};
  return std::all_of(units.begin(), units.end(), [&](const Quaternion& u) {
    return distance(eval(f, sphere.point(u)), value) <= 1e-9 * scale;
  });
}

}  // namespace slicereg
