#pragma once

// Real differential of a regular function computed from the first
// coefficients of its spherical expansion, rank classification and
// detection of singular points and degenerate spheres.
//
// At q0 = x0 + I y0 the differential acts by right multiplication by
// A1 + 2 Im(q0) A2 on the slice L_I and by right multiplication by A1 on its
// orthogonal complement.

#include <Eigen/Core>
#include <array>
#include <optional>

#include "slicereg/regular_series.hpp"

namespace slicereg {

/// A real-linear endomorphism of H = R^4 in the basis 1, i, j, k.
struct RealLinearMap4 {
  Eigen::Matrix4d matrix = Eigen::Matrix4d::Zero();

  Quaternion apply(const Quaternion& v) const;
  std::array<double, 16> row_major() const;
};

/// Number of singular values above rel_tol * largest and above abs_tol.
/// The absolute floor lets a map made of rounding noise have rank 0.
int numerical_rank(const RealLinearMap4& map, double rel_tol = 1e-8, double abs_tol = 0.0);

/// Derivative of f at q0 along v (normalized internally): v A1 + (q0 v - v conj(q0)) A2.
Quaternion directional_derivative(const RegularSeries& f, const Quaternion& q0, const Quaternion& v);

RealLinearMap4 differential_at(const RegularSeries& f, const Quaternion& q0);

struct CheckedDifferential {
  RealLinearMap4 map;
  /// Set when 0 < |Im q0| < 1e-6 and the non-real formula and the real-axis
  /// limit v -> v f'(Re q0) disagree by more than 1e-6.
  bool conditioning_warning{false};
  double real_limit_gap{0.0};
};

CheckedDifferential differential_at_checked(const RegularSeries& f, const Quaternion& q0);

enum class Rank { Rank0 = 0, Rank2 = 2, Rank4 = 4 };

struct RankClass {
  Rank rank{Rank::Rank4};
  Quaternion a1;
  Quaternion a2;
};

RankClass rank_classify(const RegularSeries& f, const Quaternion& q0);

struct SingularityCertificate {
  bool singular{false};
  /// The point q~0 on the sphere of q0 with f = f(q0) + (q - q0) * (q - q~0) * g.
  std::optional<Quaternion> witness;

  explicit operator bool() const { return singular; }
};

/// True iff f - f(q0) has total multiplicity >= 2 at the sphere through q0.
SingularityCertificate is_singular(const RegularSeries& f, const Quaternion& q0);

/// True iff f is constant on x + yS (y > 0).
bool is_degenerate_sphere(const RegularSeries& f, const Sphere& sphere);

}  // namespace slicereg
