#pragma once

// The map f(q) = q^2 + qi: its preimages, the two complex structures
// J+ and J-, the quartic scroll K in CP^3 containing its twistor lift,
// and the classification of twistor fibers against K.
//
// Target points are written c = x0 + i x1 + j x2 + k x3 = w1 + w2 j with
// C = |c|^2.  Two loci organize everything:
//
//   gamma = { t^2 + i t : t real }          the image of the real axis
//   Gamma = { x1 = 0, x0 = 1/4 - x2^2 - x3^2 }   the branch paraboloid
//
// f is a double cover of H branched over Gamma.

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "slicereg/ocs.hpp"
#include "slicereg/twistor.hpp"

namespace slicereg {

/// q^2 + qi as a series.
RegularSeries parabola_series();

Quaternion f_par(const Quaternion& q);

/// The one or two solutions of q^2 + qi = c; one exactly when c is on Gamma.
std::vector<Quaternion> preimages(const Quaternion& c);

bool on_parabola(const Quaternion& c, double tol = 1e-10);
bool on_paraboloid(const Quaternion& c, double tol = 1e-10);
/// x1 = 0 and x0 <= 1/4 - x2^2 - x3^2.
bool in_solid(const Quaternion& c, double tol = 1e-10);
/// The solid minus its boundary paraboloid.
bool in_solid_interior(const Quaternion& c, double tol = 1e-10);

/// Left multiplication by I at the preimage with positive (J+) or negative
/// (J-) real part; on Gamma both use the single preimage.  Throws DomainError
/// on gamma and in the interior of the solid paraboloid.
OCSValue j_plus(const Quaternion& c);
OCSValue j_minus(const Quaternion& c);

/// (Z1 Z2 - Z0 Z3)^2 + 2 Z1 Z0 (Z1 Z2 + Z0 Z3) on the normalized representative.
Complex quartic_K(const ProjectivePoint3& z);
Complex quartic_K(const Eigen::Vector4cd& z);
Eigen::Vector4cd quartic_K_gradient(const Eigen::Vector4cd& z);
Eigen::Matrix4cd quartic_K_hessian(const Eigen::Vector4cd& z);

enum class SingularClass { Smooth, DoubleCurve, Cusp, PinchPoint };

/// Singular points of K are the lines m02, m13, m01 (m_ij: Z_i = Z_j = 0).
/// The vertices of the square of lines are pinch points; points where the
/// Hessian has rank <= 1 are cusps; the remaining singular points lie on
/// the double curve.  Throws NotOnSurface when |K| > 1e-10.
SingularClass singular_locus_class(const ProjectivePoint3& z);

enum class FiberClass { OnParabola, OnPlaneLi, OnParaboloid, AtFocus, GenericFour };

struct FiberIntersections {
  FiberClass kind{FiberClass::GenericFour};
  /// Parameters v of the rulings F(l_v) meeting the fiber.
  std::vector<Complex> parameters;
  /// The corresponding points of the fiber on K (only when Z0 Z1 != 0).
  std::vector<ProjectivePoint3> points;
  /// Solutions of w1 = v^2 + iv (the point Z1 = 0) and conj(w1) = v^2 - iv
  /// (the point Z0 = 0); filled only when w2 = 0.
  std::vector<Complex> z1_axis_parameters;
  std::vector<Complex> z0_axis_parameters;
  /// The fiber's points with Z1 = 0 and Z0 = 0.
  ProjectivePoint3 z1_axis_point{1.0, 0.0, 0.0, 0.0};
  ProjectivePoint3 z0_axis_point{0.0, 1.0, 0.0, 0.0};
  double discriminant{0.0};
};

/// R(v) = v^4 + (1 - 2 x0) v^2 - 2 x1 v + C, real coefficients in increasing degree.
std::vector<double> fiber_quartic(const Quaternion& c);

FiberIntersections fiber_intersections(const Quaternion& c);

/// The degree 6 polynomial D with discriminant(R) = 16 D.
double discriminant_D(const Quaternion& c);

/// (|u|^2 - 3 + 4 u j) / (4 (1 + |u|^2)), the image of the sphere S/2;
/// u = nullopt gives the focus 1/4.
Quaternion osculating_sphere_point(std::optional<Complex> u);

std::string_view to_string(FiberClass kind);
std::string_view to_string(SingularClass kind);

}  // namespace slicereg
