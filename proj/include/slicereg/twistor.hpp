#pragma once

// The twistor projection CP^3 -> HP^1, twistor lifts of regular
// functions, and the transform into the Klein quadric of lines.
//
// A regular function splits on the slice L_i as f = g + h j with g, h
// complex.  The hatted functions g^, h^ are the Schwarz reflections
// (coefficientwise conjugates).  The lift of f is the map
//
//   [1, u, v] -> [1, u, g(v) - u h^(v), h(v) + u g^(v)]
//
// and its image lines are recorded by Plucker coordinates in the basis
// e01, e02, e03, e12, e13, e23.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "slicereg/complex_poly.hpp"
#include "slicereg/regular_series.hpp"

namespace slicereg {

/// Largest |a_i b_j - a_j b_i| over the rescaled vectors a/|a|, b/|b|.
double projective_distance(std::span<const Complex> a, std::span<const Complex> b);

class ProjectivePoint3 {
 public:
  /// Rescales so the largest-magnitude coordinate is exactly 1; throws
  /// InvalidArgument for the zero vector.
  explicit ProjectivePoint3(const std::array<Complex, 4>& z);
  ProjectivePoint3(Complex z0, Complex z1, Complex z2, Complex z3) 
      : ProjectivePoint3(std::array<Complex, 4>{z0, z1, z2, z3}) {}

  const std::array<Complex, 4>& coords() const { return z_; }
  Complex operator[](std::size_t n) const { return z_[n]; }

  bool projectively_equal(const ProjectivePoint3& other, double tol = 1e-10) const;

 private:
  std::array<Complex, 4> z_;
};

/// [q1, q2] with [q1, q2] = [p q1, p q2]; q1 = 0 is the point at infinity.
class HP1Point {
 public:
  HP1Point(const Quaternion& q1, const Quaternion& q2);

  static HP1Point affine(const Quaternion& q) { return {kOne, q}; }
  static HP1Point infinity() { return {Quaternion{}, kOne}; }

  const Quaternion& first() const { return q1_; }
  const Quaternion& second() const { return q2_; }

  bool is_infinity(double tol = 1e-12) const;
  /// q1^{-1} q2; throws PoleHit at infinity.
  Quaternion affine_coordinate() const;

  bool equals(const HP1Point& other, double tol = 1e-10) const;

 private:
  Quaternion q1_, q2_;
};

class KleinPoint {
 public:
  explicit KleinPoint(const std::array<Complex, 6>& zeta) : zeta_(zeta) {}

  const std::array<Complex, 6>& coords() const { return zeta_; }
  /// 1-based, matching zeta_1 ... zeta_6.
  Complex zeta(int n) const { return zeta_[static_cast<std::size_t>(n - 1)]; }

  /// zeta1 zeta6 - zeta2 zeta5 + zeta3 zeta4
  Complex klein_form() const;
  /// |klein_form| <= tol * max |zeta_n|^2
  bool on_klein_quadric(double tol = 1e-10) const;

  /// Rescaled so that the largest-magnitude coordinate is 1.
  KleinPoint normalized() const;
  bool projectively_equal(const KleinPoint& other, double tol = 1e-10) const;

 private:
  std::array<Complex, 6> zeta_;
};

/// f = g + h j on L_i together with the reflected pair g^, h^.  For a
/// function coming from a series the hats are the Schwarz reflections; a
/// reconstructed non-real curve may carry four independent functions.
struct SplitPair {
  ComplexPoly g, h, g_hat, h_hat;
  double radius{kInfiniteRadius};

  /// Builds the pair with g^ = reflect(g) and h^ = reflect(h).
  static SplitPair from_gh(ComplexPoly g, ComplexPoly h, double radius = kInfiniteRadius);

  /// g^ and h^ agree with the reflections of g and h to `tol` times the coefficient scale.
  bool is_symmetric(double tol = 1e-12) const;
  /// The series with coefficients b_n + c_n j; uses g and h only.
  RegularSeries to_series() const;

  Complex g_at(Complex v) const { return poly_eval(g, v); }
  Complex h_at(Complex v) const { return poly_eval(h, v); }
  Complex g_hat_at(Complex v) const { return poly_eval(g_hat, v); }
  Complex h_hat_at(Complex v) const { return poly_eval(h_hat, v); }
};

/// [Z0 + Z1 j, Z2 + Z3 j]
HP1Point twistor_project(const ProjectivePoint3& z);

/// Z0 Z3 = Z1 Z2 to 1e-10 relative.
bool on_quadric(const ProjectivePoint3& z, double tol = 1e-10);
/// On the quadric with Im(Z2/Z0) > 0 or Im(Z3/Z1) > 0.
bool in_q_plus(const ProjectivePoint3& z, double tol = 1e-10);

SplitPair split(const RegularSeries& f);

/// [1, u, g - u h^, h + u g^]; u = nullopt gives [0, 1, -h^, g^].
/// Throws OutsideRadius when |v| >= radius.
ProjectivePoint3 lift(const SplitPair& p, std::optional<Complex> u, Complex v);
ProjectivePoint3 lift(const RegularSeries& f, std::optional<Complex> u, Complex v);

/// (g1 g2 - h1 h2^, g1 h2 + h1 g2^), the split form of the star product.
SplitPair star_product_split(const SplitPair& p1, const SplitPair& p2);

/// [g g^ + h^ h, h, -g, g^, h^, 1] at v.
KleinPoint twistor_transform(const SplitPair& p, Complex v);
KleinPoint twistor_transform(const RegularSeries& f, Complex v);

/// [conj z1, conj z5, -conj z4, -conj z3, conj z2, conj z6]
KleinPoint sigma(const KleinPoint& zeta);

/// [-conj Z1, conj Z0, -conj Z3, conj Z2], the action of j on CP^3.
ProjectivePoint3 j_involution(const ProjectivePoint3& z);

/// The fiber over w1 + w2 j: [|w1|^2 + |w2|^2, w2, -w1, conj w1, conj w2, 1];
/// nullopt is the fiber over infinity, [1, 0, 0, 0, 0, 0].
KleinPoint fiber_plucker(const std::optional<Quaternion>& q);

/// Plucker coordinates of Z2 = g Z0 - h^ Z1, Z3 = h Z0 + g^ Z1 at v, by
/// wedging the two defining covectors.
KleinPoint line_plucker(const SplitPair& p, Complex v);

/// The line through two points of CP^3.
KleinPoint plucker_from_points(const ProjectivePoint3& a, const ProjectivePoint3& b);

/// n Chebyshev points of the first kind on [a, b].
std::vector<double> chebyshev_nodes(int n, double a = -1.0, double b = 1.0);
/// n equally spaced points on the circle |v - center| = radius.
std::vector<Complex> circle_nodes(int n, double radius = 1.0, Complex center = 0.0);

struct CurveSample {
  Complex v;
  KleinPoint zeta;
};

/// p(v) / q(v) with coprime parts after cancellation.
struct RationalFunction {
  ComplexPoly num;
  ComplexPoly den{Complex{1.0}};

  Complex operator()(Complex v) const { return poly_eval(num, v) / poly_eval(den, v); }
  bool is_polynomial() const { return den.size() == 1; }
};

enum class PolePolicy { Throw, Record };

struct ReconstructOptions {
  PolePolicy poles{PolePolicy::Throw};
  /// |zeta6| <= pole_tol * max |zeta_n| at a sample counts as a pole.
  double pole_tol{1e-10};
  /// Accept a fit whose residual is below fit_tol * (1 + max |value|).
  double fit_tol{1e-9};
  /// Reality test sigma(G(v)) = G(conj v), relative.
  double reality_tol{1e-8};
  int max_degree{24};
};

struct Reconstruction {
  /// Polynomial parts; empty polynomials when the curve is only rational.
  SplitPair pair;
  /// g = -zeta3/zeta6, h = zeta2/zeta6, g^ = zeta4/zeta6, h^ = zeta5/zeta6.
  RationalFunction g, h, g_hat, h_hat;
  bool polynomial{false};
  /// False for a non-real curve: g^, h^ are not the reflections of g, h.
  bool symmetric{false};
  /// Points where zeta6 vanishes, at samples or as roots of the fitted zeta6.
  std::vector<Complex> poles;
  double residual{0.0};
};

/// Recovers the split pair of the regular function whose transform is the
/// sampled curve.  Polynomial pairs are fitted from the normalized values;
/// otherwise the homogeneous coordinates are fitted as polynomials and the
/// quotients are reduced.  Throws PoleDetected (policy Throw) when zeta6
/// vanishes at a sample and InvalidArgument when no fit reaches fit_tol.
Reconstruction reconstruct(std::span<const CurveSample> curve, const ReconstructOptions& options = {});

}  // namespace slicereg
