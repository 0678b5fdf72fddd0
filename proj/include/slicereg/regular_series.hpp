#pragma once

// Quaternionic polynomials and truncated power series f(q) = sum q^n a_n
// with coefficients on the right.
//
// The ring structure is the convolution (star) product, which treats q as a
// central indeterminate.  Pointwise products of values are *not* star
// products unless one factor has real coefficients.

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "slicereg/quaternion.hpp"

namespace slicereg {

inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

class RegularSeries {
 public:
  /// The zero polynomial.
  RegularSeries() = default;
  /// Trailing exact zeros are trimmed; radius defaults to a polynomial.
  explicit RegularSeries(std::vector<Quaternion> coeffs, double radius = kInfiniteRadius);

  static RegularSeries constant(const Quaternion& c) { return RegularSeries({c}); }
  /// f(q) = q
  static RegularSeries identity() { return RegularSeries({Quaternion{}, kOne}); }
  /// f(q) = q - p
  static RegularSeries linear(const Quaternion& p) { return RegularSeries({-p, kOne}); }
  /// (q - x)^2 + y^2, the real quadratic vanishing on x + yS.
  static RegularSeries sphere_factor(const Sphere& s);

  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  Quaternion coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Quaternion{}; }
  /// -1 for the zero series.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double radius() const { return radius_; }
  bool is_polynomial() const { return radius_ == kInfiniteRadius; }
  bool is_zero() const { return coeffs_.empty(); }
  bool has_real_coefficients(double tol = 0.0) const;

  /// max_n |a_n|
  double coeff_scale() const;
  /// sum_n |a_n| |q|^n, an upper bound for |f(q)|.
  double magnitude_bound(double abs_q) const;

  RegularSeries operator-() const;
  friend RegularSeries operator+(const RegularSeries& a, const RegularSeries& b);
  friend RegularSeries operator-(const RegularSeries& a, const RegularSeries& b);
  /// Right multiplication of every coefficient by c, i.e. f * c.
  RegularSeries times_right(const Quaternion& c) const;

 private:
  std::vector<Quaternion> coeffs_;
  double radius_{kInfiniteRadius};
};

/// c_n = sum_{k<=n} a_k b_{n-k}; the radius is the smaller of the two.
RegularSeries star_mul(const RegularSeries& f, const RegularSeries& g);

/// sum q^n a_n by Horner's rule; throws OutsideRadius when |q| >= R.
Quaternion eval(const RegularSeries& f, const Quaternion& q);

/// Coefficientwise conjugation, f^c = sum q^n conj(a_n).
RegularSeries conjugate(const RegularSeries& f);

/// f^s = f * f^c with its coefficients truncated to exactly real values.
/// Throws NotReal when an imaginary part exceeds 1e-12 of the coefficient scale.
RegularSeries symmetrize(const RegularSeries& f);

/// Real parts of the coefficients of a real-coefficient series.
std::vector<double> real_coefficients(const RegularSeries& f);

struct LinearDivision {
  RegularSeries quotient;
  Quaternion remainder;
};

/// f = (q - p) * g + r with r = f(p).
LinearDivision divide_linear(const RegularSeries& f, const Quaternion& p);

struct SphereDivision {
  RegularSeries quotient;
  RegularSeries remainder;  ///< degree <= 1
};

/// f = [(q - x)^2 + y^2] g + r.
SphereDivision divide_sphere(const RegularSeries& f, const Sphere& s);

struct SphericalExpansion {
  Sphere sphere;
  Quaternion center;
  std::vector<Quaternion> coeffs;  ///< A_0 ... A_N
};

/// Coefficients of f(q) = sum_n [(q - x0)^2 + y0^2]^n [A_{2n} + (q - q0) A_{2n+1}],
/// obtained by alternately dividing by (q - q0) and (q - conj(q0)).
SphericalExpansion spherical_expansion(const RegularSeries& f, const Sphere& sphere,
                                       const Quaternion& q0, int n_max);
/// Default center q0 = x0 + i y0.
SphericalExpansion spherical_expansion(const RegularSeries& f, const Sphere& sphere, int n_max);

/// Pointwise evaluation of the expansion sum at q.
Quaternion eval_expansion(const SphericalExpansion& e, const Quaternion& q);

/// Values on x + yS are f(x + yI) = alpha + I beta for every I in S.
struct SliceRepresentation {
  Quaternion alpha;
  Quaternion beta;
};

SliceRepresentation slice_representation(const RegularSeries& f, const Sphere& s);

/// The unique zero of f on x + yS (y > 0) if there is exactly one.  Returns
/// nullopt when f has no zero there or vanishes identically on the sphere.
/// `tol` is relative to the magnitude bound of f on the sphere.
std::optional<Quaternion> isolated_zero_on_sphere(const RegularSeries& f, const Sphere& s,
                                                  double tol = 1e-8);

struct SphericalZero {
  Sphere sphere;
  int multiplicity{0};  ///< spherical multiplicity 2m, always even
};

struct IsolatedZero {
  Quaternion point;
  int multiplicity{0};  ///< isolated multiplicity n
};

struct ZeroSet {
  std::vector<SphericalZero> spheres;
  std::vector<IsolatedZero> points;

  int total_multiplicity() const;
};

/// Zero set of a nonzero polynomial with spherical and isolated multiplicities.
ZeroSet zeros(const RegularSeries& f);

/// Closed-form zero set of (q - alpha) * (q - beta).
ZeroSet quadratic_roots(const Quaternion& alpha, const Quaternion& beta);

}  // namespace slicereg
