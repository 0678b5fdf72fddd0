#pragma once

// Quaternion arithmetic, imaginary units, axial spheres and the
// (u, v) chart of H minus the real axis.
//
// q = w + xi + yj + zk with i^2 = j^2 = k^2 = ijk = -1.  A complex number
// a + bi is identified with the quaternion a + bi in the slice L_i, so that
// every quaternion splits uniquely as z1 + z2 j with z1, z2 complex.

#include <cmath>
#include <complex>
#include <optional>
#include <utility>

namespace slicereg {

using Complex = std::complex<double>;

struct Quaternion {
  double w{0.0}, x{0.0}, y{0.0}, z{0.0};

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w{w_}, x{x_}, y{y_}, z{z_} {}

  static constexpr Quaternion from_complex(Complex c) { return {c.real(), c.imag(), 0.0, 0.0}; }

  /// z1 + z2 j, with z2 j = Re(z2) j + Im(z2) k.
  static constexpr Quaternion from_split(Complex z1, Complex z2) {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
  }

  /// Inverse of from_split: returns (z1, z2) with q = z1 + z2 j.
  constexpr std::pair<Complex, Complex> split() const { return {{w, x}, {y, z}}; }

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }

  Quaternion inverse() const {
    const double n2 = norm2();
    return {w / n2, -x / n2, -y / n2, -z / n2};
  }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
  friend Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

  // Hamilton product
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

inline Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }

/// Euclidean inner product on H = R^4.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

/// A quaternion is treated as real when |Im q| <= 1e-10 * max(1, |q|).
bool is_real(const Quaternion& q);

/// An element of the sphere S = {q : q^2 = -1}, stored normalized.
class UnitImaginary {
 public:
  /// Normalizes the imaginary part of q; throws RealArgument when it vanishes.
  explicit UnitImaginary(const Quaternion& q);

  const Quaternion& value() const { return unit_; }
  operator const Quaternion&() const { return unit_; }

 private:
  Quaternion unit_;
};

/// I_q = Im(q) / |Im(q)|; throws RealArgument on the real axis.
UnitImaginary imag_unit(const Quaternion& q);

/// The axial sphere x + yS; y == 0 degenerates to the real point x.
struct Sphere {
  double x{0.0};
  double y{0.0};

  /// x + yI for a unit imaginary I.
  Quaternion point(const Quaternion& unit) const { return Quaternion{x} + unit * y; }
  bool contains(const Quaternion& q, double tol = 1e-10) const;
};

Sphere sphere_of(const Quaternion& q);

/// q = Q_u^{-1} v Q_u with Q_u = 1 + uj; u == nullopt is the point at infinity.
struct ChartPoint {
  std::optional<Complex> u;
  Complex v;
};

/// (1 + uj)^{-1} v (1 + uj); requires a finite u.
Quaternion phi(const ChartPoint& c);
Quaternion phi(Complex u, Complex v);

/// v = Re q + i|Im q| and u = -i(b + ic)/(1 + a) for I_q = ai + bj + ck.
ChartPoint phi_inverse(const Quaternion& q);

}  // namespace slicereg
