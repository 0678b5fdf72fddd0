#include "slicereg/parabola.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>

#include "slicereg/differential.hpp"
#include "slicereg/error.hpp"

namespace slicereg {

namespace {

constexpr Complex kIc{0.0, 1.0};

// Root pairs closer than this (relative) are treated as one point.
constexpr double kCoincidence = 1e-5;

bool coincide(Complex a, Complex b) { return std::abs(a - b) <= kCoincidence * (1.0 + std::abs(a)); }
bool coincide(const Quaternion& a, const Quaternion& b) { return distance(a, b) <= kCoincidence * (1.0 + a.norm()); }

// Roots of v^2 + b v + c.
std::array<Complex, 2> quadratic(Complex b, Complex c) {
  const Complex s = std::sqrt(b * b - 4.0 * c);
  // avoid cancellation in the smaller root
  const Complex big = (std::abs(-b + s) >= std::abs(-b - s)) ? (-b + s) / 2.0 : (-b - s) / 2.0;
  if (big == Complex{}) return {Complex{}, Complex{}};
  return {big, c / big};
}

Quaternion newton_polish(const Quaternion& c, Quaternion q) {
  const RegularSeries f = parabola_series();
  for (int step = 0; step < 4; ++step) {
    const Quaternion r = f_par(q) - c;
    if (r.norm() == 0.0) break;
    const Eigen::Matrix4d jac = differential_at(f, q).matrix;
    Eigen::FullPivLU<Eigen::Matrix4d> lu(jac);
    if (!lu.isInvertible()) break;
    const Eigen::Vector4d delta = lu.solve(Eigen::Vector4d(r.w, r.x, r.y, r.z));
    const Quaternion next = q - Quaternion{delta(0), delta(1), delta(2), delta(3)};
    if ((f_par(next) - c).norm() >= r.norm()) break;
    q = next;
  }
  return q;
}

// The second preimage of f(z + wj): -z - i + e^{2 i theta} w j with tan theta = z + conj(z).
Quaternion partner(const Quaternion& alpha) {
  const auto [z, w] = alpha.split();
  const double s = 2.0 * z.real();
  const Complex rotation = Complex{1.0 - s * s, 2.0 * s} / (1.0 + s * s);
  return Quaternion::from_split(-z - kIc, rotation * w);
}

Eigen::Vector4cd as_vector(const ProjectivePoint3& z) { return {z[0], z[1], z[2], z[3]}; }

OCSValue branch_structure(const Quaternion& c, bool positive) {
  if (on_parabola(c)) throw Error(ErrorKind::DomainError, "J+ and J- are undefined on the parabola gamma");
  if (in_solid_interior(c)) throw Error(ErrorKind::DomainError, "J+ and J- are undefined inside the solid paraboloid");
  const auto pre = preimages(c);
  if (pre.size() == 1) return OCSValue(imag_unit(pre.front()));
  const auto& pick = (pre[0].real() > 0.0) == positive ? pre[0] : pre[1];
  return OCSValue(imag_unit(pick));
}

}  // namespace

RegularSeries parabola_series() { return RegularSeries({Quaternion{}, kI, kOne}); }

Quaternion f_par(const Quaternion& q) { return q * q + q * kI; }

std::vector<Quaternion> preimages(const Quaternion& c) {
  const auto [w1, w2] = c.split();
  const double scale = 1.0 + c.norm();
  std::vector<Quaternion> out;
  if (std::abs(w2) <= 1e-12 * scale) {
    // both preimages lie in L_i: z^2 + iz - w1 = 0
    const auto roots = quadratic(kIc, -w1);
    out = {Quaternion::from_complex(roots[0]), Quaternion::from_complex(roots[1])};
  } else {
    const ZeroSet zs = zeros(parabola_series() - RegularSeries::constant(c));
    if (zs.points.empty()) throw Error(ErrorKind::InvalidArgument, "no isolated preimage found");
    const Quaternion alpha = newton_polish(c, zs.points.front().point);
    out = {alpha, newton_polish(c, partner(alpha))};
  }
  if (coincide(out[0], out[1])) out.resize(1);
  return out;
}

bool on_parabola(const Quaternion& c, double tol) {
  const double scale = std::max(1.0, c.norm());
  return std::abs(c.y) <= tol * scale && std::abs(c.z) <= tol * scale &&
         std::abs(c.w - c.x * c.x) <= tol * scale;
}

bool on_paraboloid(const Quaternion& c, double tol) {
  const double scale = std::max(1.0, c.norm());
  return std::abs(c.x) <= tol * scale && std::abs(c.w - (0.25 - c.y * c.y - c.z * c.z)) <= tol * scale;
}

bool in_solid(const Quaternion& c, double tol) {
  const double scale = std::max(1.0, c.norm());
  return std::abs(c.x) <= tol * scale && c.w <= 0.25 - c.y * c.y - c.z * c.z + tol * scale;
}

bool in_solid_interior(const Quaternion& c, double tol) { return in_solid(c, tol) && !on_paraboloid(c, tol); }

OCSValue j_plus(const Quaternion& c) { return branch_structure(c, true); }
OCSValue j_minus(const Quaternion& c) { return branch_structure(c, false); }

Complex quartic_K(const Eigen::Vector4cd& z) {
  const Complex a = z(1) * z(2) - z(0) * z(3);
  const Complex b = z(1) * z(2) + z(0) * z(3);
  return a * a + 2.0 * z(1) * z(0) * b;
}

Complex quartic_K(const ProjectivePoint3& z) { return quartic_K(as_vector(z)); }

Eigen::Vector4cd quartic_K_gradient(const Eigen::Vector4cd& z) {
  const Complex Z0 = z(0), Z1 = z(1), Z2 = z(2), Z3 = z(3);
  const Complex a = Z1 * Z2 - Z0 * Z3;
  const Complex b = Z1 * Z2 + Z0 * Z3;
  return {-2.0 * Z3 * a + 2.0 * Z1 * b + 2.0 * Z0 * Z1 * Z3,  //
          2.0 * Z2 * a + 2.0 * Z0 * b + 2.0 * Z0 * Z1 * Z2,   //
          2.0 * Z1 * a + 2.0 * Z0 * Z1 * Z1,                  //
          -2.0 * Z0 * a + 2.0 * Z0 * Z0 * Z1};
}

Eigen::Matrix4cd quartic_K_hessian(const Eigen::Vector4cd& z) {
  const Complex Z0 = z(0), Z1 = z(1), Z2 = z(2), Z3 = z(3);
  Eigen::Matrix4cd h;
  h(0, 0) = 2.0 * Z3 * Z3 + 4.0 * Z1 * Z3;
  h(0, 1) = -2.0 * Z2 * Z3 + 4.0 * Z1 * Z2 + 4.0 * Z0 * Z3;
  h(0, 2) = -2.0 * Z1 * Z3 + 2.0 * Z1 * Z1;
  h(0, 3) = -2.0 * Z1 * Z2 + 4.0 * Z0 * Z3 + 4.0 * Z0 * Z1;
  h(1, 1) = 2.0 * Z2 * Z2 + 4.0 * Z0 * Z2;
  h(1, 2) = 4.0 * Z1 * Z2 - 2.0 * Z0 * Z3 + 4.0 * Z0 * Z1;
  h(1, 3) = -2.0 * Z0 * Z2 + 2.0 * Z0 * Z0;
  h(2, 2) = 2.0 * Z1 * Z1;
  h(2, 3) = -2.0 * Z0 * Z1;
  h(3, 3) = 2.0 * Z0 * Z0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < r; ++c) h(r, c) = h(c, r);
  return h;
}

SingularClass singular_locus_class(const ProjectivePoint3& z) {
  const Eigen::Vector4cd v = as_vector(z);
  if (std::abs(quartic_K(v)) > 1e-10) throw Error(ErrorKind::NotOnSurface, "the point does not lie on K");
  if (quartic_K_gradient(v).cwiseAbs().maxCoeff() > 1e-10) return SingularClass::Smooth;

  // the normalized representative of a vertex has one coordinate 1 and three zeros
  int zero_count = 0;
  for (int n = 0; n < 4; ++n) zero_count += std::abs(v(n)) <= 1e-10;
  if (zero_count == 3) return SingularClass::PinchPoint;

  const Eigen::Matrix4cd h = quartic_K_hessian(v);
  const double tol = 1e-10 * std::max(1.0, h.cwiseAbs().maxCoeff() * h.cwiseAbs().maxCoeff());
  for (int r1 = 0; r1 < 4; ++r1)
    for (int r2 = r1 + 1; r2 < 4; ++r2)
      for (int c1 = 0; c1 < 4; ++c1)
        for (int c2 = c1 + 1; c2 < 4; ++c2)
          if (std::abs(h(r1, c1) * h(r2, c2) - h(r1, c2) * h(r2, c1)) > tol) return SingularClass::DoubleCurve;
  return SingularClass::Cusp;
}

std::vector<double> fiber_quartic(const Quaternion& c) {
  return {c.norm2(), -2.0 * c.x, 1.0 - 2.0 * c.w, 0.0, 1.0};
}

FiberIntersections fiber_intersections(const Quaternion& c) {
  const auto [w1, w2] = c.split();
  FiberIntersections out;
  out.discriminant = discriminant_D(c);
  out.z1_axis_point = ProjectivePoint3(1.0, 0.0, w1, w2);
  out.z0_axis_point = ProjectivePoint3(0.0, 1.0, -std::conj(w2), std::conj(w1));

  if (std::abs(w2) <= 1e-12 * (1.0 + c.norm())) {
    const auto a = quadratic(kIc, -w1);               // v^2 + iv = w1
    const auto b = quadratic(-kIc, -std::conj(w1));   // v^2 - iv = conj(w1)
    out.z1_axis_parameters = {a[0], a[1]};
    out.z0_axis_parameters = {b[0], b[1]};
    out.parameters = {a[0], a[1], b[0], b[1]};
    bool shared = false;
    for (const Complex x : a)
      for (const Complex y : b) shared = shared || coincide(x, y);
    if (shared)
      out.kind = FiberClass::OnParabola;
    else if (coincide(a[0], a[1]) && coincide(b[0], b[1]))
      out.kind = FiberClass::AtFocus;
    else
      out.kind = FiberClass::OnPlaneLi;
    return out;
  }

  const double big_c = c.norm2();
  out.parameters = poly_roots(std::span<const double>(fiber_quartic(c)));
  for (const Complex v : out.parameters) {
    const Complex g = v * v + kIc * v, g_hat = v * v - kIc * v;
    const Complex u = (w1 - g) / std::conj(w2);
    out.points.emplace_back(1.0, u, g, u * g_hat);
  }
  out.kind = std::abs(out.discriminant) <= 1e-9 * std::pow(1.0 + big_c, 3) ? FiberClass::OnParaboloid
                                                                            : FiberClass::GenericFour;
  return out;
}

double discriminant_D(const Quaternion& c) {
  const double x0 = c.w, x1 = c.x;
  const double C = c.norm2();
  const double x0_2 = x0 * x0, x0_3 = x0_2 * x0, x0_4 = x0_3 * x0;
  const double x1_2 = x1 * x1, x1_4 = x1_2 * x1_2;
  return C - 8 * C * C + 16 * C * C * C - 8 * C * x0 + 32 * C * C * x0 + 24 * C * x0_2 - 32 * C * C * x0_2 -
         32 * C * x0_3 + 16 * C * x0_4 - x1_2 + 36 * C * x1_2 + 6 * x0 * x1_2 - 72 * C * x0 * x1_2 -
         12 * x0_2 * x1_2 + 8 * x0_3 * x1_2 - 27 * x1_4;
}

Quaternion osculating_sphere_point(std::optional<Complex> u) {
  if (!u) return Quaternion{0.25};
  const double n2 = std::norm(*u);
  return (Quaternion{n2 - 3.0} + Quaternion::from_split(0.0, 4.0 * *u)) / (4.0 * (1.0 + n2));
}

std::string_view to_string(FiberClass kind) {
  switch (kind) {
    case FiberClass::OnParabola: return "OnParabola";
    case FiberClass::OnPlaneLi: return "OnPlaneLi";
    case FiberClass::OnParaboloid: return "OnParaboloid";
    case FiberClass::AtFocus: return "AtFocus";
    case FiberClass::GenericFour: return "GenericFour";
  }
  return "?";
}

std::string_view to_string(SingularClass kind) {
  switch (kind) {
    case SingularClass::Smooth: return "Smooth";
    case SingularClass::DoubleCurve: return "DoubleCurve";
    case SingularClass::Cusp: return "Cusp";
    case SingularClass::PinchPoint: return "PinchPoint";
  }
  return "?";
}

}  // namespace slicereg
