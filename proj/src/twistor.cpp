#include "slicereg/twistor.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "slicereg/error.hpp"

namespace slicereg {

namespace {

template <std::size_t N>
std::array<Complex, N> scaled_by_largest(const std::array<Complex, N>& z) {
  const auto largest = std::max_element(z.begin(), z.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  if (std::abs(*largest) == 0.0) throw Error(ErrorKind::InvalidArgument, "homogeneous coordinates are all zero");
  const Complex s = *largest;
  std::array<Complex, N> out;
  for (std::size_t n = 0; n < N; ++n) out[n] = z[n] / s;
  out[static_cast<std::size_t>(largest - z.begin())] = 1.0;
  return out;
}

double max_abs(std::span<const Complex> z) {
  double m = 0.0;
  for (const Complex c : z) m = std::max(m, std::abs(c));
  return m;
}

// Divides p by (v - r), discarding the remainder.
ComplexPoly deflate(const ComplexPoly& p, Complex r) {
  if (p.size() <= 1) return {};
  ComplexPoly q(p.size() - 1);
  Complex carry = p.back();
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = p[k] + r * carry;
  }
  return q;
}

struct Fit {
  ComplexPoly coeffs;
  double residual;  // relative to 1 + max |value|
};

// Least-squares fits of increasing degree until the residual drops below tol.
std::optional<Fit> fit_polynomial(std::span<const Complex> nodes, std::span<const Complex> values, double tol,
                                  int max_degree) {
  const int n = static_cast<int>(nodes.size());
  double s = 1.0;
  for (const Complex v : nodes) s = std::max(s, std::abs(v));
  const double value_scale = 1.0 + max_abs(values);
  Eigen::VectorXcd y(n);
  for (int r = 0; r < n; ++r) y(r) = values[static_cast<std::size_t>(r)];

  const int top = std::min(max_degree, n - 2);
  for (int d = 0; d <= top; ++d) {
    Eigen::MatrixXcd V(n, d + 1);
    for (int r = 0; r < n; ++r) {
      const Complex t = nodes[static_cast<std::size_t>(r)] / s;
      Complex power = 1.0;
      for (int c = 0; c <= d; ++c) {
        V(r, c) = power;
        power *= t;
      }
    }
    const Eigen::VectorXcd c = V.colPivHouseholderQr().solve(y);
    const double residual = (V * c - y).cwiseAbs().maxCoeff() / value_scale;
    if (residual <= tol) {
      ComplexPoly out(static_cast<std::size_t>(d + 1));
      double scale_power = 1.0;
      for (int k = 0; k <= d; ++k) {
        out[static_cast<std::size_t>(k)] = c(k) / scale_power;
        scale_power *= s;
      }
      poly_trim(out);
      return Fit{std::move(out), residual};
    }
  }
  return std::nullopt;
}

RationalFunction reduce(ComplexPoly num, ComplexPoly den, std::span<const Complex> den_roots) {
  poly_trim(num);
  if (num.empty()) return {{}, {1.0}};
  for (const Complex r : den_roots) {
    if (den.size() <= 1) break;
    double bound = 0.0;
    for (std::size_t k = 0; k < num.size(); ++k) bound += std::abs(num[k]) * std::pow(std::abs(r), static_cast<double>(k));
    if (std::abs(poly_eval(num, r)) > 1e-8 * bound) continue;
    num = deflate(num, r);
    den = deflate(den, r);
  }
  const Complex lead = den.back();
  for (auto& c : num) c /= lead;
  for (auto& c : den) c /= lead;
  return {std::move(num), std::move(den)};
}

bool near_any(const std::vector<Complex>& points, Complex p) {
  return std::any_of(points.begin(), points.end(),
                     [&](Complex q) { return std::abs(p - q) <= 1e-6 * (1.0 + std::abs(p)); });
}

}  // namespace

double projective_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "projective points of different dimension");
  double na = 0.0, nb = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    na += std::norm(a[n]);
    nb += std::norm(b[n]);
  }
  na = std::sqrt(na);
  nb = std::sqrt(nb);
  if (na == 0.0 || nb == 0.0) throw Error(ErrorKind::InvalidArgument, "homogeneous coordinates are all zero");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      worst = std::max(worst, std::abs(a[i] * b[j] - a[j] * b[i]) / (na * nb));
  return worst;
}

ProjectivePoint3::ProjectivePoint3(const std::array<Complex, 4>& z) : z_(scaled_by_largest(z)) {}

bool ProjectivePoint3::projectively_equal(const ProjectivePoint3& other, double tol) const {
  return projective_distance(z_, other.z_) <= tol;
}

HP1Point::HP1Point(const Quaternion& q1, const Quaternion& q2) : q1_(q1), q2_(q2) {
  if (q1.norm2() == 0.0 && q2.norm2() == 0.0) throw Error(ErrorKind::InvalidArgument, "[0, 0] is not a point of HP^1");
}

bool HP1Point::is_infinity(double tol) const { return q1_.norm() <= tol * q2_.norm(); }

Quaternion HP1Point::affine_coordinate() const {
  if (q1_.norm2() == 0.0) throw Error(ErrorKind::PoleHit, "the point at infinity has no affine coordinate");
  return q1_.inverse() * q2_;
}

bool HP1Point::equals(const HP1Point& other, double tol) const {
  // Compare in the chart where this point's larger entry is normalized to 1.
  if (q1_.norm() >= q2_.norm()) {
    if (other.q1_.norm() <= 1e-300) return false;
    return distance(q1_.inverse() * q2_, other.q1_.inverse() * other.q2_) <= tol * (1.0 + (q1_.inverse() * q2_).norm());
  }
  if (other.q2_.norm() <= 1e-300) return false;
  return distance(q2_.inverse() * q1_, other.q2_.inverse() * other.q1_) <= tol;
}

Complex KleinPoint::klein_form() const {
  return zeta_[0] * zeta_[5] - zeta_[1] * zeta_[4] + zeta_[2] * zeta_[3];
}

bool KleinPoint::on_klein_quadric(double tol) const {
  const double m = max_abs(zeta_);
  return std::abs(klein_form()) <= tol * m * m;
}

KleinPoint KleinPoint::normalized() const { return KleinPoint(scaled_by_largest(zeta_)); }

bool KleinPoint::projectively_equal(const KleinPoint& other, double tol) const {
  return projective_distance(zeta_, other.zeta_) <= tol;
}

SplitPair SplitPair::from_gh(ComplexPoly g, ComplexPoly h, double radius) {
  SplitPair p;
  p.g_hat = poly_reflect(g);
  p.h_hat = poly_reflect(h);
  p.g = std::move(g);
  p.h = std::move(h);
  p.radius = radius;
  return p;
}

bool SplitPair::is_symmetric(double tol) const {
  const double scale = 1.0 + std::max({max_abs(g), max_abs(h), max_abs(g_hat), max_abs(h_hat)});
  const auto close = [&](const ComplexPoly& a, const ComplexPoly& b) {
    return max_abs(poly_sub(a, b)) <= tol * scale;
  };
  return close(g_hat, poly_reflect(g)) && close(h_hat, poly_reflect(h));
}

RegularSeries SplitPair::to_series() const {
  std::vector<Quaternion> coeffs(std::max(g.size(), h.size()));
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const Complex b = n < g.size() ? g[n] : Complex{};
    const Complex c = n < h.size() ? h[n] : Complex{};
    coeffs[n] = Quaternion::from_split(b, c);
  }
  return RegularSeries(std::move(coeffs), radius);
}

HP1Point twistor_project(const ProjectivePoint3& z) {
  return {Quaternion::from_split(z[0], z[1]), Quaternion::from_split(z[2], z[3])};
}

bool on_quadric(const ProjectivePoint3& z, double tol) { return std::abs(z[0] * z[3] - z[1] * z[2]) <= tol; }

bool in_q_plus(const ProjectivePoint3& z, double tol) {
  if (!on_quadric(z, tol)) return false;
  const bool first = std::abs(z[0]) > tol && (z[2] / z[0]).imag() > 0.0;
  const bool second = std::abs(z[1]) > tol && (z[3] / z[1]).imag() > 0.0;
  return first || second;
}

SplitPair split(const RegularSeries& f) {
  ComplexPoly g, h;
  for (const auto& a : f.coeffs()) {
    const auto [b, c] = a.split();
    g.push_back(b);
    h.push_back(c);
  }
  return SplitPair::from_gh(std::move(g), std::move(h), f.radius());
}

ProjectivePoint3 lift(const SplitPair& p, std::optional<Complex> u, Complex v) {
  if (std::abs(v) >= p.radius) throw Error(ErrorKind::OutsideRadius, "v lies outside the radius of convergence");
  const Complex g = p.g_at(v), h = p.h_at(v), gh = p.g_hat_at(v), hh = p.h_hat_at(v);
  if (!u) return {0.0, 1.0, -hh, gh};
  return {1.0, *u, g - *u * hh, h + *u * gh};
}

ProjectivePoint3 lift(const RegularSeries& f, std::optional<Complex> u, Complex v) { return lift(split(f), u, v); }

SplitPair star_product_split(const SplitPair& p1, const SplitPair& p2) {
  SplitPair out;
  out.g = poly_sub(poly_mul(p1.g, p2.g), poly_mul(p1.h, p2.h_hat));
  out.h = poly_add(poly_mul(p1.g, p2.h), poly_mul(p1.h, p2.g_hat));
  out.g_hat = poly_sub(poly_mul(p1.g_hat, p2.g_hat), poly_mul(p1.h_hat, p2.h));
  out.h_hat = poly_add(poly_mul(p1.g_hat, p2.h_hat), poly_mul(p1.h_hat, p2.g));
  out.radius = std::min(p1.radius, p2.radius);
  return out;
}

KleinPoint twistor_transform(const SplitPair& p, Complex v) {
  if (std::abs(v) >= p.radius) throw Error(ErrorKind::OutsideRadius, "v lies outside the radius of convergence");
  const Complex g = p.g_at(v), h = p.h_at(v), gh = p.g_hat_at(v), hh = p.h_hat_at(v);
  return KleinPoint({g * gh + hh * h, h, -g, gh, hh, 1.0});
}

KleinPoint twistor_transform(const RegularSeries& f, Complex v) { return twistor_transform(split(f), v); }

KleinPoint sigma(const KleinPoint& zeta) {
  const auto& z = zeta.coords();
  return KleinPoint({std::conj(z[0]), std::conj(z[4]), -std::conj(z[3]), -std::conj(z[2]), std::conj(z[1]),
                     std::conj(z[5])});
}

ProjectivePoint3 j_involution(const ProjectivePoint3& z) {
  return {-std::conj(z[1]), std::conj(z[0]), -std::conj(z[3]), std::conj(z[2])};
}

KleinPoint fiber_plucker(const std::optional<Quaternion>& q) {
  if (!q) return KleinPoint({1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  const auto [w1, w2] = q->split();
  return KleinPoint({std::norm(w1) + std::norm(w2), w2, -w1, std::conj(w1), std::conj(w2), 1.0});
}

KleinPoint line_plucker(const SplitPair& p, Complex v) {
  const Complex g = p.g_at(v), h = p.h_at(v), gh = p.g_hat_at(v), hh = p.h_hat_at(v);
  const std::array<Complex, 4> a{g, -hh, -1.0, 0.0};
  const std::array<Complex, 4> b{h, gh, 0.0, -1.0};
  const auto w = [&](int i, int j) { return a[i] * b[j] - a[j] * b[i]; };
  return KleinPoint({w(0, 1), w(0, 2), w(0, 3), w(1, 2), w(1, 3), w(2, 3)});
}

KleinPoint plucker_from_points(const ProjectivePoint3& a, const ProjectivePoint3& b) {
  const auto w = [&](int i, int j) { return a[i] * b[j] - a[j] * b[i]; };
  return KleinPoint({w(2, 3), -w(1, 3), w(1, 2), w(0, 3), -w(0, 2), w(0, 1)});
}

std::vector<double> chebyshev_nodes(int n, double a, double b) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) {
    const double x = std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * n));
    out.push_back(0.5 * (a + b) + 0.5 * (b - a) * x);
  }
  return out;
}

std::vector<Complex> circle_nodes(int n, double radius, Complex center) {
  std::vector<Complex> out;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    // exact values at the quarter points keep poles on the axes detectable
    Complex e = std::polar(1.0, t);
    if (4 * k % n == 0) {
      const int quarter = 4 * k / n;
      e = std::array<Complex, 4>{1.0, Complex{0, 1}, -1.0, Complex{0, -1}}[static_cast<std::size_t>(quarter)];
    }
    out.push_back(center + radius * e);
  }
  return out;
}

Reconstruction reconstruct(std::span<const CurveSample> curve, const ReconstructOptions& options) {
  if (curve.size() < 2) throw Error(ErrorKind::InvalidArgument, "reconstruction needs at least two samples");
  Reconstruction out;

  std::vector<Complex> nodes;
  std::array<std::vector<Complex>, 4> values;  // g, h, g^, h^
  for (const auto& sample : curve) {
    const auto& z = sample.zeta.coords();
    const double m = max_abs(z);
    if (m == 0.0) throw Error(ErrorKind::InvalidArgument, "sample with all coordinates zero");
    if (std::abs(z[5]) <= options.pole_tol * m) {
      if (options.poles == PolePolicy::Throw)
        throw Error(ErrorKind::PoleDetected, "zeta6 vanishes at v = (" + std::to_string(sample.v.real()) + ", " +
                                                 std::to_string(sample.v.imag()) + ")");
      if (!near_any(out.poles, sample.v)) out.poles.push_back(sample.v);
      continue;
    }
    nodes.push_back(sample.v);
    values[0].push_back(-z[2] / z[5]);
    values[1].push_back(z[1] / z[5]);
    values[2].push_back(z[3] / z[5]);
    values[3].push_back(z[4] / z[5]);
  }

  std::array<std::optional<Fit>, 4> fits;
  bool polynomial = nodes.size() >= 2;
  for (std::size_t n = 0; n < 4 && polynomial; ++n) {
    fits[n] = fit_polynomial(nodes, values[n], options.fit_tol, options.max_degree);
    polynomial = fits[n].has_value();
  }

  if (polynomial) {
    out.polynomial = true;
    out.pair.g = fits[0]->coeffs;
    out.pair.h = fits[1]->coeffs;
    out.pair.g_hat = fits[2]->coeffs;
    out.pair.h_hat = fits[3]->coeffs;
    out.g = {out.pair.g, {1.0}};
    out.h = {out.pair.h, {1.0}};
    out.g_hat = {out.pair.g_hat, {1.0}};
    out.h_hat = {out.pair.h_hat, {1.0}};
    for (const auto& f : fits) out.residual = std::max(out.residual, f->residual);
    out.symmetric = out.pair.is_symmetric(options.reality_tol);
    return out;
  }

  // Rational curve: fit the homogeneous coordinates themselves.
  std::vector<Complex> all_nodes;
  std::array<std::vector<Complex>, 6> raw;
  for (const auto& sample : curve) {
    all_nodes.push_back(sample.v);
    for (std::size_t n = 0; n < 6; ++n) raw[n].push_back(sample.zeta.coords()[n]);
  }
  std::array<ComplexPoly, 6> zeta;
  for (std::size_t n = 1; n < 6; ++n) {
    const auto fit = fit_polynomial(all_nodes, raw[n], options.fit_tol, options.max_degree);
    if (!fit) throw Error(ErrorKind::InvalidArgument, "the curve is neither polynomial nor rational of bounded degree");
    zeta[n] = fit->coeffs;
    out.residual = std::max(out.residual, fit->residual);
  }
  const ComplexPoly& den = zeta[5];
  if (den.empty()) throw Error(ErrorKind::PoleDetected, "zeta6 vanishes identically");
  std::vector<Complex> den_roots;
  if (den.size() > 1) den_roots = poly_roots(std::span<const Complex>(den));
  for (const Complex r : den_roots)
    if (!near_any(out.poles, r)) out.poles.push_back(r);

  ComplexPoly minus_zeta3 = zeta[2];
  for (auto& c : minus_zeta3) c = -c;
  out.g = reduce(minus_zeta3, den, den_roots);
  out.h = reduce(zeta[1], den, den_roots);
  out.g_hat = reduce(zeta[3], den, den_roots);
  out.h_hat = reduce(zeta[4], den, den_roots);

  out.symmetric = true;
  for (const Complex v : all_nodes) {
    const Complex w = std::conj(v);
    if (std::abs(poly_eval(den, v)) <= 1e-6 || std::abs(poly_eval(den, w)) <= 1e-6) continue;
    const auto check = [&](const RationalFunction& f, const RationalFunction& f_hat) {
      const Complex expected = std::conj(f(w));
      return std::abs(f_hat(v) - expected) <= options.reality_tol * (1.0 + std::abs(expected));
    };
    if (!check(out.g, out.g_hat) || !check(out.h, out.h_hat)) {
      out.symmetric = false;
      break;
    }
  }
  return out;
}

}  // namespace slicereg
