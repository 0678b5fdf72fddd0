#include "slicereg/regular_series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "slicereg/complex_poly.hpp"
#include "slicereg/error.hpp"

namespace slicereg {

RegularSeries::RegularSeries(std::vector<Quaternion> coeffs, double radius)
    : coeffs_(std::move(coeffs)), radius_(radius) {
  if (!(radius_ > 0.0)) throw Error(ErrorKind::InvalidArgument, "radius of convergence must be positive");
  while (!coeffs_.empty() && coeffs_.back() == Quaternion{}) coeffs_.pop_back();
}

RegularSeries RegularSeries::sphere_factor(const Sphere& s) {
  return RegularSeries({Quaternion{s.x * s.x + s.y * s.y}, Quaternion{-2.0 * s.x}, kOne});
}

bool RegularSeries::has_real_coefficients(double tol) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [tol](const Quaternion& a) { return a.imag_norm() <= tol; });
}

double RegularSeries::coeff_scale() const {
  double s = 0.0;
  for (const auto& a : coeffs_) s = std::max(s, a.norm());
  return s;
}

double RegularSeries::magnitude_bound(double abs_q) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * abs_q + it->norm();
  return acc;
}

RegularSeries RegularSeries::operator-() const {
  auto c = coeffs_;
  for (auto& a : c) a = -a;
  return RegularSeries(std::move(c), radius_);
}

RegularSeries operator+(const RegularSeries& a, const RegularSeries& b) {
  std::vector<Quaternion> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = a.coeff(n) + b.coeff(n);
  return RegularSeries(std::move(c), std::min(a.radius_, b.radius_));
}

RegularSeries operator-(const RegularSeries& a, const RegularSeries& b) { return a + (-b); }

RegularSeries RegularSeries::times_right(const Quaternion& c) const {
  auto out = coeffs_;
  for (auto& a : out) a = a * c;
  return RegularSeries(std::move(out), radius_);
}

RegularSeries star_mul(const RegularSeries& f, const RegularSeries& g) {
  const double radius = std::min(f.radius(), g.radius());
  if (f.is_zero() || g.is_zero()) return RegularSeries({}, radius);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<Quaternion> c(a.size() + b.size() - 1);
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t l = 0; l < b.size(); ++l) c[k + l] += a[k] * b[l];
  return RegularSeries(std::move(c), radius);
}

Quaternion eval(const RegularSeries& f, const Quaternion& q) {
  if (!(q.norm() < f.radius())) throw Error(ErrorKind::OutsideRadius, "evaluation point outside the ball of convergence");
  Quaternion acc;
  const auto& a = f.coeffs();
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = q * acc + *it;
  return acc;
}

RegularSeries conjugate(const RegularSeries& f) {
  auto c = f.coeffs();
  for (auto& a : c) a = a.conj();
  return RegularSeries(std::move(c), f.radius());
}

RegularSeries symmetrize(const RegularSeries& f) {
  const RegularSeries s = star_mul(f, conjugate(f));
  const double scale = std::max(1.0, f.coeff_scale() * f.coeff_scale() * static_cast<double>(f.coeffs().size()));
  std::vector<Quaternion> c;
  c.reserve(s.coeffs().size());
  for (const auto& a : s.coeffs()) {
    if (a.imag_norm() > 1e-12 * scale)
      throw Error(ErrorKind::NotReal, "symmetrization produced a non-real coefficient");
    c.emplace_back(a.real());
  }
  return RegularSeries(std::move(c), f.radius());
}

std::vector<double> real_coefficients(const RegularSeries& f) {
  std::vector<double> out;
  out.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) out.push_back(a.real());
  return out;
}

LinearDivision divide_linear(const RegularSeries& f, const Quaternion& p) {
  const auto& a = f.coeffs();
  if (a.empty()) return {RegularSeries({}, f.radius()), Quaternion{}};
  const std::size_t d = a.size() - 1;
  std::vector<Quaternion> b(d);
  // b_{n-1} = a_n + p b_n, starting from b_{d-1} = a_d
  Quaternion carry;
  for (std::size_t n = d; n >= 1; --n) {
    carry = a[n] + p * carry;
    b[n - 1] = carry;
  }
  const Quaternion r = a[0] + p * carry;
  return {RegularSeries(std::move(b), f.radius()), r};
}

SphereDivision divide_sphere(const RegularSeries& f, const Sphere& s) {
  std::vector<Quaternion> a = f.coeffs();
  if (a.size() < 3) return {RegularSeries({}, f.radius()), f};
  const double c1 = -2.0 * s.x;
  const double c0 = s.x * s.x + s.y * s.y;
  const std::size_t d = a.size() - 1;
  std::vector<Quaternion> b(d - 1);
  for (std::size_t n = d; n >= 2; --n) {
    const Quaternion t = a[n];
    b[n - 2] = t;
    a[n] = Quaternion{};
    a[n - 1] -= t * c1;
    a[n - 2] -= t * c0;
  }
  a.resize(2);
  return {RegularSeries(std::move(b), f.radius()), RegularSeries(std::move(a), f.radius())};
}

SphericalExpansion spherical_expansion(const RegularSeries& f, const Sphere& sphere,
                                       const Quaternion& q0, int n_max) {
  if (!sphere.contains(q0, 1e-8)) throw Error(ErrorKind::InvalidArgument, "expansion center is not on the sphere");
  if (!(q0.norm() < f.radius())) throw Error(ErrorKind::OutsideRadius, "sphere is not inside the ball of convergence");
  SphericalExpansion out{sphere, q0, {}};
  out.coeffs.reserve(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
  const Quaternion q0_bar = q0.conj();
  RegularSeries rest = f;
  for (int n = 0; n <= n_max; ++n) {
    auto [quotient, remainder] = divide_linear(rest, n % 2 == 0 ? q0 : q0_bar);
    out.coeffs.push_back(remainder);
    rest = std::move(quotient);
  }
  return out;
}

SphericalExpansion spherical_expansion(const RegularSeries& f, const Sphere& sphere, int n_max) {
  return spherical_expansion(f, sphere, Quaternion{sphere.x, sphere.y}, n_max);
}

Quaternion eval_expansion(const SphericalExpansion& e, const Quaternion& q) {
  const Quaternion p2 = (q - Quaternion{e.sphere.x}) * (q - Quaternion{e.sphere.x}) +
                        Quaternion{e.sphere.y * e.sphere.y};
  const Quaternion shift = q - e.center;
  Quaternion power = kOne;
  Quaternion acc;
  for (std::size_t n = 0; n < e.coeffs.size(); n += 2) {
    Quaternion term = e.coeffs[n];
    if (n + 1 < e.coeffs.size()) term += shift * e.coeffs[n + 1];
    acc += power * term;
    power = power * p2;
  }
  return acc;
}

SliceRepresentation slice_representation(const RegularSeries& f, const Sphere& s) {
  const Quaternion plus = eval(f, Quaternion{s.x, s.y});
  const Quaternion minus = eval(f, Quaternion{s.x, -s.y});
  return {(plus + minus) * 0.5, Quaternion{0.0, -0.5} * (plus - minus)};
}

std::optional<Quaternion> isolated_zero_on_sphere(const RegularSeries& f, const Sphere& s, double tol) {
  if (f.is_zero() || s.y <= 0.0) return std::nullopt;
  const auto [alpha, beta] = slice_representation(f, s);
  const double scale = std::max(f.magnitude_bound(std::hypot(s.x, s.y)), 1e-300);
  if (beta.norm() <= tol * scale) return std::nullopt;
  const Quaternion w = -(alpha * beta.inverse());
  if (w.imag_norm() <= 1e-12 * std::max(1.0, w.norm())) return std::nullopt;
  const Quaternion unit = w.imag() / w.imag_norm();
  if ((alpha + unit * beta).norm() > tol * scale) return std::nullopt;
  return s.point(unit);
}

int ZeroSet::total_multiplicity() const {
  int total = 0;
  for (const auto& s : spheres) total += s.multiplicity;
  for (const auto& p : points) total += p.multiplicity;
  return total;
}

namespace {

struct RootCluster {
  std::vector<Complex> members;
  Complex center;
};

Complex mean_of(const std::vector<Complex>& v) {
  Complex acc{};
  for (const auto& c : v) acc += c;
  return acc / static_cast<double>(v.size());
}

// Bound on |p^(j)(v)| used to make derivative residuals relative.
double derivative_bound(std::span<const double> p, int j, double abs_v) {
  const auto dp = poly_derivative(p, j);
  double acc = 0.0;
  for (auto it = dp.rbegin(); it != dp.rend(); ++it) acc = acc * abs_v + std::abs(*it);
  return std::max(acc, 1e-300);
}

// A k-fold root is a simple root of the (k-1)-th derivative; polish there.
Complex polish_multiple_root(std::span<const double> p, Complex start, int k) {
  const auto dk = poly_derivative(p, k - 1);
  const auto dk1 = poly_derivative(p, k);
  Complex c = start;
  for (int it = 0; it < 30; ++it) {
    const Complex der = poly_eval(dk1, c);
    if (std::abs(der) == 0.0) break;
    const Complex step = poly_eval(dk, c) / der;
    c -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(c))) break;
  }
  return c;
}

bool is_multiple_root(std::span<const double> p, Complex c, int k) {
  for (int j = 0; j < k; ++j) {
    const double bound = derivative_bound(p, j, std::abs(c));
    if (std::abs(poly_eval(poly_derivative(p, j), c)) > 1e-8 * bound) return false;
  }
  return true;
}

std::vector<RootCluster> cluster_roots(std::span<const double> p, const std::vector<Complex>& roots) {
  double root_scale = 1.0;
  for (const auto& r : roots) root_scale = std::max(root_scale, std::abs(r));

  std::vector<bool> used(roots.size(), false);
  std::vector<RootCluster> clusters;
  for (std::size_t seed = 0; seed < roots.size(); ++seed) {
    if (used[seed]) continue;
    std::vector<std::pair<double, std::size_t>> near;
    for (std::size_t r = 0; r < roots.size(); ++r)
      if (!used[r]) near.emplace_back(std::abs(roots[r] - roots[seed]), r);
    std::sort(near.begin(), near.end());

    // Largest group of nearest roots that behaves like one multiple root.
    std::size_t take = 1;
    Complex center = roots[seed];
    for (std::size_t k = near.size(); k >= 2; --k) {
      std::vector<Complex> members;
      for (std::size_t n = 0; n < k; ++n) members.push_back(roots[near[n].second]);
      const Complex mean = mean_of(members);
      double spread = 0.0;
      for (const auto& m : members) spread = std::max(spread, std::abs(m - mean));
      // A k-fold root splits by roughly eps^(1/k) under rounding.
      const double loose = root_scale * 10.0 * std::pow(1e-14, 1.0 / static_cast<double>(k));
      if (spread > std::max(1e-7 * root_scale, loose)) continue;
      const int ki = static_cast<int>(k);
      const Complex polished = polish_multiple_root(p, mean, ki);
      if (spread > 0.5e-7 * root_scale && !is_multiple_root(p, polished, ki)) continue;
      take = k;
      center = polished;
      break;
    }
    RootCluster cluster;
    for (std::size_t n = 0; n < take; ++n) {
      cluster.members.push_back(roots[near[n].second]);
      used[near[n].second] = true;
    }
    cluster.center = center;
    clusters.push_back(std::move(cluster));
  }
  return clusters;
}

double division_scale(const RegularSeries& f, double abs_root) {
  return std::max(1.0, f.magnitude_bound(std::max(1.0, abs_root)));
}

}  // namespace

ZeroSet zeros(const RegularSeries& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zeros of the zero polynomial");
  if (!f.is_polynomial()) throw Error(ErrorKind::InvalidArgument, "zeros is restricted to polynomials");
  ZeroSet out;
  if (f.degree() == 0) return out;

  // Right scaling by a constant does not move zeros; make f monic.
  const RegularSeries monic = f.times_right(f.coeffs().back().inverse());
  const std::vector<double> fs = real_coefficients(symmetrize(monic));
  const auto clusters = cluster_roots(fs, poly_roots(fs, 2));

  double root_scale = 1.0;
  for (const auto& c : clusters) root_scale = std::max(root_scale, std::abs(c.center));

  for (const auto& cluster : clusters) {
    const Complex c = cluster.center;
    const int k = static_cast<int>(cluster.members.size());
    const bool real_point = std::abs(c.imag()) <= 1e-8 * root_scale;
    if (!real_point && c.imag() < 0.0) continue;  // mirror of an upper half-plane cluster

    if (real_point) {
      const Quaternion x{c.real()};
      // (q - x)^n divides f exactly when (q - x)^{2n} divides f^s.
      out.points.push_back({x, std::max(1, k / 2)});
      continue;
    }

    const Sphere sphere{c.real(), c.imag()};
    RegularSeries rest = monic;
    int m = 0;
    while (2 * (m + 1) <= k) {
      auto [quotient, remainder] = divide_sphere(rest, sphere);
      if (remainder.coeff_scale() > 1e-8 * division_scale(rest, std::abs(c))) break;
      rest = std::move(quotient);
      ++m;
    }
    if (m > 0) out.spheres.push_back({sphere, 2 * m});

    const int isolated_expected = k - 2 * m;
    if (isolated_expected <= 0) continue;
    std::optional<Quaternion> first;
    int n = 0;
    RegularSeries tilde = rest;
    while (n < isolated_expected) {
      const auto p = isolated_zero_on_sphere(tilde, sphere);
      if (!p) break;
      if (!first) first = *p;
      tilde = divide_linear(tilde, *p).quotient;
      ++n;
    }
    if (!first) {
      // The symmetrization certifies a zero on this sphere; take the best
      // candidate -alpha beta^{-1} projected onto S.
      const auto [alpha, beta] = slice_representation(rest, sphere);
      const Quaternion w = -(alpha * beta.inverse());
      first = w.imag_norm() > 0.0 ? sphere.point(w.imag() / w.imag_norm()) : sphere.point(kI);
    }
    out.points.push_back({*first, isolated_expected});
  }

  auto by_position = [](const auto& a, const auto& b) { return a < b; };
  std::sort(out.spheres.begin(), out.spheres.end(), [&](const SphericalZero& a, const SphericalZero& b) {
    return by_position(std::pair{a.sphere.x, a.sphere.y}, std::pair{b.sphere.x, b.sphere.y});
  });
  std::sort(out.points.begin(), out.points.end(), [&](const IsolatedZero& a, const IsolatedZero& b) {
    return by_position(std::tuple{a.point.w, a.point.x, a.point.y, a.point.z},
                       std::tuple{b.point.w, b.point.x, b.point.y, b.point.z});
  });
  return out;
}

ZeroSet quadratic_roots(const Quaternion& alpha, const Quaternion& beta) {
  const double scale = std::max({1.0, alpha.norm(), beta.norm()});
  const double tol = 1e-12 * scale;
  const Sphere sa = sphere_of(alpha);
  const Sphere sb = sphere_of(beta);
  const bool same_sphere = std::abs(sa.x - sb.x) <= tol && std::abs(sa.y - sb.y) <= tol;
  ZeroSet out;
  if (!same_sphere) {
    const Quaternion d = alpha - beta.conj();
    out.points.push_back({alpha, 1});
    out.points.push_back({d * beta * d.inverse(), 1});
    return out;
  }
  if (distance(alpha, beta.conj()) <= tol) {
    if (sa.y <= tol)
      out.points.push_back({Quaternion{sa.x}, 2});  // degenerate sphere: a real double zero
    else
      out.spheres.push_back({sa, 2});
    return out;
  }
  out.points.push_back({alpha, 2});
  return out;
}

}  // namespace slicereg
