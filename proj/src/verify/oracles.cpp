#include <Eigen/Dense>
#include <cmath>

#include "sampling.hpp"
#include "slicereg/error.hpp"
#include "slicereg/verify.hpp"

namespace slicereg::verify {

double sylvester_resultant(std::span<const double> p, std::span<const double> q) {
  if (p.size() < 2 || q.size() < 1 || p.back() == 0.0 || q.back() == 0.0)
    throw Error(ErrorKind::InvalidArgument, "resultant needs nonzero leading coefficients");
  const int m = static_cast<int>(p.size()) - 1;
  const int n = static_cast<int>(q.size()) - 1;
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(m + n, m + n);
  // rows hold coefficients from the highest degree down, shifted right per row
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = p[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = q[static_cast<std::size_t>(n - k)];
  return s.determinant();
}

double fiber_quartic_resultant(const Quaternion& c) {
  const std::vector<double> r = fiber_quartic(c);
  std::vector<double> dr;
  for (std::size_t k = 1; k < r.size(); ++k) dr.push_back(static_cast<double>(k) * r[k]);
  return sylvester_resultant(r, dr);
}

Eigen::Matrix4d finite_difference_jacobian(const RegularSeries& f, const Quaternion& q0, double h) {
  const std::array<Quaternion, 4> basis{kOne, kI, kJ, kK};
  Eigen::Matrix4d out;
  for (int c = 0; c < 4; ++c) {
    const Quaternion e = basis[static_cast<std::size_t>(c)];
    const Quaternion d = (eval(f, q0 + e * h) - eval(f, q0 - e * h)) / (2.0 * h);
    out.col(c) << d.w, d.x, d.y, d.z;
  }
  return out;
}

const std::vector<std::array<int, 4>>& quartic_monomials() {
  static const std::vector<std::array<int, 4>> monomials = [] {
    std::vector<std::array<int, 4>> out;
    for (int a = 4; a >= 0; --a)
      for (int b = 4 - a; b >= 0; --b)
        for (int c = 4 - a - b; c >= 0; --c) out.push_back({a, b, c, 4 - a - b - c});
    return out;
  }();
  return monomials;
}

Eigen::VectorXcd quartic_K_coefficients() {
  // K = Z1^2 Z2^2 - 2 Z0 Z1 Z2 Z3 + Z0^2 Z3^2 + 2 Z0 Z1^2 Z2 + 2 Z0^2 Z1 Z3
  const std::vector<std::pair<std::array<int, 4>, double>> terms{
      {{0, 2, 2, 0}, 1.0}, {{1, 1, 1, 1}, -2.0}, {{2, 0, 0, 2}, 1.0}, {{1, 2, 1, 0}, 2.0}, {{2, 1, 0, 1}, 2.0}};
  const auto& monomials = quartic_monomials();
  Eigen::VectorXcd k = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(monomials.size()));
  for (const auto& [exponents, coeff] : terms)
    for (std::size_t n = 0; n < monomials.size(); ++n)
      if (monomials[n] == exponents) k(static_cast<Eigen::Index>(n)) = coeff;
  return k;
}

NullspaceCheck nullstellensatz_check(std::uint64_t seed, int fibers, int points_per_fiber, double t_max) {
  Sampler sampler(seed);
  const auto& monomials = quartic_monomials();
  const Eigen::Index cols = static_cast<Eigen::Index>(monomials.size());
  Eigen::MatrixXcd m(fibers * points_per_fiber, cols);
  Eigen::Index row = 0;
  for (int f = 0; f < fibers; ++f) {
    const double t = sampler.uniform(-t_max, t_max);
    const Complex w1{t * t, t};
    for (int p = 0; p < points_per_fiber; ++p) {
      // a Z1=0 point plus b Z0=0 point of the fiber over w1: Z2 = w1 Z0, Z3 = conj(w1) Z1
      const Complex a = sampler.complex(), b = sampler.complex();
      std::array<Complex, 4> z{a, b, w1 * a, std::conj(w1) * b};
      double scale = 0.0;
      for (const Complex c : z) scale = std::max(scale, std::abs(c));
      for (auto& c : z) c /= scale;
      for (Eigen::Index col = 0; col < cols; ++col) {
        Complex value = 1.0;
        const auto& e = monomials[static_cast<std::size_t>(col)];
        for (int n = 0; n < 4; ++n) value *= std::pow(z[static_cast<std::size_t>(n)], e[static_cast<std::size_t>(n)]);
        m(row, col) = value;
      }
      ++row;
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinV);
  const Eigen::VectorXd s = svd.singularValues();
  NullspaceCheck out;
  out.smallest = s(cols - 1) / s(0);
  out.second_smallest = s(cols - 2) / s(0);
  for (Eigen::Index n = 0; n < cols; ++n) out.rank_deficiency += s(n) <= 1e-9 * s(0);

  const Eigen::VectorXcd k = quartic_K_coefficients().normalized();
  const Eigen::VectorXcd null = svd.matrixV().col(cols - 1);
  const Complex lambda = k.dot(null);  // conj(k) . null
  out.alignment_residual = (null - lambda * k).norm();
  out.k_residual = (m * k).norm() / s(0);
  return out;
}

}  // namespace slicereg::verify
