#include "slicereg/complex_poly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

#include "slicereg/error.hpp"

namespace slicereg {

Complex poly_eval(std::span<const Complex> p, Complex v) {
  Complex acc{0.0, 0.0};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * v + *it;
  return acc;
}

double poly_eval(std::span<const double> p, double t) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Complex poly_eval(std::span<const double> p, Complex v) {
  Complex acc{0.0, 0.0};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * v + *it;
  return acc;
}

ComplexPoly poly_mul(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) return {};
  ComplexPoly out(a.size() + b.size() - 1, Complex{});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

ComplexPoly poly_add(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexPoly out(std::max(a.size(), b.size()), Complex{});
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

ComplexPoly poly_sub(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexPoly out(std::max(a.size(), b.size()), Complex{});
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

ComplexPoly poly_reflect(std::span<const Complex> p) {
  ComplexPoly out(p.begin(), p.end());
  for (auto& c : out) c = std::conj(c);
  return out;
}

void poly_trim(ComplexPoly& p, double tol) {
  while (!p.empty() && std::abs(p.back()) <= tol) p.pop_back();
}

std::vector<double> poly_derivative(std::span<const double> p, int order) {
  std::vector<double> out(p.begin(), p.end());
  for (int k = 0; k < order; ++k) {
    if (out.empty()) break;
    for (std::size_t n = 1; n < out.size(); ++n) out[n - 1] = out[n] * static_cast<double>(n);
    out.pop_back();
  }
  return out;
}

namespace {

template <typename Coeff>
Complex newton_polish(std::span<const Coeff> p, Complex root, int steps) {
  const std::size_t n = p.size();
  for (int s = 0; s < steps; ++s) {
    Complex val{0.0, 0.0};
    Complex der{0.0, 0.0};
    for (std::size_t k = n; k-- > 0;) {
      der = der * root + val;
      val = val * root + Complex(p[k]);
    }
    if (std::abs(der) == 0.0) break;
    const Complex next = root - val / der;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
    // Newton can walk away from a cluster of nearly multiple roots; keep the
    // eigenvalue estimate whenever the residual does not improve.
    Complex next_val{0.0, 0.0};
    for (std::size_t k = n; k-- > 0;) next_val = next_val * next + Complex(p[k]);
    if (std::abs(next_val) > std::abs(val)) break;
    root = next;
  }
  return root;
}

template <typename Coeff>
std::vector<Complex> roots_impl(std::span<const Coeff> p, int newton_steps) {
  std::size_t size = p.size();
  while (size > 0 && std::abs(p[size - 1]) == 0.0) --size;
  if (size == 0) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  const int degree = static_cast<int>(size) - 1;
  if (degree == 0) return {};
  const auto trimmed = p.first(size);

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  const Complex lead(trimmed[degree]);
  for (int r = 1; r < degree; ++r) companion(r, r - 1) = 1.0;
  for (int r = 0; r < degree; ++r) companion(r, degree - 1) = -Complex(trimmed[r]) / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::InvalidArgument, "companion eigenvalue iteration did not converge");
  std::vector<Complex> out;
  out.reserve(degree);
  for (int r = 0; r < degree; ++r) out.push_back(newton_polish(trimmed, solver.eigenvalues()(r), newton_steps));
  return out;
}

}  // namespace

std::vector<Complex> poly_roots(std::span<const double> p, int newton_steps) {
  return roots_impl(p, newton_steps);
}

std::vector<Complex> poly_roots(std::span<const Complex> p, int newton_steps) {
  return roots_impl(p, newton_steps);
}

}  // namespace slicereg
