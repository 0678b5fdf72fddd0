#pragma once

// Dense complex polynomials, coefficients ordered from degree 0 upward.

#include <span>
#include <vector>

#include "slicereg/quaternion.hpp"

namespace slicereg {

using ComplexPoly = std::vector<Complex>;

Complex poly_eval(std::span<const Complex> p, Complex v);
double poly_eval(std::span<const double> p, double t);
Complex poly_eval(std::span<const double> p, Complex v);

ComplexPoly poly_mul(std::span<const Complex> a, std::span<const Complex> b);
ComplexPoly poly_add(std::span<const Complex> a, std::span<const Complex> b);
ComplexPoly poly_sub(std::span<const Complex> a, std::span<const Complex> b);
/// Coefficientwise complex conjugation, i.e. the Schwarz reflection p^(v) = conj(p(conj v)).
ComplexPoly poly_reflect(std::span<const Complex> p);
/// Drops trailing coefficients with modulus <= tol.
void poly_trim(ComplexPoly& p, double tol = 0.0);

std::vector<double> poly_derivative(std::span<const double> p, int order = 1);

/// Roots by eigenvalues of the companion matrix followed by `newton_steps`
/// Newton corrections per root.  Leading coefficient must be nonzero.
std::vector<Complex> poly_roots(std::span<const double> p, int newton_steps = 2);
std::vector<Complex> poly_roots(std::span<const Complex> p, int newton_steps = 2);

}  // namespace slicereg
