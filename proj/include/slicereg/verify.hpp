#pragma once

// Independent numerical oracles and the named property suites run by the
// `verify` command and the acceptance binary.

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "slicereg/parabola.hpp"

namespace slicereg::verify {

// ---- oracles -------------------------------------------------------------

/// Determinant of the Sylvester matrix of p and q (coefficients in
/// increasing degree, leading coefficients nonzero).
double sylvester_resultant(std::span<const double> p, std::span<const double> q);

/// Res(R, R') of R(v) = v^4 + (1 - 2x0) v^2 - 2 x1 v + C, which equals the
/// discriminant of the monic quartic R.
double fiber_quartic_resultant(const Quaternion& c);

/// Central differences of q -> f(q) along 1, i, j, k.
Eigen::Matrix4d finite_difference_jacobian(const RegularSeries& f, const Quaternion& q0, double h);

/// Exponents (a0, a1, a2, a3) of the 35 quartic monomials, in lexicographic order.
const std::vector<std::array<int, 4>>& quartic_monomials();
/// Coefficients of K in the monomial basis above.
Eigen::VectorXcd quartic_K_coefficients();

struct NullspaceCheck {
  int rank_deficiency{0};
  /// Smallest and second smallest singular values relative to the largest.
  double smallest{0.0};
  double second_smallest{0.0};
  /// min over scalars s of |null vector - s K| with both normalized.
  double alignment_residual{0.0};
  /// |M K| / (|M| |K|), K evaluated on every sample row.
  double k_residual{0.0};
};

/// Samples `fibers` fibers over t^2 + it (t uniform in [-t_max, t_max]) with
/// `points_per_fiber` points each and analyses the quartic forms vanishing there.
NullspaceCheck nullstellensatz_check(std::uint64_t seed, int fibers = 40, int points_per_fiber = 6,
                                     double t_max = 1.5);

// ---- suites --------------------------------------------------------------

struct SuiteConfig {
  std::uint64_t seed{20240917};
  /// 0 keeps each suite's default sample count.
  int samples{0};
  std::map<std::string, double> tolerances;

  int samples_or(int fallback) const { return samples > 0 ? samples : fallback; }
  double tol(const std::string& name, double fallback) const;
};

struct SuiteReport {
  std::string name;
  bool passed{true};
  long checks{0};
  long failures{0};
  /// Largest residual observed by the suite's main check.
  double max_residual{0.0};
  double seconds{0.0};
  std::vector<std::string> notes;

  /// Records one check; the first few failure messages are kept.
  void check(bool ok, const std::string& what);
  void residual(double r) { max_residual = std::max(max_residual, r); }
};

struct SuiteInfo {
  std::string name;
  std::string description;
  /// Index of the acceptance criterion, 0 for module invariant suites.
  int criterion{0};
};

const std::vector<SuiteInfo>& suites();
/// The 14 acceptance criteria in order.
std::vector<SuiteInfo> acceptance_suites();

/// Runs a suite by name; throws Error(InvalidArgument) for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config = {});

}  // namespace slicereg::verify
