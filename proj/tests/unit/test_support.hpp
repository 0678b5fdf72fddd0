#pragma once

#include <random>

#include "doctest.h"
#include "slicereg/quaternion.hpp"
#include "slicereg/regular_series.hpp"

namespace slicereg::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine{20240917};
  return engine;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Quaternion random_quaternion(double scale = 1.0) {
  return {scale * uniform(), scale * uniform(), scale * uniform(), scale * uniform()};
}

inline Quaternion random_unit() {
  Quaternion q = random_quaternion();
  while (q.norm() < 1e-3) q = random_quaternion();
  return q / q.norm();
}

inline Complex random_complex(double scale = 1.0) { return {scale * uniform(), scale * uniform()}; }

inline RegularSeries random_polynomial(int degree) {
  std::vector<Quaternion> c;
  for (int n = 0; n <= degree; ++n) c.push_back(random_quaternion());
  return RegularSeries(std::move(c));
}

inline void check_close(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
  INFO("a = (" << a.w << ", " << a.x << ", " << a.y << ", " << a.z << ")  b = (" << b.w << ", " << b.x << ", "
               << b.y << ", " << b.z << ")");
  CHECK(distance(a, b) <= tol);
}

}  // namespace slicereg::testing
