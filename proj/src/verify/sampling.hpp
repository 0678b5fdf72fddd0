#pragma once

#include <cstdint>
#include <random>

#include "slicereg/regular_series.hpp"

namespace slicereg::verify {

// Seeded generators for the property suites.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  Quaternion quaternion(double scale = 1.0) {
    return {scale * uniform(), scale * uniform(), scale * uniform(), scale * uniform()};
  }
  Complex complex(double scale = 1.0) { return {scale * uniform(), scale * uniform()}; }

  Quaternion unit() {
    Quaternion q = quaternion();
    while (q.norm() < 1e-3) q = quaternion();
    return q / q.norm();
  }
  Quaternion unit_imaginary() {
    Quaternion q = quaternion().imag();
    while (q.norm() < 1e-3) q = quaternion().imag();
    return q / q.norm();
  }
  Quaternion nonreal(double scale = 1.0, double min_imag = 0.05) {
    Quaternion q = quaternion(scale);
    while (q.imag_norm() < min_imag) q = quaternion(scale);
    return q;
  }

  RegularSeries polynomial(int degree) {
    std::vector<Quaternion> c;
    for (int n = 0; n <= degree; ++n) c.push_back(quaternion());
    // keep the leading coefficient away from zero so the degree is exact
    while (c.back().norm() < 0.1) c.back() = quaternion();
    return RegularSeries(std::move(c));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace slicereg::verify
