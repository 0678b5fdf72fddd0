#include "figures.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "slicereg/parabola.hpp"

namespace slicereg::figures {

namespace {

void row(std::ostream& out, double x, double y, double z, const char* label) {
  out << x << ',' << y << ',' << z << ',' << label << '\n';
}

double coordinate(const GridSpec& grid, int index) {
  return -grid.bound + 2.0 * grid.bound * (index + 0.5) / grid.n;
}

}  // namespace

void write_fig1(std::ostream& out, int samples) {
  out.precision(10);
  out << "x,y,z,label\n";
  const int n = std::max(samples, 2);
  for (int k = 0; k < n; ++k) {
    const double t = -1.5 + 3.0 * k / (n - 1);
    row(out, t * t, t, 0.0, "parabola");
  }
  for (int k = 0; k < n; ++k) {
    const double s = -1.5 + 3.0 * k / (n - 1);
    row(out, 0.25 - s * s, 0.0, s, "paraboloid");
  }
  for (int k = 0; k < n; ++k) {
    // real u = tan(theta / 2) keeps the point in the slice; theta = pi is u = infinity
    const double theta = 2.0 * std::numbers::pi * k / n;
    const Quaternion p = 2 * k == n ? osculating_sphere_point(std::nullopt)
                                    : osculating_sphere_point(Complex{std::tan(theta / 2.0)});
    row(out, p.w, p.x, p.y, "sphere");
  }
}

void write_fig2(std::ostream& out, const GridSpec& grid) {
  out.precision(10);
  out << "x,y,z\n";
  if (grid.n <= 0) return;
  const int m = grid.n + 1;
  const double h = 2.0 * grid.bound / grid.n;
  // K on the real points (x, y, z, 1/4) is real.
  const auto k_at = [](double x, double y, double z) {
    return quartic_K(Eigen::Vector4cd(x, y, z, 0.25)).real();
  };
  std::vector<double> below(static_cast<std::size_t>(m) * m), above(below.size());
  const auto fill = [&](std::vector<double>& layer, int iz) {
    for (int ix = 0; ix < m; ++ix)
      for (int iy = 0; iy < m; ++iy)
        layer[static_cast<std::size_t>(ix) * m + iy] =
            k_at(-grid.bound + ix * h, -grid.bound + iy * h, -grid.bound + iz * h);
  };
  fill(below, 0);
  for (int iz = 0; iz < grid.n; ++iz) {
    fill(above, iz + 1);
    for (int ix = 0; ix < grid.n; ++ix)
      for (int iy = 0; iy < grid.n; ++iy) {
        bool neg = false, pos = false;
        for (const auto* layer : {&below, &above})
          for (int dx = 0; dx < 2; ++dx)
            for (int dy = 0; dy < 2; ++dy) {
              const double v = (*layer)[static_cast<std::size_t>(ix + dx) * m + iy + dy];
              neg = neg || v <= 0.0;
              pos = pos || v >= 0.0;
            }
        if (neg && pos)
          out << coordinate(grid, ix) << ',' << coordinate(grid, iy) << ',' << coordinate(grid, iz) << '\n';
      }
    std::swap(below, above);
  }
}

void write_fiber_scan(std::ostream& out, const GridSpec& grid) {
  out.precision(10);
  out << "x0,x1,x2,x3,class\n";
  if (grid.n <= 0) return;
  // grid nodes rather than cell centers, so an even n puts samples on L_i and on x1 = 0
  const auto node = [&](int k) { return -grid.bound + 2.0 * grid.bound * k / grid.n; };
  for (int a = 0; a <= grid.n; ++a)
    for (int b = 0; b <= grid.n; ++b)
      for (int c = 0; c <= grid.n; ++c)
        for (int d = 0; d <= grid.n; ++d) {
          const Quaternion q{node(a), node(b), node(c), node(d)};
          out << q.w << ',' << q.x << ',' << q.y << ',' << q.z << ',' << to_string(fiber_intersections(q).kind)
              << '\n';
        }
}

}  // namespace slicereg::figures
