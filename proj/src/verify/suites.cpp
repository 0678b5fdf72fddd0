#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "sampling.hpp"
#include "slicereg/differential.hpp"
#include "slicereg/error.hpp"
#include "slicereg/ocs.hpp"
#include "slicereg/verify.hpp"

namespace slicereg::verify {

double SuiteConfig::tol(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

void SuiteReport::check(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  passed = false;
  if (notes.size() < 8) notes.push_back("failed: " + what);
}

namespace {

constexpr Complex kIc{0.0, 1.0};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

std::string fmt(const Quaternion& q) {
  return "[" + fmt(q.w) + ", " + fmt(q.x) + ", " + fmt(q.y) + ", " + fmt(q.z) + "]";
}

std::string fmt(Complex c) { return "(" + fmt(c.real()) + ", " + fmt(c.imag()) + ")"; }

double poly_gap(const ComplexPoly& a, const ComplexPoly& b) {
  double gap = 0.0;
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    const Complex x = k < a.size() ? a[k] : Complex{};
    const Complex y = k < b.size() ? b[k] : Complex{};
    gap = std::max(gap, std::abs(x - y));
  }
  return gap;
}

Quaternion random_generic_target(Sampler& s) {
  Quaternion c = s.quaternion(2.0);
  while (std::abs(c.x) < 1e-2 || std::abs(Complex(c.y, c.z)) < 1e-2) c = s.quaternion(2.0);
  return c;
}

Quaternion random_on_paraboloid(Sampler& s, double min_radius = 0.0) {
  for (;;) {
    const double x2 = s.uniform(-1.5, 1.5), x3 = s.uniform(-1.5, 1.5);
    if (std::hypot(x2, x3) >= min_radius) return {0.25 - x2 * x2 - x3 * x3, 0.0, x2, x3};
  }
}

// f = c + (q - q0) * (q - twin) * g with the twin on the sphere of q0.
RegularSeries singular_at(Sampler& s, const Quaternion& q0, int extra_degree) {
  const Quaternion twin = sphere_of(q0).point(s.unit_imaginary());
  RegularSeries f = star_mul(RegularSeries::linear(q0), RegularSeries::linear(twin));
  f = star_mul(f, s.polynomial(extra_degree));
  return f + RegularSeries::constant(s.quaternion());
}

// f = c + [(q - x)^2 + y^2]^2 * g, whose differential vanishes on the sphere.
RegularSeries flat_on_sphere(Sampler& s, const Sphere& sphere) {
  const auto factor = RegularSeries::sphere_factor(sphere);
  return star_mul(star_mul(factor, factor), s.polynomial(s.integer(0, 1))) + RegularSeries::constant(s.quaternion());
}

// ---- acceptance criteria ---------------------------------------------------

void twistor_commute(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const double tol = cfg.tol("commute", 1e-9);
  const int n = cfg.samples_or(1000);
  for (int k = 0; k < n; ++k) {
    const auto f = s.polynomial(k % 7);
    const Complex u = s.complex(2.0), v = s.complex(2.0);
    const Quaternion image = twistor_project(lift(f, u, v)).affine_coordinate();
    const Quaternion expected = eval(f, phi(u, v));
    const double err = distance(image, expected) / (1.0 + expected.norm());
    r.residual(err);
    r.check(err <= tol, "pi(F(u,v)) != f(phi(u,v)) at u=" + fmt(u) + " v=" + fmt(v));
  }
}

void quartic_membership(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const double tol = cfg.tol("quartic", 1e-9);
  const int n = cfg.samples_or(1000);
  const RegularSeries f = parabola_series();
  for (int k = 0; k < n; ++k) {
    const Complex u = s.complex(2.0), v = s.complex(2.0);
    const double err = std::abs(quartic_K(lift(f, u, v)));
    r.residual(err);
    r.check(err <= tol, "K(F(u,v)) != 0 at u=" + fmt(u) + " v=" + fmt(v));
  }
  const ProjectivePoint3 spot(1.0, 1.0, Complex{1, 1}, Complex{1, -1});
  r.check(std::abs(quartic_K(spot)) <= 1e-15, "K([1,1,1+i,1-i]) != 0");
  r.check(lift(f, Complex{1.0}, 1.0).projectively_equal(spot), "F(1,1) != [1,1,1+i,1-i]");
}

void klein_reality(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const double tol = cfg.tol("klein", 1e-10);
  const int n = cfg.samples_or(1000);
  for (int k = 0; k < n; ++k) {
    const auto f = s.polynomial(k % 7);
    const Complex v = s.complex(1.5);
    const KleinPoint zeta = twistor_transform(f, v);
    const double m = std::abs(zeta.normalized().klein_form());
    const double real = projective_distance(sigma(zeta).coords(), twistor_transform(f, std::conj(v)).coords());
    r.residual(std::max(m, real));
    r.check(zeta.on_klein_quadric(tol), "Klein relation fails at v=" + fmt(v));
    r.check(real <= tol, "sigma(F(v)) != F(conj v) at v=" + fmt(v));
  }
}

void transform_spot(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const double tol = cfg.tol("spot", 1e-14);
  const int n = cfg.samples_or(20);
  for (int k = 0; k < n; ++k) {
    const Complex v = s.complex(2.0);
    const KleinPoint id({v * v, 0.0, -v, v, 0.0, 1.0});
    const KleinPoint par({std::pow(v, 4) + v * v, 0.0, -v * v - kIc * v, v * v - kIc * v, 0.0, 1.0});
    const double e1 = projective_distance(twistor_transform(RegularSeries::identity(), v).coords(), id.coords());
    const double e2 = projective_distance(twistor_transform(parabola_series(), v).coords(), par.coords());
    r.residual(std::max(e1, e2));
    r.check(e1 <= tol, "identity transform differs at v=" + fmt(v));
    r.check(e2 <= tol, "q^2+qi transform differs at v=" + fmt(v));
  }
}

void reconstruct_roundtrip(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const double tol = cfg.tol("roundtrip", 1e-10);
  const int n = cfg.samples_or(200);
  const auto nodes = circle_nodes(16);
  for (int k = 0; k < n; ++k) {
    const auto f = s.polynomial(k % 7);
    std::vector<CurveSample> curve;
    for (const Complex v : nodes) curve.push_back({v, twistor_transform(f, v)});
    const auto rec = reconstruct(curve);
    const auto expected = split(f);
    const double err = std::max(poly_gap(rec.pair.g, expected.g), poly_gap(rec.pair.h, expected.h));
    r.residual(err);
    r.check(rec.polynomial && rec.symmetric && err <= tol, "round trip failed for degree " + std::to_string(k % 7));
  }

  // the regular reciprocal of q + i: zeta = [1, 0, i - v, v + i, 0, v^2 + 1]
  std::vector<CurveSample> curve;
  for (const Complex v : nodes) curve.push_back({v, KleinPoint({1.0, 0.0, kIc - v, v + kIc, 0.0, v * v + 1.0})});
  bool threw = false;
  try {
    reconstruct(curve);
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::PoleDetected;
  }
  r.check(threw, "no PoleDetected for the reciprocal of q + i");
  const auto rec = reconstruct(curve, {.poles = PolePolicy::Record});
  const auto has_pole = [&](Complex p) {
    return std::any_of(rec.poles.begin(), rec.poles.end(), [&](Complex x) { return std::abs(x - p) <= 1e-9; });
  };
  r.check(rec.poles.size() == 2 && has_pole(kIc) && has_pole(-kIc), "poles are not {i, -i}");
  const double g_err = std::max(poly_gap(rec.g.num, {1.0}), poly_gap(rec.g.den, {kIc, 1.0}));
  r.check(g_err <= 1e-9, "g != 1/(v+i), error " + fmt(g_err));
  r.check(rec.h.num.empty(), "h != 0");
}

void gradient_check(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const double tol = cfg.tol("gradient", 1e-6);
  const int n = cfg.samples_or(200);
  for (int k = 0; k < n; ++k) {
    const auto f = s.polynomial(1 + k % 5);
    const Quaternion q0 = s.nonreal();
    const double scale = std::max(1.0, f.coeff_scale());
    const double err =
        (differential_at(f, q0).matrix - finite_difference_jacobian(f, q0, 1e-5)).cwiseAbs().maxCoeff() / scale;
    r.residual(err);
    r.check(err <= tol, "differential differs from finite differences at " + fmt(q0));
  }
}

void rank_equivalence(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const int n = cfg.samples_or(500);
  std::array<int, 5> counts{};  // rank 4, 2, 0 nonreal, 0 real, singular
  for (int k = 0; k < n; ++k) {
    Quaternion q0 = s.nonreal();
    RegularSeries f;
    switch (k % 5) {
      case 0:
      case 1: f = s.polynomial(1 + k % 6); break;
      case 2: f = singular_at(s, q0, k % 3); break;
      case 3: f = flat_on_sphere(s, sphere_of(q0)); break;
      default: {
        q0 = Quaternion{s.uniform()};
        const auto factor = star_mul(RegularSeries::linear(q0), RegularSeries::linear(q0));
        f = (k / 5) % 2 == 0 ? star_mul(factor, s.polynomial(1)) + RegularSeries::constant(s.quaternion())
                             : s.polynomial(3);
      }
    }
    const auto rc = rank_classify(f, q0);
    const double floor = 1e-10 * f.magnitude_bound(std::max(1.0, q0.norm()));
    const int numeric = numerical_rank(differential_at(f, q0), 1e-8, floor);
    const bool singular = is_singular(f, q0).singular;
    const bool ok = static_cast<int>(rc.rank) == numeric && singular == (rc.rank != Rank::Rank4);
    r.check(ok, "rank " + std::to_string(static_cast<int>(rc.rank)) + ", numeric " + std::to_string(numeric) +
                    ", singular " + (singular ? "yes" : "no") + " at " + fmt(q0));
    counts[rc.rank == Rank::Rank4 ? 0 : rc.rank == Rank::Rank2 ? 1 : q0.imag_norm() > 0 ? 2 : 3]++;
    counts[4] += singular;
  }
  r.notes.push_back("rank4=" + std::to_string(counts[0]) + " rank2=" + std::to_string(counts[1]) +
                    " rank0(nonreal)=" + std::to_string(counts[2]) + " rank0(real)=" + std::to_string(counts[3]));
  r.check(counts[0] > 0 && counts[1] > 0 && counts[2] > 0 && counts[3] > 0, "sample misses a rank class");
}

// Oracle for the sphere part: spheres of the roots, found independently by
// pairing every root with its conjugate on a common sphere.
void zero_set(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const double tol = cfg.tol("zeros", 1e-6);
  const int n = cfg.samples_or(500);
  for (int k = 0; k < n; ++k) {
    const int degree = 1 + k % 6;
    std::vector<Quaternion> roots;
    for (int d = 0; d < degree; ++d) {
      // reuse spheres now and then so spherical zeros and multiple points occur
      if (!roots.empty() && s.uniform() < -0.4)
        roots.push_back(sphere_of(roots[static_cast<std::size_t>(s.integer(0, static_cast<int>(roots.size()) - 1))])
                            .point(s.unit_imaginary()));
      else
        roots.push_back(s.quaternion());
    }
    RegularSeries f = RegularSeries::constant(kOne);
    for (const auto& p : roots) f = star_mul(f, RegularSeries::linear(p));

    ZeroSet zs;
    try {
      zs = zeros(f);
    } catch (const Error& e) {
      r.check(false, std::string("zeros threw ") + e.what());
      continue;
    }
    r.check(zs.total_multiplicity() == degree,
            "total multiplicity " + std::to_string(zs.total_multiplicity()) + " != degree " + std::to_string(degree));
    const double scale = f.magnitude_bound(3.0);
    for (const auto& p : zs.points) {
      const double err = eval(f, p.point).norm() / scale;
      r.residual(err);
      r.check(err <= tol, "f does not vanish at reported point " + fmt(p.point));
    }
    for (const auto& sp : zs.spheres) {
      const auto rem = divide_sphere(f, sp.sphere).remainder;
      double err = 0.0;
      for (const auto& c : rem.coeffs()) err = std::max(err, c.norm());
      err /= std::max(1.0, f.coeff_scale());
      r.residual(err);
      r.check(err <= tol, "sphere factor does not divide f");
    }
  }

  // closed-form cases with alpha = i
  const auto z1 = zeros(star_mul(RegularSeries::linear(kI), RegularSeries::linear(Quaternion{1, 0, 1, 0})));
  const Quaternion second{1.0, 2.0 / 3.0, 1.0 / 3.0, -2.0 / 3.0};
  const auto has = [](const ZeroSet& zs, const Quaternion& q, int mult) {
    return std::any_of(zs.points.begin(), zs.points.end(),
                       [&](const IsolatedZero& p) { return distance(p.point, q) <= 1e-8 && p.multiplicity == mult; });
  };
  r.check(z1.points.size() == 2 && z1.spheres.empty() && has(z1, kI, 1) && has(z1, second, 1),
          "(q-i)*(q-(1+j)) zero set");
  const auto z2 = zeros(star_mul(RegularSeries::linear(kI), RegularSeries::linear(kJ)));
  r.check(z2.points.size() == 1 && z2.spheres.empty() && has(z2, kI, 2), "(q-i)*(q-j) zero set");
  const auto z3 = zeros(star_mul(RegularSeries::linear(kI), RegularSeries::linear(-kI)));
  r.check(z3.points.empty() && z3.spheres.size() == 1 && z3.spheres[0].multiplicity == 2 &&
              std::abs(z3.spheres[0].sphere.x) <= 1e-12 && std::abs(z3.spheres[0].sphere.y - 1.0) <= 1e-12,
          "(q-i)*(q+i) zero set");
}

void double_cover(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const double tol = cfg.tol("preimage", 1e-9);
  const int n = cfg.samples_or(1000);
  for (int k = 0; k < n; ++k) {
    const Quaternion c = random_generic_target(s);
    const auto pre = preimages(c);
    r.check(pre.size() == 2, "expected two preimages of " + fmt(c));
    for (const auto& q : pre) {
      const double err = distance(f_par(q), c) / (1.0 + c.norm());
      r.residual(err);
      r.check(err <= tol, "f(preimage) != c for c=" + fmt(c));
    }
  }
  for (int k = 0; k < std::max(1, n / 20); ++k) {
    const Quaternion c = random_on_paraboloid(s);
    const auto pre = preimages(c);
    r.check(pre.size() == 1, "expected one preimage of " + fmt(c) + " on the paraboloid");
    for (const auto& q : pre) r.residual(distance(f_par(q), c) / (1.0 + c.norm()));
  }
}

void jjjj_spot(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const double tol = cfg.tol("jjjj", 1e-12);
  const auto near = [&](const Quaternion& a, const Quaternion& b, double t) {
    r.residual(distance(a, b));
    return distance(a, b) <= t;
  };
  r.check(near(j_plus(kOne).unit(), -kI, tol), "J+(1) != -i");
  r.check(near(j_minus(kOne).unit(), -kI, tol), "J-(1) != -i");
  r.check(near(j_plus(kI * 2.0).unit(), kI, tol), "J+(2i) != i");
  r.check(near(j_minus(kI * 2.0).unit(), -kI, tol), "J-(2i) != -i");
  for (int k = 0; k < 50; ++k) {
    const Quaternion c = random_on_paraboloid(s, 0.05);
    r.check(distance(j_plus(c).unit(), j_minus(c).unit()) <= 1e-6, "J+ != J- on the paraboloid at " + fmt(c));
  }
  const int n = cfg.samples_or(100);
  for (int k = 0; k < n; ++k) {
    const Quaternion c = random_generic_target(s);
    const Quaternion a = j_plus(c).unit(), b = j_minus(c).unit();
    const std::array<Quaternion, 4> four{a, b, -a, -b};
    bool distinct = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) distinct = distinct && distance(four[i], four[j]) > 1e-6;
    r.check(distinct, "J+, J-, -J+, -J- not distinct at " + fmt(c));
  }
}

void discriminant_resultant(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const double tol = cfg.tol("resultant", 1e-8);
  const int n = cfg.samples_or(1000);
  for (int k = 0; k < n; ++k) {
    const Quaternion c = s.quaternion(1.5);
    const double res = fiber_quartic_resultant(c);
    const double d = discriminant_D(c);
    const double err = std::abs(res - 16.0 * d) / std::max(1.0, std::abs(res));
    r.residual(err);
    r.check(err <= tol, "Res(R,R') != 16 D at " + fmt(c));
  }
  for (int k = 0; k < 100; ++k) {
    const Quaternion c = random_on_paraboloid(s);
    r.check(std::abs(discriminant_D(c)) <= 1e-9 * std::pow(1.0 + c.norm2(), 3), "D != 0 on the paraboloid");
  }
  r.check(fiber_quartic(kJ * 0.5) == std::vector<double>{0.25, 0.0, 1.0, 0.0, 1.0}, "R at j/2 != (v^2 + 1/2)^2");
}

void fiber_classification(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const int n = cfg.samples_or(20);
  const auto expect = [&](const Quaternion& c, FiberClass kind) {
    const auto fi = fiber_intersections(c);
    r.check(fi.kind == kind, "class of " + fmt(c) + " is " + std::string(to_string(fi.kind)) + ", expected " +
                                 std::string(to_string(kind)));
    return fi;
  };
  for (int k = 0; k < n; ++k) {
    const double t = s.uniform(-2, 2);
    expect({t * t, t}, FiberClass::OnParabola);
  }
  for (int k = 0; k < n; ++k) {
    Quaternion c{s.uniform(-2, 2), s.uniform(-2, 2)};
    while (std::abs(c.w - c.x * c.x) < 1e-2 || distance(c, Quaternion{0.25}) < 1e-2)
      c = Quaternion{s.uniform(-2, 2), s.uniform(-2, 2)};
    expect(c, FiberClass::OnPlaneLi);
  }
  for (int k = 0; k < n; ++k) expect(random_on_paraboloid(s, 0.05), FiberClass::OnParaboloid);
  for (int k = 0; k < n; ++k) {
    const Quaternion c = random_generic_target(s);
    const auto fi = expect(c, FiberClass::GenericFour);
    bool distinct = fi.parameters.size() == 4;
    for (std::size_t i = 0; i < fi.parameters.size(); ++i)
      for (std::size_t j = i + 1; j < fi.parameters.size(); ++j)
        distinct = distinct && std::abs(fi.parameters[i] - fi.parameters[j]) > 1e-6;
    r.check(distinct, "generic fiber over " + fmt(c) + " lacks four distinct solutions");
    for (const auto& z : fi.points) {
      r.residual(std::abs(quartic_K(z)));
      r.check(std::abs(quartic_K(z)) <= 1e-8 && twistor_project(z).equals(HP1Point::affine(c), 1e-8),
              "intersection point off K or off the fiber");
    }
  }
  expect(Quaternion{0.25}, FiberClass::AtFocus);
}

void nullstellensatz(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const double tol = cfg.tol("nullstellensatz", 1e-8);
  const auto res = nullstellensatz_check(s.integer(0, 1 << 30), 40, 6);
  r.residual(std::max(res.alignment_residual, res.k_residual));
  r.notes.push_back("singular values (relative): smallest " + fmt(res.smallest) + ", next " +
                    fmt(res.second_smallest));
  r.check(res.rank_deficiency == 1, "rank deficiency is " + std::to_string(res.rank_deficiency));
  r.check(res.alignment_residual <= tol, "null vector is not K, residual " + fmt(res.alignment_residual));
  r.check(res.k_residual <= tol, "K does not vanish on the sampled fibers");
}

void singular_locus(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const double tol = cfg.tol("singular", 1e-10);
  const int n = cfg.samples_or(50);
  for (int k = 0; k < n; ++k) {
    const Complex a = s.complex(2.0), b = s.complex(2.0);
    for (const ProjectivePoint3& z : {ProjectivePoint3(0.0, 0.0, a, b), ProjectivePoint3(0.0, a, 0.0, b),
                                      ProjectivePoint3(a, 0.0, b, 0.0)}) {
      const Eigen::Vector4cd v(z[0], z[1], z[2], z[3]);
      const double g = quartic_K_gradient(v).cwiseAbs().maxCoeff();
      r.residual(g);
      r.check(g <= tol, "gradient of K does not vanish on a singular line");
      r.check(singular_locus_class(z) != SingularClass::Smooth, "singular line point classified smooth");
    }
    r.check(singular_locus_class(ProjectivePoint3(0.0, 0.0, a, b)) == SingularClass::Cusp, "m01 point is not a cusp");
  }
  const RegularSeries f = parabola_series();
  for (int k = 0; k < 4 * n; ++k) {
    const auto z = lift(f, s.complex(2.0), s.complex(2.0));
    const Eigen::Vector4cd v(z[0], z[1], z[2], z[3]);
    r.check(quartic_K_gradient(v).cwiseAbs().maxCoeff() > tol, "gradient vanishes at a random smooth point");
  }
  r.check(singular_locus_class(ProjectivePoint3(0.0, 1.0, 0.0, 0.25)) == SingularClass::Cusp, "[0,1,0,1/4] not a cusp");
  r.check(singular_locus_class(ProjectivePoint3(1.0, 0.0, 0.25, 0.0)) == SingularClass::Cusp, "[1,0,1/4,0] not a cusp");
  r.check(singular_locus_class(ProjectivePoint3(1.0, 0.0, 3.0, 0.0)) == SingularClass::DoubleCurve,
          "[1,0,3,0] not on the double curve");
}

// ---- module invariants -----------------------------------------------------

void chart_roundtrip(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const int n = cfg.samples_or(1000);
  for (int k = 0; k < n; ++k) {
    const Quaternion q = s.nonreal(3.0, 1e-3);
    const ChartPoint c = phi_inverse(q);
    if (!c.u) continue;
    const double err = distance(phi(c), q) / (1.0 + q.norm());
    r.residual(err);
    r.check(err <= 1e-12, "phi(phi_inverse(q)) != q at " + fmt(q));
  }
}

void star_associativity(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const int n = cfg.samples_or(200);
  for (int k = 0; k < n; ++k) {
    const auto a = s.polynomial(k % 6), b = s.polynomial((k / 6) % 6), c = s.polynomial((k / 36) % 6);
    const auto lhs = star_mul(star_mul(a, b), c), rhs = star_mul(a, star_mul(b, c));
    double err = 0.0;
    for (std::size_t m = 0; m < lhs.coeffs().size(); ++m) err = std::max(err, distance(lhs.coeff(m), rhs.coeff(m)));
    err /= std::max(1.0, lhs.coeff_scale());
    r.residual(err);
    r.check(err <= 1e-10 && lhs.degree() == a.degree() + b.degree() + c.degree(), "star product not associative");
  }
}

void expansion_roundtrip(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const int n = cfg.samples_or(200);
  for (int k = 0; k < n; ++k) {
    const auto f = s.polynomial(1 + k % 6);
    const Quaternion q0 = s.nonreal();
    const auto e = spherical_expansion(f, sphere_of(q0), q0, f.degree() + 1);
    for (int t = 0; t < 4; ++t) {
      const Quaternion q = s.quaternion();
      const double err = distance(eval_expansion(e, q), eval(f, q)) / std::max(1.0, f.magnitude_bound(q.norm()));
      r.residual(err);
      r.check(err <= 1e-10, "expansion does not reproduce f at " + fmt(q));
    }
  }
}

void ocs_orthogonality(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const int n = cfg.samples_or(500);
  for (int k = 0; k < n; ++k) {
    const Quaternion q = s.nonreal();
    const Quaternion v = s.quaternion();
    const OCSValue J = j_standard(q);
    r.check(std::abs(J.apply(v).norm() - v.norm()) <= 1e-14 && distance(J.apply(J.apply(v)), -v) <= 1e-14,
            "J is not an orthogonal complex structure at " + fmt(q));
    const Quaternion eps = s.unit();
    const double err = distance(j_standard(conj_by_unit(eps, q)).unit(), conj_by_unit(eps, J.unit()));
    r.residual(err);
    r.check(err <= 1e-12, "conjugation does not transport J");
  }
}

void mobius_maps(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const int n = cfg.samples_or(200);
  for (int k = 0; k < n; ++k) {
    const double a = s.uniform(), b = s.uniform(), c = s.uniform(), d = s.uniform();
    if (std::abs(a * d - b * c) < 1e-2) continue;
    const MobiusCoeffs real(a, b, c, d);
    const Sphere sp{s.uniform(), s.uniform(0.1, 1.0)};
    try {
      const Sphere target = sphere_of(mobius(real, sp.point(kI)));
      for (int t = 0; t < 8; ++t)
        r.check(target.contains(mobius(real, sp.point(s.unit_imaginary())), 1e-9), "real Mobius map breaks a sphere");
      const Quaternion eps = s.unit();
      const MobiusCoeffs rotated(eps * a, eps * b, eps * c, eps * d);
      r.check(is_so2h(rotated), "constructed SO(2,H) element rejected");
      r.check(mobius(rotated, s.nonreal()).imag_norm() > 0.0, "SO(2,H) map hits the real axis");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleHit) throw;
    }
  }
}

void lift_linearity(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const int n = cfg.samples_or(200);
  for (int k = 0; k < n; ++k) {
    const auto f = s.polynomial(k % 6);
    const Complex v = s.complex();
    Eigen::Matrix<Complex, 3, 4> m;
    for (int row = 0; row < 3; ++row) {
      const auto z = lift(f, Complex{static_cast<double>(row)}, v);
      for (int c = 0; c < 4; ++c) m(row, c) = z[static_cast<std::size_t>(c)];
    }
    const Eigen::Vector3d sv = Eigen::JacobiSVD<Eigen::Matrix<Complex, 3, 4>>(m).singularValues();
    r.residual(sv(2) / sv(0));
    r.check(sv(2) <= 1e-12 * sv(0), "lifts at u = 0, 1, 2 are not collinear");
  }
}

void ruling_intersections(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const int n = cfg.samples_or(200);
  const RegularSeries f = parabola_series();
  for (int k = 0; k < n; ++k) {
    const Complex v = s.complex();
    if (std::abs(v - kIc / 2.0) < 1e-2) continue;
    const auto a = lift(f, std::nullopt, v);
    r.check(a.projectively_equal(lift(f, std::nullopt, kIc - v), 1e-12) && a[0] == 0.0 && std::abs(a[2]) <= 1e-15,
            "rulings over v and i - v do not meet on m02");
  }
}

void injective_affine(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const int n = cfg.samples_or(500);
  for (int k = 0; k < n; ++k) {
    Quaternion a = s.quaternion();
    while (a.norm() < 1e-2) a = s.quaternion();
    const RegularSeries f({s.quaternion(), a});
    r.check(!is_singular(f, s.quaternion(2.0)).singular, "affine map reported singular");
  }
}

void singular_set_of_parabola(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const RegularSeries f = parabola_series();
  const int n = cfg.samples_or(1000);
  for (int k = 0; k < 100; ++k) {
    const Quaternion q{0, -0.5, s.uniform(-2, 2), s.uniform(-2, 2)};
    if (q.imag_norm() < 0.55) continue;
    r.check(is_singular(f, q).singular, "plane point not singular: " + fmt(q));
  }
  for (int k = 0; k < n; ++k) {
    const Quaternion q = s.quaternion(2.0);
    if (std::abs(q.w) < 1e-3 && std::abs(q.x + 0.5) < 1e-3) continue;
    r.check(!is_singular(f, q).singular, "random point singular: " + fmt(q));
  }
}

void branching(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const int n = cfg.samples_or(200);
  const Quaternion q0{0, -0.5, 1, 0};
  const double radius = cfg.tol("branch_radius", 0.1);
  for (int k = 0; k < n; ++k) {
    const Quaternion q1 = q0 + s.unit() * s.uniform(0.001, radius);
    const auto pre = preimages(f_par(q1));
    int inside = 0;
    for (const auto& q : pre) inside += std::hypot(q.real(), q.imag_norm() - q0.imag_norm()) <= radius;
    r.check(inside >= 2, "fewer than two preimages near the branch sphere for q1=" + fmt(q1));
  }
}

void osculating_sphere(const SuiteConfig& cfg, Sampler& s, SuiteReport& r) {
  const int n = cfg.samples_or(500);
  for (int k = 0; k < n; ++k) {
    const Complex u = s.complex(3.0);
    const Quaternion p = osculating_sphere_point(u);
    const double on_sphere = std::abs((p.w + 0.25) * (p.w + 0.25) + p.y * p.y + p.z * p.z - 0.25);
    const double image = distance(f_par(phi(u, Complex{0.0, 0.5})), p);
    r.residual(std::max(on_sphere, image));
    r.check(on_sphere <= 1e-14 && p.x == 0.0 && image <= 1e-13, "osculating sphere point off the image of S/2");
  }
}

struct SuiteEntry {
  SuiteInfo info;
  std::function<void(const SuiteConfig&, Sampler&, SuiteReport&)> run;
  double runtime_limit;  // seconds, 0 for none
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {{"twistor-commute", "pi(F(u,v)) = f(phi(u,v)) on random polynomials of degree <= 6", 1}, twistor_commute, 5.0},
      {{"quartic-membership", "K vanishes on the twistor lift of q^2 + qi", 2}, quartic_membership, 0.0},
      {{"klein-reality", "transform satisfies the Klein relation and sigma(F(v)) = F(conj v)", 3}, klein_reality, 0.0},
      {{"transform-spot", "transforms of q and q^2 + qi match their closed forms", 4}, transform_spot, 0.0},
      {{"reconstruct-roundtrip", "reconstruct inverts the transform; reciprocal of q + i has poles +-i", 5},
       reconstruct_roundtrip, 0.0},
      {{"gradient-check", "differential matches central finite differences", 6}, gradient_check, 0.0},
      {{"rank-equivalence", "rank_classify, numerical rank and is_singular agree", 7}, rank_equivalence, 0.0},
      {{"zero-set", "zeros of products of linear factors and the three quadratic cases", 8}, zero_set, 0.0},
      {{"double-cover", "q^2 + qi is 2:1 off the paraboloid and 1:1 on it", 9}, double_cover, 0.0},
      {{"jjjj-spot", "spot values and distinctness of J+, J-", 10}, jjjj_spot, 0.0},
      {{"discriminant-resultant", "Res(R, R') = 16 D; D vanishes on the paraboloid", 11}, discriminant_resultant, 0.0},
      {{"fiber-classification", "fiber classes over gamma, L_i, the paraboloid and generic points", 12},
       fiber_classification, 10.0},
      {{"nullstellensatz", "quartics through 40 fibers over gamma form the line spanned by K", 13}, nullstellensatz, 0.0},
      {{"singular-locus", "gradient of K vanishes exactly on m01, m02, m13; cusp spot checks", 14}, singular_locus, 0.0},
      {{"chart-roundtrip", "phi(phi_inverse(q)) = q", 0}, chart_roundtrip, 0.0},
      {{"star-associativity", "star product is associative and degrees add", 0}, star_associativity, 0.0},
      {{"expansion-roundtrip", "spherical expansion reproduces f", 0}, expansion_roundtrip, 0.0},
      {{"ocs-orthogonality", "J is orthogonal, squares to -1 and is transported by unit conjugation", 0},
       ocs_orthogonality, 0.0},
      {{"mobius-maps", "real Mobius maps preserve spheres; SO(2,H) preserves H minus R", 0}, mobius_maps, 0.0},
      {{"lift-linearity", "lifts are linear in u", 0}, lift_linearity, 0.0},
      {{"ruling-intersections", "rulings over v and i - v meet on m02", 0}, ruling_intersections, 0.0},
      {{"injective-affine", "affine maps have no singular points", 0}, injective_affine, 0.0},
      {{"parabola-singular-set", "singular set of q^2 + qi is the plane -i/2 + jR + kR", 0}, singular_set_of_parabola,
       0.0},
      {{"branching", "points near the branch sphere have two nearby preimages", 0}, branching, 0.0},
      {{"osculating-sphere", "the image of S/2 is the sphere of radius 1/2 about -1/4", 0}, osculating_sphere, 0.0},
  };
  return entries;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::vector<SuiteInfo> acceptance_suites() {
  std::vector<SuiteInfo> out;
  for (const auto& info : suites())
    if (info.criterion > 0) out.push_back(info);
  std::sort(out.begin(), out.end(), [](const SuiteInfo& a, const SuiteInfo& b) { return a.criterion < b.criterion; });
  return out;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  const auto& entries = registry();
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const SuiteEntry& e) { return e.info.name == name; });
  if (it == entries.end()) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");

  SuiteReport report;
  report.name = name;
  Sampler sampler(config.seed);
  const auto start = std::chrono::steady_clock::now();
  try {
    it->run(config, sampler, report);
  } catch (const Error& e) {
    report.check(false, std::string("uncaught error: ") + e.what());
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (it->runtime_limit > 0.0)
    report.check(report.seconds < it->runtime_limit,
                 "runtime " + fmt(report.seconds) + " s exceeds " + fmt(it->runtime_limit) + " s");
  return report;
}

}  // namespace slicereg::verify
