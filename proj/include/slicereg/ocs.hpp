#pragma once

// The standard orthogonal complex structure J on H minus R, structures
// induced by regular functions, and quaternionic Mobius transformations.

#include <Eigen/Core>
#include <array>
#include <utility>

#include "slicereg/regular_series.hpp"

namespace slicereg {

/// A complex structure on T_q H = H acting by left multiplication v -> I v.
class OCSValue {
 public:
  explicit OCSValue(const UnitImaginary& unit) : unit_(unit.value()) {}

  const Quaternion& unit() const { return unit_; }
  Quaternion apply(const Quaternion& v) const { return unit_ * v; }

  /// The action in the basis 1, i, j, k.
  Eigen::Matrix4d matrix() const;
  /// An adapted orthonormal basis 1, I, I', I I' with I' orthogonal to I.
  std::array<Quaternion, 4> adapted_basis() const;
  /// The action in the adapted basis, which is the same for every I.
  static Eigen::Matrix4d adapted_matrix();

 private:
  Quaternion unit_;
};

/// J_q = left multiplication by I_q; throws RealArgument on R.
OCSValue j_standard(const Quaternion& q);

struct InducedStructure {
  Quaternion image;
  OCSValue structure;
};

/// The structure J^f at f(q) is left multiplication by I_q (not I_{f(q)}).
/// Throws SingularPoint where the differential of f is not invertible.
InducedStructure induced_ocs(const RegularSeries& f, const Quaternion& q);

/// q -> (qc + d)^{-1} (qa + b)
class MobiusCoeffs {
 public:
  /// Throws NotInvertible when |invertibility_scalar| <= 1e-12.
  MobiusCoeffs(const Quaternion& a, const Quaternion& b, const Quaternion& c, const Quaternion& d);

  static MobiusCoeffs identity() { return {kOne, Quaternion{}, Quaternion{}, kOne}; }

  const Quaternion& a() const { return a_; }
  const Quaternion& b() const { return b_; }
  const Quaternion& c() const { return c_; }
  const Quaternion& d() const { return d_; }

  /// |a|^2 |d|^2 + |b|^2 |c|^2 - 2 Re(conj(b) d conj(c) a)
  static double invertibility_scalar(const Quaternion& a, const Quaternion& b, const Quaternion& c,
                                     const Quaternion& d);

 private:
  Quaternion a_, b_, c_, d_;
};

/// Throws PoleHit when |qc + d| <= 1e-12.
Quaternion mobius(const MobiusCoeffs& m, const Quaternion& q);

/// True iff a, b, c, d are real multiples of one unit quaternion.
bool is_so2h(const MobiusCoeffs& m);

/// eps^{-1} q eps; throws NotUnit unless ||eps| - 1| <= 1e-12.
Quaternion conj_by_unit(const Quaternion& eps, const Quaternion& q);

}  // namespace slicereg
