#pragma once

// JSON encodings of the value types.  Quaternions are [w, x, y, z], complex
// numbers [re, im], projective and Klein points arrays of [re, im] pairs,
// linear maps of H row-major arrays of 16 reals, and polynomials
// {"coeffs": [[w, x, y, z], ...], "radius": number | "inf"}.

#include <string>
#include <vector>

#include "json.hpp"
#include "slicereg/differential.hpp"
#include "slicereg/parabola.hpp"
#include "slicereg/twistor.hpp"

namespace slicereg {

using Json = nlohmann::ordered_json;

Json to_json(const Quaternion& q);
Json to_json(Complex c);
Json to_json(const RegularSeries& f);
Json to_json(const ProjectivePoint3& z);
Json to_json(const KleinPoint& zeta);
Json to_json(const RealLinearMap4& m);
Json to_json(const ZeroSet& zs);
Json to_json(const SplitPair& p);
Json to_json(const RationalFunction& r);
Json to_json(const Reconstruction& r);
Json to_json(const FiberIntersections& fi);
Json to_json(std::span<const CurveSample> curve);
Json complex_poly_to_json(const ComplexPoly& p);

// The readers throw Error(InvalidArgument) on malformed input.
Quaternion quaternion_from_json(const Json& j);
Complex complex_from_json(const Json& j);
RegularSeries series_from_json(const Json& j);
ProjectivePoint3 projective_point_from_json(const Json& j);
KleinPoint klein_point_from_json(const Json& j);
RealLinearMap4 linear_map_from_json(const Json& j);
ComplexPoly complex_poly_from_json(const Json& j);
std::vector<CurveSample> curve_from_json(const Json& j);

/// Parses text as JSON, converting parse failures to Error(InvalidArgument).
Json parse_json(const std::string& text);

}  // namespace slicereg
