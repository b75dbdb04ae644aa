#pragma once

#include <vector>

#include "quadproj/quadric.hpp"

namespace quadproj {

/// Origin-centred, axis-aligned ellipse x²/semi_x² + y²/semi_y² = 1 lying in
/// the plane z = plane_height.
struct SectionEllipse {
  double semi_x = 1;
  double semi_y = 1;
  double plane_height = 0;

  friend constexpr bool operator==(const SectionEllipse&, const SectionEllipse&) = default;
};

/// Curve parameter of α(t) = (A cos t, B sin t), wrapped into [0, 2π).
class CurveAngle {
 public:
  CurveAngle() = default;
  explicit CurveAngle(double t);

  double value() const { return t_; }

 private:
  double t_ = 0;
};

/// Horizontal cut of q by the plane z = d.
///   ellipsoid (−c < d < c):  A = a√(c² − d²)/c,  B = b√(c² − d²)/c
///   paraboloid (d < c):      A = a√(c − d),      B = b√(c − d)
/// Throws DegenerateSection outside those ranges.
SectionEllipse section_ellipse(const Quadric& q, double d);

/// Image of section_ellipse(q, d) in the plane z = 0 under the inverse map.
///   ellipsoid:  A₀ = a√(c² − d²)/(c − d),  B₀ = b√(c² − d²)/(c − d)
///   paraboloid: A₀ = c a/√(c − d),         B₀ = c b/√(c − d)
SectionEllipse projected_ellipse(const Quadric& q, double d);

/// The factor c/(c − d) relating the two ellipses: A₀ = λA, B₀ = λB.
double projection_scale(const Quadric& q, double d);

PlanePoint evaluate_curve(const SectionEllipse& e, CurveAngle t);

struct CurveSample {
  double t = 0;
  PlanePoint point;
};

/// n samples at t_k = 2πk/n, k = 0..n−1. Throws InvalidSampleCount for n < 3.
std::vector<CurveSample> sample_curve(const SectionEllipse& e, int n);

}  // namespace quadproj
