#pragma once

#include "quadproj/numeric_oracles.hpp"
#include "quadproj/plane_sections.hpp"

namespace quadproj {

inline constexpr double kDefaultArcLengthRelTol = 1e-10;

/// Half the distance between the foci, √(major² − minor²). Zero for a circle.
double focal_half_distance(const SectionEllipse& e);

/// focal_half_distance / major semi-axis, in [0, 1). Whichever axis is
/// longer is treated as the major one.
double eccentricity(const SectionEllipse& e);

/// k = (x′y″ − x″y′) / (x′² + y′²)^{3/2} for any regular plane curve.
/// Throws SingularVelocity when |α′| is effectively zero.
double signed_curvature(const Derivative2Jet& j);

/// Closed form for α(t) = (A cos t, B sin t):  k(t) = AB / (A² sin²t + B² cos²t)^{3/2}.
double ellipse_curvature(const SectionEllipse& e, CurveAngle t);

/// ∫_{t0}^{t1} √(A² sin²t + B² cos²t) dt by adaptive quadrature. The full
/// perimeter is the interval [0, 2π].
double ellipse_arc_length(const SectionEllipse& e, double t0, double t1,
                          double rel_tol = kDefaultArcLengthRelTol);

double ellipse_perimeter(const SectionEllipse& e, double rel_tol = kDefaultArcLengthRelTol);

/// π A B.
double ellipse_area(const SectionEllipse& e);

}  // namespace quadproj
