#include "quadproj/conic_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadproj/errors.hpp"

namespace quadproj {

double focal_half_distance(const SectionEllipse& e) {
  const double major = std::max(e.semi_x, e.semi_y);
  const double minor = std::min(e.semi_x, e.semi_y);
  // (M − m)(M + m) avoids the cancellation of M² − m² for near-circles.
  return std::sqrt((major - minor) * (major + minor));
}

double eccentricity(const SectionEllipse& e) {
  return focal_half_distance(e) / std::max(e.semi_x, e.semi_y);
}

double signed_curvature(const Derivative2Jet& j) {
  const double speed = norm(j.first);
  if (!(speed > 1e-300))
    throw GeometryError(Errc::SingularVelocity, "curvature is undefined where the velocity vanishes");
  const double numer = j.first.x * j.second.y - j.second.x * j.first.y;
  return numer / speed / speed / speed;
}

double ellipse_curvature(const SectionEllipse& e, CurveAngle t) {
  const double s = std::sin(t.value()), c = std::cos(t.value());
  const double A = e.semi_x, B = e.semi_y;
  const double w = A * A * s * s + B * B * c * c;
  return A * B / (w * std::sqrt(w));
}

double ellipse_arc_length(const SectionEllipse& e, double t0, double t1, double rel_tol) {
  if (!(t0 <= t1)) throw GeometryError(Errc::InvalidArgument, "arc length needs t0 <= t1");
  const double A = e.semi_x, B = e.semi_y;
  const auto speed = [A, B](double t) { return std::hypot(A * std::sin(t), B * std::cos(t)); };
  return integrate(speed, t0, t1, rel_tol).value;
}

double ellipse_perimeter(const SectionEllipse& e, double rel_tol) {
  return ellipse_arc_length(e, 0, 2 * std::numbers::pi, rel_tol);
}

double ellipse_area(const SectionEllipse& e) { return std::numbers::pi * e.semi_x * e.semi_y; }

}  // namespace quadproj
