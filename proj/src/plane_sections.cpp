#include "quadproj/plane_sections.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "quadproj/errors.hpp"

namespace quadproj {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

void require_valid_height(const Quadric& q, double d) {
  const bool ok = q.is_ellipsoid() ? (d > -q.c && d < q.c) : d < q.c;
  if (!ok || !std::isfinite(d)) {
    std::ostringstream msg;
    msg << "plane z = " << d << " does not cut the " << to_string(q.kind)
        << " in a proper ellipse (c = " << q.c << ")";
    throw GeometryError(Errc::DegenerateSection, msg.str());
  }
}

}  // namespace

CurveAngle::CurveAngle(double t) : t_(std::fmod(t, kTwoPi)) {
  if (t_ < 0) t_ += kTwoPi;
  if (t_ >= kTwoPi) t_ = 0;
}

SectionEllipse section_ellipse(const Quadric& q, double d) {
  require_valid_height(q, d);
  if (q.is_ellipsoid()) {
    // c² − d² as (c − d)(c + d) keeps relative accuracy near the poles.
    const double r = std::sqrt((q.c - d) * (q.c + d)) / q.c;
    return {q.a * r, q.b * r, d};
  }
  const double r = std::sqrt(q.c - d);
  return {q.a * r, q.b * r, d};
}

SectionEllipse projected_ellipse(const Quadric& q, double d) {
  require_valid_height(q, d);
  // The plane z = 0 is fixed pointwise by the inverse map.
  if (d == 0) return section_ellipse(q, 0.0);
  if (q.is_ellipsoid()) {
    const double r = std::sqrt((q.c - d) * (q.c + d)) / (q.c - d);
    return {q.a * r, q.b * r, 0};
  }
  const double r = q.c / std::sqrt(q.c - d);
  return {q.a * r, q.b * r, 0};
}

double projection_scale(const Quadric& q, double d) {
  require_valid_height(q, d);
  return q.c / (q.c - d);
}

PlanePoint evaluate_curve(const SectionEllipse& e, CurveAngle t) {
  return {e.semi_x * std::cos(t.value()), e.semi_y * std::sin(t.value())};
}

std::vector<CurveSample> sample_curve(const SectionEllipse& e, int n) {
  if (n < 3)
    throw GeometryError(Errc::InvalidSampleCount, "need at least 3 samples, got " + std::to_string(n));
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = kTwoPi * k / n;
    out.push_back({t, evaluate_curve(e, CurveAngle(t))});
  }
  return out;
}

}  // namespace quadproj
