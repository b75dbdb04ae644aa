#include "quadproj/quadric.hpp"

#include <cmath>
#include <string>

#include "quadproj/errors.hpp"

namespace quadproj {

std::string_view to_string(QuadricKind kind) noexcept {
  return kind == QuadricKind::Ellipsoid ? "ellipsoid" : "paraboloid";
}

Quadric Quadric::ellipsoid(double a, double b, double c) {
  Quadric q{QuadricKind::Ellipsoid, a, b, c};
  validate(q);
  return q;
}

Quadric Quadric::paraboloid(double a, double b, double c) {
  Quadric q{QuadricKind::EllipticParaboloid, a, b, c};
  validate(q);
  return q;
}

namespace {

void require_positive(const char* name, double value) {
  if (!(std::isfinite(value) && value > 0))
    throw GeometryError(Errc::NonPositiveAxis,
                        std::string(name) + " = " + std::to_string(value) + " is not a positive finite number");
}

}  // namespace

void validate(const Quadric& q) {
  require_positive("a", q.a);
  require_positive("b", q.b);
  require_positive("c", q.c);
}

// Evaluated in long double: the terms cancel to far below their own size,
// and in double the rounding of each term would dominate the result.
double implicit_residual(const Quadric& q, SurfacePoint p) {
  using ld = long double;
  const ld xa = ld{p.x} / q.a;
  const ld yb = ld{p.y} / q.b;
  if (q.is_ellipsoid()) {
    const ld zc = ld{p.z} / q.c;
    return static_cast<double>(xa * xa + yb * yb + zc * zc - 1);
  }
  return static_cast<double>((ld{p.z} - q.c) + xa * xa + yb * yb);
}

bool contains(const Quadric& q, SurfacePoint p, double tol) {
  return std::abs(implicit_residual(q, p)) <= tol;
}

SurfacePoint north_pole(const Quadric& q) { return {0, 0, q.c}; }

}  // namespace quadproj
