#pragma once

#include <string_view>

#include "quadproj/vec.hpp"

namespace quadproj {

enum class QuadricKind { Ellipsoid, EllipticParaboloid };

std::string_view to_string(QuadricKind kind) noexcept;

/// Point (x, y, z) on or near a quadric.
struct SurfacePoint {
  double x = 0;
  double y = 0;
  double z = 0;

  Vec3 vec() const { return {x, y, z}; }
  friend constexpr bool operator==(SurfacePoint, SurfacePoint) = default;
};

/// Point (u, v) of the projection plane z = 0.
struct PlanePoint {
  double u = 0;
  double v = 0;

  friend constexpr bool operator==(PlanePoint, PlanePoint) = default;
};

/// Ellipsoid x²/a² + y²/b² + z²/c² = 1, or elliptic paraboloid
/// z = c − x²/a² − y²/b². Both are centred (vertexed) on the z axis, so the
/// projection pole is (0, 0, c) in either case. A sphere of radius r is the
/// ellipsoid with a = b = c = r.
///
/// The aggregate form does not check its axes; the named constructors do.
struct Quadric {
  QuadricKind kind = QuadricKind::Ellipsoid;
  double a = 1;
  double b = 1;
  double c = 1;

  static Quadric ellipsoid(double a, double b, double c);
  static Quadric paraboloid(double a, double b, double c);
  static Quadric sphere(double r) { return ellipsoid(r, r, r); }

  bool is_ellipsoid() const { return kind == QuadricKind::Ellipsoid; }

  friend constexpr bool operator==(const Quadric&, const Quadric&) = default;
};

/// Default for membership checks when the caller has no better scale.
inline constexpr double kDefaultMembershipTol = 1e-9;

/// Throws GeometryError(NonPositiveAxis) unless a, b, c are finite and > 0.
void validate(const Quadric& q);

/// Ellipsoid: x²/a² + y²/b² + z²/c² − 1.  Paraboloid: z − c + x²/a² + y²/b².
double implicit_residual(const Quadric& q, SurfacePoint p);

bool contains(const Quadric& q, SurfacePoint p, double tol = kDefaultMembershipTol);

SurfacePoint north_pole(const Quadric& q);

}  // namespace quadproj
