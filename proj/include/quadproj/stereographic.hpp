#pragma once

#include "quadproj/quadric.hpp"
#include "quadproj/vec.hpp"

namespace quadproj {

/// Where the line from the pole N through Q = (u, v, 0) meets the quadric:
/// the point is N + t (Q − N) = (t u, t v, (1 − t) c).
///
/// denom is D = b²u² + a²v² + a²b² for the ellipsoid (t = 2a²b²/D) and
/// M = b²u² + a²v² for the paraboloid (t = c a²b²/M).
struct ProjectionScalars {
  double t = 0;
  double denom = 0;
};

/// Tangent columns ∂φ/∂u, ∂φ/∂v of the surface parametrization and their
/// cross product.
struct JacobianColumns {
  Vec3 d_u;
  Vec3 d_v;
  Vec3 cross;
};

/// |c − z| at or below this fraction of c counts as the pole.
inline constexpr double kPoleRelThreshold = 1e-12;

ProjectionScalars line_parameter(const Quadric& q, PlanePoint p);

/// Forward map φ: plane → quadric ∖ {N}. Undefined at the origin for the
/// paraboloid (throws ParaboloidOriginUndefined).
SurfacePoint project_to_surface(const Quadric& q, PlanePoint p);

/// Inverse map (x, y, z) ↦ (c x/(c − z), c y/(c − z)).
/// Throws NotOnSurface if |implicit_residual| > tol and PoleNotProjectable
/// when z is within kPoleRelThreshold·c of the pole height.
PlanePoint project_to_plane(const Quadric& q, SurfacePoint p, double tol = kDefaultMembershipTol);

/// Hand-derived partial derivatives of φ. The cross product uses the
/// factored forms
///   ellipsoid:  (4a⁴b⁴/D³) (−2b²uc, −2a²vc, a²b² − b²u² − a²v²)
///   paraboloid: (a⁴b⁴c²/M³) (−2b²cu, −2a²cv, −M)
/// which stay finite for large |u|, |v|.
JacobianColumns jacobian_columns(const Quadric& q, PlanePoint p);

/// True iff dφ is injective at p, i.e. the cross product is non-zero.
bool is_regular_at(const Quadric& q, PlanePoint p);

/// (x, y, z) ↦ (x, y, −z). Swaps the roles of the north and south poles so
/// project_to_plane can chart the ellipsoid minus its south pole.
SurfacePoint reflect_to_south_chart(SurfacePoint p);

}  // namespace quadproj
