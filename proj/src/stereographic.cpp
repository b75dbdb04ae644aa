#include "quadproj/stereographic.hpp"

#include <cmath>
#include <sstream>

#include "quadproj/errors.hpp"

namespace quadproj {

namespace {

void require_paraboloid_domain(const Quadric& q, PlanePoint p) {
  if (!q.is_ellipsoid() && p.u == 0 && p.v == 0)
    throw GeometryError(Errc::ParaboloidOriginUndefined,
                        "the paraboloid chart is defined on the plane minus the origin");
}

double sq(double x) { return x * x; }

// c − z for a point on q. Near the pole the stored z has lost the digits of
// c − z, so the surface equation recovers it from x and y instead:
//   paraboloid  c − z = x²/a² + y²/b²
//   ellipsoid   c − z = c² (x²/a² + y²/b²) / (c + z)
// Below the equator c − z ≥ c and the direct difference is already exact
// to rounding.
double surface_gap(const Quadric& q, SurfacePoint p, double direct_gap) {
  if (q.is_ellipsoid() && p.z <= 0) return direct_gap;
  const double radial = sq(p.x / q.a) + sq(p.y / q.b);
  const double gap = q.is_ellipsoid() ? sq(q.c) * radial / (q.c + p.z) : radial;
  // Off-surface points (within the caller's tolerance) can make this vanish.
  return gap > 0 ? gap : direct_gap;
}

}  // namespace

ProjectionScalars line_parameter(const Quadric& q, PlanePoint p) {
  require_paraboloid_domain(q, p);
  const double a2 = sq(q.a), b2 = sq(q.b);
  const double radial = b2 * sq(p.u) + a2 * sq(p.v);
  if (q.is_ellipsoid()) {
    const double denom = radial + a2 * b2;
    return {2 * a2 * b2 / denom, denom};
  }
  return {q.c * a2 * b2 / radial, radial};
}

SurfacePoint project_to_surface(const Quadric& q, PlanePoint p) {
  require_paraboloid_domain(q, p);
  const double a2 = sq(q.a), b2 = sq(q.b);
  const double a2b2 = a2 * b2;
  const double radial = b2 * sq(p.u) + a2 * sq(p.v);
  if (q.is_ellipsoid()) {
    const double D = radial + a2b2;
    const double t = 2 * a2b2 / D;
    return {t * p.u, t * p.v, q.c * (radial - a2b2) / D};
  }
  const double M = radial;
  const double t = a2b2 * q.c / M;
  const double x = t * p.u, y = t * p.v;
  // The height is taken from the rounded x and y rather than from u and v,
  // so the stored point sits on the surface to within half an ulp of z.
  using ld = long double;
  const ld xa = ld{x} / q.a, yb = ld{y} / q.b;
  return {x, y, static_cast<double>(ld{q.c} - xa * xa - yb * yb)};
}

PlanePoint project_to_plane(const Quadric& q, SurfacePoint p, double tol) {
  const double residual = implicit_residual(q, p);
  if (!(std::abs(residual) <= tol)) {
    std::ostringstream msg;
    msg << "implicit residual " << residual << " exceeds tolerance " << tol;
    throw GeometryError(Errc::NotOnSurface, msg.str());
  }
  const double gap = q.c - p.z;
  if (std::abs(gap) <= kPoleRelThreshold * q.c)
    throw GeometryError(Errc::PoleNotProjectable, "the pole (0, 0, c) has no image in the plane");
  const double scale = q.c / surface_gap(q, p, gap);
  return {scale * p.x, scale * p.y};
}

JacobianColumns jacobian_columns(const Quadric& q, PlanePoint p) {
  require_paraboloid_domain(q, p);
  const double u = p.u, v = p.v, c = q.c;
  const double a2 = sq(q.a), b2 = sq(q.b);
  const double a2b2 = a2 * b2;
  const double bu2 = b2 * sq(u), av2 = a2 * sq(v);
  JacobianColumns j;
  if (q.is_ellipsoid()) {
    const double D = bu2 + av2 + a2b2;
    // s = a²b²/D ∈ (0, 1]; every entry is written as s·(bounded)/D.
    const double s = a2b2 / D;
    j.d_u = {2 * s * (D - 2 * bu2) / D, -4 * s * b2 * u * v / D, 4 * s * b2 * u * c / D};
    j.d_v = {-4 * s * a2 * u * v / D, 2 * s * (D - 2 * av2) / D, 4 * s * a2 * v * c / D};
    const double k = 4 * s * s / D;
    j.cross = {k * (-2 * b2 * u * c), k * (-2 * a2 * v * c), k * (a2b2 - bu2 - av2)};
    return j;
  }
  const double M = bu2 + av2;
  const double s = a2b2 * c / M;
  // s grows like 1/M near the origin; u/M and v/M are formed before any
  // product with s so the finite entries stay finite.
  const double um = u / M, vm = v / M;
  j.d_u = {s * (M - 2 * bu2) / M, -2 * s * b2 * u * vm, 2 * b2 * c * s * um};
  j.d_v = {-2 * s * a2 * v * um, s * (M - 2 * av2) / M, 2 * a2 * c * s * vm};
  j.cross = {-2 * b2 * c * s * (s * um), -2 * a2 * c * s * (s * vm), -s * s};
  return j;
}

// Tests the direction of the cross product with its positive scalar factor
// dropped, since that factor underflows long before the direction vanishes.
bool is_regular_at(const Quadric& q, PlanePoint p) {
  require_paraboloid_domain(q, p);
  const double a2 = sq(q.a), b2 = sq(q.b);
  const double bu2 = b2 * sq(p.u), av2 = a2 * sq(p.v);
  const Vec3 n = q.is_ellipsoid() ? Vec3{-2 * b2 * p.u * q.c, -2 * a2 * p.v * q.c, a2 * b2 - bu2 - av2}
                                  : Vec3{-2 * b2 * q.c * p.u, -2 * a2 * q.c * p.v, -(bu2 + av2)};
  return n.x != 0 || n.y != 0 || n.z != 0;
}

SurfacePoint reflect_to_south_chart(SurfacePoint p) { return {p.x, p.y, -p.z}; }

}  // namespace quadproj
