#pragma once

#include <functional>
#include <span>

#include "quadproj/plane_sections.hpp"
#include "quadproj/stereographic.hpp"
#include "quadproj/vec.hpp"

namespace quadproj {

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  long evaluations = 0;
};

/// First and second derivatives of a plane curve at one parameter value.
struct Derivative2Jet {
  Vec2 first;
  Vec2 second;
};

inline constexpr long kDefaultQuadratureBudget = 1'000'000;

/// Globally adaptive bisection over 15-point Gauss–Legendre panels. A panel's
/// error is estimated as |G(panel) − G(left) − G(right)|; the panel with the
/// largest estimate is split until the summed estimate is at most
/// rel_tol·|value|. Throws QuadratureNonConvergence when another split
/// would exceed `budget` integrand evaluations.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                           long budget = kDefaultQuadratureBudget);

/// Central-difference derivatives of `curve` at t.
Derivative2Jet fd_jet(const std::function<Vec2(double)>& curve, double t, double h);

/// Central-difference columns of `map` at p; the cross product is taken of
/// the numeric columns. A stencil point at the paraboloid origin (or any
/// other GeometryError raised by `map`) becomes DomainError.
JacobianColumns fd_surface_jacobian(const std::function<Vec3(PlanePoint)>& map, PlanePoint p, double h);

/// Step 1e-5·max(1, |x|) used for every finite-difference oracle.
double default_fd_step(double scale);

/// Brute-force eccentricity from the foci. Places the foci on the major axis,
/// checks that n boundary samples have distance sum 2·(major semi-axis) to
/// within 1e-10 relative (FocusCheckFailed otherwise), then returns
/// focal distance over major semi-axis.
double foci_eccentricity(const SectionEllipse& e, int n);

/// Shoelace area; positive for counter-clockwise vertex order.
double polygon_area(std::span<const PlanePoint> points);

}  // namespace quadproj
