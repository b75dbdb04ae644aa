#pragma once

#include <numbers>
#include <string_view>
#include <vector>

#include "quadproj/quadric.hpp"

namespace quadproj {

/// Odd ids concern the ellipsoid, even ids the paraboloid:
/// T1/T2 eccentricity, T3/T4 curvature, T5/T6 arc length, T7/T8 area.
enum class TheoremId { T1 = 1, T2, T3, T4, T5, T6, T7, T8 };

enum class SectionProperty { Eccentricity, Curvature, ArcLength, Area };

std::string_view to_string(TheoremId id) noexcept;
TheoremId theorem_for(QuadricKind kind, SectionProperty property) noexcept;

/// Outcome of checking projection-side = expected_ratio · section-side.
///
/// lhs is the quantity on the projected ellipse, rhs the same quantity on the
/// horizontal section. Curvature checks are sampled: lhs/rhs then hold the
/// worst sample and lhs_samples/rhs_samples the full series. pass is
/// max_abs_error ≤ tolerance, and additionally oracle_error ≤
/// oracle_tolerance when an independent oracle was run (area only).
struct TheoremReport {
  TheoremId theorem_id = TheoremId::T1;
  Quadric quadric;
  double d = 0;
  double lhs = 0;
  double rhs = 0;
  std::vector<double> lhs_samples;
  std::vector<double> rhs_samples;
  double expected_ratio = 1;
  double max_abs_error = 0;
  double tolerance = 0;
  double oracle_error = 0;
  double oracle_tolerance = 0;
  bool pass = false;
};

struct MonotoneFlags {
  bool curvature_decreasing = false;
  bool length_increasing = false;
  bool area_increasing = false;
};

/// Projection-side curvature k₀(0), perimeter L₀ and area 𝒜₀ along planes
/// rising toward the pole, plus the area blow-up factor 𝒜₀/𝒜_d.
struct RemarkReport {
  Quadric quadric;
  std::vector<double> d_values;
  std::vector<double> curvature_trend;
  std::vector<double> length_trend;
  std::vector<double> area_trend;
  std::vector<double> area_ratio_trend;
  MonotoneFlags monotone_flags;
  bool pass = false;
};

struct VerifyOptions {
  double eccentricity_tol = 1e-12;
  int curvature_samples = 360;
  double curvature_rel_tol = 1e-10;
  double arclength_rel_tol = 1e-8;
  double area_rel_tol = 1e-12;
  int area_oracle_samples = 100'000;
  double area_oracle_rel_tol = 1e-8;
};

/// e(projection) vs e(section), both also compared with the closed form
/// √(a² − b²)/max(a, b). Absolute tolerance.
TheoremReport verify_eccentricity(const Quadric& q, double d, double tol = VerifyOptions{}.eccentricity_tol);

/// max_t |k₀(t) − ((c − d)/c) k_d(t)| over n_samples uniform angles. The
/// stored tolerance is rel_tol · max_t |k₀(t)|.
TheoremReport verify_curvature_ratio(const Quadric& q, double d, int n_samples = VerifyOptions{}.curvature_samples,
                                     double rel_tol = VerifyOptions{}.curvature_rel_tol);

/// |L₀ − (c/(c − d)) L_d| / L₀ for the arc over [t0, t1] (full perimeter by
/// default), both lengths by quadrature.
TheoremReport verify_arclength_ratio(const Quadric& q, double d, double rel_tol = VerifyOptions{}.arclength_rel_tol,
                                     double t0 = 0, double t1 = 2 * std::numbers::pi);

/// |𝒜₀ − (c/(c − d))² 𝒜_d| / 𝒜₀ from πAB, cross-checked against the shoelace
/// area of an inscribed oracle_samples-gon of the projected ellipse.
TheoremReport verify_area_ratio(const Quadric& q, double d, double tol = VerifyOptions{}.area_rel_tol,
                                int oracle_samples = VerifyOptions{}.area_oracle_samples,
                                double oracle_rel_tol = VerifyOptions{}.area_oracle_rel_tol);

/// The four checks for one plane, in theorem order.
std::vector<TheoremReport> verify_all(const Quadric& q, double d, const VerifyOptions& options = {});

/// Max relative deviation of (A₀, B₀) from (c/(c − d)) (A, B).
double projection_scale_error(const Quadric& q, double d);

/// Requires strictly increasing d_values, each a valid section height.
RemarkReport remark_scan(const Quadric& q, const std::vector<double>& d_values,
                         double arclength_rel_tol = 1e-12);

}  // namespace quadproj
