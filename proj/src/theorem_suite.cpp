#include "quadproj/theorem_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadproj/conic_metrics.hpp"
#include "quadproj/errors.hpp"
#include "quadproj/numeric_oracles.hpp"
#include "quadproj/plane_sections.hpp"

namespace quadproj {

std::string_view to_string(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::T5: return "T5";
    case TheoremId::T6: return "T6";
    case TheoremId::T7: return "T7";
    case TheoremId::T8: return "T8";
  }
  return "T?";
}

TheoremId theorem_for(QuadricKind kind, SectionProperty property) noexcept {
  const int base = 1 + 2 * static_cast<int>(property);
  return static_cast<TheoremId>(kind == QuadricKind::Ellipsoid ? base : base + 1);
}

namespace {

TheoremReport start_report(const Quadric& q, double d, SectionProperty property, double ratio) {
  TheoremReport r;
  r.theorem_id = theorem_for(q.kind, property);
  r.quadric = q;
  r.d = d;
  r.expected_ratio = ratio;
  return r;
}

double rel_diff(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

}  // namespace

TheoremReport verify_eccentricity(const Quadric& q, double d, double tol) {
  validate(q);
  const SectionEllipse section = section_ellipse(q, d);
  const SectionEllipse projection = projected_ellipse(q, d);
  TheoremReport r = start_report(q, d, SectionProperty::Eccentricity, 1.0);
  r.lhs = eccentricity(projection);
  r.rhs = eccentricity(section);

  const double major = std::max(q.a, q.b), minor = std::min(q.a, q.b);
  const double closed = std::sqrt((major - minor) * (major + minor)) / major;
  r.max_abs_error = std::max({std::abs(r.lhs - r.rhs), std::abs(r.lhs - closed), std::abs(r.rhs - closed)});
  r.tolerance = tol;
  r.pass = r.max_abs_error <= r.tolerance;
  return r;
}

TheoremReport verify_curvature_ratio(const Quadric& q, double d, int n_samples, double rel_tol) {
  validate(q);
  if (n_samples < 8)
    throw GeometryError(Errc::InvalidSampleCount, "curvature check needs at least 8 samples");
  const SectionEllipse section = section_ellipse(q, d);
  const SectionEllipse projection = projected_ellipse(q, d);
  TheoremReport r = start_report(q, d, SectionProperty::Curvature, (q.c - d) / q.c);

  r.lhs_samples.reserve(n_samples);
  r.rhs_samples.reserve(n_samples);
  double max_k0 = 0;
  std::size_t worst = 0;
  for (int k = 0; k < n_samples; ++k) {
    const CurveAngle t(2 * std::numbers::pi * k / n_samples);
    const double k0 = ellipse_curvature(projection, t);
    const double kd = ellipse_curvature(section, t);
    r.lhs_samples.push_back(k0);
    r.rhs_samples.push_back(kd);
    max_k0 = std::max(max_k0, std::abs(k0));
    const double err = std::abs(k0 - r.expected_ratio * kd);
    if (err > r.max_abs_error || k == 0) {
      r.max_abs_error = err;
      worst = static_cast<std::size_t>(k);
    }
  }
  r.lhs = r.lhs_samples[worst];
  r.rhs = r.rhs_samples[worst];
  r.tolerance = rel_tol * max_k0;
  r.pass = r.max_abs_error <= r.tolerance;
  return r;
}

TheoremReport verify_arclength_ratio(const Quadric& q, double d, double rel_tol, double t0, double t1) {
  validate(q);
  if (!(rel_tol > 0)) throw GeometryError(Errc::InvalidArgument, "rel_tol must be positive");
  const SectionEllipse section = section_ellipse(q, d);
  const SectionEllipse projection = projected_ellipse(q, d);
  TheoremReport r = start_report(q, d, SectionProperty::ArcLength, q.c / (q.c - d));

  // Each length is resolved well below the ratio tolerance.
  const double quad_tol = std::max(1e-13, rel_tol * 1e-2);
  r.lhs = ellipse_arc_length(projection, t0, t1, quad_tol);
  r.rhs = ellipse_arc_length(section, t0, t1, quad_tol);
  r.max_abs_error = rel_diff(r.expected_ratio * r.rhs, r.lhs);
  r.tolerance = rel_tol;
  r.pass = r.max_abs_error <= r.tolerance;
  return r;
}

TheoremReport verify_area_ratio(const Quadric& q, double d, double tol, int oracle_samples, double oracle_rel_tol) {
  validate(q);
  if (!(tol > 0)) throw GeometryError(Errc::InvalidArgument, "tol must be positive");
  const SectionEllipse section = section_ellipse(q, d);
  const SectionEllipse projection = projected_ellipse(q, d);
  const double scale = q.c / (q.c - d);
  TheoremReport r = start_report(q, d, SectionProperty::Area, scale * scale);
  r.lhs = ellipse_area(projection);
  r.rhs = ellipse_area(section);
  r.max_abs_error = rel_diff(r.expected_ratio * r.rhs, r.lhs);
  r.tolerance = tol;

  std::vector<PlanePoint> polygon;
  polygon.reserve(static_cast<std::size_t>(oracle_samples));
  for (const CurveSample& s : sample_curve(projection, oracle_samples)) polygon.push_back(s.point);
  r.oracle_error = rel_diff(polygon_area(polygon), r.lhs);
  r.oracle_tolerance = oracle_rel_tol;

  r.pass = r.max_abs_error <= r.tolerance && r.oracle_error <= r.oracle_tolerance;
  return r;
}

std::vector<TheoremReport> verify_all(const Quadric& q, double d, const VerifyOptions& options) {
  return {
      verify_eccentricity(q, d, options.eccentricity_tol),
      verify_curvature_ratio(q, d, options.curvature_samples, options.curvature_rel_tol),
      verify_arclength_ratio(q, d, options.arclength_rel_tol),
      verify_area_ratio(q, d, options.area_rel_tol, options.area_oracle_samples, options.area_oracle_rel_tol),
  };
}

double projection_scale_error(const Quadric& q, double d) {
  const SectionEllipse section = section_ellipse(q, d);
  const SectionEllipse projection = projected_ellipse(q, d);
  const double scale = projection_scale(q, d);
  return std::max(rel_diff(scale * section.semi_x, projection.semi_x),
                  rel_diff(scale * section.semi_y, projection.semi_y));
}

RemarkReport remark_scan(const Quadric& q, const std::vector<double>& d_values, double arclength_rel_tol) {
  validate(q);
  if (d_values.empty()) throw GeometryError(Errc::InvalidArgument, "remark scan needs at least one plane");
  for (std::size_t i = 1; i < d_values.size(); ++i)
    if (!(d_values[i] > d_values[i - 1]))
      throw GeometryError(Errc::InvalidArgument, "remark scan heights must be strictly increasing");

  RemarkReport r;
  r.quadric = q;
  r.d_values = d_values;
  for (double d : d_values) {
    const SectionEllipse section = section_ellipse(q, d);
    const SectionEllipse projection = projected_ellipse(q, d);
    r.curvature_trend.push_back(ellipse_curvature(projection, CurveAngle(0)));
    r.length_trend.push_back(ellipse_perimeter(projection, arclength_rel_tol));
    r.area_trend.push_back(ellipse_area(projection));
    r.area_ratio_trend.push_back(ellipse_area(projection) / ellipse_area(section));
  }

  auto strictly = [](const std::vector<double>& xs, auto cmp) {
    return std::adjacent_find(xs.begin(), xs.end(), [&](double lo, double hi) { return !cmp(hi, lo); }) == xs.end();
  };
  r.monotone_flags.curvature_decreasing = strictly(r.curvature_trend, std::less<>{});
  r.monotone_flags.length_increasing = strictly(r.length_trend, std::greater<>{});
  r.monotone_flags.area_increasing = strictly(r.area_trend, std::greater<>{});
  r.pass = r.monotone_flags.curvature_decreasing && r.monotone_flags.length_increasing &&
           r.monotone_flags.area_increasing;
  return r;
}

}  // namespace quadproj
