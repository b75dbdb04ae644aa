#include "quadproj/numeric_oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "quadproj/errors.hpp"

namespace quadproj {

namespace {

constexpr int kOrder = 15;

struct GaussRule {
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};
};

// Roots of P_15 by Newton iteration from the Chebyshev-like initial guess.
GaussRule make_gauss_rule() {
  GaussRule rule;
  for (int i = 0; i < kOrder; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= kOrder; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = kOrder * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2 / ((1 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_rule();
  return rule;
}

double gauss_panel(const std::function<double(double)>& f, double lo, double hi) {
  const GaussRule& rule = gauss_rule();
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double sum = 0;
  for (int i = 0; i < kOrder; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

// A panel keeps its two half-panel estimates so a split needs only the
// four quarter panels.
struct Panel {
  double lo, hi;
  double left, right;
  double error;

  double value() const { return left + right; }
  bool operator<(const Panel& other) const { return error < other.error; }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                           long budget) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a <= b) || !(rel_tol > 0))
    throw GeometryError(Errc::InvalidArgument, "integrate needs finite a <= b and rel_tol > 0");
  QuadratureResult result;
  if (a == b) return result;

  long evals = 0;
  auto make_panel = [&](double lo, double hi, double coarse) {
    const double mid = 0.5 * (lo + hi);
    const double left = gauss_panel(f, lo, mid);
    const double right = gauss_panel(f, mid, hi);
    evals += 2 * kOrder;
    return Panel{lo, hi, left, right, std::abs(left + right - coarse)};
  };

  evals += kOrder;
  // Max-heap on the error estimate.
  std::vector<Panel> panels{make_panel(a, b, gauss_panel(f, a, b))};
  double value = panels.front().value();
  double error = panels.front().error;

  while (error > rel_tol * std::abs(value)) {
    if (evals + 4 * kOrder > budget) {
      std::ostringstream msg;
      msg << "budget of " << budget << " evaluations exhausted with error estimate " << error;
      throw GeometryError(Errc::QuadratureNonConvergence, msg.str());
    }
    std::pop_heap(panels.begin(), panels.end());
    const Panel worst = panels.back();
    panels.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi))
      throw GeometryError(Errc::QuadratureNonConvergence, "panel width reached machine resolution");
    panels.push_back(make_panel(worst.lo, mid, worst.left));
    std::push_heap(panels.begin(), panels.end());
    panels.push_back(make_panel(mid, worst.hi, worst.right));
    std::push_heap(panels.begin(), panels.end());

    // Re-sum instead of updating incrementally so long runs do not drift.
    value = 0;
    error = 0;
    for (const Panel& p : panels) {
      value += p.value();
      error += p.error;
    }
  }

  result.value = value;
  result.error_estimate = error;
  result.evaluations = evals;
  return result;
}

double default_fd_step(double scale) { return 1e-5 * std::max(1.0, std::abs(scale)); }

Derivative2Jet fd_jet(const std::function<Vec2(double)>& curve, double t, double h) {
  if (!(h > 0)) throw GeometryError(Errc::InvalidArgument, "finite-difference step must be positive");
  const Vec2 fwd = curve(t + h);
  const Vec2 mid = curve(t);
  const Vec2 bwd = curve(t - h);
  return {(1 / (2 * h)) * (fwd - bwd), (1 / (h * h)) * (fwd - 2 * mid + bwd)};
}

JacobianColumns fd_surface_jacobian(const std::function<Vec3(PlanePoint)>& map, PlanePoint p, double h) {
  if (!(h > 0)) throw GeometryError(Errc::InvalidArgument, "finite-difference step must be positive");
  auto eval = [&](double u, double v) {
    try {
      return map({u, v});
    } catch (const GeometryError& err) {
      throw GeometryError(Errc::DomainError, std::string("stencil point left the map's domain: ") + err.what());
    }
  };
  JacobianColumns j;
  j.d_u = (1 / (2 * h)) * (eval(p.u + h, p.v) - eval(p.u - h, p.v));
  j.d_v = (1 / (2 * h)) * (eval(p.u, p.v + h) - eval(p.u, p.v - h));
  j.cross = cross(j.d_u, j.d_v);
  return j;
}

double foci_eccentricity(const SectionEllipse& e, int n) {
  if (n < 8) throw GeometryError(Errc::InvalidSampleCount, "foci check needs at least 8 samples");
  // Work in the frame where the major axis is x.
  const bool swapped = e.semi_y > e.semi_x;
  const double major = swapped ? e.semi_y : e.semi_x;
  const double minor = swapped ? e.semi_x : e.semi_y;
  const double focal = std::sqrt(std::abs(major * major - minor * minor));
  const Vec2 f1{focal, 0}, f2{-focal, 0};

  for (const CurveSample& s : sample_curve(e, n)) {
    const Vec2 p = swapped ? Vec2{s.point.v, s.point.u} : Vec2{s.point.u, s.point.v};
    const double sum = norm(p - f1) + norm(p - f2);
    if (std::abs(sum - 2 * major) > 1e-10 * 2 * major) {
      std::ostringstream msg;
      msg << "distance sum " << sum << " differs from major axis " << 2 * major << " at t = " << s.t;
      throw GeometryError(Errc::FocusCheckFailed, msg.str());
    }
  }
  return focal / major;
}

double polygon_area(std::span<const PlanePoint> points) {
  if (points.size() < 3) throw GeometryError(Errc::TooFewPoints, "a polygon needs at least 3 vertices");
  // Shoelace with coordinates relative to the first vertex.
  const PlanePoint o = points.front();
  double twice = 0;
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    const double x1 = points[i].u - o.u, y1 = points[i].v - o.v;
    const double x2 = points[i + 1].u - o.u, y2 = points[i + 1].v - o.v;
    twice += x1 * y2 - x2 * y1;
  }
  return 0.5 * twice;
}

}  // namespace quadproj
