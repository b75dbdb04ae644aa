#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "quadproj/errors.hpp"
#include "quadproj/plane_sections.hpp"
#include "quadproj/stereographic.hpp"
#include "support/oracles.hpp"

namespace quadproj {
namespace {

using testing::random_quadric;

Errc error_code(const auto& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a GeometryError";
  return Errc::InvalidArgument;
}

const Quadric kFixture = Quadric::ellipsoid(2, 1, 2);
const Quadric kUnitParaboloid = Quadric::paraboloid(1, 1, 1);

double random_height(std::mt19937_64& rng, const Quadric& q) {
  std::uniform_real_distribution<double> frac(-0.95, 0.95);
  return q.is_ellipsoid() ? q.c * frac(rng) : q.c * (1 - 2 * (1 + frac(rng)));
}

TEST(SectionEllipse, KnownValues) {
  const SectionEllipse e = section_ellipse(kFixture, 1);
  EXPECT_DOUBLE_EQ(e.semi_x, std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(e.semi_y, std::sqrt(3.0) / 2);
  EXPECT_EQ(e.plane_height, 1);
  EXPECT_EQ(section_ellipse(kFixture, 0), (SectionEllipse{2, 1, 0}));
  EXPECT_EQ(section_ellipse(kUnitParaboloid, 0), (SectionEllipse{1, 1, 0}));
}

TEST(SectionEllipse, DegenerateHeights) {
  EXPECT_EQ(error_code([] { section_ellipse(kFixture, 2); }), Errc::DegenerateSection);
  EXPECT_EQ(error_code([] { section_ellipse(kFixture, -2); }), Errc::DegenerateSection);
  EXPECT_EQ(error_code([] { section_ellipse(kFixture, 7); }), Errc::DegenerateSection);
  EXPECT_EQ(error_code([] { section_ellipse(kUnitParaboloid, 1); }), Errc::DegenerateSection);
  EXPECT_EQ(error_code([] { projected_ellipse(kFixture, -2); }), Errc::DegenerateSection);
  EXPECT_EQ(error_code([] { projected_ellipse(kUnitParaboloid, 1.5); }), Errc::DegenerateSection);
  EXPECT_EQ(error_code([] { section_ellipse(kFixture, std::nan("")); }), Errc::DegenerateSection);
}

TEST(SectionEllipse, BoundaryPointsLieOnTheQuadric) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const Quadric q = random_quadric(rng, i % 2 ? QuadricKind::Ellipsoid : QuadricKind::EllipticParaboloid);
    const double d = random_height(rng, q);
    const SectionEllipse e = section_ellipse(q, d);
    for (const CurveSample& s : sample_curve(e, 17)) {
      const SurfacePoint p{s.point.u, s.point.v, d};
      EXPECT_LE(std::abs(implicit_residual(q, p)), 1e-12 * std::max(1.0, std::abs(d) + q.c)) << i;
    }
  }
}

TEST(ProjectedEllipse, KnownValues) {
  const SectionEllipse e = projected_ellipse(kFixture, 1);
  EXPECT_DOUBLE_EQ(e.semi_x, 2 * std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(e.semi_y, std::sqrt(3.0));
  EXPECT_EQ(e.plane_height, 0);
  EXPECT_EQ(projected_ellipse(kFixture, 0), (SectionEllipse{2, 1, 0}));
  EXPECT_EQ(projected_ellipse(kUnitParaboloid, 0), (SectionEllipse{1, 1, 0}));
}

TEST(ProjectedEllipse, FixedPlaneIsUnchanged) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const Quadric q = random_quadric(rng, i % 2 ? QuadricKind::Ellipsoid : QuadricKind::EllipticParaboloid);
    EXPECT_EQ(projected_ellipse(q, 0), section_ellipse(q, 0));
  }
}

// Pointwise check: lift each section sample to the surface, push it through
// the inverse map and compare with the projected ellipse at the same angle.
TEST(ProjectedEllipse, IsTheImageOfTheSection) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Quadric q = random_quadric(rng, i % 2 ? QuadricKind::Ellipsoid : QuadricKind::EllipticParaboloid);
    const double d = random_height(rng, q);
    const SectionEllipse section = section_ellipse(q, d);
    const SectionEllipse image = projected_ellipse(q, d);
    for (const CurveSample& s : sample_curve(section, 24)) {
      const PlanePoint got = project_to_plane(q, {s.point.u, s.point.v, d}, 1e-9 * std::max(1.0, std::abs(d)));
      const PlanePoint want = evaluate_curve(image, CurveAngle(s.t));
      const double scale = std::max(image.semi_x, image.semi_y);
      EXPECT_LE(std::hypot(got.u - want.u, got.v - want.v), 1e-12 * scale) << i;
    }
  }
}

TEST(ProjectionScale, IsTheCommonAxisFactor) {
  EXPECT_EQ(projection_scale(kFixture, 1), 2);
  EXPECT_EQ(projection_scale(Quadric::paraboloid(1, 2, 4), 2), 2);
  std::mt19937_64 rng(24);
  for (int i = 0; i < 500; ++i) {
    const Quadric q = random_quadric(rng, i % 2 ? QuadricKind::Ellipsoid : QuadricKind::EllipticParaboloid);
    const double d = random_height(rng, q);
    const SectionEllipse section = section_ellipse(q, d);
    const SectionEllipse image = projected_ellipse(q, d);
    const double lambda = projection_scale(q, d);
    EXPECT_LE(testing::rel_err(image.semi_x, lambda * section.semi_x), 1e-12);
    EXPECT_LE(testing::rel_err(image.semi_y, lambda * section.semi_y), 1e-12);
    EXPECT_LE(testing::rel_err(image.semi_x / image.semi_y, q.a / q.b), 1e-13);
  }
}

TEST(SectionEllipse, EllipsoidIsSymmetricInHeight) {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> frac(0, 0.99);
  for (int i = 0; i < 100; ++i) {
    const Quadric q = random_quadric(rng, QuadricKind::Ellipsoid);
    const double d = q.c * frac(rng);
    const SectionEllipse up = section_ellipse(q, d), down = section_ellipse(q, -d);
    EXPECT_EQ(up.semi_x, down.semi_x);
    EXPECT_EQ(up.semi_y, down.semi_y);
  }
}

TEST(EvaluateCurve, KnownValues) {
  const PlanePoint p0 = evaluate_curve({2, 1, 0}, CurveAngle(0));
  EXPECT_EQ(p0, (PlanePoint{2, 0}));
  const PlanePoint p1 = evaluate_curve({2, 1, 0}, CurveAngle(std::numbers::pi / 2));
  EXPECT_NEAR(p1.u, 0, 1e-15);
  EXPECT_DOUBLE_EQ(p1.v, 1);
  const double r3 = std::sqrt(3.0);
  const PlanePoint p2 = evaluate_curve({r3, r3 / 2, 1}, CurveAngle(std::numbers::pi));
  EXPECT_DOUBLE_EQ(p2.u, -r3);
  EXPECT_NEAR(p2.v, 0, 1e-15);
}

TEST(CurveAngle, WrapsIntoOnePeriod) {
  EXPECT_EQ(CurveAngle(0).value(), 0);
  EXPECT_NEAR(CurveAngle(-std::numbers::pi / 2).value(), 1.5 * std::numbers::pi, 1e-15);
  EXPECT_NEAR(CurveAngle(5 * std::numbers::pi).value(), std::numbers::pi, 1e-14);
  EXPECT_LT(CurveAngle(2 * std::numbers::pi).value(), 2 * std::numbers::pi);
}

TEST(SampleCurve, KnownValues) {
  const std::vector<CurveSample> s = sample_curve({1, 1, 0}, 4);
  ASSERT_EQ(s.size(), 4u);
  const PlanePoint want[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(s[k].point.u, want[k].u, 1e-15);
    EXPECT_NEAR(s[k].point.v, want[k].v, 1e-15);
  }
  const std::vector<CurveSample> three = sample_curve({3, 0.5, 0}, 3);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three[0].t, 0);
  EXPECT_EQ(three[0].point, (PlanePoint{3, 0}));
}

TEST(SampleCurve, PointsSatisfyTheEllipseEquation) {
  for (const CurveSample& s : sample_curve({2, 1, 0}, 360)) {
    EXPECT_LE(std::abs(s.point.u * s.point.u / 4 + s.point.v * s.point.v - 1), 1e-14);
  }
}

TEST(SampleCurve, RejectsTooFewSamples) {
  EXPECT_EQ(error_code([] { sample_curve({1, 1, 0}, 2); }), Errc::InvalidSampleCount);
  EXPECT_EQ(error_code([] { sample_curve({1, 1, 0}, -5); }), Errc::InvalidSampleCount);
}

}  // namespace
}  // namespace quadproj
