#include <cmath>

#include <gtest/gtest.h>

#include "ruled/checks.hpp"
#include "ruled/corpus.hpp"
#include "ruled/errors.hpp"
#include "ruled/surface_file.hpp"
#include "ruled/surfaces.hpp"

using namespace ruled;

namespace {

RuledSurfaceSpec spec(const corpus::Entry& e) { return to_spec(e.definition); }

RuledSurfaceSpec analytic(const std::array<std::string, 3>& k, const std::array<std::string, 3>& q, double a,
                          double b) {
  return to_spec(corpus::analytic("test", k, q, a, b));
}

void expect_vec(const MVec3& a, const MVec3& b, double tol) {
  EXPECT_NEAR(a.x1(), b.x1(), tol);
  EXPECT_NEAR(a.x2(), b.x2(), tol);
  EXPECT_NEAR(a.x3(), b.x3(), tol);
}

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

const RuledSurfaceSpec kTangentDev = analytic({"sinh(u)", "cosh(u)", "0"}, {"cosh(u)", "sinh(u)", "0"}, 0, 1);
const RuledSurfaceSpec kCylinder = analytic({"0", "cos(u)", "sin(u)"}, {"1", "0", "0"}, 0, 2);

}  // namespace

TEST(Surfaces, DistributionParameter) {
  for (double u : {0.0, 0.3, 0.9}) EXPECT_NEAR(distribution_parameter(kTangentDev, u), 0.0, 1e-14);
  const RuledSurfaceSpec m = spec(corpus::nminus_conoid());
  for (double u : {0.0, 0.3, 0.9}) EXPECT_NEAR(distribution_parameter(m, u), -1.0, 1e-14);
  EXPECT_EQ(error_of([&] { distribution_parameter(kCylinder, 0.5); }), ErrorCode::CylindricalRuling);
}

TEST(Surfaces, TorsalRulings) {
  EXPECT_TRUE(is_torsal_ruling(kTangentDev, 0.4, 1e-9));
  EXPECT_FALSE(is_torsal_ruling(spec(corpus::nminus_conoid()), 0.4, 1e-9));
  EXPECT_TRUE(is_torsal_ruling(kCylinder, 0.4, 1e-9));
}

TEST(Surfaces, StrictionCurve) {
  const CurvePtr c = striction_curve(spec(corpus::helicoid()));
  for (double u : {0.0, 0.7, 1.9}) expect_vec(c->position(u), {u, 0, 0}, 1e-14);
  const CurvePtr d = striction_curve(spec(corpus::offset_helicoid()));
  for (double u : {0.0, 0.7, 1.9}) expect_vec(d->position(u), {u, 0, 0}, 1e-14);
  EXPECT_EQ(error_of([&] { striction_curve(kCylinder); }), ErrorCode::CylindricalRuling);
}

TEST(Surfaces, FrameFieldH1) {
  const FrameField F = frame_field(spec(corpus::helicoid()), 512);
  EXPECT_EQ(F.type, SurfaceType::NPlus);
  EXPECT_EQ(F.eps_q, 1);
  for (const auto& p : F.samples) {
    const double u = p.u;
    expect_vec(p.h, {0, -std::sin(u), std::cos(u)}, 1e-10);
    expect_vec(p.a, {1, 0, 0}, 1e-10);
    EXPECT_NEAR(p.k1, 1.0, 1e-8);
    EXPECT_NEAR(p.k2, 0.0, 1e-8);
    EXPECT_NEAR(p.s, u, 1e-10);
  }
  const FrenetResiduals r = verify_frenet(F);
  EXPECT_LT(r.max(), 1e-6);
}

TEST(Surfaces, FrameFieldNMinus) {
  const FrameField F = frame_field(spec(corpus::nminus_conoid()), 512);
  EXPECT_EQ(F.type, SurfaceType::NMinus);
  EXPECT_EQ(F.eps_q, -1);
  for (const auto& p : F.samples) {
    expect_vec(p.h, {std::sinh(p.u), std::cosh(p.u), 0}, 1e-10);
    expect_vec(p.a, {0, 0, 1}, 1e-10);
    EXPECT_NEAR(p.k1, 1.0, 1e-8);
    EXPECT_NEAR(p.k2, 0.0, 1e-8);
  }
  EXPECT_LT(verify_frenet(F).max(), 1e-6);
}

TEST(Surfaces, FrameFieldNTimes) {
  const FrameField F = frame_field(spec(corpus::ntimes_conoid()), 512);
  EXPECT_EQ(F.type, SurfaceType::NTimes);
  EXPECT_EQ(F.eps_h, -1);
  EXPECT_FALSE(F.timelike_surface);
  for (const auto& p : F.samples) {
    expect_vec(p.h, {std::cosh(p.u), std::sinh(p.u), 0}, 1e-10);
    expect_vec(p.a, {0, 0, -1}, 1e-10);
    expect_vec(lorentz_cross(p.a, p.q), p.h, 1e-10);
    expect_vec(lorentz_cross(p.h, p.a), -p.q, 1e-10);
    expect_vec(lorentz_cross(p.q, p.h), -p.a, 1e-10);
  }
  EXPECT_LT(verify_frenet(F).max(), 1e-6);
}

TEST(Surfaces, TiltedCurvaturesMatchOracle) {
  for (const corpus::Entry& e : {corpus::tilted_nplus(), corpus::tilted_nminus(), corpus::tilted_ntimes(),
                                 corpus::helix_developable(), corpus::timelike_helix_developable()}) {
    const FrameField F = frame_field(spec(e), 512);
    EXPECT_EQ(F.type, e.type) << e.definition.name;
    for (const auto& p : F.samples) {
      EXPECT_NEAR(p.k1, *e.k1, 1e-8) << e.definition.name;
      EXPECT_NEAR(p.k2, *e.k2, 1e-8) << e.definition.name;
    }
    EXPECT_LT(verify_frenet(F).max(), 1e-6) << e.definition.name;
  }
}

TEST(Surfaces, CorruptedFrameFailsLoudly) {
  FrameField F = frame_field(spec(corpus::helicoid()), 512);
  checks::corrupt_frame(F);
  EXPECT_GT(verify_frenet(F).identities, 0.1);
}

TEST(Surfaces, Developability) {
  const DevelopabilityReport t = developability(kTangentDev, 1e-6);
  EXPECT_TRUE(t.developable);
  ASSERT_TRUE(t.theta.has_value());
  for (double th : *t.theta) EXPECT_NEAR(th, 0.0, 1e-12);
  for (double d : t.d_profile) EXPECT_NEAR(d, 0.0, 1e-12);

  const DevelopabilityReport m = developability(spec(corpus::nminus_conoid()), 1e-6);
  EXPECT_FALSE(m.developable);
  EXPECT_FALSE(m.theta.has_value());
  EXPECT_TRUE(m.character_mismatch);
  for (double d : m.delta) EXPECT_NEAR(d, -1.0, 1e-12);

  EXPECT_FALSE(developability(spec(corpus::helicoid()), 1e-6).developable);
}

TEST(Surfaces, Classify) {
  EXPECT_EQ(classify(kCylinder), SurfaceType::Cylindrical);
  EXPECT_TRUE(is_cylindrical(kCylinder));
  EXPECT_EQ(classify(spec(corpus::helicoid())), SurfaceType::NPlus);
  EXPECT_EQ(classify(spec(corpus::ntimes_conoid())), SurfaceType::NTimes);
  EXPECT_EQ(error_of([&] { frame_field(kCylinder, 64); }), ErrorCode::CylindricalRuling);
}

TEST(Surfaces, LimitNormalH1) {
  const RuledSurfaceSpec h = spec(corpus::helicoid());
  for (double v : {1e3, 1e4}) {
    const MVec3 m = surface_normal(h, 0.0, v);
    const MVec3 dir = m / m.euclidean_norm();
    // Timelike surface with spacelike ruling: m tends to -a = (-1, 0, 0).
    EXPECT_LT((dir - MVec3(-1, 0, 0)).euclidean_norm(), 1.0 / v);
  }
}

TEST(Surfaces, SurfaceSuitePassesOnCorpus) {
  for (const corpus::Entry& e : corpus::developability_corpus()) {
    const RuledSurfaceSpec S = spec(e);
    const FrameField F = frame_field(S, 512);
    EXPECT_EQ(checks::limit_normal_sign(F), *e.limit_normal_sign) << S.name;
    for (const checks::Check& c : checks::surface_suite(S, F, {})) {
      EXPECT_TRUE(c.passed) << c.name << " [" << c.subject << "] " << c.value << " > " << c.tol;
    }
  }
}

TEST(Surfaces, SegmentsSplitAtStationaryRuling) {
  // q = (0, cos(u^2), sin(u^2)) stops turning at u = 0.
  const RuledSurfaceSpec S = analytic({"u", "0", "0"}, {"0", "cos(u*u)", "sin(u*u)"}, -1, 1);
  const std::vector<FrameField> parts = frame_field_segments(S, 256);
  EXPECT_EQ(parts.size(), 2u);
}
