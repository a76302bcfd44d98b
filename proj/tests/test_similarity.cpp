#include <cmath>

#include <gtest/gtest.h>

#include "ruled/corpus.hpp"
#include "ruled/errors.hpp"
#include "ruled/reconstruct.hpp"
#include "ruled/similarity.hpp"
#include "ruled/surface_file.hpp"

using namespace ruled;

namespace {

RuledSurfaceSpec spec(const corpus::Entry& e) { return to_spec(e.definition); }

RuledSurfaceSpec alpha_pair() { return corpus::angle_tangent_developable("alpha", expr::parse("u"), 0.25, 2.25); }
RuledSurfaceSpec beta_pair() { return corpus::angle_tangent_developable("beta", expr::parse("u*u"), 0.5, 1.5); }

FrameField from_profile(ScalarFunction f, ProfileKind kind, ScalarFunction k1 = 1.0, double phi_max = 1.0,
                        int steps = 1000) {
  InvariantProfile p;
  p.f = std::move(f);
  p.kind = kind;
  p.k1_of_s = std::move(k1);
  p.phi_max = phi_max;
  p.initial = default_initial_frame(kind);
  return integrate_frenet(p, steps);
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

}  // namespace

TEST(Similarity, TotalCurvatureParameter) {
  const PhiTable h = total_curvature_param(frame_field(spec(corpus::helicoid()), 512));
  for (std::size_t i = 0; i < h.s.size(); ++i) EXPECT_NEAR(h.phi[i], h.s[i], 1e-10);

  const PhiTable b = total_curvature_param(frame_field(beta_pair(), 512));
  for (std::size_t i = 0; i < b.s.size(); ++i) {
    const double t = b.s[i] + 0.5;
    EXPECT_NEAR(b.phi[i], t * t - 0.25, 1e-8);
  }

  const RuledSurfaceSpec k3 = to_spec(corpus::analytic("k3", {"u", "0", "0"}, {"0", "cos(3*u)", "sin(3*u)"}, 0, 1));
  EXPECT_NEAR(total_curvature_param(frame_field(k3, 512)).phi.back(), 3.0, 1e-10);
}

TEST(Similarity, CurvatureRatioProfile) {
  for (double f : curvature_ratio_profile(frame_field(spec(corpus::helicoid()), 512)).f) EXPECT_NEAR(f, 0.0, 1e-8);
  for (double f : curvature_ratio_profile(from_profile(0.5, ProfileKind::TimelikeMinus)).f) EXPECT_NEAR(f, 0.5, 1e-5);
  const RatioProfile id = curvature_ratio_profile(from_profile(expr::parse("u"), ProfileKind::TimelikePlus));
  for (std::size_t i = 0; i < id.phi.size(); ++i) EXPECT_NEAR(id.f[i], id.phi[i], 1e-4);
}

TEST(Similarity, TangentDevelopablePairBothModes) {
  const FrameField a = frame_field(alpha_pair(), 512);
  const FrameField b = frame_field(beta_pair(), 512);
  for (SimilarityMode mode : {SimilarityMode::ByInvariants, SimilarityMode::ByDefinition}) {
    SimilarityOptions o;
    o.mode = mode;
    const SimilarityReport r = are_similar_ruled(a, b, o);
    EXPECT_TRUE(r.is_similar) << to_string(mode);
    EXPECT_LT(r.f_profile_deviation, 1e-8);
    ASSERT_FALSE(r.matched.empty());
    for (const auto& m : r.matched) EXPECT_NEAR(m.lambda, 2.0 * (m.s_beta + 0.5), 1e-3);
  }
}

TEST(Similarity, ConstructedFamily) {
  const FrameField a = from_profile(0.3, ProfileKind::TimelikeMinus, 1.0);
  const FrameField b = from_profile(0.3, ProfileKind::TimelikeMinus, 2.0);
  SimilarityOptions o;
  o.mode = SimilarityMode::ByDefinition;
  const SimilarityReport r = are_similar_ruled(a, b, o);
  EXPECT_TRUE(r.is_similar);
  for (const auto& m : r.matched) EXPECT_NEAR(m.lambda, 2.0, 1e-5);
  ASSERT_TRUE(r.ruling_deviation.has_value());
  EXPECT_LT(*r.ruling_deviation, 1e-5);
}

TEST(Similarity, CentralNormalsAgreeWhenRulingsAgree) {
  const std::vector<ScalarFunction> k1s = {1.0, 2.0, expr::parse("1+u"), expr::parse("2+sin(u)")};
  for (ProfileKind kind : {ProfileKind::TimelikeMinus, ProfileKind::TimelikePlus, ProfileKind::Spacelike}) {
    const auto family =
        generate_similar_family(expr::parse("0.3+0.2*u"), kind, k1s, default_initial_frame(kind), 0.0, 1.0, 1000);
    SimilarityOptions o;
    o.mode = SimilarityMode::ByDefinition;
    for (std::size_t i = 1; i < family.size(); ++i) {
      const SimilarityReport r = are_similar_ruled(family[0].frame, family[i].frame, o);
      ASSERT_TRUE(r.is_similar);
      ASSERT_TRUE(r.central_normal_deviation.has_value());
      EXPECT_LT(*r.central_normal_deviation, 1e-6);
    }
  }
}

TEST(Similarity, DifferentRatioRejected) {
  const SimilarityReport r = are_similar_ruled(from_profile(0.3, ProfileKind::TimelikeMinus),
                                               from_profile(0.6, ProfileKind::TimelikeMinus));
  EXPECT_FALSE(r.is_similar);
  EXPECT_NEAR(r.f_profile_deviation, 0.3, 1e-3);
}

TEST(Similarity, KindMismatch) {
  const FrameField t = from_profile(0.3, ProfileKind::TimelikeMinus);
  const FrameField s = from_profile(0.3, ProfileKind::Spacelike);
  const FrameField p = from_profile(0.3, ProfileKind::TimelikePlus);
  EXPECT_EQ(error_of([&] { are_similar_ruled(t, s); }), ErrorCode::KindMismatch);
  EXPECT_EQ(error_of([&] { are_similar_ruled(t, p); }), ErrorCode::KindMismatch);
}

TEST(Similarity, PhiOffsetSearch) {
  // Same profile, beta starts further along phi.
  const FrameField a = from_profile(expr::parse("0.3+0.2*u"), ProfileKind::TimelikeMinus, 1.0, 2.0);
  InvariantProfile p;
  p.f = expr::parse("0.3+0.2*(u+0.5)");
  p.phi_max = 1.0;
  const FrameField b = integrate_frenet(p, 1000);
  EXPECT_FALSE(are_similar_ruled(a, b).is_similar);
  SimilarityOptions o;
  o.search_phi_offset = true;
  const SimilarityReport r = are_similar_ruled(a, b, o);
  EXPECT_TRUE(r.is_similar);
  EXPECT_NEAR(r.phi_offset, 0.5, 1e-4);
}

TEST(Similarity, DevelopableTheorem) {
  const RuledSurfaceSpec a = alpha_pair();
  const RuledSurfaceSpec b = beta_pair();
  const DevelopableSimilarity pos = check_developable_similarity(a, b);
  EXPECT_TRUE(pos.surfaces_similar);
  EXPECT_TRUE(pos.striction_curves_similar);
  EXPECT_TRUE(pos.theorem_holds);

  const RuledSurfaceSpec c = corpus::angle_tangent_developable("c", expr::parse("u"), 0.0, 1.0);
  const RuledSurfaceSpec d = corpus::angle_tangent_developable("d", expr::parse("u+3"), 0.0, 1.0);
  const DevelopableSimilarity neg = check_developable_similarity(c, d);
  EXPECT_FALSE(neg.surfaces_similar);
  EXPECT_FALSE(neg.striction_curves_similar);
  EXPECT_TRUE(neg.theorem_holds);

  const DevelopableSimilarity self = check_developable_similarity(a, a);
  EXPECT_TRUE(self.surfaces_similar);
  EXPECT_TRUE(self.striction_curves_similar);
  EXPECT_TRUE(self.theorem_holds);

  EXPECT_EQ(error_of([&] { check_developable_similarity(a, spec(corpus::nminus_conoid())); }),
            ErrorCode::NotDevelopable);
}

TEST(Similarity, FamilyCheck) {
  const FamilyReport mixed =
      family_check({spec(corpus::helicoid()), spec(corpus::nminus_conoid()), spec(corpus::ntimes_conoid())});
  EXPECT_EQ(mixed.family, Family::None);
  const FamilyReport conoid = family_check({spec(corpus::helicoid()), spec(corpus::shifted_helicoid())});
  EXPECT_EQ(conoid.family, Family::Conoid);
  EXPECT_EQ(conoid.kind, "timelike");
  const RuledSurfaceSpec c2 = to_spec(corpus::analytic("c2", {"0", "2*cos(u)", "2*sin(u)"}, {"1", "0", "0"}, 0, 2));
  EXPECT_EQ(family_check({spec(corpus::cylinder()), c2}).family, Family::Cylindrical);
  EXPECT_EQ(family_check({spec(corpus::helicoid()), spec(corpus::helix_developable())}).family, Family::None);
}
