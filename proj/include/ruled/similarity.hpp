#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ruled/curves.hpp"
#include "ruled/surfaces.hpp"

namespace ruled {

enum class SimilarityMode { ByDefinition, ByInvariants };

std::string_view to_string(SimilarityMode m);

/// Running total curvature phi(s) = integral of k1 ds, anchored at phi = 0.
struct PhiTable {
  std::vector<double> s;
  std::vector<double> phi;
};

/// Throws DegenerateK1 when k1 vanishes on a subinterval.
PhiTable total_curvature_param(const FrameField& F);

/// f = k2 / k1 on a uniform phi grid.
struct RatioProfile {
  std::vector<double> phi;
  std::vector<double> f;
};

/// n = 0 keeps the sample count of the frame.
RatioProfile curvature_ratio_profile(const FrameField& F, int n = 0);

struct SimilarityOptions {
  double tol = 1e-4;  ///< on f-profile deviation, ruling and central normal deviation
  SimilarityMode mode = SimilarityMode::ByInvariants;
  /// Search a constant shift phi_alpha = phi_beta + offset that best aligns
  /// the profiles (coarse scan, then golden section).
  bool search_phi_offset = false;
};

/// One matched pair of samples, indexed by the samples of the second frame.
struct MatchedSample {
  double s_beta = 0.0;
  double s_alpha = 0.0;
  double phi = 0.0;  ///< phi_beta
  double f_alpha = 0.0;
  double f_beta = 0.0;
  double lambda = 0.0;  ///< ds_alpha / ds_beta = k1_beta / k1_alpha
};

struct SimilarityReport {
  bool is_similar = false;
  SimilarityMode mode = SimilarityMode::ByInvariants;
  std::vector<MatchedSample> matched;
  /// Max |k1_beta/k1_alpha - k2_beta/k2_alpha| where both k2 are bounded away from 0.
  std::optional<double> lambda_consistency;
  double f_profile_deviation = 0.0;
  double phi_offset = 0.0;
  double phi_overlap = 0.0;
  std::optional<double> ruling_deviation;
  std::optional<double> central_normal_deviation;
  /// |a_alpha - eps_alpha eps_beta a_beta| (reported, not part of the verdict).
  std::optional<double> asymptotic_normal_deviation;
  int asymptotic_normal_sign = 1;
  std::vector<std::string> notes;
};

/// Throws KindMismatch for a timelike/spacelike pair or an NMinus/NPlus pair,
/// DegenerateK1 when k1 vanishes.
SimilarityReport are_similar_ruled(const FrameField& A, const FrameField& B, const SimilarityOptions& opts = {});

struct DevelopableSimilarityOptions {
  double similarity_tol = 1e-4;
  double curve_tol = 1e-6;
  double developable_tol = 1e-6;
  int samples = 512;
  SurfaceOptions surface;
};

struct DevelopableSimilarity {
  bool surfaces_similar = false;
  bool striction_curves_similar = false;
  bool theorem_holds = false;
  /// Striction tangents share the causal character of the rulings.
  bool character_hypothesis = false;
  SimilarityReport surface_report;
  SimilarCurveReport curve_report;
  std::vector<std::string> notes;
};

/// Compares the surfaces (definition mode: rulings must coincide under the
/// transformation) and their striction curves. Throws NotDevelopable.
DevelopableSimilarity check_developable_similarity(const RuledSurfaceSpec& A, const RuledSurfaceSpec& B,
                                                   const DevelopableSimilarityOptions& opts = {});

enum class Family { Cylindrical, Conoid, None };

std::string_view to_string(Family f);

struct FamilyReport {
  Family family = Family::None;
  std::string kind;  ///< "timelike", "spacelike" or "mixed"
  std::vector<std::string> notes;
};

FamilyReport family_check(const std::vector<RuledSurfaceSpec>& surfaces, double k2_tol = 1e-6,
                          const SurfaceOptions& opts = {});

}  // namespace ruled
