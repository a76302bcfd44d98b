#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ruled/expr.hpp"
#include "ruled/jet.hpp"
#include "ruled/lorentz.hpp"

namespace ruled {

/// Position and the first three derivatives of a curve at one parameter.
struct CurveJet {
  std::array<MVec3, 4> d;
};

/// A parametric curve on [u_min, u_max] exposing derivatives to order 3.
class ParamCurve {
 public:
  ParamCurve(double u_min, double u_max, int sample_count);
  virtual ~ParamCurve() = default;

  virtual CurveJet jet(double u) const = 0;

  MVec3 position(double u) const { return jet(u).d[0]; }
  MVec3 derivative(double u, int order) const { return jet(u).d[static_cast<std::size_t>(order)]; }

  double u_min() const { return u_min_; }
  double u_max() const { return u_max_; }
  int sample_count() const { return sample_count_; }

  /// Uniform grid of sample_count parameters over the interval.
  std::vector<double> sample_grid() const;

 private:
  double u_min_;
  double u_max_;
  int sample_count_;
};

using CurvePtr = std::shared_ptr<const ParamCurve>;

/// Jet of order `order` (<= 3) built from a curve jet.
JetVec to_jet(const CurveJet& j, int order = 3);

/// Curve given by three expressions in u with structural derivatives.
class ExprCurve final : public ParamCurve {
 public:
  ExprCurve(std::array<expr::Expr, 3> components, double u_min, double u_max, int sample_count = 512);
  CurveJet jet(double u) const override;

  const std::array<expr::Expr, 3>& components() const { return derivs_[0]; }

 private:
  std::array<std::array<expr::Expr, 3>, 4> derivs_;
};

/// Curve known only at strictly increasing nodes. Values and derivatives come
/// from the Lagrange polynomial through the six nearest nodes.
class SampledCurve final : public ParamCurve {
 public:
  SampledCurve(std::vector<double> nodes, std::vector<MVec3> points);
  CurveJet jet(double u) const override;

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<MVec3>& points() const { return points_; }

 private:
  std::vector<double> nodes_;
  std::vector<MVec3> points_;
};

/// Curve backed by a callable returning the full jet.
class FunctionCurve final : public ParamCurve {
 public:
  FunctionCurve(std::function<CurveJet(double)> fn, double u_min, double u_max, int sample_count = 512);
  CurveJet jet(double u) const override { return fn_(u); }

 private:
  std::function<CurveJet(double)> fn_;
};

/// Checks first derivatives against central differences of the position
/// (relative tolerance rel_tol at `points` interior parameters).
bool derivatives_consistent(const ParamCurve& c, double rel_tol = 1e-4, int points = 10);

/// Monotone map between a parameter u and the integral s(u) of a positive
/// speed function. Panels are integrated with five-point Gauss-Legendre and
/// the inverse comes from a cubic Hermite model of s(u) refined by one
/// Newton step against the quadrature.
class ArcLengthMap {
 public:
  ArcLengthMap(std::function<double(double)> speed, double u_min, double u_max, int panels);

  double total() const { return cumulative_.back(); }
  double s_of_u(double u) const;
  double u_of_s(double s) const;

 private:
  std::function<double(double)> speed_;
  std::vector<double> nodes_;
  std::vector<double> cumulative_;
  std::vector<double> speeds_;
};

struct ArcLengthTable {
  std::vector<double> u;
  std::vector<double> s;
  double total = 0.0;
};

/// Arc length sqrt(|<c',c'>|) integrated over the sample grid. The running
/// table uses cubic panels, the total composite Simpson.
/// Throws NullTangent if the velocity is null or changes causal character.
ArcLengthTable arc_length_table(const ParamCurve& c, double tol_null = kDefaultTolNull);

/// c'(u) / sqrt(|<c',c'>|); throws NullTangent for a null or zero velocity.
MVec3 unit_tangent(const ParamCurve& c, double u, double tol_null = kDefaultTolNull);

struct SimilarCurveSample {
  double u_beta = 0.0;
  double s_beta = 0.0;
  double u_alpha = 0.0;
  double s_alpha = 0.0;
  double lambda = 0.0;  ///< ds_alpha / ds_beta
  double tangent_deviation = 0.0;
};

struct SimilarCurveReport {
  bool is_similar = false;
  bool monotone = false;
  double max_tangent_deviation = 0.0;
  std::vector<SimilarCurveSample> samples;
  std::vector<std::string> notes;
};

struct SimilarCurveOptions {
  double tol = 1e-6;  ///< Euclidean deviation between matched unit tangents
  int samples = 1025;
  double tol_null = kDefaultTolNull;
};

/// Decides whether a monotone arc-length transformation s_alpha(s_beta)
/// carries the unit tangent of cb onto that of ca. Both tangent images are
/// clocked by their normalised (Euclidean) indicatrix arc length.
/// Throws DegenerateIndicatrix when a tangent is constant on a subinterval.
SimilarCurveReport are_similar_curves(const ParamCurve& ca, const ParamCurve& cb, const SimilarCurveOptions& opts = {});

}  // namespace ruled
