#pragma once

#include <optional>
#include <vector>

#include "kpgeo/geodesics.hpp"

namespace kpgeo {

/// Quotient metric g_ij = delta_ij / (1 - r^2) at a regular disc point.
Eigen::Matrix2d metric_components(const DiscPoint& p);

/// g(v, v) at p.
double metric_speed2(const DiscPoint& p, const DiscTangent& v);

/// The unique P in su(2) block-anti-diagonal with
/// d/dt|_0 project(e^{tP} q) = v. Throws SingularPointError on the rim
/// fiber (|z| = 1, where w = 0 and no lift exists).
AlgebraElement lift_tangent(const GroupElement& q, const DiscTangent& v);

struct Christoffel {
  double xxx, xxy, xyy;  // Gamma^x_{xx}, Gamma^x_{xy}, Gamma^x_{yy}
  double yxx, yxy, yyy;  // Gamma^y_{xx}, Gamma^y_{xy}, Gamma^y_{yy}
};

Christoffel christoffel(const DiscPoint& p);

/// -2 / (1 - r^2); always <= -2 on the disc.
double sectional_curvature(const DiscPoint& p);

/// Record of a geodesic reaching the boundary guard r^2 = 1 - eps.
struct BoundaryHit {
  double t_guard = 0.0;            // time on the guard surface
  QuotientGeodesicState state;     // state there
  double t_boundary = 0.0;         // radial extrapolation to r = 1
};

struct QuotientGeodesicResult {
  std::vector<double> times;
  std::vector<QuotientGeodesicState> states;
  std::optional<BoundaryHit> boundary;
};

/// Integrates x" + Gamma(x) x' x' = 0 with fixed-step RK4. Stops with a
/// boundary record when r^2 >= 1 - eps_boundary; that is an expected
/// outcome, not a failure. Speed g(v, v) is conserved along the output.
QuotientGeodesicResult quotient_geodesic(const QuotientGeodesicState& start,
                                         double t_max, double dt,
                                         double eps_boundary = 1e-6);

std::vector<DiscCurvePoint> to_disc_curve(const QuotientGeodesicResult& r);

/// Horizontal lift: integrates dG/dt = P(t) G with P(t) the tangent lift of
/// the supplied disc velocity at the current group point. On a uniform grid
/// the integrator consumes sample pairs so all RK4 stages land on supplied
/// records (full fourth order); output samples then sit on every other
/// input time.
CurveSamples lift_curve(const std::vector<DiscCurvePoint>& curve,
                        const GroupElement& q0);

/// Trapezoidal quadrature of sqrt(g(v, v)).
double quotient_length(const std::vector<DiscCurvePoint>& curve);

}  // namespace kpgeo
