#pragma once

#include <vector>

#include "kpgeo/chart.hpp"
#include "kpgeo/lie.hpp"

namespace kpgeo {

/// A K-P geodesic X(t) = e^{At} e^{(-A+P)t} with A in K and P in P.
struct GeodesicSpec {
  KPDecomposition dec;
  AlgebraElement A;
  AlgebraElement P;
  double t_max = 0.0;
  double dt = 0.0;
  bool normalized = false;

  /// Validates subspace membership (split residual below 1e-12). With
  /// normalize set, P is rescaled to unit Killing norm.
  GeodesicSpec(KPDecomposition dec_, AlgebraElement a, AlgebraElement p,
               double t_max_, double dt_, bool normalize = false);
};

/// Uniformly sampled curve: times k*dt plus the exact endpoint, one group
/// point per time, and disc projections when n = 2.
struct CurveSamples {
  std::vector<double> times;
  std::vector<GroupElement> points;
  std::vector<DiscPoint> disc;

  int n() const { return points.empty() ? 0 : points.front().dim(); }
};

/// X(t) = e^{At} e^{(-A+P)t}; throws DomainError outside [0, t_max].
GroupElement geodesic_point(const GeodesicSpec& spec, double t);

/// Optimal control e^{At} P e^{-At}; stays in P with constant norm.
AlgebraElement geodesic_control(const GeodesicSpec& spec, double t);

CurveSamples sample_geodesic(const GeodesicSpec& spec);

/// Max over interior samples of the K-part of the finite-difference
/// velocity in right-invariant form, || (dX/dt X^{-1})_K ||.
/// O(dt^2) for exact K-P geodesics. Needs at least 3 samples.
double horizontality_residual(const CurveSamples& samples,
                              const KPDecomposition& dec);

struct LengthResult {
  double length = 0.0;
  double horizontality = 0.0;
  bool horizontal = true;  // horizontality within tolerance
};

/// Trapezoidal quadrature of sqrt(<v|v>) with finite-difference velocities
/// v = dX/dt X^{-1}. Non-horizontal input beyond tolerance only flags the
/// result, it does not throw.
LengthResult curve_length(const CurveSamples& samples,
                          const KPDecomposition& dec,
                          double horizontality_tol = 1e-3);

/// Disc projection of the geodesic with analytic velocities,
/// d/dt X_11 = (control * X)_11; n = 2 only.
std::vector<DiscCurvePoint> project_geodesic_with_velocity(
    const GeodesicSpec& spec, double t0, double t1, double dt);

}  // namespace kpgeo
