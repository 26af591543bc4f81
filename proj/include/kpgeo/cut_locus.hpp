#pragma once

#include <numbers>
#include <optional>
#include <vector>

#include "kpgeo/quotient.hpp"

namespace kpgeo {

/// Closed form of the SU(2) K-P geodesic X(t) = e^{At} e^{(-A+P)t} with
/// A = a * i*diag(1,-1) and P = rho * [[0, e^{i phi}], [-e^{-i phi}, 0]]
/// (both unit Killing norm at scale 1/2 when a = rho = 1):
///   z(t) = e^{iat} (cos wt - i (a/w) sin wt),   w = sqrt(a^2 + rho^2),
///   w-entry(t) = e^{iat} e^{i phi} rho sin(wt) / w.
/// Equivalence with the mat_exp route is covered by tests; sweeps use this
/// form so grid marches stay cheap.
struct Su2Geodesic {
  double a = 0.0;
  double rho = 1.0;
  double phi = 0.0;

  static Su2Geodesic from_spec(const GeodesicSpec& spec);

  double omega() const { return std::hypot(a, rho); }
  Complex z(double t) const;
  Complex w(double t) const;
  GroupElement point(double t) const;
};

/// Operator-norm distance between SU(2) elements given by their first rows;
/// both singular values of the difference coincide, so this is closed form.
double su2_distance(Complex z1, Complex w1, Complex z2, Complex w2);

struct SingularHit {
  double time = 0.0;
  GroupElement point;
};

/// Smallest t > 0 with 1 - |z(t)|^2 < tol, located by a grid scan for dips
/// of 1 - r^2 (step spec.dt), golden-section refinement of each dip and
/// bisection onto the tol level. Returns nullopt when no hit occurs before
/// t_max. n = 2, geodesics from the identity.
std::optional<SingularHit> first_singular_hit(const GeodesicSpec& spec,
                                              double tol = 1e-13);

struct SweepParams {
  int phases = 64;
  int a_steps = 33;
  double a_max = 4.0;
  double dt = 1e-3;
  double t_max = 1.2 * std::numbers::pi;
  double eps_target = 0.05;
  /// Ties within this window of the best time count as minimizers;
  /// defaults to 2 * dt when NaN.
  double delta_tie = std::numeric_limits<double>::quiet_NaN();
  bool projective = false;  // match targets up to the center {+I, -I}
};

struct SweepMinimizer {
  int phase_index = 0;
  int a_index = 0;
  double phase = 0.0;
  double a = 0.0;
  double time = 0.0;
  double distance = 0.0;
};

struct SweepReport {
  bool reached = false;
  double best_time = 0.0;
  std::vector<SweepMinimizer> minimizers;
  double closest_approach = 0.0;   // over all cells and times
  double radial_lower_bound = 0.0; // arccos |z(target)| <= d(1, target)
  double tie_gap = 0.0;            // next passage time beyond the tie window

  int multiplicity() const { return static_cast<int>(minimizers.size()); }
};

/// Grid sweep over unit-norm P directions (phase angle) and K coefficients.
/// A cell's time is the first local minimum of the target distance that
/// dips below eps_target, refined by golden section.
SweepReport sweep_distance(const GroupElement& target,
                           const SweepParams& params = {});

struct PairSeparation {
  int i = 0;
  int j = 0;
  double min_distance = 0.0;
  double t_i = 0.0;  // times of the closest sample pair
  double t_j = 0.0;
};

struct NonIntersectionReport {
  double tol = 0.0;
  double t_exclusion = 0.0;
  std::vector<PairSeparation> pairs;
  std::vector<PairSeparation> violations;  // pairs approaching within tol
};

/// Pairwise closest-point separation of projected geodesics on the regular
/// part, excluding the shared start window t < t_exclusion and truncating
/// each curve before its boundary hit.
NonIntersectionReport regular_non_intersection_check(
    const std::vector<GeodesicSpec>& specs, double t_max, double dt,
    double tol, double t_exclusion = 0.1);

struct ShootParams {
  double dt = 2e-3;
  double t_max = 3.4;
  int scan = 48;          // coarse launch angles
  int refine_iters = 48;  // golden-section refinement on the angle
  double eps_boundary = 1e-6;
  double miss_tol = 1e-7;
};

struct ShootResult {
  bool converged = false;
  double distance = 0.0;  // geodesic arc time at closest approach
  double miss = 0.0;      // Euclidean closest approach to the target
  double angle = 0.0;
  double chord_lower_bound = 0.0;  // Euclidean chord; g >= I on the disc
};

/// Riemannian distance between disc points by geodesic shooting: scan the
/// launch angle, refine by golden section, report the arc time of the
/// closest approach (unit-speed launch).
ShootResult quotient_distance(const DiscPoint& from, const DiscPoint& to,
                              const ShootParams& params = {});

struct ConvexityPoint {
  double t = 0.0;
  double f = 0.0;  // d_Q between the projected curves at t
  bool converged = false;
};

struct ConvexityReport {
  std::vector<ConvexityPoint> points;
  double min_second_difference = 0.0;
  int failures = 0;
};

/// f(t) = d_Q(pi(gamma1(t)), pi(gamma2(t))) by shooting on a time grid,
/// with the minimum second difference as the convexity certificate.
ConvexityReport convexity_check(const GeodesicSpec& spec1,
                                const GeodesicSpec& spec2,
                                const std::vector<double>& t_grid,
                                const ShootParams& params = {});

struct CutLocusTarget {
  DiscPoint z;
  bool singular = false;
  bool pass = false;
  SweepReport sweep;
};

struct CutLocusParams {
  int r_steps = 3;
  int theta_steps = 3;
  double r_max = 0.9;
  /// Boundary targets diag(e^{i theta}, e^{-i theta}), theta != 0.
  std::vector<double> singular_thetas = {std::numbers::pi,
                                         std::numbers::pi / 3};
  SweepParams sweep;
};

struct CutLocusReport {
  std::vector<CutLocusTarget> targets;
  int failures = 0;
};

/// Regular targets must yield a unique sweep minimizer, boundary targets a
/// multiplicity of at least two; aggregated into a pass/fail table.
CutLocusReport cut_locus_report(const CutLocusParams& params = {});

}  // namespace kpgeo
