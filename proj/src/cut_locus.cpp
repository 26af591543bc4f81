#include "kpgeo/cut_locus.hpp"

#include <algorithm>
#include <cmath>

namespace kpgeo {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

}  // namespace

Su2Geodesic Su2Geodesic::from_spec(const GeodesicSpec& spec) {
  if (spec.dec.n != 2) throw DimensionError("Su2Geodesic: requires n = 2");
  Su2Geodesic g;
  g.a = spec.A.mat()(0, 0).imag();
  const Complex beta = spec.P.mat()(0, 1);
  g.rho = std::abs(beta);
  g.phi = (g.rho > 0) ? std::arg(beta) : 0.0;
  return g;
}

Complex Su2Geodesic::z(double t) const {
  const double om = omega();
  const Complex drift = std::polar(1.0, a * t);
  return drift * Complex(std::cos(om * t), -a * t * sinc(om * t));
}

Complex Su2Geodesic::w(double t) const {
  const double om = omega();
  const Complex drift = std::polar(1.0, a * t);
  return drift * std::polar(1.0, phi) * (rho * t * sinc(om * t));
}

GroupElement Su2Geodesic::point(double t) const {
  const Complex zt = z(t), wt = w(t);
  Eigen::Matrix2cd m;
  m << zt, wt, -std::conj(wt), std::conj(zt);
  return GroupElement(m);
}

double su2_distance(Complex z1, Complex w1, Complex z2, Complex w2) {
  // X - U inherits the [[dz, dw], [-conj dw, conj dz]] shape, so both
  // singular values equal sqrt(|dz|^2 + |dw|^2).
  return std::sqrt(std::norm(z1 - z2) + std::norm(w1 - w2));
}

std::optional<SingularHit> first_singular_hit(const GeodesicSpec& spec,
                                              double tol) {
  const Su2Geodesic geo = Su2Geodesic::from_spec(spec);
  const auto h = [&](double t) { return 1.0 - std::norm(geo.z(t)); };

  const double dt = spec.dt;
  const double escape = std::max(100.0 * tol, 1e-10);

  // Skip the shared start at the rim (h(0) = 0) until the curve escapes.
  long k = 1;
  const long k_max = static_cast<long>(std::floor(spec.t_max / dt));
  while (k <= k_max && h(k * dt) < escape) ++k;
  if (k > k_max) return std::nullopt;

  auto refine = [&](double lo, double hi) -> SingularHit {
    const double cross =
        bisect_root([&](double t) { return h(t) - tol; }, lo, hi);
    return {cross, geo.point(cross)};
  };

  double prev2 = h(k * dt), prev1 = prev2;
  for (long i = k + 1; i <= k_max; ++i) {
    const double cur = h(i * dt);
    if (cur < tol) return refine((i - 1) * dt, i * dt);
    if (i > k + 1 && prev1 <= prev2 && prev1 <= cur) {
      // Sampled dip; tangential touches need sub-grid refinement.
      const double tm = golden_min(h, (i - 2) * dt, i * dt);
      if (h(tm) < tol) return refine((i - 2) * dt, tm);
    }
    prev2 = prev1;
    prev1 = cur;
  }
  return std::nullopt;
}

SweepReport sweep_distance(const GroupElement& target,
                           const SweepParams& params) {
  if (target.dim() != 2) throw DimensionError("sweep_distance: requires n = 2");

  const Complex zt = target.mat()(0, 0);
  const Complex wt = target.mat()(0, 1);
  const bool projective = params.projective;
  const double eps = params.eps_target;
  const double delta_tie =
      std::isnan(params.delta_tie) ? 2.0 * params.dt : params.delta_tie;

  SweepReport report;
  report.radial_lower_bound = std::acos(std::clamp(std::abs(zt), 0.0, 1.0));
  report.closest_approach = std::numeric_limits<double>::infinity();

  const auto dist_to_target = [&](Complex z, Complex w) {
    const double d = su2_distance(z, w, zt, wt);
    if (!projective) return d;
    return std::min(d, su2_distance(z, w, -zt, -wt));
  };

  // The identity is shared by every cell; a target already within reach of
  // it is reported once with time 0.
  if (dist_to_target(1.0, 0.0) < eps) {
    report.reached = true;
    report.best_time = 0.0;
    report.minimizers.push_back(
        {0, 0, 0.0, 0.0, 0.0, dist_to_target(1.0, 0.0)});
    report.closest_approach = dist_to_target(1.0, 0.0);
    report.tie_gap = std::numeric_limits<double>::infinity();
    return report;
  }

  struct CellHit {
    int pi, ai;
    double phase, a, time, distance;
  };
  std::vector<CellHit> hits;

  const long steps = static_cast<long>(std::floor(params.t_max / params.dt));
  // Sampled dip bottoms sit within slope*dt of the true minimum; anything
  // above this threshold cannot hide a sub-eps dip.
  const double dip_guard =
      eps + 2.0 * params.dt * (1.0 + params.a_max) + 1e-3;

  for (int ai = 0; ai < params.a_steps; ++ai) {
    const double a =
        (params.a_steps == 1)
            ? 0.0
            : -params.a_max + (2.0 * params.a_max * ai) / (params.a_steps - 1);
    for (int pi = 0; pi < params.phases; ++pi) {
      const double phase = 2.0 * kPi * pi / params.phases;
      const Su2Geodesic geo{a, 1.0, phase};
      const auto d = [&](double t) { return dist_to_target(geo.z(t), geo.w(t)); };

      double prev2 = d(0.0);
      double prev1 = d(params.dt);
      report.closest_approach = std::min({report.closest_approach, prev2, prev1});
      for (long i = 2; i <= steps; ++i) {
        const double cur = d(i * params.dt);
        report.closest_approach = std::min(report.closest_approach, cur);
        const bool sampled_min = prev1 <= prev2 && prev1 <= cur;
        const bool tail_dip = (i == steps) && cur < prev1 && cur < eps;
        if ((sampled_min && prev1 < dip_guard) || tail_dip) {
          const double lo = (i - 2) * params.dt;
          const double hi = i * params.dt;
          const double tm = golden_min(d, lo, hi);
          const double dm = d(tm);
          report.closest_approach = std::min(report.closest_approach, dm);
          if (dm < eps) {
            hits.push_back({pi, ai, phase, a, tm, dm});
            break;  // first passage for this cell
          }
        }
        prev2 = prev1;
        prev1 = cur;
      }
    }
  }

  if (hits.empty()) {
    report.reached = false;
    report.best_time = std::numeric_limits<double>::infinity();
    report.tie_gap = std::numeric_limits<double>::infinity();
    return report;
  }

  report.reached = true;
  report.best_time = std::numeric_limits<double>::infinity();
  for (const CellHit& hit : hits)
    report.best_time = std::min(report.best_time, hit.time);

  report.tie_gap = std::numeric_limits<double>::infinity();
  for (const CellHit& hit : hits) {
    if (hit.time <= report.best_time + delta_tie)
      report.minimizers.push_back(
          {hit.pi, hit.ai, hit.phase, hit.a, hit.time, hit.distance});
    else
      report.tie_gap = std::min(report.tie_gap, hit.time - report.best_time);
  }
  std::sort(report.minimizers.begin(), report.minimizers.end(),
            [](const SweepMinimizer& a, const SweepMinimizer& b) {
              return a.time < b.time;
            });
  return report;
}

NonIntersectionReport regular_non_intersection_check(
    const std::vector<GeodesicSpec>& specs, double t_max, double dt,
    double tol, double t_exclusion) {
  NonIntersectionReport report;
  report.tol = tol;
  report.t_exclusion = t_exclusion;

  // Sample each projected curve on the regular part, dropping the shared
  // start window and stopping short of the rim.
  struct Sampled {
    std::vector<double> t;
    std::vector<DiscPoint> p;
  };
  std::vector<Sampled> curves;
  for (const GeodesicSpec& spec : specs) {
    const Su2Geodesic geo = Su2Geodesic::from_spec(spec);
    Sampled s;
    for (double t = t_exclusion; t <= t_max; t += dt) {
      const Complex z = geo.z(t);
      if (1.0 - std::norm(z) < 1e-3) break;
      s.t.push_back(t);
      s.p.push_back({z.real(), z.imag()});
    }
    curves.push_back(std::move(s));
  }

  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      PairSeparation sep;
      sep.i = static_cast<int>(i);
      sep.j = static_cast<int>(j);
      sep.min_distance = std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < curves[i].p.size(); ++a) {
        for (std::size_t b = 0; b < curves[j].p.size(); ++b) {
          const double dx = curves[i].p[a].x - curves[j].p[b].x;
          const double dy = curves[i].p[a].y - curves[j].p[b].y;
          const double d = std::hypot(dx, dy);
          if (d < sep.min_distance) {
            sep.min_distance = d;
            sep.t_i = curves[i].t[a];
            sep.t_j = curves[j].t[b];
          }
        }
      }
      report.pairs.push_back(sep);
      if (sep.min_distance < tol) report.violations.push_back(sep);
    }
  }
  return report;
}

namespace {

// Closest approach of the unit-speed geodesic launched from `from` at angle
// psi to the point `to`: (squared Euclidean miss, arc time of the minimum).
std::pair<double, double> shoot_once(const DiscPoint& from,
                                     const DiscPoint& to, double psi,
                                     const ShootParams& prm) {
  const double vnorm = std::sqrt(1.0 - from.r2());  // unit metric speed
  QuotientGeodesicState start{from,
                              {vnorm * std::cos(psi), vnorm * std::sin(psi)}};
  const QuotientGeodesicResult res =
      quotient_geodesic(start, prm.t_max, prm.dt, prm.eps_boundary);

  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < res.states.size(); ++i) {
    const double dx = res.states[i].point.x - to.x;
    const double dy = res.states[i].point.y - to.y;
    const double m2 = dx * dx + dy * dy;
    if (m2 < best) {
      best = m2;
      best_i = i;
    }
  }
  double t_best = res.times[best_i];
  // Sub-step refinement: parabola through the three samples around the
  // minimum (uniform interior grid).
  if (best_i > 0 && best_i + 1 < res.states.size()) {
    auto m2_at = [&](std::size_t i) {
      const double dx = res.states[i].point.x - to.x;
      const double dy = res.states[i].point.y - to.y;
      return dx * dx + dy * dy;
    };
    const double f0 = m2_at(best_i - 1), f1 = best, f2 = m2_at(best_i + 1);
    const double denom = f0 - 2.0 * f1 + f2;
    if (denom > 1e-300) {
      const double h = res.times[best_i + 1] - res.times[best_i];
      const double shift = 0.5 * (f0 - f2) / denom;
      t_best += shift * h;
      best = f1 - 0.125 * (f0 - f2) * (f0 - f2) / denom;
    }
  }
  return {std::max(0.0, best), t_best};
}

}  // namespace

ShootResult quotient_distance(const DiscPoint& from, const DiscPoint& to,
                              const ShootParams& params) {
  ShootResult res;
  res.chord_lower_bound = std::hypot(to.x - from.x, to.y - from.y);
  if (res.chord_lower_bound < 1e-12) {
    res.converged = true;
    return res;
  }

  const auto miss2 = [&](double psi) {
    return shoot_once(from, to, psi, params).first;
  };

  double best_psi = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < params.scan; ++i) {
    const double psi = 2.0 * kPi * i / params.scan;
    const double m = miss2(psi);
    if (m < best) {
      best = m;
      best_psi = psi;
    }
  }
  const double half = 2.0 * kPi / params.scan;
  const double psi =
      golden_min(miss2, best_psi - half, best_psi + half, params.refine_iters);

  const auto [m2, t] = shoot_once(from, to, psi, params);
  res.angle = psi;
  res.miss = std::sqrt(m2);
  res.distance = t;
  res.converged = res.miss < params.miss_tol;
  return res;
}

ConvexityReport convexity_check(const GeodesicSpec& spec1,
                                const GeodesicSpec& spec2,
                                const std::vector<double>& t_grid,
                                const ShootParams& params) {
  const Su2Geodesic g1 = Su2Geodesic::from_spec(spec1);
  const Su2Geodesic g2 = Su2Geodesic::from_spec(spec2);

  ConvexityReport report;
  for (double t : t_grid) {
    const Complex z1 = g1.z(t), z2 = g2.z(t);
    if (1.0 - std::norm(z1) < params.eps_boundary ||
        1.0 - std::norm(z2) < params.eps_boundary)
      throw DomainError("convexity_check: grid point past the boundary");
    const DiscPoint p1{z1.real(), z1.imag()};
    const DiscPoint p2{z2.real(), z2.imag()};
    const ShootResult d = quotient_distance(p1, p2, params);
    report.points.push_back(
        {t, d.converged ? d.distance : d.chord_lower_bound, d.converged});
    if (!d.converged) ++report.failures;
  }

  report.min_second_difference = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < report.points.size(); ++i) {
    const double d2 = report.points[i + 1].f - 2.0 * report.points[i].f +
                      report.points[i - 1].f;
    report.min_second_difference = std::min(report.min_second_difference, d2);
  }
  return report;
}

CutLocusReport cut_locus_report(const CutLocusParams& params) {
  CutLocusReport report;

  // Regular targets: representatives with w real positive on a polar grid.
  for (int ri = 1; ri <= params.r_steps; ++ri) {
    const double r = params.r_max * ri / params.r_steps;
    for (int ti = 0; ti < params.theta_steps; ++ti) {
      const double theta = 2.0 * kPi * ti / params.theta_steps;
      const Complex z = std::polar(r, theta);
      const double w = std::sqrt(std::max(0.0, 1.0 - r * r));
      Eigen::Matrix2cd m;
      m << z, w, -w, std::conj(z);
      CutLocusTarget target;
      target.z = {z.real(), z.imag()};
      target.singular = false;
      target.sweep = sweep_distance(GroupElement(m), params.sweep);
      target.pass = target.sweep.reached && target.sweep.multiplicity() == 1;
      if (!target.pass) ++report.failures;
      report.targets.push_back(std::move(target));
    }
  }

  // Boundary targets diag(e^{i theta}, e^{-i theta}), theta != 0: cut points,
  // expected to show multiple minimizers at equal time.
  for (double theta : params.singular_thetas) {
    const Complex z = std::polar(1.0, theta);
    Eigen::Matrix2cd m;
    m << z, 0.0, 0.0, std::conj(z);
    CutLocusTarget target;
    target.z = {z.real(), z.imag()};
    target.singular = true;
    target.sweep = sweep_distance(GroupElement(m), params.sweep);
    target.pass = target.sweep.reached && target.sweep.multiplicity() >= 2;
    if (!target.pass) ++report.failures;
    report.targets.push_back(std::move(target));
  }
  return report;
}

}  // namespace kpgeo
