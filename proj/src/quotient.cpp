#include "kpgeo/quotient.hpp"

#include <cmath>
#include <numbers>

namespace kpgeo {

namespace {

void check_regular(const DiscPoint& p, const char* who) {
  if (p.r2() >= 1.0) throw SingularPointError(std::string(who) + ": point on or outside the singular rim r = 1");
}

// Raw lift at group entries (z, w); no unitarity checks so RK4 stage
// matrices (unitary only to O(h)) can be fed through it.
Eigen::Matrix2cd lift_raw(Complex z, Complex w, const DiscTangent& v) {
  const double u = 1.0 - std::norm(z);
  // On the regular set unitarity forces |w|^2 = 1 - |z|^2 > 0.
  if (u <= 1e-14)
    throw SingularPointError("lift_tangent: singular fiber, |z| = 1");
  const Complex beta = -(Complex(v.vx, v.vy) * w) / u;
  Eigen::Matrix2cd p;
  p << 0.0, beta, -std::conj(beta), 0.0;
  return p;
}

}  // namespace

DiscPoint project(const GroupElement& x) {
  if (x.dim() != 2) throw DimensionError("project: requires n = 2");
  const Complex z = x.mat()(0, 0);
  return {z.real(), z.imag()};
}

Eigen::Matrix2d metric_components(const DiscPoint& p) {
  check_regular(p, "metric_components");
  const double g = 1.0 / (1.0 - p.r2());
  Eigen::Matrix2d m;
  m << g, 0.0, 0.0, g;
  return m;
}

double metric_speed2(const DiscPoint& p, const DiscTangent& v) {
  check_regular(p, "metric_speed2");
  return (v.vx * v.vx + v.vy * v.vy) / (1.0 - p.r2());
}

AlgebraElement lift_tangent(const GroupElement& q, const DiscTangent& v) {
  if (q.dim() != 2) throw DimensionError("lift_tangent: requires n = 2");
  return AlgebraElement(lift_raw(q.mat()(0, 0), q.mat()(0, 1), v));
}

Christoffel christoffel(const DiscPoint& p) {
  check_regular(p, "christoffel");
  const double u = 1.0 / (1.0 - p.r2());
  return {p.x * u, p.y * u, -p.x * u, -p.y * u, p.x * u, p.y * u};
}

double sectional_curvature(const DiscPoint& p) {
  check_regular(p, "sectional_curvature");
  return -2.0 / (1.0 - p.r2());
}

QuotientGeodesicResult quotient_geodesic(const QuotientGeodesicState& start,
                                         double t_max, double dt,
                                         double eps_boundary) {
  check_regular(start.point, "quotient_geodesic");

  // State (x, y, vx, vy). The RHS clamps 1 - r^2 instead of throwing so RK4
  // stage points slightly past the rim stay evaluable; the validity check
  // then rejects the whole step.
  const OdeRhs rhs = [](double, const RealVector& s) {
    const double x = s(0), y = s(1), vx = s(2), vy = s(3);
    double u = 1.0 - (x * x + y * y);
    if (std::abs(u) < 1e-300) u = (u < 0 ? -1e-300 : 1e-300);
    const double gx = x / u, gy = y / u;
    RealVector d(4);
    d(0) = vx;
    d(1) = vy;
    d(2) = -(gx * vx * vx + 2.0 * gy * vx * vy - gx * vy * vy);
    d(3) = -(-gy * vx * vx + 2.0 * gx * vx * vy + gy * vy * vy);
    return d;
  };
  const OdeValidity valid = [eps_boundary](const RealVector& s) {
    return s(0) * s(0) + s(1) * s(1) < 1.0 - eps_boundary;
  };

  RealVector y0(4);
  y0 << start.point.x, start.point.y, start.velocity.vx, start.velocity.vy;
  const OdeResult ode = integrate_ode(rhs, y0, 0.0, t_max, dt, valid);

  QuotientGeodesicResult res;
  res.times = ode.times;
  res.states.reserve(ode.states.size());
  for (const RealVector& s : ode.states)
    res.states.push_back({{s(0), s(1)}, {s(2), s(3)}});

  if (ode.domain_exit) {
    BoundaryHit hit;
    hit.t_guard = ode.exit_time;
    hit.state = res.states.back();
    // Boundary-bound geodesics approach the rim radially; the remaining time
    // follows the radial closed form r(s) = sin(s + phase) at conserved speed.
    const double r = std::sqrt(std::min(1.0, hit.state.point.r2()));
    const double speed =
        std::sqrt(metric_speed2(hit.state.point, hit.state.velocity));
    hit.t_boundary =
        hit.t_guard + (std::numbers::pi / 2 - std::asin(r)) / speed;
    res.boundary = hit;
  }
  return res;
}

std::vector<DiscCurvePoint> to_disc_curve(const QuotientGeodesicResult& r) {
  std::vector<DiscCurvePoint> out;
  out.reserve(r.times.size());
  for (std::size_t i = 0; i < r.times.size(); ++i)
    out.push_back({r.times[i], r.states[i].point, r.states[i].velocity});
  return out;
}

namespace {

Eigen::Matrix2cd lift_rhs(const Eigen::Matrix2cd& g, const DiscTangent& v) {
  return lift_raw(g(0, 0), g(0, 1), v) * g;
}

// One RK4 step of dG/dt = P(G, v(t)) G with stage velocities v0, vm, v1 at
// t, t + h/2, t + h.
Eigen::Matrix2cd lift_step(const Eigen::Matrix2cd& g, double h,
                           const DiscTangent& v0, const DiscTangent& vm,
                           const DiscTangent& v1) {
  const Eigen::Matrix2cd k1 = lift_rhs(g, v0);
  const Eigen::Matrix2cd k2 = lift_rhs(g + (0.5 * h) * k1, vm);
  const Eigen::Matrix2cd k3 = lift_rhs(g + (0.5 * h) * k2, vm);
  const Eigen::Matrix2cd k4 = lift_rhs(g + h * k3, v1);
  return g + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

DiscTangent hermite_mid_velocity(const DiscCurvePoint& a,
                                 const DiscCurvePoint& b) {
  const double h = b.t - a.t;
  return {1.5 * (b.p.x - a.p.x) / h - 0.25 * (a.v.vx + b.v.vx),
          1.5 * (b.p.y - a.p.y) / h - 0.25 * (a.v.vy + b.v.vy)};
}

}  // namespace

CurveSamples lift_curve(const std::vector<DiscCurvePoint>& curve,
                        const GroupElement& q0) {
  if (curve.empty()) throw DomainError("lift_curve: empty input curve");
  if (q0.dim() != 2) throw DimensionError("lift_curve: requires n = 2");
  {
    const DiscPoint p0 = project(q0);
    const double dx = p0.x - curve.front().p.x;
    const double dy = p0.y - curve.front().p.y;
    if (std::hypot(dx, dy) > 1e-6)
      throw ValidationError(
          "lift_curve: project(q0) does not match the first disc point");
  }

  CurveSamples out;
  Eigen::Matrix2cd g = q0.mat();
  out.times.push_back(curve.front().t);
  out.points.push_back(q0);

  std::size_t i = 0;
  const std::size_t m = curve.size();
  while (i + 1 < m) {
    if (i + 2 < m) {
      const double h1 = curve[i + 1].t - curve[i].t;
      const double h2 = curve[i + 2].t - curve[i + 1].t;
      if (std::abs(h1 - h2) < 1e-12 * std::max(1.0, std::abs(h1))) {
        // Paired step: the midpoint record is exact, so RK4 keeps full order.
        g = lift_step(g, h1 + h2, curve[i].v, curve[i + 1].v, curve[i + 2].v);
        i += 2;
        out.times.push_back(curve[i].t);
        out.points.push_back(GroupElement(g));
        continue;
      }
    }
    const double h = curve[i + 1].t - curve[i].t;
    g = lift_step(g, h, curve[i].v, hermite_mid_velocity(curve[i], curve[i + 1]),
                  curve[i + 1].v);
    ++i;
    out.times.push_back(curve[i].t);
    out.points.push_back(GroupElement(g));
  }

  for (const GroupElement& x : out.points) out.disc.push_back(project(x));
  return out;
}

double quotient_length(const std::vector<DiscCurvePoint>& curve) {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const double s0 = std::sqrt(metric_speed2(curve[i].p, curve[i].v));
    const double s1 = std::sqrt(metric_speed2(curve[i + 1].p, curve[i + 1].v));
    len += 0.5 * (s0 + s1) * (curve[i + 1].t - curve[i].t);
  }
  return len;
}

}  // namespace kpgeo
