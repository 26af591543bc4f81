#include "kpgeo/geodesics.hpp"

#include <cmath>

namespace kpgeo {

namespace {

// Grid times k*dt for k = 0..K plus t1 when it is off-grid.
std::vector<double> sample_times(double t0, double t1, double dt) {
  std::vector<double> times;
  const long k_max =
      static_cast<long>(std::floor((t1 - t0) / dt * (1.0 + 1e-12)));
  for (long k = 0; k <= k_max; ++k) times.push_back(t0 + k * dt);
  if (t1 - times.back() > 1e-9 * std::max(1.0, t1)) times.push_back(t1);
  return times;
}

// Derivative of a matrix curve at tau from three samples (Lagrange weights;
// handles non-uniform spacing, used at both ends and interior points).
ComplexMatrix three_point_derivative(double tau, double t0,
                                     const ComplexMatrix& f0, double t1,
                                     const ComplexMatrix& f1, double t2,
                                     const ComplexMatrix& f2) {
  const double w0 = (2 * tau - t1 - t2) / ((t0 - t1) * (t0 - t2));
  const double w1 = (2 * tau - t0 - t2) / ((t1 - t0) * (t1 - t2));
  const double w2 = (2 * tau - t0 - t1) / ((t2 - t0) * (t2 - t1));
  return w0 * f0 + w1 * f1 + w2 * f2;
}

}  // namespace

GeodesicSpec::GeodesicSpec(KPDecomposition dec_, AlgebraElement a,
                           AlgebraElement p, double t_max_, double dt_,
                           bool normalize)
    : dec(std::move(dec_)),
      A(std::move(a)),
      P(std::move(p)),
      t_max(t_max_),
      dt(dt_) {
  if (A.dim() != dec.n || P.dim() != dec.n)
    throw DimensionError("GeodesicSpec: A, P must match the decomposition");
  if (frobenius(dec.project_P(A.mat())) > 1e-12)
    throw ValidationError("GeodesicSpec: A is not in K (block-diagonal)");
  if (frobenius(dec.project_K(P.mat())) > 1e-12)
    throw ValidationError("GeodesicSpec: P is not in P (block-anti-diagonal)");
  if (t_max < 0) throw DomainError("GeodesicSpec: t_max must be nonnegative");
  if (dt <= 0) throw DomainError("GeodesicSpec: dt must be positive");
  if (t_max > 0 && dt > t_max)
    throw DomainError("GeodesicSpec: dt must not exceed t_max");
  if (normalize) {
    const double nrm = std::sqrt(dec.inner(P.mat(), P.mat()));
    if (nrm < 1e-14)
      throw ValidationError("GeodesicSpec: cannot normalize P = 0");
    P = AlgebraElement(P.mat() / nrm);
    normalized = true;
  }
}

GroupElement geodesic_point(const GeodesicSpec& spec, double t) {
  if (t < 0 || t > spec.t_max + 1e-12)
    throw DomainError("geodesic_point: t outside [0, t_max]");
  return GroupElement(mat_exp(spec.A.mat(), t) *
                      mat_exp(spec.P.mat() - spec.A.mat(), t));
}

AlgebraElement geodesic_control(const GeodesicSpec& spec, double t) {
  if (t < 0 || t > spec.t_max + 1e-12)
    throw DomainError("geodesic_control: t outside [0, t_max]");
  const ComplexMatrix e = mat_exp(spec.A.mat(), t);
  return AlgebraElement(e * spec.P.mat() * e.adjoint());
}

CurveSamples sample_geodesic(const GeodesicSpec& spec) {
  CurveSamples out;
  if (spec.t_max == 0.0) {
    out.times.push_back(0.0);
    out.points.push_back(GroupElement::identity(spec.dec.n));
  } else {
    out.times = sample_times(0.0, spec.t_max, spec.dt);
    out.points.reserve(out.times.size());
    for (double t : out.times) out.points.push_back(geodesic_point(spec, t));
  }
  if (spec.dec.n == 2)
    for (const GroupElement& g : out.points) out.disc.push_back(project(g));
  return out;
}

double horizontality_residual(const CurveSamples& samples,
                              const KPDecomposition& dec) {
  const std::size_t m = samples.points.size();
  if (m < 3)
    throw DomainError("horizontality_residual: need at least 3 samples");
  if (samples.n() != dec.n)
    throw DimensionError("horizontality_residual: dimension mismatch");

  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const ComplexMatrix vel = three_point_derivative(
        samples.times[i], samples.times[i - 1], samples.points[i - 1].mat(),
        samples.times[i], samples.points[i].mat(), samples.times[i + 1],
        samples.points[i + 1].mat());
    const ComplexMatrix body = vel * samples.points[i].mat().adjoint();
    worst = std::max(worst, frobenius(dec.project_K(body)));
  }
  return worst;
}

LengthResult curve_length(const CurveSamples& samples,
                          const KPDecomposition& dec,
                          double horizontality_tol) {
  const std::size_t m = samples.points.size();
  if (samples.n() != 0 && samples.n() != dec.n)
    throw DimensionError("curve_length: dimension mismatch");
  LengthResult res;
  if (m < 2) return res;  // zero-duration curve

  std::vector<double> speed(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t c = (i == 0) ? 1 : (i + 1 == m ? m - 2 : i);
    const ComplexMatrix vel = three_point_derivative(
        samples.times[i], samples.times[c - 1], samples.points[c - 1].mat(),
        samples.times[c], samples.points[c].mat(), samples.times[c + 1],
        samples.points[c + 1].mat());
    const ComplexMatrix body = vel * samples.points[i].mat().adjoint();
    speed[i] = std::sqrt(std::max(0.0, dec.inner(body, body)));
  }
  for (std::size_t i = 0; i + 1 < m; ++i)
    res.length += 0.5 * (speed[i] + speed[i + 1]) *
                  (samples.times[i + 1] - samples.times[i]);

  res.horizontality = (m >= 3) ? horizontality_residual(samples, dec) : 0.0;
  res.horizontal = res.horizontality <= horizontality_tol;
  return res;
}

std::vector<DiscCurvePoint> project_geodesic_with_velocity(
    const GeodesicSpec& spec, double t0, double t1, double dt) {
  if (spec.dec.n != 2)
    throw DimensionError("project_geodesic_with_velocity: requires n = 2");
  if (t0 < 0 || t1 > spec.t_max + 1e-12 || t1 <= t0)
    throw DomainError("project_geodesic_with_velocity: bad time window");

  std::vector<DiscCurvePoint> out;
  for (double t : sample_times(t0, t1, dt)) {
    const GroupElement x = geodesic_point(spec, t);
    const Complex zdot =
        (geodesic_control(spec, t).mat() * x.mat())(0, 0);
    out.push_back({t, project(x), {zdot.real(), zdot.imag()}});
  }
  return out;
}

}  // namespace kpgeo
