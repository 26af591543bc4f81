#include "kpgeo/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace kpgeo {

ComplexMatrix mat_exp(const ComplexMatrix& x, double t) {
  if (x.rows() != x.cols())
    throw DimensionError("mat_exp: input must be square");
  const Eigen::Index n = x.rows();

  ComplexMatrix a = t * x;
  const double norm = frobenius(a);
  if (!std::isfinite(norm)) throw NumericalError("mat_exp: non-finite input");

  // Scale so the series converges in a handful of terms, square back up.
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    a *= std::ldexp(1.0, -squarings);
  }

  ComplexMatrix sum = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= 32; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
    if (frobenius(term) < 1e-17 * std::max(1.0, frobenius(sum))) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::symmetric() { return 2.0 * uniform() - 1.0; }

ComplexMatrix random_complex_matrix(int n, SplitMix64& rng) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(rng.symmetric(), rng.symmetric());
  return m;
}

ComplexMatrix gram_schmidt_unitarize(const ComplexMatrix& m) {
  ComplexMatrix u = m;
  const Eigen::Index n = u.cols();
  for (Eigen::Index j = 0; j < n; ++j) {
    // Two orthogonalization passes keep the result unitary to machine precision.
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index k = 0; k < j; ++k)
        u.col(j) -= u.col(k).dot(u.col(j)) * u.col(k);
    const double nrm = u.col(j).norm();
    if (nrm < 1e-12)
      throw NumericalError("gram_schmidt_unitarize: rank-deficient input");
    u.col(j) /= nrm;
  }
  return u;
}

ComplexMatrix random_unitary(int n, SplitMix64& rng) {
  return gram_schmidt_unitarize(random_complex_matrix(n, rng));
}

ComplexMatrix random_special_unitary(int n, SplitMix64& rng) {
  ComplexMatrix u = random_unitary(n, rng);
  Complex det = u.determinant();
  u.col(n - 1) *= std::conj(det) / std::abs(det);
  return u;
}

ComplexMatrix random_anti_hermitian(int n, SplitMix64& rng, double norm_cap) {
  ComplexMatrix m = random_complex_matrix(n, rng);
  ComplexMatrix a = 0.5 * (m - m.adjoint());
  a -= (a.trace() / static_cast<double>(n)) * ComplexMatrix::Identity(n, n);
  const double nrm = frobenius(a);
  if (nrm > 0) a *= (norm_cap * rng.uniform()) / nrm;
  return a;
}

namespace {

RealVector rk4_step(const OdeRhs& f, double t, const RealVector& y, double h) {
  const RealVector k1 = f(t, y);
  const RealVector k2 = f(t + 0.5 * h, y + (0.5 * h) * k1);
  const RealVector k3 = f(t + 0.5 * h, y + (0.5 * h) * k2);
  const RealVector k4 = f(t + h, y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

OdeResult integrate_ode(const OdeRhs& f, const RealVector& y0, double t0,
                        double t1, double dt, const OdeValidity& valid) {
  if (dt <= 0) throw DomainError("integrate_ode: dt must be positive");
  if (t1 <= t0) throw DomainError("integrate_ode: t1 must exceed t0");

  OdeResult res;
  res.times.push_back(t0);
  res.states.push_back(y0);

  double t = t0;
  RealVector y = y0;
  long k = 0;
  const double t_eps = 1e-12 * (t1 - t0);
  while (t < t1 - t_eps) {
    double tn = t0 + static_cast<double>(k + 1) * dt;
    if (tn > t1) tn = t1;
    const double h = tn - t;
    RealVector yn = rk4_step(f, t, y, h);
    if (valid && !valid(yn)) {
      // Bisect the step length onto the validity surface.
      double lo = 0.0, hi = h;
      RealVector ylo = y;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        RealVector ym = rk4_step(f, t, y, mid);
        if (valid(ym)) {
          lo = mid;
          ylo = std::move(ym);
        } else {
          hi = mid;
        }
      }
      res.domain_exit = true;
      res.exit_time = t + lo;
      if (lo > 0.0) {
        res.times.push_back(res.exit_time);
        res.states.push_back(ylo);
      }
      return res;
    }
    t = tn;
    y = std::move(yn);
    ++k;
    res.times.push_back(t);
    res.states.push_back(y);
  }
  return res;
}

double golden_min(const std::function<double(double)>& f, double a, double b,
                  int iters) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < iters && (b - a) > 1e-15; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, int iters) {
  double flo = f(lo);
  for (int it = 0; it < iters; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo <= 0) == (fm <= 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace kpgeo
