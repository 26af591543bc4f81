// Independent oracles used by the test suites. These deliberately avoid the
// library code paths they check: the exponential is a plain Taylor sum, the
// Killing pairing goes through adjoint matrices on a full su(n) basis, and
// the curvature is rebuilt from finite differences of the metric alone.
#pragma once

#include <cmath>
#include <vector>

#include "kpgeo/lie.hpp"
#include "kpgeo/quotient.hpp"

namespace oracles {

using kpgeo::Complex;
using kpgeo::ComplexMatrix;

/// Plain truncated Taylor series for e^{tX}.
inline ComplexMatrix taylor_exp(const ComplexMatrix& x, double t,
                                int terms = 60) {
  const Eigen::Index n = x.rows();
  ComplexMatrix a = t * x;
  ComplexMatrix sum = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= terms; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

/// Full su(n) basis, orthonormal under <X|Y> = -Re tr(XY).
inline std::vector<ComplexMatrix> sun_basis(int n) {
  const Complex iu(0.0, 1.0);
  std::vector<ComplexMatrix> basis;
  const double s = std::sqrt(2.0);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix re = ComplexMatrix::Zero(n, n);
      re(j, k) = 1.0;
      re(k, j) = -1.0;
      basis.push_back(re / s);
      ComplexMatrix im = ComplexMatrix::Zero(n, n);
      im(j, k) = iu;
      im(k, j) = iu;
      basis.push_back(im / s);
    }
  for (int m = 0; m < n - 1; ++m) {
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    d(m, m) = iu;
    d(m + 1, m + 1) = -iu;
    for (const ComplexMatrix& prev : basis)
      d -= kpgeo::killing_inner(prev, d, 1.0) * prev;
    d /= std::sqrt(kpgeo::killing_inner(d, d, 1.0));
    basis.push_back(d);
  }
  return basis;
}

/// -tr(ad_P o ad_Q) via adjoint matrices in an orthonormal basis.
inline double killing_via_adjoint(const ComplexMatrix& p,
                                  const ComplexMatrix& q) {
  const int n = static_cast<int>(p.rows());
  const std::vector<ComplexMatrix> basis = sun_basis(n);
  const int d = static_cast<int>(basis.size());
  auto ad_matrix = [&](const ComplexMatrix& x) {
    Eigen::MatrixXd ad(d, d);
    for (int j = 0; j < d; ++j) {
      const ComplexMatrix br = x * basis[j] - basis[j] * x;
      for (int i = 0; i < d; ++i) ad(i, j) = kpgeo::killing_inner(basis[i], br, 1.0);
    }
    return ad;
  };
  return -(ad_matrix(p) * ad_matrix(q)).trace();
}

/// Christoffel symbols from finite differences of metric_components only,
/// through the general formula Gamma^i_kl = 1/2 g^{im} (d_l g_mk + d_k g_ml
/// - d_m g_kl). Used to cross-check the closed forms.
inline kpgeo::Christoffel fd_christoffel(const kpgeo::DiscPoint& p,
                                         double h = 1e-6) {
  using kpgeo::DiscPoint;
  auto g = [](const DiscPoint& q) { return kpgeo::metric_components(q); };
  const Eigen::Matrix2d dgdx =
      (g({p.x + h, p.y}) - g({p.x - h, p.y})) / (2.0 * h);
  const Eigen::Matrix2d dgdy =
      (g({p.x, p.y + h}) - g({p.x, p.y - h})) / (2.0 * h);
  const Eigen::Matrix2d ginv = g(p).inverse();

  auto dg = [&](int m, int i, int j) {
    return (m == 0 ? dgdx : dgdy)(i, j);
  };
  auto gamma = [&](int i, int k, int l) {
    double sum = 0.0;
    for (int m = 0; m < 2; ++m)
      sum += ginv(i, m) * (dg(l, m, k) + dg(k, m, l) - dg(m, k, l));
    return 0.5 * sum;
  };
  return {gamma(0, 0, 0), gamma(0, 0, 1), gamma(0, 1, 1),
          gamma(1, 0, 0), gamma(1, 0, 1), gamma(1, 1, 1)};
}

namespace detail {

// Same construction with fourth-order stencils; needed when the symbols are
// differenced once more for the curvature.
inline kpgeo::Christoffel fd_christoffel4(const kpgeo::DiscPoint& p,
                                          double h) {
  using kpgeo::DiscPoint;
  auto g = [](const DiscPoint& q) { return kpgeo::metric_components(q); };
  auto d4 = [&](bool in_x) {
    auto at = [&](double s) {
      return in_x ? g({p.x + s, p.y}) : g({p.x, p.y + s});
    };
    return (-at(2 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2 * h)) /
           (12.0 * h);
  };
  const Eigen::Matrix2d dgdx = d4(true);
  const Eigen::Matrix2d dgdy = d4(false);
  const Eigen::Matrix2d ginv = g(p).inverse();
  auto dg = [&](int m, int i, int j) { return (m == 0 ? dgdx : dgdy)(i, j); };
  auto gamma = [&](int i, int k, int l) {
    double sum = 0.0;
    for (int m = 0; m < 2; ++m)
      sum += ginv(i, m) * (dg(l, m, k) + dg(k, m, l) - dg(m, k, l));
    return 0.5 * sum;
  };
  return {gamma(0, 0, 0), gamma(0, 0, 1), gamma(0, 1, 1),
          gamma(1, 0, 0), gamma(1, 0, 1), gamma(1, 1, 1)};
}

}  // namespace detail

/// Sectional curvature rebuilt from the numerically differentiated metric:
/// K = (1 - r^2) R^y_xyx with
/// R^y_xyx = Gxxx Gyyx + Gyxx Gyyy - (Gxyx Gyxx + Gyyx Gyxy)
///           + d_y Gyxx - d_x Gyyx.
inline double fd_curvature(const kpgeo::DiscPoint& p, double h1 = 3e-4,
                           double h2 = 2e-3) {
  auto gm = [&](const kpgeo::DiscPoint& q) {
    return detail::fd_christoffel4(q, h1);
  };
  const kpgeo::Christoffel c = gm(p);

  auto d4 = [&](bool in_x, auto&& pick) {
    auto at = [&](double s) {
      return pick(in_x ? gm({p.x + s, p.y}) : gm({p.x, p.y + s}));
    };
    return (-at(2 * h2) + 8.0 * at(h2) - 8.0 * at(-h2) + at(-2 * h2)) /
           (12.0 * h2);
  };
  const double dy_gyxx = d4(false, [](const kpgeo::Christoffel& g) { return g.yxx; });
  const double dx_gyyx = d4(true, [](const kpgeo::Christoffel& g) { return g.yxy; });

  const double r_yxyx = c.xxx * c.yxy + c.yxx * c.yyy -
                        (c.xxy * c.yxx + c.yxy * c.yxy) + dy_gyxx - dx_gyyx;
  return (1.0 - p.r2()) * r_yxyx;
}

}  // namespace oracles
