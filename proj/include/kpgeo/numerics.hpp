#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "kpgeo/errors.hpp"

namespace kpgeo {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Frobenius norm; the default norm throughout.
inline double frobenius(const ComplexMatrix& m) { return m.norm(); }

/// e^{tX} by scaling and squaring with a truncated series.
/// Throws DimensionError for non-square input.
ComplexMatrix mat_exp(const ComplexMatrix& x, double t = 1.0);

/// SplitMix64 stream. Bit-stable across platforms, so seeded runs are
/// reproducible; used wherever the engine needs randomness (witness
/// completion, test matrices).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform in [0, 1).
  double uniform();

  /// Uniform in [-1, 1).
  double symmetric();

 private:
  std::uint64_t state_;
};

/// Dense matrix with independent entries, real and imaginary parts in [-1, 1).
ComplexMatrix random_complex_matrix(int n, SplitMix64& rng);

/// Gram-Schmidt unitarization of a seeded dense matrix.
ComplexMatrix random_unitary(int n, SplitMix64& rng);

/// As random_unitary, with the last column rotated so the determinant is 1.
ComplexMatrix random_special_unitary(int n, SplitMix64& rng);

/// Random anti-Hermitian traceless matrix with Frobenius norm <= norm_cap.
ComplexMatrix random_anti_hermitian(int n, SplitMix64& rng, double norm_cap);

/// Column-wise modified Gram-Schmidt; throws NumericalError on rank loss.
ComplexMatrix gram_schmidt_unitarize(const ComplexMatrix& m);

struct OdeResult {
  std::vector<double> times;
  std::vector<RealVector> states;
  bool domain_exit = false;
  /// Time of the final sample when domain_exit is set; the sample itself
  /// sits on the validity surface (bisected partial step).
  double exit_time = 0.0;
};

using OdeRhs = std::function<RealVector(double, const RealVector&)>;
using OdeValidity = std::function<bool(const RealVector&)>;

/// Classical fixed-step RK4. Samples at t0 + k*dt plus the exact endpoint t1.
/// If `valid` is supplied and a step leaves the validity region, integration
/// stops with domain_exit set and the crossing refined by bisection on the
/// step length. The initial state is not checked against `valid`.
OdeResult integrate_ode(const OdeRhs& f, const RealVector& y0, double t0,
                        double t1, double dt, const OdeValidity& valid = {});

/// Golden-section minimizer on [a, b]; returns the abscissa of the minimum.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  int iters = 100);

/// Bisection for f(t) = 0 given a sign change between lo and hi.
double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, int iters = 100);

}  // namespace kpgeo
