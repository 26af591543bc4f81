#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kpgeo/numerics.hpp"

namespace kpgeo {

inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kGroupTol = 1e-10;

/// Element of su(n): anti-Hermitian, traceless.
class AlgebraElement {
 public:
  explicit AlgebraElement(ComplexMatrix m, double tol = kAlgebraTol);

  static AlgebraElement zero(int n);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& mat() const { return m_; }

 private:
  ComplexMatrix m_;
};

/// Element of SU(n): unitary with unit determinant.
class GroupElement {
 public:
  explicit GroupElement(ComplexMatrix m, double tol = kGroupTol);

  static GroupElement identity(int n);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& mat() const { return m_; }

 private:
  ComplexMatrix m_;
};

/// Block-diagonal part of m for block sizes (q, n-q). No invariant checks.
ComplexMatrix block_diag_part(const ComplexMatrix& m, int q);

/// Block-anti-diagonal part of m for block sizes (q, n-q).
ComplexMatrix block_antidiag_part(const ComplexMatrix& m, int q);

/// scale * (-Re tr(PQ)); a positive multiple of the Killing form.
/// scale = 1/2 reproduces the SU(2) quotient normalization.
double killing_inner(const ComplexMatrix& p, const ComplexMatrix& q,
                     double scale);
double killing_inner(const AlgebraElement& p, const AlgebraElement& q,
                     double scale);

/// AIII Cartan decomposition su(n) = K + P, block sizes (q, n-q):
/// K block-diagonal, P block-anti-diagonal.
///
/// Basis ordering (fixed so serialized coefficient vectors are stable):
///   basis_P: per off-diagonal position (row j < q, col k >= q) in row-major
///            order, the real generator then the imaginary generator;
///   basis_K: off-diagonal pairs of the q-block, then of the (n-q)-block
///            (same per-position order), then n-1 diagonal generators.
struct KPDecomposition {
  int n = 0;
  int q = 0;
  double killing_scale = 0.5;
  std::vector<AlgebraElement> basis_K;
  std::vector<AlgebraElement> basis_P;

  int dim_K() const { return static_cast<int>(basis_K.size()); }
  int dim_P() const { return static_cast<int>(basis_P.size()); }

  double inner(const ComplexMatrix& a, const ComplexMatrix& b) const {
    return killing_inner(a, b, killing_scale);
  }
  ComplexMatrix project_K(const ComplexMatrix& m) const {
    return block_diag_part(m, q);
  }
  ComplexMatrix project_P(const ComplexMatrix& m) const {
    return block_antidiag_part(m, q);
  }
};

/// Splits X into (block-diagonal, block-anti-diagonal) parts; X = XK + XP.
std::pair<AlgebraElement, AlgebraElement> aiii_split(const AlgebraElement& x,
                                                     int q);

/// Orthonormal AIII bases; dim P = 2q(n-q), dim K = n^2 - 1 - 2q(n-q).
KPDecomposition make_aiii(int n, int q, double scale = 0.5);

/// Conjugation action x -> k x k^{-1}.
AlgebraElement conjugate(const GroupElement& k, const AlgebraElement& x);
GroupElement conjugate(const GroupElement& k, const GroupElement& x);

/// Dimension of { A in K : xAx^{-1} = A }, the isotropy algebra at x,
/// as the null-space dimension (singular values below tol) of
/// A -> xAx^{-1} - A restricted to span(basis_K).
int isotropy_algebra_dim(const GroupElement& x, const KPDecomposition& dec,
                         double tol = 1e-8);

/// True iff the isotropy algebra at x is trivial (minimal isotropy type).
bool is_regular(const GroupElement& x, const KPDecomposition& dec,
                double tol = 1e-8);

/// Special unitary matrix with discrete isotropy group in K, built from
/// block rotations and a seeded unitary completion. Deterministic for a
/// fixed seed; retries with incremented seed if a requirement check fails.
GroupElement aiii_regular_witness(int n, int q, std::uint64_t seed = 1);

}  // namespace kpgeo
