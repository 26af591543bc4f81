#include "kpgeo/lie.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace kpgeo {

namespace {

void check_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(who) + ": matrix must be square");
}

void check_same_dim(int a, int b, const char* who) {
  if (a != b) throw DimensionError(std::string(who) + ": dimension mismatch");
}

void check_block_sizes(int n, int q, const char* who) {
  if (q < 1 || q > n - q)
    throw DomainError(std::string(who) + ": require 1 <= q <= n - q");
}

}  // namespace

AlgebraElement::AlgebraElement(ComplexMatrix m, double tol) : m_(std::move(m)) {
  check_square(m_, "AlgebraElement");
  if (frobenius(m_ + m_.adjoint()) > tol)
    throw ValidationError("AlgebraElement: matrix is not anti-Hermitian");
  if (std::abs(m_.trace()) > tol)
    throw ValidationError("AlgebraElement: matrix is not traceless");
}

AlgebraElement AlgebraElement::zero(int n) {
  return AlgebraElement(ComplexMatrix::Zero(n, n));
}

GroupElement::GroupElement(ComplexMatrix m, double tol) : m_(std::move(m)) {
  check_square(m_, "GroupElement");
  const Eigen::Index n = m_.rows();
  if (frobenius(m_.adjoint() * m_ - ComplexMatrix::Identity(n, n)) > tol)
    throw ValidationError("GroupElement: matrix is not unitary");
  if (std::abs(m_.determinant() - 1.0) > tol)
    throw ValidationError("GroupElement: determinant is not 1");
}

GroupElement GroupElement::identity(int n) {
  return GroupElement(ComplexMatrix::Identity(n, n));
}

ComplexMatrix block_diag_part(const ComplexMatrix& m, int q) {
  check_square(m, "block_diag_part");
  const int n = static_cast<int>(m.rows());
  check_block_sizes(n, q, "block_diag_part");
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  out.topLeftCorner(q, q) = m.topLeftCorner(q, q);
  out.bottomRightCorner(n - q, n - q) = m.bottomRightCorner(n - q, n - q);
  return out;
}

ComplexMatrix block_antidiag_part(const ComplexMatrix& m, int q) {
  check_square(m, "block_antidiag_part");
  const int n = static_cast<int>(m.rows());
  check_block_sizes(n, q, "block_antidiag_part");
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  out.topRightCorner(q, n - q) = m.topRightCorner(q, n - q);
  out.bottomLeftCorner(n - q, q) = m.bottomLeftCorner(n - q, q);
  return out;
}

double killing_inner(const ComplexMatrix& p, const ComplexMatrix& q,
                     double scale) {
  if (p.rows() != q.rows() || p.cols() != q.cols())
    throw DimensionError("killing_inner: dimension mismatch");
  if (scale <= 0) throw DomainError("killing_inner: scale must be positive");
  return scale * (-(p * q).trace().real());
}

double killing_inner(const AlgebraElement& p, const AlgebraElement& q,
                     double scale) {
  return killing_inner(p.mat(), q.mat(), scale);
}

std::pair<AlgebraElement, AlgebraElement> aiii_split(const AlgebraElement& x,
                                                     int q) {
  return {AlgebraElement(block_diag_part(x.mat(), q)),
          AlgebraElement(block_antidiag_part(x.mat(), q))};
}

KPDecomposition make_aiii(int n, int q, double scale) {
  check_block_sizes(n, q, "make_aiii");
  if (scale <= 0) throw DomainError("make_aiii: scale must be positive");

  KPDecomposition dec;
  dec.n = n;
  dec.q = q;
  dec.killing_scale = scale;

  const Complex iu(0.0, 1.0);
  // <E_jk - E_kj | same> = 2 * scale for every off-diagonal generator.
  const double offdiag_norm = std::sqrt(2.0 * scale);

  auto push_offdiag_pair = [&](std::vector<AlgebraElement>& basis, int j,
                               int k) {
    ComplexMatrix re = ComplexMatrix::Zero(n, n);
    re(j, k) = 1.0;
    re(k, j) = -1.0;
    basis.emplace_back(re / offdiag_norm);
    ComplexMatrix im = ComplexMatrix::Zero(n, n);
    im(j, k) = iu;
    im(k, j) = iu;
    basis.emplace_back(im / offdiag_norm);
  };

  for (int j = 0; j < q; ++j)
    for (int k = q; k < n; ++k) push_offdiag_pair(dec.basis_P, j, k);

  for (int j = 0; j < q; ++j)
    for (int k = j + 1; k < q; ++k) push_offdiag_pair(dec.basis_K, j, k);
  for (int j = q; j < n; ++j)
    for (int k = j + 1; k < n; ++k) push_offdiag_pair(dec.basis_K, j, k);

  // Diagonal generators: Gram-Schmidt over i*diag(e_m - e_{m+1}).
  std::vector<ComplexMatrix> diag;
  for (int m = 0; m < n - 1; ++m) {
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    d(m, m) = iu;
    d(m + 1, m + 1) = -iu;
    for (const ComplexMatrix& prev : diag)
      d -= killing_inner(prev, d, scale) * prev;
    d /= std::sqrt(killing_inner(d, d, scale));
    diag.push_back(d);
  }
  for (ComplexMatrix& d : diag) dec.basis_K.emplace_back(std::move(d));

  return dec;
}

AlgebraElement conjugate(const GroupElement& k, const AlgebraElement& x) {
  check_same_dim(k.dim(), x.dim(), "conjugate");
  return AlgebraElement(k.mat() * x.mat() * k.mat().adjoint());
}

GroupElement conjugate(const GroupElement& k, const GroupElement& x) {
  check_same_dim(k.dim(), x.dim(), "conjugate");
  return GroupElement(k.mat() * x.mat() * k.mat().adjoint());
}

int isotropy_algebra_dim(const GroupElement& x, const KPDecomposition& dec,
                         double tol) {
  check_same_dim(x.dim(), dec.n, "isotropy_algebra_dim");
  const int n = dec.n;
  const int dk = dec.dim_K();
  Eigen::MatrixXd map(2 * n * n, dk);
  for (int j = 0; j < dk; ++j) {
    const ComplexMatrix d =
        x.mat() * dec.basis_K[j].mat() * x.mat().adjoint() -
        dec.basis_K[j].mat();
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        map(2 * (r * n + c), j) = d(r, c).real();
        map(2 * (r * n + c) + 1, j) = d(r, c).imag();
      }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(map);
  int null_dim = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) < tol) ++null_dim;
  return null_dim;
}

bool is_regular(const GroupElement& x, const KPDecomposition& dec,
                double tol) {
  return isotropy_algebra_dim(x, dec, tol) == 0;
}

namespace {

// One construction attempt; throws NumericalError when a requirement check
// fails so the caller can retry with the next seed.
ComplexMatrix witness_attempt(int n, int q, int k, int j, SplitMix64& rng) {
  const Complex iu(0.0, 1.0);

  // Blocks 0..k-1 have size q at offset b*q; block k (if j >= 1) has size j.
  auto rotation = [&](int l) {  // A_l, l = 1..k-1 (paper indexing)
    ComplexMatrix a = ComplexMatrix::Identity(n, n);
    const int off = (l - 1) * q;
    const double c = 1.0 / std::sqrt(2.0);
    a.block(off, off, q, q) = c * ComplexMatrix::Identity(q, q);
    a.block(off, off + q, q, q) = c * ComplexMatrix::Identity(q, q);
    a.block(off + q, off, q, q) = -c * ComplexMatrix::Identity(q, q);
    a.block(off + q, off + q, q, q) = c * ComplexMatrix::Identity(q, q);
    return a;
  };

  ComplexMatrix w = ComplexMatrix::Identity(n, n);
  for (int l = 1; l <= k - 2; ++l) {
    ComplexMatrix f = rotation(l);
    if (q > 1) {
      ComplexMatrix p_hat = ComplexMatrix::Identity(n, n);
      p_hat.block((l - 1) * q, (l - 1) * q, q, q) =
          random_special_unitary(q, rng);
      f = f * p_hat;
    }
    w = w * f;
  }

  // Last factor: rotation on blocks (k-1, k) times the constrained tail.
  ComplexMatrix p_last = ComplexMatrix::Identity(n, n);

  // (R1) diagonal with pairwise-distinct phases.
  ComplexMatrix pk = ComplexMatrix::Zero(q, q);
  std::vector<Complex> phases(q);
  for (int m = 0; m < q; ++m) {
    phases[m] = std::exp(iu * (2.0 * std::numbers::pi * rng.uniform()));
    pk(m, m) = phases[m];
  }
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b)
      if (std::abs(phases[a] - phases[b]) < 1e-6)
        throw NumericalError("witness: (R1) phases not distinct");
  p_last.block((k - 2) * q, (k - 2) * q, q, q) = pk;

  // Unitary completion of the (q+j) x (q+j) tail, determinant fixed so the
  // whole factor is special unitary.
  ComplexMatrix tail = random_unitary(q + j, rng);
  Complex det = pk.determinant() * tail.determinant();
  tail.col(q + j - 1) *= std::conj(det) / std::abs(det);

  // (R2) first row of T11 has nonzero off-diagonal entries.
  for (int c = 1; c < q; ++c)
    if (std::abs(tail(0, c)) < 1e-8)
      throw NumericalError("witness: (R2) zero entry in first row of T11");
  // (R3) T12 has full column rank (left inverse = pseudo-inverse).
  if (j >= 1) {
    Eigen::JacobiSVD<ComplexMatrix> svd(tail.block(0, q, q, j));
    if (svd.singularValues()(svd.singularValues().size() - 1) < 1e-8)
      throw NumericalError("witness: (R3) T12 is column-rank deficient");
  }
  p_last.block((k - 1) * q, (k - 1) * q, q + j, q + j) = tail;

  return w * rotation(k - 1) * p_last;
}

}  // namespace

GroupElement aiii_regular_witness(int n, int q, std::uint64_t seed) {
  check_block_sizes(n, q, "aiii_regular_witness");
  const int k = n / q;
  const int j = n - k * q;

  const KPDecomposition dec = make_aiii(n, q);
  for (int attempt = 0; attempt < 32; ++attempt) {
    SplitMix64 rng(seed + static_cast<std::uint64_t>(attempt));
    try {
      GroupElement w(witness_attempt(n, q, k, j, rng));
      if (isotropy_algebra_dim(w, dec, 1e-8) == 0) return w;
    } catch (const NumericalError&) {
      // requirement check failed; retry with the next seed
    }
  }
  throw NumericalError("aiii_regular_witness: no valid witness in 32 seeds");
}

}  // namespace kpgeo
