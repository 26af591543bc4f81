#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kpgeo/lie.hpp"
#include "oracles.hpp"

using namespace kpgeo;
using doctest::Approx;

namespace {

ComplexMatrix real_rotation_generator() {
  ComplexMatrix p(2, 2);
  p << 0, 1, -1, 0;
  return p;
}

AlgebraElement random_k_element(const KPDecomposition& dec, SplitMix64& rng) {
  ComplexMatrix m = ComplexMatrix::Zero(dec.n, dec.n);
  for (const AlgebraElement& k : dec.basis_K) m += rng.symmetric() * k.mat();
  return AlgebraElement(m);
}

GroupElement random_k_group_element(const KPDecomposition& dec,
                                    SplitMix64& rng) {
  return GroupElement(mat_exp(random_k_element(dec, rng).mat(), 1.0));
}

}  // namespace

TEST_CASE("AlgebraElement and GroupElement enforce their invariants") {
  ComplexMatrix bad(2, 2);
  bad << 1, 0, 0, 1;
  CHECK_THROWS_AS(AlgebraElement{bad}, ValidationError);
  ComplexMatrix not_traceless = ComplexMatrix::Zero(2, 2);
  not_traceless(0, 0) = Complex(0, 1.0);
  CHECK_THROWS_AS(AlgebraElement{not_traceless}, ValidationError);
  CHECK_THROWS_AS(GroupElement{2.0 * ComplexMatrix::Identity(2, 2)},
                  ValidationError);
  CHECK_NOTHROW(AlgebraElement(real_rotation_generator()));
  CHECK_NOTHROW(GroupElement::identity(3));
}

TEST_CASE("killing_inner basics") {
  const ComplexMatrix p = real_rotation_generator();
  CHECK(killing_inner(ComplexMatrix::Zero(2, 2), p, 0.5) == 0.0);
  // P^2 = -I so -1/2 tr(P^2) = 1.
  CHECK(killing_inner(p, p, 0.5) == Approx(1.0));
  CHECK_THROWS_AS(killing_inner(p, ComplexMatrix::Zero(3, 3), 0.5),
                  DimensionError);
}

TEST_CASE("killing_inner matches the adjoint-representation oracle") {
  // -tr(ad_P ad_Q) = 2n * (-tr PQ), i.e. (2n/scale) * killing_inner.
  SplitMix64 rng(314);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 3; ++trial) {
      const ComplexMatrix p = random_anti_hermitian(n, rng, 2.0);
      const ComplexMatrix q = random_anti_hermitian(n, rng, 2.0);
      const double oracle = oracles::killing_via_adjoint(p, q);
      const double factor = 2.0 * n / 0.5;
      CHECK(oracle == Approx(factor * killing_inner(p, q, 0.5)).epsilon(1e-10));
    }
  }
  // The su(2) factor called out explicitly: 8 * (-1/2 tr PQ).
  SplitMix64 rng2(7);
  const ComplexMatrix p = random_anti_hermitian(2, rng2, 1.5);
  const ComplexMatrix q = random_anti_hermitian(2, rng2, 1.5);
  CHECK(oracles::killing_via_adjoint(p, q) ==
        Approx(8.0 * killing_inner(p, q, 0.5)).epsilon(1e-10));
}

TEST_CASE("aiii_split reads off block structure") {
  ComplexMatrix x(2, 2);
  x << Complex(0, 1), 1, -1, Complex(0, -1);
  const auto [xk, xp] = aiii_split(AlgebraElement(x), 1);
  ComplexMatrix k_expected(2, 2);
  k_expected << Complex(0, 1), 0, 0, Complex(0, -1);
  ComplexMatrix p_expected(2, 2);
  p_expected << 0, 1, -1, 0;
  CHECK(frobenius(xk.mat() - k_expected) == 0.0);
  CHECK(frobenius(xp.mat() - p_expected) == 0.0);
  CHECK(frobenius(xk.mat() + xp.mat() - x) == 0.0);

  // Pure cases.
  const auto [dk, dp] = aiii_split(AlgebraElement(k_expected), 1);
  CHECK(frobenius(dk.mat() - k_expected) == 0.0);
  CHECK(frobenius(dp.mat()) == 0.0);
  CHECK_THROWS_AS(aiii_split(AlgebraElement(x), 2), DomainError);
}

TEST_CASE("make_aiii dimensions") {
  CHECK(make_aiii(2, 1).dim_P() == 2);
  CHECK(make_aiii(2, 1).dim_K() == 1);
  CHECK(make_aiii(3, 1).dim_P() == 4);
  CHECK(make_aiii(3, 1).dim_K() == 4);
  CHECK(make_aiii(4, 2).dim_P() == 8);
  CHECK(make_aiii(4, 2).dim_K() == 7);
  CHECK_THROWS_AS(make_aiii(3, 2, 0.5), DomainError);
}

TEST_CASE("AIII bases are orthonormal, orthogonal across K and P") {
  for (auto [n, q] : {std::pair{2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 3}}) {
    const KPDecomposition dec = make_aiii(n, q);
    CHECK(dec.dim_K() + dec.dim_P() == n * n - 1);
    for (int i = 0; i < dec.dim_K(); ++i)
      for (int j = 0; j < dec.dim_K(); ++j)
        CHECK(dec.inner(dec.basis_K[i].mat(), dec.basis_K[j].mat()) ==
              Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
    for (int i = 0; i < dec.dim_P(); ++i)
      for (int j = 0; j < dec.dim_P(); ++j)
        CHECK(dec.inner(dec.basis_P[i].mat(), dec.basis_P[j].mat()) ==
              Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
    for (const AlgebraElement& k : dec.basis_K)
      for (const AlgebraElement& p : dec.basis_P)
        CHECK(std::abs(dec.inner(k.mat(), p.mat())) < 1e-12);
  }
}

TEST_CASE("AIII bases satisfy the Cartan bracket relations") {
  auto bracket = [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return ComplexMatrix(a * b - b * a);
  };
  for (auto [n, q] : {std::pair{2, 1}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {6, 3}}) {
    const KPDecomposition dec = make_aiii(n, q);
    double worst = 0.0;
    for (const AlgebraElement& ki : dec.basis_K)
      for (const AlgebraElement& kj : dec.basis_K)
        worst = std::max(
            worst, frobenius(dec.project_P(bracket(ki.mat(), kj.mat()))));
    for (const AlgebraElement& ki : dec.basis_K)
      for (const AlgebraElement& pj : dec.basis_P)
        worst = std::max(
            worst, frobenius(dec.project_K(bracket(ki.mat(), pj.mat()))));
    for (const AlgebraElement& pi : dec.basis_P)
      for (const AlgebraElement& pj : dec.basis_P)
        worst = std::max(
            worst, frobenius(dec.project_P(bracket(pi.mat(), pj.mat()))));
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("conjugate examples and bi-invariance") {
  const GroupElement id = GroupElement::identity(2);
  const AlgebraElement p(real_rotation_generator());
  CHECK(frobenius(conjugate(id, p).mat() - p.mat()) == 0.0);

  ComplexMatrix km(2, 2);
  km << Complex(0, 1), 0, 0, Complex(0, -1);
  const GroupElement k{(ComplexMatrix(km))};
  ComplexMatrix expected(2, 2);
  expected << 0, -1, 1, 0;
  CHECK(frobenius(conjugate(k, p).mat() - expected) < 1e-15);

  // Bi-invariance of the inner product under conjugation by K.
  const KPDecomposition dec = make_aiii(3, 1);
  SplitMix64 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    const GroupElement kk = random_k_group_element(dec, rng);
    const AlgebraElement a(random_anti_hermitian(3, rng, 2.0));
    const AlgebraElement b(random_anti_hermitian(3, rng, 2.0));
    CHECK(killing_inner(conjugate(kk, a), conjugate(kk, b), 0.5) ==
          Approx(killing_inner(a, b, 0.5)).epsilon(1e-11));
  }
}

TEST_CASE("isotropy dimension on SU(2)") {
  const KPDecomposition dec = make_aiii(2, 1);
  CHECK(isotropy_algebra_dim(GroupElement::identity(2), dec) == dec.dim_K());

  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag(0, 0) = std::polar(1.0, 0.7);
  diag(1, 1) = std::polar(1.0, -0.7);
  CHECK(isotropy_algebra_dim(GroupElement{(ComplexMatrix(diag))}, dec) == 1);

  const GroupElement off{real_rotation_generator()};
  CHECK(isotropy_algebra_dim(off, dec) == 0);
  CHECK(is_regular(off, dec));
  CHECK_FALSE(is_regular(GroupElement::identity(2), dec));
}

TEST_CASE("isotropy dimension is invariant under conjugation by K") {
  const KPDecomposition dec = make_aiii(4, 2);
  SplitMix64 rng(4242);
  const GroupElement x(mat_exp(random_anti_hermitian(4, rng, 1.5), 1.0));
  const int d = isotropy_algebra_dim(x, dec);
  for (int trial = 0; trial < 4; ++trial) {
    const GroupElement k = random_k_group_element(dec, rng);
    CHECK(isotropy_algebra_dim(conjugate(k, x), dec) == d);
  }
}

TEST_CASE("regular witnesses have trivial isotropy algebra") {
  for (auto [n, q] : {std::pair{2, 1}, {3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
    const KPDecomposition dec = make_aiii(n, q);
    const GroupElement w = aiii_regular_witness(n, q);
    CHECK(isotropy_algebra_dim(w, dec, 1e-8) == 0);
    CHECK(is_regular(w, dec));
  }
  // The (2,1) witness must be non-diagonal.
  const GroupElement w21 = aiii_regular_witness(2, 1);
  CHECK(std::abs(w21.mat()(0, 1)) > 1e-3);
}

TEST_CASE("witness construction is deterministic per seed") {
  const GroupElement a = aiii_regular_witness(5, 2, 3);
  const GroupElement b = aiii_regular_witness(5, 2, 3);
  CHECK(frobenius(a.mat() - b.mat()) == 0.0);
}

TEST_CASE("witness rejects invalid shapes") {
  CHECK_THROWS_AS(aiii_regular_witness(3, 2), DomainError);
}
