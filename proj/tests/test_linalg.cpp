#include <random>

#include <gtest/gtest.h>

#include "fischer/linalg.hpp"

using namespace fischer;

namespace {

// Integer matrix of prescribed rank: product of random rows x r and r x cols factors.
MatrixQ planted_rank(std::mt19937& rng, Index rows, Index cols, Index r, int spread) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  MatrixQ left(rows, r), right(r, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < r; ++j) left(i, j) = dist(rng);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < cols; ++j) right(i, j) = dist(rng);
  return left * right;
}

// Cofactor expansion along the first row; test-only oracle for small n.
Rational laplace_det(const MatrixQ& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational acc;
  for (Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    MatrixQ minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r)
      for (Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Rational term = m(0, j) * laplace_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

TEST(Linalg, GaussJordanOverPrimeField) {
  using F = ModP<7>;
  Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> a(2, 3);
  a << F(1), F(2), F(3), F(2), F(4), F(6);
  const auto pivots = gauss_jordan(a);
  ASSERT_EQ(pivots.size(), 1U);
  EXPECT_EQ(a(0, 1).value(), 2U);
  EXPECT_TRUE(a(1, 2).is_zero());
  EXPECT_EQ((F(3) * inverse(F(3))).value(), 1U);
}

TEST(Linalg, KernelOfSmallMatrixIsCanonical) {
  MatrixQ m(2, 4);
  m << 1, 2, 0, 3,  //
      2, 4, 1, 7;
  const Kernel k = kernel(m);
  EXPECT_EQ(k.rank(), 2);
  EXPECT_EQ(k.pivots, (std::vector<Index>{0, 2}));
  EXPECT_EQ(k.free, (std::vector<Index>{1, 3}));
  VectorQ v0(4), v1(4);
  v0 << -2, 1, 0, 0;
  v1 << -3, 0, -1, 1;
  EXPECT_EQ(k.basis.col(0), v0);
  EXPECT_EQ(k.basis.col(1), v1);
}

// The modular route and rational elimination are independent; they must agree
// on the canonical basis for every matrix.
TEST(Linalg, ModularKernelAgreesWithRationalElimination) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Index rows = 5 + static_cast<Index>(rng() % 40);
    const Index cols = 5 + static_cast<Index>(rng() % 40);
    const Index r = static_cast<Index>(rng() % static_cast<unsigned>(std::min(rows, cols) + 1));
    MatrixQ m = planted_rank(rng, rows, cols, r, 3);
    if (trial % 3 == 0) m /= Rational(6);
    const Kernel dense = kernel_dense(m);
    const auto modular = kernel_modular(m);
    ASSERT_TRUE(modular.has_value()) << "trial " << trial;
    EXPECT_EQ(dense.rank(), r);
    EXPECT_EQ(modular->pivots, dense.pivots);
    EXPECT_EQ(modular->basis, dense.basis);
    EXPECT_TRUE(is_zero(MatrixQ(m * dense.basis)));
  }
}

TEST(Linalg, ModularKernelHandlesLargeEntriesAndPrimeMultiples) {
  // The first prime divides an entry, so its image has the wrong pivots.
  const std::int64_t p = 2147483647;
  MatrixQ m(2, 3);
  m << 1, 1, 0,  //
      0, p, 1;
  const auto modular = kernel_modular(m);
  ASSERT_TRUE(modular.has_value());
  const Kernel dense = kernel_dense(m);
  EXPECT_EQ(modular->basis, dense.basis);
  EXPECT_EQ(dense.basis(0, 0), Rational(1, p));
}

TEST(Linalg, SolveFindsParticularSolutionOrReportsInconsistency) {
  MatrixQ a(2, 2);
  a << 1, 2, 2, 4;
  VectorQ b(2);
  b << 3, 6;
  auto x = solve(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)(0), Rational(3));
  EXPECT_EQ((*x)(1), Rational(0));
  b << 3, 7;
  EXPECT_FALSE(solve(a, b));
}

TEST(Linalg, CharacteristicPolynomialMatchesCofactorOracle) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 1 + static_cast<Index>(trial % 6);
    MatrixQ m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) m(i, j) = Rational(dist(rng), 1 + (trial % 3));
    if (trial % 4 == 0) m.col(0).setZero();  // forces Hessenberg pivot search to skip
    const Polynomial p = characteristic_polynomial(m);
    ASSERT_EQ(static_cast<Index>(p.size()), n + 1);
    EXPECT_EQ(p.back(), Rational(1));
    for (int t = -3; t <= 3; ++t) {
      const MatrixQ shifted = MatrixQ::Identity(n, n) * Rational(t) - m;
      EXPECT_EQ(evaluate(p, Rational(t)), laplace_det(shifted)) << "trial " << trial << " t=" << t;
    }
  }
}

TEST(Linalg, RationalRootsSplitOffIrreducibleResidual) {
  // (t - 1/2)^2 (t + 3) (t^2 + 1) t
  Polynomial p = {Rational(0), Rational(1)};
  auto mul = [](const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  p = mul(p, {Rational(-1, 2), Rational(1)});
  p = mul(p, {Rational(-1, 2), Rational(1)});
  p = mul(p, {Rational(3), Rational(1)});
  p = mul(p, {Rational(1), Rational(0), Rational(1)});
  const RootSplit split = rational_roots(p);
  ASSERT_EQ(split.roots.size(), 3U);
  EXPECT_EQ(split.roots[0], (std::pair<Rational, int>{Rational(-3), 1}));
  EXPECT_EQ(split.roots[1], (std::pair<Rational, int>{Rational(0), 1}));
  EXPECT_EQ(split.roots[2], (std::pair<Rational, int>{Rational(1, 2), 2}));
  EXPECT_EQ(split.residual, (Polynomial{Rational(1), Rational(0), Rational(1)}));
}
