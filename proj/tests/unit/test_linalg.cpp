#include <gtest/gtest.h>

#include "eamod/eamod.hpp"
#include "oracles.hpp"

using namespace eamod;

TEST(Linalg, RankExamples) {
  const FieldCtx f3 = FieldCtx::create(3, 1);
  EXPECT_EQ(rank(MatF::identity(f3, 3)), 3u);
  EXPECT_EQ(rank(MatF::zero(f3, 4, 4)), 0u);
  // X_1 of M_{lambda,mu}: ones on the subdiagonal
  EXPECT_EQ(rank(MatF(f3, 3, 3, {0, 0, 0, 1, 0, 0, 0, 1, 0})), 2u);
}

TEST(Linalg, KernelExamples) {
  const FieldCtx f3 = FieldCtx::create(3, 1);
  EXPECT_TRUE(kernel_basis(MatF::identity(f3, 3)).empty());
  const auto k0 = kernel_basis(MatF::zero(f3, 2, 2));
  ASSERT_EQ(k0.size(), 2u);
  EXPECT_EQ(k0[0], (Vec{f3.one(), f3.zero()}));
  EXPECT_EQ(k0[1], (Vec{f3.zero(), f3.one()}));
  const auto k1 = kernel_basis(MatF(f3, 2, 2, {1, 1, 2, 2}));
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_EQ(k1[0], (Vec{f3.one(), f3.element(2)}));
}

TEST(Linalg, RankMatchesKernelCounting) {
  for (auto [p, m] : {std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u}}) {
    const FieldCtx f = FieldCtx::create(p, m);
    CounterRng rng(3, p + m);
    for (int t = 0; t < 60; ++t) {
      const std::size_t r = 1 + rng.below(4);
      const std::size_t c = 1 + rng.below(p == 5 ? 4 : 5);
      const MatF a = oracle::random_matrix(f, r, c, rng, static_cast<unsigned>(t % 3));
      EXPECT_EQ(rank(a), oracle::rank_by_counting(a));
      const auto ker = kernel_basis(a);
      EXPECT_EQ(ker.size(), c - rank(a));
      for (const auto& v : ker) {
        for (auto x : a.apply(v)) EXPECT_TRUE(x.is_zero());
      }
    }
  }
}

TEST(Linalg, DeterminantMatchesLeibniz) {
  const FieldCtx f = FieldCtx::create(3, 2);
  CounterRng rng(8, 1);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng.below(5);
    const MatF a = oracle::random_matrix(f, n, n, rng, static_cast<unsigned>(t % 2));
    EXPECT_EQ(determinant(a), oracle::leibniz_det(a));
    const auto inv = inverse(a);
    EXPECT_EQ(inv.has_value(), !determinant(a).is_zero());
    if (inv) {
      EXPECT_EQ(*inv * a, MatF::identity(f, n));
      EXPECT_EQ(a * *inv, MatF::identity(f, n));
    }
  }
}

TEST(Linalg, EchelonIsReducedAndRowEquivalent) {
  const FieldCtx f = FieldCtx::create(5, 1);
  CounterRng rng(9, 0);
  for (int t = 0; t < 30; ++t) {
    const MatF a = oracle::random_matrix(f, 4, 6, rng, 1);
    const Echelon e = row_echelon(a);
    EXPECT_EQ(e.pivots.size(), rank(a));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      EXPECT_EQ(e.rref(i, e.pivots[i]), f.one());
      for (std::size_t r = 0; r < e.rref.rows(); ++r)
        if (r != i) EXPECT_TRUE(e.rref(r, e.pivots[i]).is_zero());
    }
    // same row space: stacking does not raise the rank
    MatF both(f, 8, 6);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        both(i, j) = a(i, j);
        both(i + 4, j) = e.rref(i, j);
      }
    EXPECT_EQ(rank(both), rank(a));
  }
}

TEST(Linalg, KronAndBlockDiagonal) {
  const FieldCtx f = FieldCtx::create(3, 1);
  const MatF a(f, 2, 2, {1, 2, 0, 1});
  const MatF b(f, 2, 2, {0, 1, 1, 0});
  const MatF k = kron(a, b);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(k(i, j), f.mul(a(i / 2, j / 2), b(i % 2, j % 2)));
  const std::vector<MatF> blocks = {a, MatF::identity(f, 1)};
  const MatF d = block_diagonal(blocks);
  EXPECT_EQ(d.rows(), 3u);
  EXPECT_EQ(d(2, 2), f.one());
  EXPECT_TRUE(d(0, 2).is_zero());
  EXPECT_EQ(d.block(0, 0, 2, 2), a);
}

TEST(Linalg, MinimalPolynomialOfCompanion) {
  const FieldCtx f = FieldCtx::create(5, 1);
  // companion of x^3 + 2x + 3
  const MatF c(f, 3, 3, {0, 0, -3, 1, 0, -2, 0, 1, 0});
  const Poly mp = minimal_polynomial(c);
  EXPECT_EQ(mp, Poly(f, {f.from_int(3), f.from_int(2), f.zero(), f.one()}));
  EXPECT_TRUE(eval_poly(mp, c).is_zero());
}

TEST(Linalg, MinimalPolynomialAnnihilatesAndIsMinimal) {
  const FieldCtx f = FieldCtx::create(3, 1);
  CounterRng rng(13, 0);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng.below(5);
    const MatF a = oracle::random_matrix(f, n, n, rng, static_cast<unsigned>(t % 3));
    const Poly mp = minimal_polynomial(a);
    EXPECT_TRUE(eval_poly(mp, a).is_zero());
    // no nonzero polynomial of smaller degree kills a: I, A, ..., A^{d-1} independent
    const int d = mp.degree();
    MatF stack(f, static_cast<std::size_t>(d), n * n);
    MatF power = MatF::identity(f, n);
    for (int i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < n * n; ++j) stack(static_cast<std::size_t>(i), j) = power.data()[j];
      power = power * a;
    }
    EXPECT_EQ(rank(stack), static_cast<std::size_t>(d));
  }
}
