#include "ztile/tiling.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using ztile::IntegerSet;
using ztile::precondition_error;

TEST(IsTiling, Examples) {
  EXPECT_TRUE(ztile::is_tiling(IntegerSet{0, 2}, IntegerSet{0, 1}, 4));
  EXPECT_FALSE(ztile::is_tiling(IntegerSet{0, 1}, IntegerSet{0, 1}, 4));
  EXPECT_TRUE(ztile::is_tiling(IntegerSet{0}, IntegerSet{0}, 1));
  EXPECT_TRUE(ztile::is_tiling(IntegerSet{-3, 7}, IntegerSet{0, 1}, 4));
  EXPECT_THROW(ztile::is_tiling(IntegerSet{}, IntegerSet{0}, 1), precondition_error);
}

TEST(IsTilingPoly, Examples) {
  EXPECT_TRUE(ztile::is_tiling_poly(IntegerSet{0, 2}, IntegerSet{0, 1}, 4));
  EXPECT_TRUE(ztile::is_tiling_poly(IntegerSet{0, 3}, IntegerSet{0, 1, 2}, 6));
  EXPECT_FALSE(ztile::is_tiling_poly(IntegerSet{0, 1}, IntegerSet{0, 3}, 4));
}

// Every (A, B) over residues with |A||B| = M and 0 in both, M <= 12.
template <class Fn>
void for_each_balanced_pair(std::int64_t m, Fn fn) {
  const unsigned full = 1u << m;
  for (unsigned ma = 1; ma < full; ma += 2)
    for (unsigned mb = 1; mb < full; mb += 2)
      if (static_cast<std::int64_t>(__builtin_popcount(ma) * __builtin_popcount(mb)) == m)
        fn(oracle::from_mask(ma), oracle::from_mask(mb));
}

TEST(TilingRoutes, AgreeExhaustivelyUpTo12) {
  for (std::int64_t m = 1; m <= 12; ++m)
    for_each_balanced_pair(m, [&](const oracle::Vec& va, const oracle::Vec& vb) {
      const IntegerSet a(va), b(vb);
      const bool truth = oracle::tiles(va, vb, m);
      ASSERT_EQ(ztile::is_tiling(a, b, m), truth);
      ASSERT_EQ(ztile::is_tiling_poly(a, b, m), truth);
      ASSERT_EQ(ztile::sands_criterion(a, b, m).tiles(), truth);
    });
}

TEST(TilingRoutes, AgreeOnRandomInstances) {
  std::mt19937_64 rng(1234);
  int positives = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 36);
    const auto ds = oracle::divisors(m);
    const std::int64_t k = ds[rng() % ds.size()];
    auto va = oracle::random_subset(rng, m, static_cast<std::size_t>(k));
    auto vb = oracle::random_subset(rng, m, static_cast<std::size_t>(m / k));
    // random lifts out of [0, M) keep the residues
    for (auto& x : va) x += m * (static_cast<std::int64_t>(rng() % 7) - 3);
    for (auto& x : vb) x += m * (static_cast<std::int64_t>(rng() % 7) - 3);
    const IntegerSet a(va), b(vb);
    const bool truth = oracle::tiles(va, vb, m);
    positives += truth;
    ASSERT_EQ(ztile::is_tiling(a, b, m), truth);
    ASSERT_EQ(ztile::is_tiling_poly(a, b, m), truth);
    ASSERT_EQ(ztile::sands_criterion(a, b, m).tiles(), truth);
  }
  EXPECT_GT(positives, 0);
}

TEST(CheckT1, Examples) {
  const auto a = ztile::check_T1(IntegerSet{0, 2});
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.rhs, 2);
  const auto b = ztile::check_T1(IntegerSet{0, 1, 2, 4, 5, 6});
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.lhs, 6);
  EXPECT_EQ(b.support, (std::vector<std::int64_t>{3, 8}));
  const auto c = ztile::check_T1(IntegerSet{0, 3});
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.support, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(c.rhs, 2);
  const auto d = ztile::check_T1(IntegerSet{0});
  EXPECT_TRUE(d.holds);
  EXPECT_EQ(d.rhs, 1);
  const auto e = ztile::check_T1(IntegerSet{0, 1, 3});
  EXPECT_FALSE(e.holds);
  EXPECT_TRUE(e.support.empty());
}

TEST(CheckT2, Examples) {
  const auto a = ztile::check_T2(IntegerSet{0, 1, 2, 3, 4, 5});
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.products_checked, 1u);
  const auto b = ztile::check_T2(IntegerSet{0, 1, 2, 4, 5, 6});
  EXPECT_FALSE(b.holds);
  EXPECT_EQ(b.witnesses, (std::vector<std::int64_t>{24}));
  const auto c = ztile::check_T2(IntegerSet{0, 2});
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.products_checked, 0u);
}

TEST(CoprimeProducts, TakeOnePowerPerPrime) {
  EXPECT_EQ(ztile::coprime_support_products({2, 4, 3}), (std::vector<std::int64_t>{6, 12}));
  EXPECT_EQ(ztile::coprime_support_products({2, 3, 5}), (std::vector<std::int64_t>{6, 10, 15, 30}));
  EXPECT_TRUE(ztile::coprime_support_products({2, 4, 8}).empty());
  EXPECT_TRUE(ztile::coprime_support_products({}).empty());
}

TEST(Sands, Examples) {
  const auto a = ztile::sands_criterion(IntegerSet{0, 1}, IntegerSet{0, 2}, 4);
  EXPECT_TRUE(a.disjoint);
  EXPECT_TRUE(a.product_is_M);
  EXPECT_EQ(a.divisors_a, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(a.divisors_b, (std::vector<std::int64_t>{2}));
  const auto b = ztile::sands_criterion(IntegerSet{0, 1}, IntegerSet{0, 3}, 12);
  EXPECT_TRUE(b.disjoint);
  EXPECT_FALSE(b.product_is_M);
  EXPECT_EQ(b.divisors_b, (std::vector<std::int64_t>{3}));
  EXPECT_FALSE(ztile::sands_criterion(IntegerSet{0, 1}, IntegerSet{0, 1}, 4).disjoint);
  EXPECT_THROW(ztile::sands_criterion(IntegerSet{0, 4}, IntegerSet{0, 1}, 4), precondition_error);
}

TEST(DivisorBound, Examples) {
  const auto a = ztile::divisor_bound_check(IntegerSet{0, 1}, IntegerSet{0, 3}, 12);
  EXPECT_TRUE(a.bound_holds);
  EXPECT_FALSE(a.is_equality);
  EXPECT_FALSE(a.tiling);
  EXPECT_TRUE(a.equality_iff_tiling);
  const auto b = ztile::divisor_bound_check(IntegerSet{0, 1}, IntegerSet{0, 2}, 4);
  EXPECT_TRUE(b.is_equality);
  EXPECT_TRUE(b.tiling);
  const auto c = ztile::divisor_bound_check(IntegerSet{0}, IntegerSet{0}, 1);
  EXPECT_TRUE(c.is_equality && c.tiling);
  EXPECT_THROW(ztile::divisor_bound_check(IntegerSet{0, 1}, IntegerSet{0, 1}, 4), precondition_error);
}

TEST(Decompose, Examples) {
  const auto a = ztile::decompose_tiling(IntegerSet{0, 1}, IntegerSet{0, 2}, 4, 2);
  EXPECT_EQ(a.parts, (std::vector<IntegerSet>{IntegerSet{0}, IntegerSet{0}}));
  EXPECT_EQ(a.offsets, (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(a.reduced_complement, (IntegerSet{0, 1}));
  EXPECT_EQ(a.reduced_modulus, 2);
  EXPECT_TRUE(a.valid());
  const auto b = ztile::decompose_tiling(IntegerSet{0, 1, 2}, IntegerSet{0, 3}, 6, 3);
  EXPECT_EQ(b.parts, (std::vector<IntegerSet>{IntegerSet{0}, IntegerSet{0}, IntegerSet{0}}));
  EXPECT_EQ(b.reduced_complement, (IntegerSet{0, 1}));
  EXPECT_TRUE(b.valid());
  EXPECT_THROW(ztile::decompose_tiling(IntegerSet{0, 3}, IntegerSet{0, 1}, 4, 2), precondition_error);
  EXPECT_THROW(ztile::decompose_tiling(IntegerSet{0, 1}, IntegerSet{0, 2}, 4, 3), precondition_error);
  EXPECT_THROW(ztile::decompose_tiling(IntegerSet{0, 1}, IntegerSet{0, 2}, 4, 4), precondition_error);
  EXPECT_THROW(ztile::decompose_tiling(IntegerSet{0, 4}, IntegerSet{0, 2}, 4, 2), precondition_error);
}

TEST(Decompose, NontrivialParts) {
  // A = {0,1,4,5} tiles Z/16 with B = {0,2,8,10}; both classes mod 2 are {0,2}.
  const IntegerSet a{0, 1, 4, 5}, b{0, 2, 8, 10};
  ASSERT_TRUE(ztile::is_tiling(a, b, 16));
  const auto d = ztile::decompose_tiling(a, b, 16, 2);
  EXPECT_EQ(d.parts, (std::vector<IntegerSet>{IntegerSet{0, 2}, IntegerSet{0, 2}}));
  EXPECT_EQ(d.reduced_complement, (IntegerSet{0, 1, 4, 5}));
  EXPECT_TRUE(d.valid());
}

}  // namespace
