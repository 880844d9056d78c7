#include <gtest/gtest.h>

#include <random>

#include "maplab/permutation.hpp"

namespace maplab {
namespace {

using Parts = std::vector<std::size_t>;

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{1});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

TEST(Permutation, CanonicalPermutations) {
  EXPECT_EQ(canonical_permutation(Partition({4, 3})).to_string(), "(1 2 3 4)(5 6 7)");
  EXPECT_EQ(canonical_permutation(Partition({3, 2, 2})).to_string(), "(1 2 3)(4 5)(6 7)");
  EXPECT_TRUE(canonical_permutation(Partition({1, 1})).is_identity());
  EXPECT_EQ(canonical_permutation(Partition({1, 1})).degree(), 2u);
}

TEST(Permutation, ComposeAppliesLeftFactorFirst) {
  const Permutation sigma0 = canonical_permutation(Partition({4, 3}));
  const Permutation omega0 = canonical_permutation(Partition({3, 2, 2}));
  const Permutation pi = Permutation::from_cycles(7, {{2, 3, 5}, {4, 7, 6}});
  const Permutation product = compose(compose(compose(sigma0, pi), omega0), inverse(pi));
  EXPECT_EQ(product.to_string(), "(1)(2 6 4 5 3 7)");

  // Left-to-right: (12) then (23) sends 1 -> 2 -> 3.
  const Permutation a = Permutation::from_cycles(3, {{1, 2}});
  const Permutation b = Permutation::from_cycles(3, {{2, 3}});
  EXPECT_EQ(compose(a, b)(1), 3u);
}

TEST(Permutation, ComposeIdentityAndInvolution) {
  const Permutation p = Permutation::from_cycles(5, {{1, 4, 2}});
  EXPECT_EQ(compose(p, Permutation::identity(5)), p);
  const Permutation t = Permutation::from_cycles(2, {{1, 2}});
  EXPECT_TRUE(compose(t, t).is_identity());
  EXPECT_THROW(compose(p, t), std::invalid_argument);
}

TEST(Permutation, Inverse) {
  const Permutation p = Permutation::from_cycles(7, {{2, 3, 5}, {4, 7, 6}});
  EXPECT_EQ(inverse(p), Permutation::from_cycles(7, {{2, 5, 3}, {4, 6, 7}}));
  EXPECT_TRUE(inverse(Permutation::identity(4)).is_identity());
  const Permutation t = Permutation::from_cycles(2, {{1, 2}});
  EXPECT_EQ(inverse(t), t);
}

TEST(Permutation, CycleTypeAndCount) {
  const Permutation p = Permutation::from_cycles(7, {{2, 6, 4, 5, 3, 7}});
  EXPECT_EQ(p.cycle_type(), Partition({6, 1}));
  EXPECT_EQ(p.cycle_count(), 2u);
  EXPECT_EQ(Permutation::identity(5).cycle_type(), Partition({1, 1, 1, 1, 1}));
  EXPECT_EQ(Permutation::identity(5).cycle_count(), 5u);
  const Permutation c5 = Permutation::from_cycles(5, {{1, 2, 3, 4, 5}});
  EXPECT_EQ(c5.cycle_type(), Partition({5}));
  EXPECT_EQ(c5.cycle_count(), 1u);
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation::from_images({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_images({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_images({3, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_cycles(3, {{1, 4}}), std::invalid_argument);
}

TEST(Permutation, PropertyGroupLaws) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::size_t n = 1 + rng() % 12;
    const Permutation p = random_permutation(n, rng);
    const Permutation q = random_permutation(n, rng);
    const Permutation r = random_permutation(n, rng);
    ASSERT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
    ASSERT_TRUE(compose(p, inverse(p)).is_identity());
    ASSERT_TRUE(compose(inverse(p), p).is_identity());
    // Conjugation keeps the cycle structure.
    ASSERT_EQ(compose(inverse(q), compose(p, q)).cycle_count(), p.cycle_count());
    ASSERT_EQ(compose(inverse(q), compose(p, q)).cycle_type(), p.cycle_type());
    ASSERT_EQ(p.cycle_type().size(), n);
    ASSERT_EQ(p.cycle_type().length(), p.cycle_count());
    for (std::size_t x = 1; x <= n; ++x) ASSERT_EQ(compose(p, q)(x), q(p(x)));
  }
}

}  // namespace
}  // namespace maplab
