#include "negacode/cosets.hpp"

#include <gtest/gtest.h>

#include "negacode/error.hpp"
#include "oracles.hpp"

namespace negacode {
namespace {

TEST(CosetContext, Validation) {
  EXPECT_THROW(CosetContext(0, 3), Error);
  EXPECT_THROW(CosetContext(10, 1), Error);
  EXPECT_THROW(CosetContext(12, 3), Error);  // gcd(12, 3) = 3
  EXPECT_THROW(CosetContext(5, 4), Error);   // q even, not invertible mod 2n
  const CosetContext ctx(10, 3);
  EXPECT_EQ(ctx.two_n(), 20U);
  EXPECT_EQ(ctx.s(), 5U);
  EXPECT_EQ(ctx.multiplier(), 9U);
  EXPECT_FALSE(CosetContext(9, 5).s());
}

TEST(Coset, SmallExamples) {
  const CosetContext ctx(10, 3);
  EXPECT_EQ(coset(ctx, 5).elements, (ResidueSet{5}));
  EXPECT_EQ(coset(ctx, 15).elements, (ResidueSet{15}));
  const CyclotomicCoset c7 = coset(ctx, 7);
  EXPECT_EQ(c7.elements, testing::naive_orbit(7, 3, 10));
  EXPECT_EQ(c7.elements, (ResidueSet{3, 7}));
  EXPECT_EQ(c7.representative, 3U);
}

TEST(Coset, RejectsBadResidues) {
  const CosetContext ctx(10, 3);
  try {
    coset(ctx, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::even_residue);
  }
  EXPECT_THROW(coset(ctx, 21), Error);
}

TEST(AllCosets, PartitionForLengthTen) {
  const CosetContext ctx(10, 3);
  const auto cosets = all_cosets(ctx);
  std::vector<ResidueSet> got;
  for (const auto& c : cosets) got.push_back(c.elements);
  const std::vector<ResidueSet> expected{{1, 9}, {3, 7}, {5}, {11, 19}, {13, 17}, {15}};
  EXPECT_EQ(got, expected);
}

TEST(AllCosets, TwoSingletonsAndPairsForLength122) {
  const CosetContext ctx(122, 11);
  const auto cosets = all_cosets(ctx);
  std::size_t singles = 0;
  std::size_t pairs = 0;
  std::size_t total = 0;
  for (const auto& c : cosets) {
    total += c.size();
    if (c.size() == 1) {
      ++singles;
      EXPECT_TRUE(c.representative == 61 || c.representative == 183);
    } else if (c.size() == 2) {
      ++pairs;
      // {s - 2l, s + 2l} with s = 61
      EXPECT_EQ((c.elements[0] + c.elements[1]) % 244, 122U);
    }
  }
  EXPECT_EQ(singles, 2U);
  EXPECT_EQ(pairs, 60U);
  EXPECT_EQ(total, 122U);
}

TEST(NegQImage, Examples) {
  const CosetContext ctx(10, 3);
  const ResidueSet five{5};
  EXPECT_EQ(neg_q_image(ctx, five), five);
  const ResidueSet z{1, 3, 5, 7, 9, 11, 13, 17, 19};
  EXPECT_EQ(neg_q_image(ctx, z), z);
  EXPECT_TRUE(neg_q_image(ctx, ResidueSet{}).empty());
}

TEST(NegQCosetImage, Examples) {
  const CosetContext ctx(10, 3);
  EXPECT_EQ(neg_q_coset_image(ctx, coset(ctx, 5)).elements, (ResidueSet{5}));
  // -3 * 3 = 11 and -3 * 7 = 19 (mod 20).
  const CyclotomicCoset img = neg_q_coset_image(ctx, coset(ctx, 3));
  EXPECT_EQ(img.elements, (ResidueSet{11, 19}));
  EXPECT_EQ(neg_q_coset_image(ctx, img), coset(ctx, 3));
}

TEST(NegQCosetImage, SingletonsFollowQModFour) {
  // q = 11 = 3 (mod 4): C_s fixed.  q = 13 = 1 (mod 4): C_s <-> C_{3s}.
  const CosetContext c11(122, 11);
  EXPECT_EQ(neg_q_coset_image(c11, coset(c11, 61)).representative, 61U);
  const CosetContext c13(170, 13);
  EXPECT_EQ(neg_q_coset_image(c13, coset(c13, 85)).representative, 255U);
}

TEST(SetOps, MergeSemantics) {
  const ResidueSet a{1, 3, 5};
  const ResidueSet b{3, 7};
  EXPECT_EQ(set_union(a, b), (ResidueSet{1, 3, 5, 7}));
  EXPECT_EQ(set_intersection(a, b), (ResidueSet{3}));
  EXPECT_EQ(set_difference(a, b), (ResidueSet{1, 5}));
}

}  // namespace
}  // namespace negacode
