#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support/oracles.hpp"
#include "unital/appendix.hpp"
#include "unital/design.hpp"

using namespace unital;
using unital::testing::affine_plane_3_lines;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST(Design, AffinePlaneOfOrderThreeIsUnitalOfOrderTwo) {
  const auto lines = affine_plane_3_lines();
  ASSERT_EQ(lines.size(), 12u);
  const auto u = validate_unital(9, lines);
  EXPECT_EQ(u.order(), 2u);
  EXPECT_EQ(u.num_points(), 9u);
  EXPECT_EQ(u.num_blocks(), 12u);
  EXPECT_EQ(u.block_size(), 3u);
}

TEST(Design, RepeatedBlockIsRejected) {
  auto lines = affine_plane_3_lines();
  lines.back() = lines.front();
  EXPECT_EQ(code_of([&] { validate_unital(9, lines); }), ErrorCode::NotAUnital);
}

TEST(Design, MalformedInputsAreRejected) {
  auto lines = affine_plane_3_lines();
  EXPECT_EQ(code_of([&] { validate_unital(9, {}); }), ErrorCode::NotAUnital);
  EXPECT_EQ(code_of([&] { validate_unital(10, lines); }), ErrorCode::NotAUnital);

  auto short_block = lines;
  short_block[3].pop_back();
  EXPECT_EQ(code_of([&] { validate_unital(9, short_block); }), ErrorCode::NotAUnital);

  auto missing = lines;
  missing.pop_back();
  EXPECT_EQ(code_of([&] { validate_unital(9, missing); }), ErrorCode::NotAUnital);

  auto out_of_range = lines;
  out_of_range[0][0] = 9;
  EXPECT_EQ(code_of([&] { validate_unital(9, out_of_range); }), ErrorCode::NotAUnital);

  auto repeated_point = lines;
  repeated_point[0][1] = repeated_point[0][0];
  EXPECT_EQ(code_of([&] { validate_unital(9, repeated_point); }), ErrorCode::NotAUnital);
}

TEST(Design, SwappedPointBreaksPairCoverage) {
  auto blocks = affine_plane_3_lines();
  // Replace one point of a block with another point on it; a pair is now
  // covered twice and another not at all.
  auto blk = blocks[0];
  for (PointId p = 0; p < 9; ++p) {
    if (std::find(blk.begin(), blk.end(), p) == blk.end()) {
      blocks[0][2] = p;
      break;
    }
  }
  EXPECT_EQ(code_of([&] { validate_unital(9, blocks); }), ErrorCode::NotAUnital);
}

TEST(Design, AppendixUnitalValidates) {
  const auto u = builtin_appendix_unital();
  EXPECT_EQ(u.order(), 4u);
  EXPECT_EQ(u.num_points(), 65u);
  EXPECT_EQ(u.num_blocks(), 208u);
}

TEST(Design, AppendixBlockLookups) {
  const auto u = builtin_appendix_unital();
  const BlockIndex b12 = u.block_through(0, 1);
  EXPECT_EQ(b12, 0u);
  const auto blk = u.block(b12);
  EXPECT_EQ(std::vector<PointId>(blk.begin(), blk.end()), (std::vector<PointId>{0, 1, 54, 63, 64}));

  const BlockIndex b35 = u.block_through(2, 4);
  EXPECT_EQ(b35, 32u);
  const auto blk35 = u.block(b35);
  EXPECT_EQ(std::vector<PointId>(blk35.begin(), blk35.end()), (std::vector<PointId>{2, 4, 9, 38, 58}));
}

TEST(Design, AppendixDisjointness) {
  const auto u = builtin_appendix_unital();
  EXPECT_TRUE(u.blocks_disjoint(0, 32));
  EXPECT_FALSE(u.blocks_disjoint(0, 1));
  for (BlockIndex b = 0; b < u.num_blocks(); ++b) EXPECT_FALSE(u.blocks_disjoint(b, b));
}

TEST(Design, DisjointnessMatchesSetIntersection) {
  const auto u = builtin_appendix_unital();
  for (BlockIndex a = 0; a < u.num_blocks(); ++a) {
    const auto A = u.block(a);
    const std::set<PointId> sa(A.begin(), A.end());
    for (BlockIndex b = a + 1; b < u.num_blocks(); ++b) {
      const auto B = u.block(b);
      const bool shared = std::any_of(B.begin(), B.end(), [&](PointId p) { return sa.contains(p); });
      ASSERT_EQ(u.blocks_disjoint(a, b), !shared) << a << "," << b;
      ASSERT_EQ(u.meet(a, b).has_value(), shared);
    }
  }
}

TEST(Design, PairLookupAgreesWithLinearScanAndIsSymmetric) {
  const auto u = builtin_appendix_unital();
  for (PointId p = 0; p < u.num_points(); ++p) {
    for (PointId q = p + 1; q < u.num_points(); ++q) {
      const BlockIndex b = u.block_through(p, q);
      ASSERT_EQ(b, u.block_through(q, p));
      ASSERT_EQ(b, unital::testing::scan_block_through(u, p, q));
    }
  }
}

TEST(Design, ReplicationNumberIsOrderSquared) {
  for (const auto& u : {builtin_appendix_unital(), validate_unital(9, affine_plane_3_lines())}) {
    const std::size_t n = u.order();
    EXPECT_EQ((u.num_points() - 1) / n, n * n);
    for (PointId p = 0; p < u.num_points(); ++p) {
      ASSERT_EQ(u.blocks_through(p).size(), n * n);
      for (BlockIndex b : u.blocks_through(p)) ASSERT_TRUE(u.contains(b, p));
    }
  }
}

TEST(Design, BlocksAreSortedAndPositionsAgree) {
  const auto u = builtin_appendix_unital();
  for (BlockIndex b = 0; b < u.num_blocks(); ++b) {
    const auto blk = u.block(b);
    ASSERT_TRUE(std::is_sorted(blk.begin(), blk.end()));
    for (std::size_t i = 0; i < blk.size(); ++i) ASSERT_EQ(u.position_in_block(b, blk[i]), i);
  }
}

TEST(Design, AppendixFingerprintIsPinned) {
  EXPECT_EQ(appendix_fingerprint(), kAppendixFingerprint);
  EXPECT_EQ(kAppendixBlocks[199], (std::array<std::uint8_t, 5>{30, 31, 35, 46, 48}));
}
