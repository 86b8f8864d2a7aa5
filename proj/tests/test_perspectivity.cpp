#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support/oracles.hpp"
#include "unital/appendix.hpp"
#include "unital/group_catalog.hpp"
#include "unital/perspectivity.hpp"
#include "unital/projective_plane.hpp"

using namespace unital;
using unital::testing::naive_full_points;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolation;
}

std::vector<PointId> as_vector(std::span<const PointId> s) { return {s.begin(), s.end()}; }

PointId hermitian_point(const HermitianEmbedding& emb, std::array<FieldElement, 3> v) {
  return emb.unital_point[emb.plane->index_of(emb.plane->normalize<PointTag>(v))];
}

}  // namespace

TEST(Perspectivity, AppendixPairHasBlock200AsFullPoints) {
  const auto u = builtin_appendix_unital();
  const auto F = full_points(u, 0, 32);
  EXPECT_EQ(F.points, as_vector(u.block(199)));
  EXPECT_EQ(F.points, naive_full_points(u, 0, 32));
}

TEST(Perspectivity, MatchesNaiveScanAndIsSymmetric) {
  const auto u = builtin_appendix_unital();
  for (BlockIndex b1 = 0; b1 < u.num_blocks(); b1 += 5) {
    for (BlockIndex b2 = 0; b2 < u.num_blocks(); b2 += 3) {
      if (b1 == b2) continue;
      const auto F = full_points(u, b1, b2);
      ASSERT_EQ(F.points, naive_full_points(u, b1, b2)) << b1 << "," << b2;
      ASSERT_EQ(F.points, full_points(u, b2, b1).points);
    }
  }
}

TEST(Perspectivity, CountBoundsHoldEverywhere) {
  const auto u = builtin_appendix_unital();
  const std::size_t n = u.order();
  for (BlockIndex b1 = 0; b1 < u.num_blocks(); ++b1) {
    for (BlockIndex b2 = b1 + 1; b2 < u.num_blocks(); ++b2) {
      const auto F = full_points(u, b1, b2);
      const bool disjoint = u.blocks_disjoint(b1, b2);
      ASSERT_LE(F.size(), disjoint ? n * n - 1 : n * n - n);
      for (PointId P : F.points) ASSERT_FALSE(u.contains(b1, P) || u.contains(b2, P));
    }
  }
  EXPECT_EQ(full_point_bound(4, true), 15u);
  EXPECT_EQ(full_point_bound(4, false), 12u);
}

TEST(Perspectivity, SameBlockIsAnError) {
  const auto u = builtin_appendix_unital();
  EXPECT_EQ(code_of([&] { full_points(u, 3, 3); }), ErrorCode::SameBlock);
}

TEST(Perspectivity, MapsAreBijectionsAndInvertible) {
  const auto u = builtin_appendix_unital();
  const auto F = full_points(u, 0, 32);
  std::set<std::vector<Perm::point_type>> distinct;
  for (PointId P : F.points) {
    const auto fwd = perspectivity_map(u, 0, P, 32);
    const auto back = perspectivity_map(u, 32, P, 0);
    EXPECT_EQ(fwd.as_perm() * back.as_perm(), Perm::identity(5));
    // Image of position i is the point of b2 on the block through P and b1[i].
    for (std::size_t i = 0; i < 5; ++i) {
      const PointId Q = u.block(0)[i];
      const PointId R = u.block(32)[fwd.images[i]];
      EXPECT_EQ(u.block_through(P, Q), u.block_through(P, R));
    }
    distinct.insert(fwd.images);
  }
  EXPECT_EQ(distinct.size(), F.size());
  EXPECT_EQ(code_of([&] { perspectivity_map(u, 0, 0, 32); }), ErrorCode::NotAFullPoint);
  EXPECT_EQ(code_of([&] { perspectivity_map(u, 0, 2, 32); }), ErrorCode::NotAFullPoint);
}

TEST(Perspectivity, AppendixGroupGoldenValue) {
  const auto u = builtin_appendix_unital();
  const auto G = persp_group(u, 0, 32);
  EXPECT_EQ(G.order(), 120u);
  EXPECT_EQ(structure_name(G), "S5");
  EXPECT_FALSE(G.is_cyclic());
  EXPECT_FALSE(G.is_semiregular());
  EXPECT_EQ(persp_group(u, 32, 0).order(), G.order());
}

TEST(Perspectivity, GroupOrderAtLeastFullPointCountAndSymmetric) {
  const auto u = builtin_appendix_unital();
  for (BlockIndex b1 = 0; b1 < u.num_blocks(); ++b1) {
    for (BlockIndex b2 = b1 + 1; b2 < u.num_blocks(); ++b2) {
      if (!u.blocks_disjoint(b1, b2)) continue;
      const auto F = full_points(u, b1, b2);
      if (F.empty()) {
        ASSERT_EQ(code_of([&] { persp_group(u, F); }), ErrorCode::NoFullPoints);
        continue;
      }
      const auto G = persp_group(u, F);
      ASSERT_GE(G.order(), F.size());
      ASSERT_EQ(G.order(), persp_group(u, b2, b1).order());
      if (F.size() == 1) ASSERT_TRUE(G.is_trivial());
    }
  }
}

TEST(Perspectivity, HermitianPolarTriangleProjection) {
  // Sides X1=0, X2=0, X3=0 with A_i=(0,1,e^i), B_j=(e^j,0,1), C_k=(1,e^k,0):
  // A_i projects from C_k to B_{-i-k}.
  for (unsigned q : {2u, 4u}) {
    const auto emb = hermitian_unital(q);
    const auto& F = emb.plane->field();
    const auto eps = F.roots_of_unity(q + 1);
    const auto zero = F.zero(), one = F.one();
    auto block_of_line = [&](std::array<FieldElement, 3> l) {
      return emb.block_on_line[emb.plane->index_of(emb.plane->normalize<LineTag>(l))];
    };
    const BlockIndex b1 = block_of_line({one, zero, zero});
    const BlockIndex b2 = block_of_line({zero, one, zero});
    const BlockIndex b3 = block_of_line({zero, zero, one});
    ASSERT_NE(b1, kNoBlock);
    const auto Fp = full_points(emb.unital, b1, b2);
    EXPECT_EQ(Fp.points, as_vector(emb.unital.block(b3)));

    const int m = static_cast<int>(q + 1);
    for (int k = 0; k < m; ++k) {
      const PointId C = hermitian_point(emb, {one, eps[k], zero});
      const auto pi = perspectivity_map(emb.unital, b1, C, b2);
      for (int i = 0; i < m; ++i) {
        const PointId A = hermitian_point(emb, {zero, one, eps[i]});
        const PointId B = hermitian_point(emb, {eps[((-i - k) % m + m) % m], zero, one});
        const auto posA = *emb.unital.position_in_block(b1, A);
        EXPECT_EQ(emb.unital.block(b2)[pi.images[posA]], B) << "q=" << q << " i=" << i << " k=" << k;
      }
    }
  }
}

TEST(Perspectivity, HermitianGroupsAreCyclicSemiregular) {
  for (unsigned q : {3u, 4u}) {
    const auto emb = hermitian_unital(q);
    const auto& U = emb.unital;
    for (BlockIndex b1 = 0; b1 < U.num_blocks(); ++b1) {
      for (BlockIndex b2 = b1 + 1; b2 < U.num_blocks(); ++b2) {
        if (!U.blocks_disjoint(b1, b2)) continue;
        const auto F = full_points(U, b1, b2);
        if (F.size() < 2) continue;
        const auto G = persp_group(U, F);
        ASSERT_TRUE(G.is_cyclic());
        ASSERT_TRUE(G.is_semiregular());
        ASSERT_EQ((q * q - 1) % G.order(), 0u);
      }
    }
  }
}
