#pragma once

// Full points of block pairs and the perspectivities they induce.
//
// P is a full point of (b1, b2) when P lies on neither block and every
// block joining P to a point of b1 meets b2. Perspectivities act on block
// positions 0..n (index into the sorted block), not on point ids.

#include <cstddef>
#include <string>
#include <vector>

#include "unital/design.hpp"
#include "unital/error.hpp"
#include "unital/permgroup.hpp"

namespace unital {

struct FullPointSet {
  BlockIndex b1 = 0;
  BlockIndex b2 = 0;
  std::vector<PointId> points;

  std::size_t size() const noexcept { return points.size(); }
  bool empty() const noexcept { return points.empty(); }
};

struct Perspectivity {
  PointId center = 0;
  BlockIndex source = 0;
  BlockIndex target = 0;
  /// images[i] = position in `target` of the image of position i of `source`.
  std::vector<Perm::point_type> images;

  Perm as_perm() const { return Perm(images); }
};

/// For each block c, the position in `target` of the point where c meets
/// it, or -1 if c misses `target`. The entry for `target` itself is -1.
inline std::vector<int> meet_positions(const AbstractUnital& u, BlockIndex target) {
  std::vector<int> pos(u.num_blocks(), -1);
  const auto blk = u.block(target);
  for (std::size_t i = 0; i < blk.size(); ++i) {
    for (BlockIndex c : u.blocks_through(blk[i])) pos[c] = static_cast<int>(i);
  }
  pos[target] = -1;
  return pos;
}

/// Largest full-point count allowed for the pair: n^2-n if the blocks
/// meet, n^2-1 if they are disjoint.
inline std::size_t full_point_bound(std::size_t n, bool disjoint) {
  return disjoint ? n * n - 1 : n * n - n;
}

inline FullPointSet full_points(const AbstractUnital& u, BlockIndex b1, BlockIndex b2) {
  if (b1 == b2) throw Error(ErrorCode::SameBlock, "full points need two distinct blocks");
  const auto on_b2 = meet_positions(u, b2);
  const auto src = u.block(b1);

  FullPointSet F{b1, b2, {}};
  for (PointId P = 0; P < u.num_points(); ++P) {
    if (u.contains(b1, P) || u.contains(b2, P)) continue;
    bool full = true;
    for (PointId Q : src) {
      if (on_b2[u.block_through(P, Q)] < 0) {
        full = false;
        break;
      }
    }
    if (full) F.points.push_back(P);
  }

  const bool disjoint = u.blocks_disjoint(b1, b2);
  if (F.size() > full_point_bound(u.order(), disjoint)) {
    throw Error(ErrorCode::InvariantViolation,
                "blocks " + std::to_string(b1 + 1) + "," + std::to_string(b2 + 1) + " have " +
                    std::to_string(F.size()) + " full points, above the bound " +
                    std::to_string(full_point_bound(u.order(), disjoint)));
  }
  return F;
}

inline bool is_full_point(const AbstractUnital& u, BlockIndex b1, PointId P, BlockIndex b2) {
  if (b1 == b2 || u.contains(b1, P) || u.contains(b2, P)) return false;
  const auto on_b2 = meet_positions(u, b2);
  for (PointId Q : u.block(b1))
    if (on_b2[u.block_through(P, Q)] < 0) return false;
  return true;
}

/// The projection of b1 onto b2 with center P.
inline Perspectivity perspectivity_map(const AbstractUnital& u, BlockIndex b1, PointId P, BlockIndex b2) {
  if (!is_full_point(u, b1, P, b2)) {
    throw Error(ErrorCode::NotAFullPoint, "point " + std::to_string(P + 1) + " is not a full point of blocks " +
                                              std::to_string(b1 + 1) + "," + std::to_string(b2 + 1));
  }
  const auto on_b2 = meet_positions(u, b2);
  Perspectivity pi{P, b1, b2, {}};
  for (PointId Q : u.block(b1)) {
    pi.images.push_back(static_cast<Perm::point_type>(on_b2[u.block_through(P, Q)]));
  }
  return pi;
}

/// Group on the positions of b1 generated by pi_{b1,P,b2} pi_{b2,Q,b1}
/// over all ordered pairs of full points P, Q.
inline PermGroup persp_group(const AbstractUnital& u, const FullPointSet& F) {
  if (F.empty()) throw Error(ErrorCode::NoFullPoints, "no full points");
  const auto to_b2 = meet_positions(u, F.b2);
  const auto to_b1 = meet_positions(u, F.b1);
  const auto src = u.block(F.b1);
  const auto dst = u.block(F.b2);
  const std::size_t d = src.size();

  std::vector<std::vector<Perm::point_type>> forward, backward;
  for (PointId P : F.points) {
    std::vector<Perm::point_type> f(d), g(d);
    for (std::size_t i = 0; i < d; ++i) {
      f[i] = static_cast<Perm::point_type>(to_b2[u.block_through(P, src[i])]);
      g[i] = static_cast<Perm::point_type>(to_b1[u.block_through(P, dst[i])]);
    }
    forward.push_back(std::move(f));
    backward.push_back(std::move(g));
  }
  std::vector<Perm> gens;
  for (const auto& f : forward) {
    for (const auto& g : backward) {
      std::vector<Perm::point_type> images(d);
      for (std::size_t i = 0; i < d; ++i) images[i] = g[f[i]];
      gens.emplace_back(std::move(images));
    }
  }
  return PermGroup::closure(d, std::move(gens));
}

inline PermGroup persp_group(const AbstractUnital& u, BlockIndex b1, BlockIndex b2) {
  return persp_group(u, full_points(u, b1, b2));
}

}  // namespace unital
