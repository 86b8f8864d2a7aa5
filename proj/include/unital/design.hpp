#pragma once

// Abstract unitals: 2-(n^3+1, n+1, 1) designs.
//
// Points and blocks are 0-based throughout the library. Files and the CLI
// use 1-based point ids and block numbers; conversion happens in io.hpp.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unital/error.hpp"

namespace unital {

using PointId = std::uint32_t;
using BlockIndex = std::uint32_t;

inline constexpr BlockIndex kNoBlock = static_cast<BlockIndex>(-1);

/// Validated abstract unital of order n >= 2. Immutable once built.
class AbstractUnital {
 public:
  static constexpr std::size_t kMaxOrder = 16;

  /// Validates `raw_blocks` (0-based point ids) as a 2-(n^3+1, n+1, 1)
  /// design on `num_points` points; n is read off the block size.
  /// Throws Error(NotAUnital) naming the first violated axiom.
  static AbstractUnital validate(std::size_t num_points,
                                 std::vector<std::vector<PointId>> raw_blocks) {
    auto fail = [](const std::string& reason) { throw Error(ErrorCode::NotAUnital, reason); };

    if (raw_blocks.empty()) fail("no blocks");
    const std::size_t block_size = raw_blocks.front().size();
    if (block_size < 3) fail("blocks must have at least 3 points");
    const std::size_t n = block_size - 1;
    if (n > kMaxOrder) {
      throw Error(ErrorCode::TooLarge, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
    }

    for (std::size_t b = 0; b < raw_blocks.size(); ++b) {
      auto& blk = raw_blocks[b];
      if (blk.size() != block_size) {
        fail("block " + std::to_string(b + 1) + " has " + std::to_string(blk.size()) +
             " points, expected " + std::to_string(block_size));
      }
      std::sort(blk.begin(), blk.end());
      if (std::adjacent_find(blk.begin(), blk.end()) != blk.end()) {
        fail("block " + std::to_string(b + 1) + " repeats a point");
      }
      if (blk.back() >= num_points) {
        fail("block " + std::to_string(b + 1) + " has point id " + std::to_string(blk.back() + 1) +
             " beyond " + std::to_string(num_points));
      }
    }

    if (num_points != n * n * n + 1) {
      fail("point count " + std::to_string(num_points) + " is not n^3+1 for block size " +
           std::to_string(block_size));
    }

    AbstractUnital u;
    u.order_ = n;
    u.num_points_ = num_points;
    u.block_size_ = block_size;
    u.pair_block_.assign(num_points * (num_points - 1) / 2, kNoBlock);
    for (std::size_t b = 0; b < raw_blocks.size(); ++b) {
      const auto& blk = raw_blocks[b];
      for (std::size_t i = 0; i < blk.size(); ++i) {
        for (std::size_t j = i + 1; j < blk.size(); ++j) {
          auto& slot = u.pair_block_[pair_slot(blk[i], blk[j])];
          if (slot != kNoBlock) {
            fail("points " + std::to_string(blk[i] + 1) + " and " + std::to_string(blk[j] + 1) +
                 " lie on blocks " + std::to_string(slot + 1) + " and " + std::to_string(b + 1));
          }
          slot = static_cast<BlockIndex>(b);
        }
      }
    }

    const std::size_t expected_blocks = n * n * (n * n - n + 1);
    if (raw_blocks.size() != expected_blocks) {
      fail("block count " + std::to_string(raw_blocks.size()) + ", expected " +
           std::to_string(expected_blocks));
    }
    for (PointId q = 1; q < num_points; ++q) {
      for (PointId p = 0; p < q; ++p) {
        if (u.pair_block_[pair_slot(p, q)] == kNoBlock) {
          fail("points " + std::to_string(p + 1) + " and " + std::to_string(q + 1) +
               " lie on no block");
        }
      }
    }

    u.points_.reserve(raw_blocks.size() * block_size);
    for (const auto& blk : raw_blocks) u.points_.insert(u.points_.end(), blk.begin(), blk.end());

    u.blocks_through_offset_.assign(num_points + 1, 0);
    for (PointId p : u.points_) ++u.blocks_through_offset_[p + 1];
    for (std::size_t p = 0; p < num_points; ++p) {
      u.blocks_through_offset_[p + 1] += u.blocks_through_offset_[p];
    }
    u.blocks_through_.resize(u.points_.size());
    std::vector<std::size_t> fill(u.blocks_through_offset_.begin(), u.blocks_through_offset_.end() - 1);
    for (std::size_t b = 0; b < raw_blocks.size(); ++b) {
      for (PointId p : raw_blocks[b]) u.blocks_through_[fill[p]++] = static_cast<BlockIndex>(b);
    }
    return u;
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t num_points() const noexcept { return num_points_; }
  std::size_t num_blocks() const noexcept { return points_.size() / block_size_; }
  std::size_t block_size() const noexcept { return block_size_; }

  /// Sorted points of block `b`.
  std::span<const PointId> block(BlockIndex b) const {
    return {points_.data() + std::size_t{b} * block_size_, block_size_};
  }

  /// The unique block through two distinct points.
  BlockIndex block_through(PointId p, PointId q) const {
    assert(p != q);
    return pair_block_[pair_slot(p, q)];
  }

  /// Blocks containing `p`, ascending.
  std::span<const BlockIndex> blocks_through(PointId p) const {
    const std::size_t begin = blocks_through_offset_[p];
    return {blocks_through_.data() + begin, blocks_through_offset_[p + 1] - begin};
  }

  bool contains(BlockIndex b, PointId p) const {
    const PointId first = block(b).front();
    return p == first || block_through(p, first) == b;
  }

  /// Common point of two distinct blocks, if any.
  std::optional<PointId> meet(BlockIndex a, BlockIndex b) const {
    if (a == b) return std::nullopt;
    for (PointId p : block(a)) {
      if (contains(b, p)) return p;
    }
    return std::nullopt;
  }

  bool blocks_disjoint(BlockIndex a, BlockIndex b) const { return a != b && !meet(a, b); }

  /// Position of `p` within the sorted block, or nullopt.
  std::optional<std::size_t> position_in_block(BlockIndex b, PointId p) const {
    auto blk = block(b);
    auto it = std::lower_bound(blk.begin(), blk.end(), p);
    if (it == blk.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - blk.begin());
  }

  std::vector<std::vector<PointId>> blocks() const {
    std::vector<std::vector<PointId>> out;
    out.reserve(num_blocks());
    for (BlockIndex b = 0; b < num_blocks(); ++b) {
      auto blk = block(b);
      out.emplace_back(blk.begin(), blk.end());
    }
    return out;
  }

 private:
  AbstractUnital() = default;

  static std::size_t pair_slot(PointId p, PointId q) {
    if (p > q) std::swap(p, q);
    return std::size_t{q} * (q - 1) / 2 + p;
  }

  std::size_t order_ = 0;
  std::size_t num_points_ = 0;
  std::size_t block_size_ = 0;
  std::vector<PointId> points_;
  std::vector<BlockIndex> pair_block_;
  std::vector<std::size_t> blocks_through_offset_;
  std::vector<BlockIndex> blocks_through_;
};

inline AbstractUnital validate_unital(std::size_t num_points,
                                      std::vector<std::vector<PointId>> raw_blocks) {
  return AbstractUnital::validate(num_points, std::move(raw_blocks));
}

}  // namespace unital
