#pragma once

// Embedded dual k-nets and their coordinate latin squares.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "unital/design.hpp"
#include "unital/error.hpp"
#include "unital/group_catalog.hpp"
#include "unital/parallel.hpp"
#include "unital/permgroup.hpp"
#include "unital/perspectivity.hpp"

namespace unital {

struct DualKNet {
  std::vector<BlockIndex> blocks;

  std::size_t k() const noexcept { return blocks.size(); }
  friend auto operator<=>(const DualKNet&, const DualKNet&) = default;
};

/// Square of order m over the symbols 0..m-1, stored row-major.
class LatinSquare {
 public:
  using symbol_type = std::uint32_t;

  /// Throws InvalidArgument unless every row and column is a permutation.
  static LatinSquare from_rows(const std::vector<std::vector<symbol_type>>& rows) {
    LatinSquare L;
    L.m_ = rows.size();
    for (const auto& r : rows) {
      if (r.size() != L.m_) throw Error(ErrorCode::InvalidArgument, "latin square must be square");
      L.cells_.insert(L.cells_.end(), r.begin(), r.end());
    }
    if (!L.is_latin()) throw Error(ErrorCode::InvalidArgument, "rows or columns repeat a symbol");
    return L;
  }

  /// Cayley table of Z_m.
  static LatinSquare cyclic(std::size_t m) {
    std::vector<std::vector<symbol_type>> rows(m, std::vector<symbol_type>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) rows[i][j] = static_cast<symbol_type>((i + j) % m);
    return from_rows(rows);
  }

  std::size_t order() const noexcept { return m_; }
  symbol_type operator()(std::size_t row, std::size_t col) const { return cells_[row * m_ + col]; }

  std::vector<std::vector<symbol_type>> rows() const {
    std::vector<std::vector<symbol_type>> out(m_);
    for (std::size_t i = 0; i < m_; ++i) out[i].assign(cells_.begin() + i * m_, cells_.begin() + (i + 1) * m_);
    return out;
  }

  /// Rows of space-separated symbols, one row per line.
  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) out << (j ? " " : "") << (*this)(i, j);
      out << '\n';
    }
    return out.str();
  }

  bool is_latin() const {
    for (std::size_t i = 0; i < m_; ++i) {
      std::vector<bool> row(m_, false), col(m_, false);
      for (std::size_t j = 0; j < m_; ++j) {
        const auto r = (*this)(i, j), c = (*this)(j, i);
        if (r >= m_ || c >= m_ || row[r] || col[c]) return false;
        row[r] = col[c] = true;
      }
    }
    return true;
  }

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<symbol_type> cells_;
};

inline bool is_dual_knet(const AbstractUnital& u, const std::vector<BlockIndex>& blocks) {
  if (blocks.size() < 3) throw Error(ErrorCode::TooFewBlocks, "a dual k-net needs k >= 3 blocks");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (!u.blocks_disjoint(blocks[i], blocks[j])) return false;

  std::vector<std::vector<int>> meets;
  for (BlockIndex b : blocks) meets.push_back(meet_positions(u, b));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      for (PointId P : u.block(blocks[i])) {
        for (PointId Q : u.block(blocks[j])) {
          const BlockIndex c = u.block_through(P, Q);
          for (std::size_t s = 0; s < blocks.size(); ++s) {
            if (s != i && s != j && meets[s][c] < 0) return false;
          }
        }
      }
    }
  }
  return true;
}

/// Blocks lying entirely inside the full-point set, ascending.
inline std::vector<BlockIndex> blocks_inside(const AbstractUnital& u, const FullPointSet& F) {
  std::vector<bool> in_f(u.num_points(), false);
  for (PointId p : F.points) in_f[p] = true;
  std::set<BlockIndex> inside;
  for (PointId p : F.points) {
    for (BlockIndex c : u.blocks_through(p)) {
      const auto blk = u.block(c);
      if (std::all_of(blk.begin(), blk.end(), [&](PointId x) { return in_f[x]; })) inside.insert(c);
    }
  }
  return {inside.begin(), inside.end()};
}

/// Maximal embedded dual k-nets. A set {b1, b2, c1, .., cm} is a net exactly
/// when the c's lie inside F(b1, b2), so every disjoint pair is extended by
/// the blocks inside its full-point set.
inline std::vector<DualKNet> find_dual_knets(const AbstractUnital& u, std::size_t threads = 1) {
  std::vector<std::set<DualKNet>> per_block(u.num_blocks());
  parallel_for(u.num_blocks(), threads, [&](std::size_t i) {
    const auto b1 = static_cast<BlockIndex>(i);
    for (BlockIndex b2 = b1 + 1; b2 < u.num_blocks(); ++b2) {
      if (!u.blocks_disjoint(b1, b2)) continue;
      const auto F = full_points(u, b1, b2);
      if (F.size() < u.block_size()) continue;
      auto inside = blocks_inside(u, F);
      if (inside.empty()) continue;
      inside.push_back(b1);
      inside.push_back(b2);
      std::sort(inside.begin(), inside.end());
      per_block[i].insert(DualKNet{std::move(inside)});
    }
  });
  std::set<DualKNet> all;
  for (auto& s : per_block) all.insert(s.begin(), s.end());
  return {all.begin(), all.end()};
}

/// Every embedded dual 3-net, as sorted triples.
inline std::vector<DualKNet> find_dual_3nets(const AbstractUnital& u, std::size_t threads = 1) {
  std::set<DualKNet> triples;
  for (const auto& net : find_dual_knets(u, threads)) {
    const auto& b = net.blocks;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        for (std::size_t l = j + 1; l < b.size(); ++l) triples.insert(DualKNet{{b[i], b[j], b[l]}});
  }
  return {triples.begin(), triples.end()};
}

/// k <= n-1, and no full-point set of a pair in the net holds more than
/// n-3 whole blocks. Orders below 3 fall outside the bound and pass.
inline bool max_knet_check(const AbstractUnital& u, const DualKNet& net) {
  const std::size_t n = u.order();
  if (n < 3) return true;
  if (net.k() > n - 1) return false;
  for (std::size_t i = 0; i < net.k(); ++i) {
    for (std::size_t j = i + 1; j < net.k(); ++j) {
      if (blocks_inside(u, full_points(u, net.blocks[i], net.blocks[j])).size() > n - 3) return false;
    }
  }
  return true;
}

/// L(i, j) = s where the block through the i-th point of b1 and the j-th
/// point of b2 meets b3 in its s-th point; points labeled in sorted order.
inline LatinSquare latin_square_from_3net(const AbstractUnital& u, const DualKNet& net) {
  if (net.k() != 3 || !is_dual_knet(u, net.blocks)) {
    throw Error(ErrorCode::NotA3Net, "blocks do not form an embedded dual 3-net");
  }
  const auto b1 = u.block(net.blocks[0]);
  const auto b2 = u.block(net.blocks[1]);
  const auto on_b3 = meet_positions(u, net.blocks[2]);
  std::vector<std::vector<LatinSquare::symbol_type>> rows(b1.size(), std::vector<LatinSquare::symbol_type>(b2.size()));
  for (std::size_t i = 0; i < b1.size(); ++i)
    for (std::size_t j = 0; j < b2.size(); ++j)
      rows[i][j] = static_cast<LatinSquare::symbol_type>(on_b3[u.block_through(b1[i], b2[j])]);
  return LatinSquare::from_rows(rows);
}

/// The six squares obtained by permuting the roles of row, column and
/// symbol. Index 0 is L itself, index 1 its transpose.
inline std::array<LatinSquare, 6> parastrophes(const LatinSquare& L) {
  constexpr std::array<std::array<int, 3>, 6> roles = {{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0}}};
  const std::size_t m = L.order();
  std::array<LatinSquare, 6> out;
  for (std::size_t r = 0; r < roles.size(); ++r) {
    std::vector<std::vector<LatinSquare::symbol_type>> rows(m, std::vector<LatinSquare::symbol_type>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const std::array<std::size_t, 3> t{i, j, L(i, j)};
        rows[t[roles[r][0]]][t[roles[r][1]]] = static_cast<LatinSquare::symbol_type>(t[roles[r][2]]);
      }
    }
    out[r] = LatinSquare::from_rows(rows);
  }
  return out;
}

namespace detail {

/// Principal loop isotope x o y = L(R^-1(x), C^-1(y)), bordered by row 0
/// and column 0. Returns the group name if the loop is associative.
inline std::optional<std::string> loop_isotope_group(const LatinSquare& L) {
  const std::size_t m = L.order();
  std::vector<std::size_t> row_of(m), col_of(m);
  for (std::size_t i = 0; i < m; ++i) {
    row_of[L(i, 0)] = i;
    col_of[L(0, i)] = i;
  }
  std::vector<std::size_t> op(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) op[x * m + y] = L(row_of[x], col_of[y]);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (op[op[x * m + y] * m + z] != op[x * m + op[y * m + z]]) return std::nullopt;

  std::vector<Perm> regular;
  for (std::size_t g = 0; g < m; ++g) {
    std::vector<Perm::point_type> images(m);
    for (std::size_t x = 0; x < m; ++x) images[x] = static_cast<Perm::point_type>(op[x * m + g]);
    regular.emplace_back(std::move(images));
  }
  return structure_name(PermGroup::closure(m, std::move(regular)));
}

}  // namespace detail

/// Name of the group G when L is in the main class of G's Cayley table.
/// A loop isotopic to a group is isomorphic to it, so associativity of the
/// principal loop isotope decides isotopy; all six parastrophes are tried.
inline std::optional<std::string> is_group_based(const LatinSquare& L) {
  for (const auto& P : parastrophes(L)) {
    if (auto name = detail::loop_isotope_group(P)) return name;
  }
  return std::nullopt;
}

inline bool is_cyclic_3net(const AbstractUnital& u, const DualKNet& net) {
  const auto name = is_group_based(latin_square_from_3net(u, net));
  return name && *name == "C" + std::to_string(u.order() + 1);
}

/// Whether Persp_{b_i}(b_j) is cyclic of order n+1 for all six ordered
/// pairs of the net.
inline bool perspectivity_groups_cyclic(const AbstractUnital& u, const DualKNet& net) {
  if (net.k() != 3) throw Error(ErrorCode::NotA3Net, "expected three blocks");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      const auto G = persp_group(u, net.blocks[j], net.blocks[i]);
      if (G.order() != u.order() + 1 || !G.is_cyclic()) return false;
    }
  }
  return true;
}

}  // namespace unital
