#pragma once

// Slow, direct implementations used to cross-check the library. Nothing
// here calls into the code under test beyond plain accessors.

#include <algorithm>
#include <array>
#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include "unital/design.hpp"

namespace unital::testing {

/// The 12 lines of AG(2,3), found by testing every 3-subset for
/// collinearity. Point (x, y) has id 3x + y.
inline std::vector<std::vector<PointId>> affine_plane_3_lines() {
  std::vector<std::vector<PointId>> lines;
  for (PointId a = 0; a < 9; ++a) {
    for (PointId b = a + 1; b < 9; ++b) {
      for (PointId c = b + 1; c < 9; ++c) {
        const int x1 = static_cast<int>(b / 3) - static_cast<int>(a / 3), y1 = static_cast<int>(b % 3) - static_cast<int>(a % 3);
        const int x2 = static_cast<int>(c / 3) - static_cast<int>(a / 3), y2 = static_cast<int>(c % 3) - static_cast<int>(a % 3);
        if (((x1 * y2 - x2 * y1) % 3 + 3) % 3 == 0) lines.push_back({a, b, c});
      }
    }
  }
  return lines;
}

/// Block containing p and q by linear scan.
inline BlockIndex scan_block_through(const AbstractUnital& u, PointId p, PointId q) {
  for (BlockIndex b = 0; b < u.num_blocks(); ++b) {
    const auto blk = u.block(b);
    if (std::find(blk.begin(), blk.end(), p) != blk.end() && std::find(blk.begin(), blk.end(), q) != blk.end()) return b;
  }
  return kNoBlock;
}

inline bool scan_contains(const AbstractUnital& u, BlockIndex b, PointId p) {
  const auto blk = u.block(b);
  return std::find(blk.begin(), blk.end(), p) != blk.end();
}

/// Full points straight from the definition, without the pair table.
inline std::vector<PointId> naive_full_points(const AbstractUnital& u, BlockIndex b1, BlockIndex b2) {
  std::vector<PointId> out;
  for (PointId P = 0; P < u.num_points(); ++P) {
    if (scan_contains(u, b1, P) || scan_contains(u, b2, P)) continue;
    bool full = true;
    for (PointId Q : u.block(b1)) {
      const auto c = u.block(scan_block_through(u, P, Q));
      const auto d = u.block(b2);
      bool meets = false;
      for (PointId x : c) meets = meets || std::find(d.begin(), d.end(), x) != d.end();
      if (!meets) {
        full = false;
        break;
      }
    }
    if (full) out.push_back(P);
  }
  return out;
}

using Square = std::vector<std::vector<unsigned>>;

/// A square is isotopic to a group table exactly when it satisfies the
/// quadrangle criterion: L(a1,b1)=L(a2,b2), L(a1,c1)=L(a2,c2) and
/// L(d1,b1)=L(d2,b2) force L(d1,c1)=L(d2,c2). Parastrophes of a group
/// table are again isotopic to that group, so this decides main class too.
inline bool quadrangle_criterion(const Square& L) {
  const std::size_t m = L.size();
  // col_with[r][s] = column where row r holds symbol s.
  std::vector<std::vector<unsigned>> col_with(m, std::vector<unsigned>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) col_with[r][L[r][c]] = static_cast<unsigned>(c);
  for (std::size_t a1 = 0; a1 < m; ++a1) {
    for (std::size_t a2 = 0; a2 < m; ++a2) {
      for (std::size_t b1 = 0; b1 < m; ++b1) {
        const unsigned b2 = col_with[a2][L[a1][b1]];
        for (std::size_t c1 = 0; c1 < m; ++c1) {
          const unsigned c2 = col_with[a2][L[a1][c1]];
          for (std::size_t d1 = 0; d1 < m; ++d1) {
            // d2 is the row holding L(d1,b1) in column b2.
            std::size_t d2 = 0;
            while (L[d2][b2] != L[d1][b1]) ++d2;
            if (L[d1][c1] != L[d2][c2]) return false;
          }
        }
      }
    }
  }
  return true;
}

inline Square shuffle_square(const Square& L, std::mt19937& rng) {
  const std::size_t m = L.size();
  std::vector<unsigned> r(m), c(m), s(m);
  for (unsigned i = 0; i < m; ++i) r[i] = c[i] = s[i] = i;
  std::shuffle(r.begin(), r.end(), rng);
  std::shuffle(c.begin(), c.end(), rng);
  std::shuffle(s.begin(), s.end(), rng);
  Square out(m, std::vector<unsigned>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[r[i]][c[j]] = s[L[i][j]];
  return out;
}

/// Uniform-ish random latin square by randomized backtracking, row by row.
inline Square random_latin_square(std::size_t m, std::mt19937& rng) {
  Square L(m, std::vector<unsigned>(m, 0));
  std::vector<std::vector<bool>> col_used(m, std::vector<bool>(m, false));
  auto fill = [&](auto&& self, std::size_t cell, std::vector<bool>& row_used) -> bool {
    if (cell == m * m) return true;
    const std::size_t i = cell / m, j = cell % m;
    if (j == 0) row_used.assign(m, false);
    std::vector<unsigned> symbols(m);
    for (unsigned s = 0; s < m; ++s) symbols[s] = s;
    std::shuffle(symbols.begin(), symbols.end(), rng);
    for (unsigned s : symbols) {
      if (row_used[s] || col_used[j][s]) continue;
      row_used[s] = col_used[j][s] = true;
      L[i][j] = s;
      auto saved = row_used;
      if (self(self, cell + 1, row_used)) return true;
      row_used = saved;
      row_used[s] = col_used[j][s] = false;
    }
    return false;
  };
  std::vector<bool> row_used(m, false);
  fill(fill, 0, row_used);
  return L;
}

}  // namespace unital::testing
