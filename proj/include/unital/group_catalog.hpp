#pragma once

// Names for small permutation groups.
//
// A group is identified by its order, whether it is abelian and its
// element-order spectrum. Two pairs of order-16 groups share all three; the
// number of distinct squares g*g separates them. Every group of order <= 24
// is listed, plus A5 and S5. Anything else gets a descriptive fallback label.

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "unital/permgroup.hpp"

namespace unital {

struct CatalogEntry {
  std::size_t order;
  bool abelian;
  std::vector<std::pair<std::size_t, std::size_t>> spectrum;
  std::size_t distinct_squares;
  const char* name;
};

inline const std::vector<CatalogEntry>& group_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {1, true, {{1, 1}}, 1, "1"},
      {2, true, {{1, 1}, {2, 1}}, 1, "C2"},
      {3, true, {{1, 1}, {3, 2}}, 3, "C3"},
      {4, true, {{1, 1}, {2, 1}, {4, 2}}, 2, "C4"},
      {4, true, {{1, 1}, {2, 3}}, 1, "C2 x C2"},
      {5, true, {{1, 1}, {5, 4}}, 5, "C5"},
      {6, true, {{1, 1}, {2, 1}, {3, 2}, {6, 2}}, 3, "C6"},
      {6, false, {{1, 1}, {2, 3}, {3, 2}}, 3, "S3"},
      {7, true, {{1, 1}, {7, 6}}, 7, "C7"},
      {8, true, {{1, 1}, {2, 1}, {4, 2}, {8, 4}}, 4, "C8"},
      {8, true, {{1, 1}, {2, 3}, {4, 4}}, 2, "C4 x C2"},
      {8, true, {{1, 1}, {2, 7}}, 1, "C2 x C2 x C2"},
      {8, false, {{1, 1}, {2, 5}, {4, 2}}, 2, "D8"},
      {8, false, {{1, 1}, {2, 1}, {4, 6}}, 2, "Q8"},
      {9, true, {{1, 1}, {3, 2}, {9, 6}}, 9, "C9"},
      {9, true, {{1, 1}, {3, 8}}, 9, "C3 x C3"},
      {10, true, {{1, 1}, {2, 1}, {5, 4}, {10, 4}}, 5, "C10"},
      {10, false, {{1, 1}, {2, 5}, {5, 4}}, 5, "D10"},
      {11, true, {{1, 1}, {11, 10}}, 11, "C11"},
      {12, true, {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}}, 6, "C12"},
      {12, true, {{1, 1}, {2, 3}, {3, 2}, {6, 6}}, 3, "C6 x C2"},
      {12, false, {{1, 1}, {2, 7}, {3, 2}, {6, 2}}, 3, "D12"},
      {12, false, {{1, 1}, {2, 3}, {3, 8}}, 9, "A4"},
      {12, false, {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}, 4, "C3 : C4"},
      {13, true, {{1, 1}, {13, 12}}, 13, "C13"},
      {14, true, {{1, 1}, {2, 1}, {7, 6}, {14, 6}}, 7, "C14"},
      {14, false, {{1, 1}, {2, 7}, {7, 6}}, 7, "D14"},
      {15, true, {{1, 1}, {3, 2}, {5, 4}, {15, 8}}, 15, "C15"},
      {16, true, {{1, 1}, {2, 1}, {4, 2}, {8, 4}, {16, 8}}, 8, "C16"},
      {16, true, {{1, 1}, {2, 3}, {4, 12}}, 4, "C4 x C4"},
      {16, true, {{1, 1}, {2, 3}, {4, 4}, {8, 8}}, 4, "C8 x C2"},
      {16, true, {{1, 1}, {2, 7}, {4, 8}}, 2, "C4 x C2 x C2"},
      {16, true, {{1, 1}, {2, 15}}, 1, "C2 x C2 x C2 x C2"},
      {16, false, {{1, 1}, {2, 9}, {4, 2}, {8, 4}}, 4, "D16"},
      {16, false, {{1, 1}, {2, 1}, {4, 10}, {8, 4}}, 4, "Q16"},
      {16, false, {{1, 1}, {2, 5}, {4, 6}, {8, 4}}, 4, "QD16"},
      {16, false, {{1, 1}, {2, 3}, {4, 4}, {8, 8}}, 4, "C8 : C2"},
      {16, false, {{1, 1}, {2, 3}, {4, 12}}, 3, "C4 : C4"},
      {16, false, {{1, 1}, {2, 7}, {4, 8}}, 3, "C2^2 : C4"},
      {16, false, {{1, 1}, {2, 11}, {4, 4}}, 2, "C2 x D8"},
      {16, false, {{1, 1}, {2, 3}, {4, 12}}, 2, "C2 x Q8"},
      {16, false, {{1, 1}, {2, 7}, {4, 8}}, 2, "C4 o D8"},
      {17, true, {{1, 1}, {17, 16}}, 17, "C17"},
      {18, true, {{1, 1}, {2, 1}, {3, 2}, {6, 2}, {9, 6}, {18, 6}}, 9, "C18"},
      {18, true, {{1, 1}, {2, 1}, {3, 8}, {6, 8}}, 9, "C6 x C3"},
      {18, false, {{1, 1}, {2, 9}, {3, 2}, {9, 6}}, 9, "D18"},
      {18, false, {{1, 1}, {2, 3}, {3, 8}, {6, 6}}, 9, "C3 x S3"},
      {18, false, {{1, 1}, {2, 9}, {3, 8}}, 9, "(C3 x C3) : C2"},
      {19, true, {{1, 1}, {19, 18}}, 19, "C19"},
      {20, true, {{1, 1}, {2, 1}, {4, 2}, {5, 4}, {10, 4}, {20, 8}}, 10, "C20"},
      {20, true, {{1, 1}, {2, 3}, {5, 4}, {10, 12}}, 5, "C10 x C2"},
      {20, false, {{1, 1}, {2, 11}, {5, 4}, {10, 4}}, 5, "D20"},
      {20, false, {{1, 1}, {2, 1}, {4, 10}, {5, 4}, {10, 4}}, 6, "Dic20"},
      {20, false, {{1, 1}, {2, 5}, {4, 10}, {5, 4}}, 10, "C5 : C4"},
      {21, true, {{1, 1}, {3, 2}, {7, 6}, {21, 12}}, 21, "C21"},
      {21, false, {{1, 1}, {3, 14}, {7, 6}}, 21, "C7 : C3"},
      {22, true, {{1, 1}, {2, 1}, {11, 10}, {22, 10}}, 11, "C22"},
      {22, false, {{1, 1}, {2, 11}, {11, 10}}, 11, "D22"},
      {23, true, {{1, 1}, {23, 22}}, 23, "C23"},
      {24, true, {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {8, 4}, {12, 4}, {24, 8}}, 12, "C24"},
      {24, true, {{1, 1}, {2, 3}, {3, 2}, {4, 4}, {6, 6}, {12, 8}}, 6, "C12 x C2"},
      {24, true, {{1, 1}, {2, 7}, {3, 2}, {6, 14}}, 3, "C6 x C2 x C2"},
      {24, false, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}, 12, "S4"},
      {24, false, {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}, 10, "SL(2,3)"},
      {24, false, {{1, 1}, {2, 13}, {3, 2}, {4, 2}, {6, 2}, {12, 4}}, 6, "D24"},
      {24, false, {{1, 1}, {2, 1}, {3, 2}, {4, 14}, {6, 2}, {12, 4}}, 6, "C3 : Q8"},
      {24, false, {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {8, 12}, {12, 4}}, 8, "C3 : C8"},
      {24, false, {{1, 1}, {2, 5}, {3, 2}, {4, 2}, {6, 10}, {12, 4}}, 6, "C3 x D8"},
      {24, false, {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}, {12, 12}}, 6, "C3 x Q8"},
      {24, false, {{1, 1}, {2, 7}, {3, 8}, {6, 8}}, 9, "C2 x A4"},
      {24, false, {{1, 1}, {2, 7}, {3, 2}, {4, 8}, {6, 2}, {12, 4}}, 6, "C4 x S3"},
      {24, false, {{1, 1}, {2, 15}, {3, 2}, {6, 6}}, 3, "C2 x C2 x S3"},
      {24, false, {{1, 1}, {2, 3}, {3, 2}, {4, 12}, {6, 6}}, 4, "C2 x (C3 : C4)"},
      {24, false, {{1, 1}, {2, 9}, {3, 2}, {4, 6}, {6, 6}}, 4, "(C6 x C2) : C2"},
      {60, false, {{1, 1}, {2, 15}, {3, 20}, {5, 24}}, 45, "A5"},
      {120, false, {{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}}, 60, "S5"},
  };
  return catalog;
}

inline std::size_t distinct_square_count(const PermGroup& G) {
  std::set<Perm> squares;
  for (const auto& g : G.elements()) squares.insert(g * g);
  return squares.size();
}

inline std::string fallback_group_name(const PermGroup& G) {
  return "G(order=" + std::to_string(G.order()) +
         ", spectrum=" + to_string(G.element_order_spectrum()) + ")";
}

/// Human-readable structure name, e.g. "C5", "C2 x C2", "C5 : C4", "D10",
/// "S5". Invariant under relabeling of the permuted points.
inline std::string structure_name(const PermGroup& G) {
  const OrderSpectrum spectrum = G.element_order_spectrum();
  const bool abelian = G.is_abelian();
  std::vector<const CatalogEntry*> matches;
  for (const auto& e : group_catalog()) {
    if (e.order != G.order() || e.abelian != abelian) continue;
    if (OrderSpectrum(e.spectrum.begin(), e.spectrum.end()) != spectrum) continue;
    matches.push_back(&e);
  }
  if (matches.size() > 1) {
    const std::size_t squares = distinct_square_count(G);
    std::erase_if(matches, [squares](const CatalogEntry* e) { return e->distinct_squares != squares; });
  }
  if (matches.size() == 1) return matches.front()->name;
  return fallback_group_name(G);
}

}  // namespace unital
