#pragma once

// Full point regularity of block pairs and whole unitals, and the
// aggregated tables over a library of unitals.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "unital/design.hpp"
#include "unital/error.hpp"
#include "unital/group_catalog.hpp"
#include "unital/nets_latin.hpp"
#include "unital/parallel.hpp"
#include "unital/perspectivity.hpp"

namespace unital {

enum class FullPointStructure { Empty, Single, InBlock, NoThreeCollinear, Other };

constexpr std::string_view to_string(FullPointStructure s) noexcept {
  switch (s) {
    case FullPointStructure::Empty: return "empty";
    case FullPointStructure::Single: return "single";
    case FullPointStructure::InBlock: return "in-block";
    case FullPointStructure::NoThreeCollinear: return "no-3-collinear";
    case FullPointStructure::Other: return "other";
  }
  return "other";
}

/// Full points at or above this size count as "large".
inline constexpr std::size_t kLargeFullPointSet = 3;

struct PairAnalysis {
  BlockIndex b1 = 0;
  BlockIndex b2 = 0;
  bool disjoint = false;
  std::size_t full_point_count = 0;
  std::vector<PointId> full_points;
  // Group fields are set only when full_point_count >= 2.
  std::optional<std::size_t> group_order;
  std::optional<std::string> group_name;
  bool group_cyclic = false;
  bool group_semiregular = false;
  FullPointStructure fp_structure = FullPointStructure::Empty;
  /// The block holding every full point, when |F| >= 2 and one exists.
  std::optional<BlockIndex> containing_block;
  /// Number of whole blocks inside the full-point set.
  std::size_t blocks_inside = 0;
  std::size_t block_size = 0;
};

namespace detail {

inline FullPointStructure classify_structure(const AbstractUnital& u, const std::vector<PointId>& F,
                                             std::optional<BlockIndex>& containing) {
  containing.reset();
  if (F.empty()) return FullPointStructure::Empty;
  if (F.size() == 1) return FullPointStructure::Single;
  const BlockIndex c = u.block_through(F[0], F[1]);
  if (std::all_of(F.begin(), F.end(), [&](PointId p) { return u.contains(c, p); })) {
    containing = c;
    return FullPointStructure::InBlock;
  }
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = i + 1; j < F.size(); ++j) {
      const BlockIndex line = u.block_through(F[i], F[j]);
      for (std::size_t k = j + 1; k < F.size(); ++k)
        if (u.contains(line, F[k])) return FullPointStructure::Other;
    }
  }
  return FullPointStructure::NoThreeCollinear;
}

}  // namespace detail

inline PairAnalysis analyze_pair(const AbstractUnital& u, BlockIndex b1, BlockIndex b2) {
  const FullPointSet F = full_points(u, b1, b2);
  PairAnalysis a;
  a.b1 = b1;
  a.b2 = b2;
  a.disjoint = u.blocks_disjoint(b1, b2);
  a.block_size = u.block_size();
  a.full_point_count = F.size();
  a.full_points = F.points;
  a.fp_structure = detail::classify_structure(u, F.points, a.containing_block);
  if (F.size() >= u.block_size()) a.blocks_inside = blocks_inside(u, F).size();
  if (F.size() >= 2) {
    const PermGroup G = persp_group(u, F);
    a.group_order = G.order();
    a.group_name = structure_name(G);
    a.group_cyclic = G.is_cyclic();
    a.group_semiregular = G.is_semiregular();
  }
  return a;
}

/// Plain-language summary of the full-point structure.
inline std::string describe(const PairAnalysis& a) {
  switch (a.fp_structure) {
    case FullPointStructure::Empty: return "no full points";
    case FullPointStructure::Single: return "single full point";
    case FullPointStructure::InBlock: return "all full points in one block";
    case FullPointStructure::NoThreeCollinear: return "no 3 of the full points are collinear";
    case FullPointStructure::Other: break;
  }
  if (a.blocks_inside > 0 && a.block_size > 0) {
    return std::to_string(a.block_size) + " of the full points form a block";
  }
  return "some but not all full points collinear";
}

/// Fpr condition on an analyzed pair. With |F| <= 1 the triple counts as
/// regular unless `strict`, in which case a single full point needs a
/// block through it missing both b1 and b2.
inline bool fpr_holds(const AbstractUnital& u, const PairAnalysis& a, bool strict = false) {
  if (a.full_point_count == 0) return true;
  auto avoids_pair = [&](BlockIndex c) {
    return c != a.b1 && c != a.b2 && u.blocks_disjoint(c, a.b1) && u.blocks_disjoint(c, a.b2);
  };
  if (a.full_point_count == 1) {
    if (!strict) return true;
    const auto through = u.blocks_through(a.full_points.front());
    return std::any_of(through.begin(), through.end(), avoids_pair);
  }
  return a.containing_block && avoids_pair(*a.containing_block);
}

inline bool sfpr_holds(const AbstractUnital& u, const PairAnalysis& a, bool strict = false) {
  if (!fpr_holds(u, a, strict)) return false;
  return a.full_point_count <= 1 || (a.group_cyclic && a.group_semiregular);
}

inline void require_disjoint(const AbstractUnital& u, BlockIndex b1, BlockIndex b2) {
  if (b1 == b2) throw Error(ErrorCode::SameBlock, "blocks must be distinct");
  if (!u.blocks_disjoint(b1, b2)) throw Error(ErrorCode::NotDisjoint, "blocks must be disjoint");
}

inline bool is_fpr_triple(const AbstractUnital& u, BlockIndex b1, BlockIndex b2, bool strict = false) {
  require_disjoint(u, b1, b2);
  return fpr_holds(u, analyze_pair(u, b1, b2), strict);
}

inline bool is_sfpr_triple(const AbstractUnital& u, BlockIndex b1, BlockIndex b2) {
  require_disjoint(u, b1, b2);
  return sfpr_holds(u, analyze_pair(u, b1, b2));
}

struct NetVerdict {
  DualKNet net;
  bool cyclic = false;
  std::optional<std::string> group;
};

struct UnitalReport {
  std::string name;
  std::size_t order = 0;
  std::size_t disjoint_pairs = 0;
  bool is_fpr = true;
  /// FPR with single full points needing a disjoint block through them.
  bool is_fpr_strict = true;
  bool is_sfpr = true;
  /// Pairs (b1 < b2, disjoint) with at least two full points.
  std::vector<PairAnalysis> pairs;
  /// Disjoint pairs by number of full points.
  std::map<std::size_t, std::size_t> full_point_histogram;
  std::vector<NetVerdict> dual_3nets;
  /// Largest k over embedded dual k-nets, 0 if none.
  std::size_t max_net_size = 0;

  /// A unital that is not SFPR has no embedding in PG(2, n^2).
  bool embedding_excluded() const noexcept { return !is_sfpr; }

  bool has_large_set() const {
    return std::any_of(pairs.begin(), pairs.end(),
                       [](const PairAnalysis& a) { return a.full_point_count >= kLargeFullPointSet; });
  }
};

/// Analyzes every disjoint pair, then collects dual 3-nets from the blocks
/// found inside full-point sets.
inline UnitalReport classify_unital(const AbstractUnital& u, std::string name = {}, std::size_t threads = 1) {
  UnitalReport r;
  r.name = std::move(name);
  r.order = u.order();

  struct Partial {
    std::size_t disjoint = 0;
    bool fpr = true, fpr_strict = true, sfpr = true;
    std::vector<PairAnalysis> pairs;
    std::map<std::size_t, std::size_t> histogram;
  };
  std::vector<Partial> partial(u.num_blocks());
  parallel_for(u.num_blocks(), threads, [&](std::size_t i) {
    auto& p = partial[i];
    const auto b1 = static_cast<BlockIndex>(i);
    for (BlockIndex b2 = b1 + 1; b2 < u.num_blocks(); ++b2) {
      if (!u.blocks_disjoint(b1, b2)) continue;
      PairAnalysis a = analyze_pair(u, b1, b2);
      ++p.disjoint;
      ++p.histogram[a.full_point_count];
      p.fpr = p.fpr && fpr_holds(u, a);
      p.fpr_strict = p.fpr_strict && fpr_holds(u, a, true);
      p.sfpr = p.sfpr && sfpr_holds(u, a);
      if (a.full_point_count >= 2) p.pairs.push_back(std::move(a));
    }
  });

  std::set<DualKNet> nets;
  for (auto& p : partial) {
    r.disjoint_pairs += p.disjoint;
    r.is_fpr = r.is_fpr && p.fpr;
    r.is_fpr_strict = r.is_fpr_strict && p.fpr_strict;
    r.is_sfpr = r.is_sfpr && p.sfpr;
    for (auto [k, v] : p.histogram) r.full_point_histogram[k] += v;
    for (auto& a : p.pairs) {
      if (a.blocks_inside > 0) {
        auto inside = blocks_inside(u, FullPointSet{a.b1, a.b2, a.full_points});
        r.max_net_size = std::max(r.max_net_size, inside.size() + 2);
        for (BlockIndex c : inside) {
          std::vector<BlockIndex> t{a.b1, a.b2, c};
          std::sort(t.begin(), t.end());
          nets.insert(DualKNet{std::move(t)});
        }
      }
      r.pairs.push_back(std::move(a));
    }
  }
  for (const auto& net : nets) {
    NetVerdict v{net, false, is_group_based(latin_square_from_3net(u, net))};
    v.cyclic = v.group && *v.group == "C" + std::to_string(u.order() + 1);
    r.dual_3nets.push_back(std::move(v));
  }
  return r;
}

struct GroupRow {
  std::size_t full_points = 0;
  std::string group;
  std::size_t count = 0;
};

struct TotalsRow {
  std::string library;
  std::size_t unitals = 0;
  std::size_t fpr = 0;
  std::size_t sfpr = 0;
};

/// Unitals whose large full-point sets (|F| >= 3 on disjoint pairs) are
/// constrained. Omega = B cup B_bar, A within B, C within B_bar.
struct LargeSetCounts {
  std::size_t omega = 0;  // at least one large set
  std::size_t a = 0;      // every large set is a block
  std::size_t b = 0;      // every large set lies in a block
  std::size_t b_bar = 0;  // some large set lies in no block
  std::size_t c = 0;      // no large set lies in a block
};

struct CensusTables {
  std::vector<GroupRow> groups;
  TotalsRow totals;
  /// Same as `totals` but with the strict reading for single full points.
  TotalsRow totals_strict;
  LargeSetCounts large;
};

/// Folds reports into the library-level tables. Each (full points, group)
/// row counts unitals having at least one disjoint pair of that kind.
inline CensusTables census(const std::vector<UnitalReport>& reports, const std::string& library) {
  CensusTables t;
  t.totals.library = t.totals_strict.library = library;
  std::map<std::pair<std::size_t, std::string>, std::size_t> rows;
  for (const auto& r : reports) {
    ++t.totals.unitals;
    ++t.totals_strict.unitals;
    t.totals.fpr += r.is_fpr;
    t.totals.sfpr += r.is_sfpr;
    t.totals_strict.fpr += r.is_fpr_strict;
    t.totals_strict.sfpr += r.is_fpr_strict && r.is_sfpr;

    std::set<std::pair<std::size_t, std::string>> seen;
    bool any_large = false, all_form_block = true, all_in_block = true, none_in_block = true;
    for (const auto& a : r.pairs) {
      seen.emplace(a.full_point_count, a.group_name.value_or("1"));
      if (a.full_point_count < kLargeFullPointSet) continue;
      any_large = true;
      const bool in_block = a.fp_structure == FullPointStructure::InBlock;
      const bool is_block = in_block && a.full_point_count == r.order + 1;
      all_form_block = all_form_block && is_block;
      all_in_block = all_in_block && in_block;
      none_in_block = none_in_block && !in_block;
    }
    for (const auto& key : seen) ++rows[key];
    if (any_large) {
      ++t.large.omega;
      t.large.a += all_form_block;
      t.large.b += all_in_block;
      t.large.b_bar += !all_in_block;
      t.large.c += none_in_block;
    }
  }
  for (const auto& [key, count] : rows) t.groups.push_back({key.first, key.second, count});
  return t;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string groups_csv(const CensusTables& t) {
  std::ostringstream out;
  out << "full_points,group,count\n";
  for (const auto& r : t.groups) out << r.full_points << ',' << csv_escape(r.group) << ',' << r.count << '\n';
  return out.str();
}

inline std::string totals_csv(const std::vector<TotalsRow>& rows) {
  std::ostringstream out;
  out << "library,unitals,fpr,sfpr\n";
  for (const auto& r : rows) out << csv_escape(r.library) << ',' << r.unitals << ',' << r.fpr << ',' << r.sfpr << '\n';
  return out.str();
}

inline std::string large_sets_csv(const CensusTables& t) {
  std::ostringstream out;
  out << "set,property,cardinality\n";
  out << "Omega,at least one large full point set," << t.large.omega << '\n';
  out << "A,all large full point sets form a block," << t.large.a << '\n';
  out << "B,all large full point sets are contained in a block," << t.large.b << '\n';
  out << "B_bar,some large full point sets are not contained in a block," << t.large.b_bar << '\n';
  out << "C,no large full point set is contained in a block," << t.large.c << '\n';
  return out.str();
}

}  // namespace unital
