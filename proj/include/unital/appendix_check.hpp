#pragma once

// Golden checks on the built-in order-4 unital. Shared by the CLI
// `appendix-check` command and the test suites.

#include <algorithm>
#include <string>
#include <vector>

#include "unital/appendix.hpp"
#include "unital/census.hpp"
#include "unital/nets_latin.hpp"
#include "unital/perspectivity.hpp"

namespace unital {

/// Persp group of blocks 1, 33 of the built-in unital.
inline constexpr std::size_t kAppendixPerspOrder = 120;
inline constexpr std::string_view kAppendixPerspName = "S5";

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline std::vector<CheckResult> appendix_golden_checks(std::size_t threads = 1) {
  std::vector<CheckResult> out;
  auto check = [&](std::string name, bool pass, std::string detail = {}) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };

  const AbstractUnital u = builtin_appendix_unital();
  check("design 2-(65,5,1)", u.order() == 4 && u.num_points() == 65 && u.num_blocks() == 208,
        std::to_string(u.num_points()) + " points, " + std::to_string(u.num_blocks()) + " blocks");
  const auto first = u.block(0);
  check("block 1 is [1,2,55,64,65]", std::vector<PointId>(first.begin(), first.end()) == std::vector<PointId>{0, 1, 54, 63, 64});

  const DualKNet net{{0, 32, 199}};
  check("blocks 1,33,200 form a dual 3-net", is_dual_knet(u, net.blocks));

  const auto F = full_points(u, 0, 32);
  const auto b200 = u.block(199);
  check("full points of 1,33 are block 200", std::equal(F.points.begin(), F.points.end(), b200.begin(), b200.end()),
        std::to_string(F.size()) + " full points");

  const auto square = latin_square_from_3net(u, net);
  const auto based = is_group_based(square);
  check("latin square is not group-based", !based, based ? "group " + *based : "");
  check("3-net is not cyclic", !is_cyclic_3net(u, net));

  const PermGroup G = persp_group(u, F);
  const std::string name = structure_name(G);
  check("persp group of 1,33 is " + std::string(kAppendixPerspName),
        G.order() == kAppendixPerspOrder && name == kAppendixPerspName && !G.is_cyclic(),
        "order " + std::to_string(G.order()) + ", " + name);
  check("pair 1,33 is not sfpr", !is_sfpr_triple(u, 0, 32));

  const auto nets = find_dual_knets(u, threads);
  const bool no_big = std::all_of(nets.begin(), nets.end(), [](const DualKNet& n) { return n.k() == 3; });
  check("no dual k-net with k >= 4", no_big, std::to_string(nets.size()) + " maximal nets");
  const bool bounded = std::all_of(nets.begin(), nets.end(), [&](const DualKNet& n) { return max_knet_check(u, n); });
  check("k-net size bounds hold", bounded);

  std::size_t agree = 0;
  const auto triples = find_dual_3nets(u, threads);
  for (const auto& t : triples) agree += is_cyclic_3net(u, t) == perspectivity_groups_cyclic(u, t);
  check("cyclic 3-nets match cyclic persp groups", agree == triples.size(),
        std::to_string(agree) + "/" + std::to_string(triples.size()));
  return out;
}

}  // namespace unital
