#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "unital/unital.hpp"

namespace fs = std::filesystem;
using namespace unital;

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_ids(const std::vector<PointId>& ids) {
  std::string out;
  for (PointId p : ids) out += (out.empty() ? "" : " ") + std::to_string(p + 1);
  return out;
}

std::string join_blocks(const std::vector<BlockIndex>& ids) {
  std::string out;
  for (BlockIndex b : ids) out += (out.empty() ? "" : ",") + std::to_string(b + 1);
  return out;
}

/// "i,j" with 1-based block numbers.
std::pair<BlockIndex, BlockIndex> parse_block_pair(const std::string& text, const AbstractUnital& u) {
  const auto comma = text.find(',');
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size() || v < 1 || v > u.num_blocks()) {
      throw Error(ErrorCode::InvalidArgument,
                  "block numbers must lie in 1.." + std::to_string(u.num_blocks()) + ", got '" + std::string(s) + "'");
    }
    return static_cast<BlockIndex>(v - 1);
  };
  if (comma == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--blocks expects i,j");
  const std::string_view all(text);
  return {number(all.substr(0, comma)), number(all.substr(comma + 1))};
}

AbstractUnital load(const std::string& path) { return to_unital(read_unital_file(path)); }

int cmd_validate(const std::string& path) {
  const auto file = read_unital_file(path);
  const auto u = to_unital(file);
  std::cout << "valid unital '" << file.name << "': order " << u.order() << ", " << u.num_points() << " points, "
            << u.num_blocks() << " blocks\n";
  return 0;
}

int cmd_hermitian(unsigned q, const std::string& out, const std::string& coords, const std::string& format) {
  const auto emb = hermitian_unital(q);
  const auto file = to_file(emb.unital, "H(" + std::to_string(q) + ")");
  const std::string text = format == "text" ? serialize_text(file) : serialize_json(file);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
    std::cerr << "wrote " << out << ": " << emb.unital.num_points() << " points, " << emb.unital.num_blocks()
              << " blocks\n";
  }
  if (!coords.empty()) write_text_file(coords, hermitian_coordinates_json(emb));
  return 0;
}

int cmd_fullpoints(const std::string& path, const std::string& blocks) {
  const auto u = load(path);
  const auto [b1, b2] = parse_block_pair(blocks, u);
  const PairAnalysis a = analyze_pair(u, b1, b2);
  std::cout << "blocks: " << b1 + 1 << "," << b2 + 1 << (a.disjoint ? " (disjoint)" : " (meeting)") << '\n';
  std::cout << "full points: " << join_ids(a.full_points) << '\n';
  std::cout << "count: " << a.full_point_count << '\n';
  std::cout << "structure: " << to_string(a.fp_structure) << " (" << describe(a) << ")\n";
  if (a.group_order) {
    std::cout << "group order: " << *a.group_order << '\n';
    std::cout << "group: " << *a.group_name << '\n';
    std::cout << "cyclic: " << yes_no(a.group_cyclic) << '\n';
    std::cout << "semiregular: " << yes_no(a.group_semiregular) << '\n';
  } else {
    std::cout << "group order: 1\ngroup: 1\n";
  }
  if (a.disjoint) {
    std::cout << "fpr: " << yes_no(fpr_holds(u, a)) << '\n';
    std::cout << "sfpr: " << yes_no(sfpr_holds(u, a)) << '\n';
  } else {
    std::cout << "sfpr: n/a (blocks meet)\n";
  }
  return 0;
}

int cmd_dualnets(const std::string& path, bool latin) {
  const auto u = load(path);
  const std::size_t threads = configured_threads();
  const auto nets = find_dual_3nets(u, threads);
  std::cout << nets.size() << " dual 3-nets\n";
  for (const auto& net : nets) {
    const auto square = latin_square_from_3net(u, net);
    const auto group = is_group_based(square);
    const bool cyclic = group && *group == "C" + std::to_string(u.order() + 1);
    std::cout << join_blocks(net.blocks) << ' ' << (cyclic ? "cyclic" : "non-cyclic")
              << " group=" << group.value_or("none") << '\n';
    if (latin) std::cout << square.to_string();
  }
  const auto maximal = find_dual_knets(u, threads);
  std::size_t max_k = 0;
  for (const auto& n : maximal) max_k = std::max(max_k, n.k());
  if (max_k > 3) std::cout << "largest dual k-net: k=" << max_k << '\n';
  return 0;
}

int cmd_census(const std::string& dir, const std::string& prefix, std::string library) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::IoError, dir + " is not a directory");
  if (library.empty()) library = fs::path(dir).filename().string();

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  const std::size_t threads = configured_threads();
  std::vector<UnitalReport> reports;
  std::size_t failed = 0;
  for (const auto& path : files) {
    try {
      const auto file = read_unital_file(path);
      reports.push_back(classify_unital(to_unital(file), file.name, threads));
    } catch (const Error& e) {
      ++failed;
      std::cerr << "ERROR " << to_string(e.code()) << ": " << path.string() << ": " << e.what() << '\n';
    }
  }

  const CensusTables t = census(reports, library);
  write_text_file(prefix + "_groups.csv", groups_csv(t));
  write_text_file(prefix + "_totals.csv", totals_csv({t.totals}));
  write_text_file(prefix + "_totals_strict.csv", totals_csv({t.totals_strict}));
  write_text_file(prefix + "_large.csv", large_sets_csv(t));

  std::string per_unital = "unital,order,fpr,fpr_strict,sfpr,not_embeddable,dual_3nets,cyclic_3nets\n";
  for (const auto& r : reports) {
    const auto cyclic = std::count_if(r.dual_3nets.begin(), r.dual_3nets.end(), [](const NetVerdict& v) { return v.cyclic; });
    per_unital += csv_escape(r.name) + ',' + std::to_string(r.order) + ',' + std::to_string(r.is_fpr) + ',' +
                  std::to_string(r.is_fpr_strict) + ',' + std::to_string(r.is_sfpr) + ',' +
                  std::to_string(r.embedding_excluded()) + ',' + std::to_string(r.dual_3nets.size()) + ',' +
                  std::to_string(cyclic) + '\n';
  }
  write_text_file(prefix + "_unitals.csv", per_unital);

  std::cout << library << ": " << t.totals.unitals << " unitals, " << t.totals.fpr << " fpr, " << t.totals.sfpr
            << " sfpr";
  if (failed) std::cout << ", " << failed << " file(s) skipped";
  std::cout << '\n';
  return 0;
}

int cmd_appendix_check() {
  bool ok = true;
  for (const auto& c : appendix_golden_checks(configured_threads())) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
    std::cout << '\n';
    ok = ok && c.pass;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze abstract unitals: full points, perspectivity groups, dual nets, census"};
  app.require_subcommand(1);

  std::string file, blocks, out, coords, dir, prefix, library, format = "json";
  unsigned q = 0;
  bool latin = false;

  auto* validate = app.add_subcommand("validate", "Check that a file holds a 2-(n^3+1, n+1, 1) design");
  validate->add_option("file", file, "Unital file (JSON or block list)")->required();

  auto* hermitian = app.add_subcommand("hermitian", "Write the Hermitian unital H(q)");
  hermitian->add_option("--q", q, "Order q, 2..5")->required();
  hermitian->add_option("--out", out, "Output file (stdout if omitted)");
  hermitian->add_option("--coords", coords, "Side file with projective coordinates");
  hermitian->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* fullpoints = app.add_subcommand("fullpoints", "Full points and perspectivity group of a block pair");
  fullpoints->add_option("file", file, "Unital file")->required();
  fullpoints->add_option("--blocks", blocks, "Two 1-based block numbers, i,j")->required();

  auto* dualnets = app.add_subcommand("dualnets", "List embedded dual 3-nets");
  dualnets->add_option("file", file, "Unital file")->required();
  dualnets->add_flag("--latin", latin, "Print the latin square of each net");

  auto* census_cmd = app.add_subcommand("census", "Classify every unital file in a directory");
  census_cmd->add_option("dir", dir, "Directory of unital files")->required();
  census_cmd->add_option("--out", prefix, "Prefix for the CSV files")->required();
  census_cmd->add_option("--library", library, "Library name for the totals row (default: directory name)");

  auto* appendix = app.add_subcommand("appendix-check", "Run the golden checks on the built-in order-4 unital");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*hermitian) return cmd_hermitian(q, out, coords, format);
    if (*fullpoints) return cmd_fullpoints(file, blocks);
    if (*dualnets) return cmd_dualnets(file, latin);
    if (*census_cmd) return cmd_census(dir, prefix, library);
    if (*appendix) return cmd_appendix_check();
  } catch (const Error& e) {
    std::cerr << "ERROR " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "ERROR InternalError: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
