#pragma once

// Unital files. Point ids are 1-based on disk and 0-based in memory.
//
// Two formats are read:
//   JSON  {"name": .., "order": n, "points": v, "blocks": [[..], ..]}
//   text  one block per line, ids separated by commas or blanks, '#' starts
//         a comment ("# name: x" names the unital). Brackets are ignored
//         so pasted listings parse as is.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "unital/design.hpp"
#include "unital/error.hpp"
#include "unital/projective_plane.hpp"

namespace unital {

struct UnitalFile {
  std::string name;
  std::size_t order = 0;       // 0 when the file does not say
  std::size_t num_points = 0;  // max id when the file does not say
  std::vector<std::vector<std::size_t>> blocks;  // 1-based
};

namespace detail {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

inline UnitalFile parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  if (!doc.is_object()) throw ParseError(1, "top level must be an object");
  if (!doc.contains("blocks") || !doc["blocks"].is_array()) throw ParseError(1, "missing array field \"blocks\"");

  auto count_field = [&](const char* key) -> std::size_t {
    if (!doc.contains(key)) return 0;
    const auto& v = doc[key];
    if (!v.is_number_integer() || v.get<long long>() < 1) {
      throw ParseError(1, std::string("field \"") + key + "\" must be a positive integer");
    }
    return v.get<std::size_t>();
  };

  UnitalFile f;
  if (doc.contains("name") && doc["name"].is_string()) f.name = doc["name"].get<std::string>();
  f.order = count_field("order");
  f.num_points = count_field("points");
  std::size_t max_id = 0;
  for (std::size_t b = 0; b < doc["blocks"].size(); ++b) {
    const auto& blk = doc["blocks"][b];
    if (!blk.is_array()) throw ParseError(1, "block " + std::to_string(b + 1) + " is not an array");
    std::vector<std::size_t> ids;
    for (const auto& v : blk) {
      if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw ParseError(1, "block " + std::to_string(b + 1) + " has an id that is not a positive integer");
      }
      ids.push_back(v.get<std::size_t>());
      max_id = std::max(max_id, ids.back());
    }
    f.blocks.push_back(std::move(ids));
  }
  if (f.num_points == 0) f.num_points = max_id;
  return f;
}

inline UnitalFile parse_text(std::string_view text) {
  UnitalFile f;
  std::size_t max_id = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      constexpr std::string_view tag = "# name:";
      if (f.name.empty() && line.compare(hash, tag.size(), tag) == 0) {
        f.name = line.substr(hash + tag.size());
        f.name.erase(0, f.name.find_first_not_of(' '));
      }
      line.erase(hash);
    }
    for (char& c : line) {
      if (c == ',' || c == '[' || c == ']' || c == ';' || c == '\r' || c == '\t') c = ' ';
    }
    std::istringstream tokens(line);
    std::vector<std::size_t> ids;
    std::string tok;
    while (tokens >> tok) {
      long long v = 0;
      const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || end != tok.data() + tok.size()) {
        throw ParseError(line_no, "'" + tok + "' is not an integer");
      }
      if (v < 1) throw ParseError(line_no, "point id " + tok + " is not positive");
      ids.push_back(static_cast<std::size_t>(v));
      max_id = std::max(max_id, ids.back());
    }
    if (!ids.empty()) f.blocks.push_back(std::move(ids));
  }
  if (f.blocks.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "no blocks found");
  f.num_points = max_id;
  return f;
}

}  // namespace detail

/// JSON when the first non-blank character is '{', plain text otherwise.
inline UnitalFile parse_unital(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return detail::parse_json(text);
  return detail::parse_text(text);
}

/// Validates the file contents. A stated order or point count that
/// disagrees with the blocks is a NotAUnital error.
inline AbstractUnital to_unital(const UnitalFile& f) {
  std::vector<std::vector<PointId>> blocks;
  blocks.reserve(f.blocks.size());
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    std::vector<PointId> blk;
    for (std::size_t id : f.blocks[b]) {
      if (id < 1 || id > f.num_points) {
        throw Error(ErrorCode::NotAUnital, "block " + std::to_string(b + 1) + " uses point " + std::to_string(id) +
                                               " outside 1.." + std::to_string(f.num_points));
      }
      blk.push_back(static_cast<PointId>(id - 1));
    }
    blocks.push_back(std::move(blk));
  }
  auto u = AbstractUnital::validate(f.num_points, std::move(blocks));
  if (f.order != 0 && f.order != u.order()) {
    throw Error(ErrorCode::NotAUnital,
                "file states order " + std::to_string(f.order) + " but blocks give order " + std::to_string(u.order()));
  }
  return u;
}

inline UnitalFile to_file(const AbstractUnital& u, std::string name = {}) {
  UnitalFile f{std::move(name), u.order(), u.num_points(), {}};
  for (BlockIndex b = 0; b < u.num_blocks(); ++b) {
    std::vector<std::size_t> blk;
    for (PointId p : u.block(b)) blk.push_back(std::size_t{p} + 1);
    f.blocks.push_back(std::move(blk));
  }
  return f;
}

inline std::string serialize_json(const UnitalFile& f) {
  // One block per line keeps files diffable.
  std::string out = "{\n";
  if (!f.name.empty()) out += "  \"name\": " + nlohmann::json(f.name).dump() + ",\n";
  out += "  \"order\": " + std::to_string(f.order) + ",\n";
  out += "  \"points\": " + std::to_string(f.num_points) + ",\n";
  out += "  \"blocks\": [\n";
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    out += "    " + nlohmann::json(f.blocks[b]).dump() + (b + 1 < f.blocks.size() ? ",\n" : "\n");
  }
  out += "  ]\n}\n";
  return out;
}

inline std::string serialize_text(const UnitalFile& f) {
  std::string out;
  if (!f.name.empty()) out += "# name: " + f.name + "\n";
  out += "# order " + std::to_string(f.order) + ", " + std::to_string(f.num_points) + " points, " +
         std::to_string(f.blocks.size()) + " blocks\n";
  for (const auto& blk : f.blocks) {
    for (std::size_t i = 0; i < blk.size(); ++i) out += (i ? "," : "") + std::to_string(blk[i]);
    out += '\n';
  }
  return out;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

/// Parses a file; the name defaults to the file stem.
inline UnitalFile read_unital_file(const std::filesystem::path& path) {
  UnitalFile f = parse_unital(read_text_file(path));
  if (f.name.empty()) f.name = path.stem().string();
  return f;
}

/// Coordinates of every unital point and block line, as JSON.
inline std::string hermitian_coordinates_json(const HermitianEmbedding& emb) {
  const auto& plane = *emb.plane;
  const auto& field = plane.field();
  nlohmann::ordered_json doc;
  doc["q"] = emb.q();
  doc["field"] = {{"p", field.characteristic()},
                  {"k", field.degree()},
                  {"modulus", field.spec().modulus},
                  {"encoding", "base-p digits, digit i is the coefficient of x^i"}};
  auto coords = [](const auto& c) {
    return std::vector<std::uint32_t>{c[0].value, c[1].value, c[2].value};
  };
  auto& points = doc["points"] = nlohmann::ordered_json::array();
  for (PointId p = 0; p < emb.unital.num_points(); ++p) {
    points.push_back({{"id", p + 1}, {"coords", coords(emb.point_of(p).c)}, {"text", plane.to_string(emb.point_of(p))}});
  }
  auto& lines = doc["blocks"] = nlohmann::ordered_json::array();
  for (BlockIndex b = 0; b < emb.unital.num_blocks(); ++b) {
    lines.push_back({{"id", b + 1}, {"line", coords(emb.line_of(b).c)}, {"text", plane.to_string(emb.line_of(b))}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace unital
