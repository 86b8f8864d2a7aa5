#pragma once

// PG(2, q^2) in homogeneous coordinates with the Hermitian polarity of the
// identity form x0^{q+1} + x1^{q+1} + x2^{q+1}, the Hermitian unital H(q)
// with its natural embedding, polar triangles, Baer sublines and nuclei.
//
// Every object is enumerated exhaustively; q <= 5 keeps the plane at
// most 651 points.

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "unital/design.hpp"
#include "unital/error.hpp"
#include "unital/finite_field.hpp"
#include "unital/permgroup.hpp"

namespace unital {

struct PointTag {};
struct LineTag {};

/// Homogeneous triple, normalized so the last nonzero coordinate is 1.
/// Points and lines share the representation but not the type.
template <class Tag>
struct Homogeneous {
  std::array<FieldElement, 3> c{};

  friend auto operator<=>(const Homogeneous&, const Homogeneous&) = default;
};

using ProjPoint = Homogeneous<PointTag>;
using ProjLine = Homogeneous<LineTag>;

inline constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

class ProjectivePlane {
 public:
  static constexpr unsigned kMaxQ = 5;

  /// Builds PG(2, q^2) for a prime power q <= 5.
  explicit ProjectivePlane(unsigned q) : q_(q) {
    if (q < 2 || q > kMaxQ) {
      throw Error(ErrorCode::TooLarge, "q=" + std::to_string(q) + " outside 2.." + std::to_string(kMaxQ));
    }
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    for (unsigned r = q; r > 1; r /= p, ++e) {
      if (r % p != 0) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
    }
    field_ = make_field(p, 2 * e);
    s_ = static_cast<std::uint32_t>(field_.size());

    // Points (x, y, 1), (x, 1, 0), (1, 0, 0); lines use the same list.
    std::vector<std::array<FieldElement, 3>> triples;
    for (std::uint32_t y = 0; y < s_; ++y)
      for (std::uint32_t x = 0; x < s_; ++x) triples.push_back({FieldElement{x}, FieldElement{y}, field_.one()});
    for (std::uint32_t x = 0; x < s_; ++x) triples.push_back({FieldElement{x}, field_.one(), field_.zero()});
    triples.push_back({field_.one(), field_.zero(), field_.zero()});

    index_.assign(std::size_t{s_} * s_ * s_, kNoIndex);
    for (std::size_t i = 0; i < triples.size(); ++i) {
      points_.push_back(ProjPoint{triples[i]});
      lines_.push_back(ProjLine{triples[i]});
      index_[key(triples[i])] = i;
    }

    points_on_.resize(lines_.size());
    lines_through_.resize(points_.size());
    for (std::size_t l = 0; l < lines_.size(); ++l) {
      for (std::size_t p = 0; p < points_.size(); ++p) {
        if (incident(points_[p], lines_[l])) {
          points_on_[l].push_back(p);
          lines_through_[p].push_back(l);
        }
      }
    }
  }

  unsigned q() const noexcept { return q_; }
  /// Order of the plane, q^2.
  std::size_t order() const noexcept { return s_; }
  const GaloisField& field() const noexcept { return field_; }

  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  const std::vector<ProjLine>& lines() const noexcept { return lines_; }
  const ProjPoint& point(std::size_t i) const { return points_[i]; }
  const ProjLine& line(std::size_t i) const { return lines_[i]; }

  std::size_t index_of(const ProjPoint& P) const { return index_[key(P.c)]; }
  std::size_t index_of(const ProjLine& l) const { return index_[key(l.c)]; }

  const std::vector<std::size_t>& points_on(std::size_t line) const { return points_on_[line]; }
  const std::vector<std::size_t>& lines_through(std::size_t point) const { return lines_through_[point]; }

  bool incident(const ProjPoint& P, const ProjLine& l) const { return dot(P.c, l.c) == field_.zero(); }

  template <class Tag>
  Homogeneous<Tag> normalize(std::array<FieldElement, 3> v) const {
    std::size_t j = 3;
    while (j > 0 && v[j - 1] == field_.zero()) --j;
    if (j == 0) throw Error(ErrorCode::InvalidArgument, "zero vector has no projective point");
    const FieldElement s = field_.inv(v[j - 1]);
    for (auto& x : v) x = field_.mul(x, s);
    return Homogeneous<Tag>{v};
  }

  ProjLine join(const ProjPoint& P, const ProjPoint& Q) const {
    if (P == Q) throw Error(ErrorCode::InvalidArgument, "join of a point with itself");
    return normalize<LineTag>(cross(P.c, Q.c));
  }

  ProjPoint meet(const ProjLine& l, const ProjLine& m) const {
    if (l == m) throw Error(ErrorCode::InvalidArgument, "meet of a line with itself");
    return normalize<PointTag>(cross(l.c, m.c));
  }

  // Hermitian polarity rho: (x0, x1, x2) <-> [x0^q, x1^q, x2^q].

  ProjLine polar(const ProjPoint& P) const { return ProjLine{conj(P.c)}; }
  ProjPoint pole(const ProjLine& l) const { return ProjPoint{conj(l.c)}; }

  bool is_self_conjugate(const ProjPoint& P) const { return incident(P, polar(P)); }
  bool is_self_conjugate(const ProjLine& l) const { return incident(pole(l), l); }

  /// l^rho lies on m (symmetric for a polarity).
  bool are_conjugate(const ProjLine& l, const ProjLine& m) const { return incident(pole(l), m); }

  /// Indices of the q^3+1 self-conjugate points.
  std::vector<std::size_t> self_conjugate_points() const {
    std::vector<std::size_t> X;
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (is_self_conjugate(points_[i])) X.push_back(i);
    return X;
  }

  /// |l cap X|: 1 for self-conjugate lines, q+1 otherwise.
  std::size_t line_secant_type(const ProjLine& l) const {
    const auto& on = points_on_[index_of(l)];
    return static_cast<std::size_t>(std::count_if(on.begin(), on.end(),
                                                  [this](std::size_t p) { return is_self_conjugate(points_[p]); }));
  }

  /// Third side (l1 cap l2)^rho of the polar triangle on two conjugate,
  /// non-self-conjugate lines.
  ProjLine polar_triangle_completion(const ProjLine& l1, const ProjLine& l2) const {
    if (l1 == l2 || is_self_conjugate(l1) || is_self_conjugate(l2) || !are_conjugate(l1, l2)) {
      throw Error(ErrorCode::NotConjugate, "lines are not a conjugate pair of non-self-conjugate lines");
    }
    return polar(meet(l1, l2));
  }

  /// Whether distinct collinear points lie on one Baer subline: with P1 at
  /// parameter 0 and P2 at infinity, every ratio t_i / t_3 must lie in GF(q).
  bool is_baer_subline(std::span<const ProjPoint> pts) const {
    if (pts.size() < 3) throw Error(ErrorCode::WrongSize, "need at least 3 points");
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (pts[i] == pts[j]) throw Error(ErrorCode::InvalidArgument, "points must be distinct");
    const ProjLine l = join(pts[0], pts[1]);
    for (const auto& P : pts) {
      if (!incident(P, l)) throw Error(ErrorCode::NotCollinear, "points are not collinear");
    }

    const auto& a = pts[0].c;
    const auto& b = pts[1].c;
    std::size_t r = 0, s = 1;
    FieldElement det{};
    for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}}) {
      det = field_.sub(field_.mul(a[i], b[j]), field_.mul(a[j], b[i]));
      if (det != field_.zero()) {
        r = i;
        s = j;
        break;
      }
    }
    // Solve v = lambda a + mu b on coordinates r, s; parameter t = mu / lambda.
    auto parameter = [&](const std::array<FieldElement, 3>& v) {
      const FieldElement lambda = field_.sub(field_.mul(v[r], b[s]), field_.mul(v[s], b[r]));
      const FieldElement mu = field_.sub(field_.mul(a[r], v[s]), field_.mul(a[s], v[r]));
      return field_.div(mu, lambda);
    };
    const FieldElement t3 = parameter(pts[2].c);
    for (std::size_t i = 3; i < pts.size(); ++i) {
      if (!field_.is_in_subfield(field_.div(parameter(pts[i].c), t3), q_)) return false;
    }
    return true;
  }

  /// Points P off S such that every line through P meets S exactly once.
  /// S is given by point indices and must have q^2+1 elements.
  std::vector<std::size_t> nuclei(std::span<const std::size_t> S) const {
    if (S.size() != s_ + 1) {
      throw Error(ErrorCode::WrongSize, "nucleus search needs q^2+1 = " + std::to_string(s_ + 1) +
                                            " points, got " + std::to_string(S.size()));
    }
    std::vector<bool> in_s(points_.size(), false);
    for (auto p : S) in_s[p] = true;
    std::vector<std::size_t> result;
    for (std::size_t P = 0; P < points_.size(); ++P) {
      if (in_s[P]) continue;
      bool nucleus = true;
      for (auto l : lines_through_[P]) {
        const auto& on = points_on_[l];
        const auto hits = std::count_if(on.begin(), on.end(), [&](std::size_t x) { return in_s[x]; });
        if (hits != 1) {
          nucleus = false;
          break;
        }
      }
      if (nucleus) result.push_back(P);
    }
    return result;
  }

  std::string to_string(const ProjPoint& P) const { return format(P.c, '(', ')'); }
  std::string to_string(const ProjLine& l) const { return format(l.c, '[', ']'); }

 private:
  std::size_t key(const std::array<FieldElement, 3>& v) const {
    return v[0].value + std::size_t{s_} * (v[1].value + std::size_t{s_} * v[2].value);
  }

  FieldElement dot(const std::array<FieldElement, 3>& u, const std::array<FieldElement, 3>& v) const {
    FieldElement r = field_.mul(u[0], v[0]);
    r = field_.add(r, field_.mul(u[1], v[1]));
    return field_.add(r, field_.mul(u[2], v[2]));
  }

  std::array<FieldElement, 3> cross(const std::array<FieldElement, 3>& u,
                                    const std::array<FieldElement, 3>& v) const {
    auto minor = [&](int i, int j) { return field_.sub(field_.mul(u[i], v[j]), field_.mul(u[j], v[i])); };
    return {minor(1, 2), minor(2, 0), minor(0, 1)};
  }

  std::array<FieldElement, 3> conj(const std::array<FieldElement, 3>& v) const {
    return {field_.conjugate(v[0], q_), field_.conjugate(v[1], q_), field_.conjugate(v[2], q_)};
  }

  std::string format(const std::array<FieldElement, 3>& v, char open, char close) const {
    std::string s(1, open);
    for (int i = 0; i < 3; ++i) {
      if (i) s += ",";
      s += field_.to_string(v[i]);
    }
    return s + close;
  }

  unsigned q_;
  GaloisField field_;
  std::uint32_t s_ = 0;
  std::vector<ProjPoint> points_;
  std::vector<ProjLine> lines_;
  std::vector<std::size_t> index_;
  std::vector<std::vector<std::size_t>> points_on_;
  std::vector<std::vector<std::size_t>> lines_through_;
};

inline std::shared_ptr<const ProjectivePlane> enumerate_plane(unsigned q) {
  return std::make_shared<const ProjectivePlane>(q);
}

/// H(q) as an abstract unital together with its natural embedding.
/// Unital point i is the i-th self-conjugate point in plane order; blocks
/// follow the order of their secant lines.
struct HermitianEmbedding {
  std::shared_ptr<const ProjectivePlane> plane;
  AbstractUnital unital;
  std::vector<std::size_t> point_map;     // unital point -> plane point
  std::vector<std::size_t> line_map;      // block -> plane line
  std::vector<PointId> unital_point;      // plane point -> unital point or kNoPoint
  std::vector<BlockIndex> block_on_line;  // plane line -> block or kNoBlock

  static constexpr PointId kNoPoint = static_cast<PointId>(-1);

  unsigned q() const noexcept { return plane->q(); }
  const ProjLine& line_of(BlockIndex b) const { return plane->line(line_map[b]); }
  const ProjPoint& point_of(PointId p) const { return plane->point(point_map[p]); }
};

inline HermitianEmbedding hermitian_unital(unsigned q) {
  auto plane = enumerate_plane(q);
  const auto X = plane->self_conjugate_points();
  std::vector<PointId> unital_point(plane->points().size(), HermitianEmbedding::kNoPoint);
  for (std::size_t i = 0; i < X.size(); ++i) unital_point[X[i]] = static_cast<PointId>(i);

  std::vector<std::vector<PointId>> blocks;
  std::vector<std::size_t> line_map;
  std::vector<BlockIndex> block_on_line(plane->lines().size(), kNoBlock);
  for (std::size_t l = 0; l < plane->lines().size(); ++l) {
    std::vector<PointId> blk;
    for (auto p : plane->points_on(l))
      if (unital_point[p] != HermitianEmbedding::kNoPoint) blk.push_back(unital_point[p]);
    if (blk.size() == q + 1) {
      block_on_line[l] = static_cast<BlockIndex>(blocks.size());
      line_map.push_back(l);
      blocks.push_back(std::move(blk));
    } else if (blk.size() != 1) {
      throw Error(ErrorCode::InvariantViolation, "line meets the Hermitian curve in " +
                                                     std::to_string(blk.size()) + " points");
    }
  }
  AbstractUnital u = [&] {
    try {
      return validate_unital(X.size(), std::move(blocks));
    } catch (const Error& e) {
      throw Error(ErrorCode::InvariantViolation, std::string("Hermitian construction failed: ") + e.what());
    }
  }();
  return HermitianEmbedding{std::move(plane), std::move(u), X, std::move(line_map),
                            std::move(unital_point), std::move(block_on_line)};
}

using Triangle = std::array<BlockIndex, 3>;

/// The q(q-1)/2 polar triangles containing block b, each as a sorted
/// triple of block indices.
inline std::vector<Triangle> polar_triangles_through_block(const HermitianEmbedding& emb, BlockIndex b) {
  const auto& plane = *emb.plane;
  const ProjLine& l1 = emb.line_of(b);
  const std::size_t pole = plane.index_of(plane.pole(l1));
  std::set<Triangle> triangles;
  for (auto l : plane.lines_through(pole)) {
    const BlockIndex b2 = emb.block_on_line[l];
    if (b2 == kNoBlock) continue;
    const ProjLine l3 = plane.polar_triangle_completion(l1, plane.line(l));
    const BlockIndex b3 = emb.block_on_line[plane.index_of(l3)];
    Triangle t{b, b2, b3};
    std::sort(t.begin(), t.end());
    triangles.insert(t);
  }
  return {triangles.begin(), triangles.end()};
}

/// Every polar triangle of the embedding, sorted.
inline std::vector<Triangle> all_polar_triangles(const HermitianEmbedding& emb) {
  std::set<Triangle> all;
  for (BlockIndex b = 0; b < emb.unital.num_blocks(); ++b) {
    for (const auto& t : polar_triangles_through_block(emb, b)) all.insert(t);
  }
  return {all.begin(), all.end()};
}

inline bool blocks_conjugate(const HermitianEmbedding& emb, BlockIndex a, BlockIndex b) {
  return a != b && emb.plane->are_conjugate(emb.line_of(a), emb.line_of(b));
}

inline bool is_baer_subline(const HermitianEmbedding& emb, BlockIndex b) {
  std::vector<ProjPoint> pts;
  for (PointId p : emb.unital.block(b)) pts.push_back(emb.point_of(p));
  return emb.plane->is_baer_subline(pts);
}

/// The set b1 cup (l2 minus b2) of q^2+1 points, as plane indices.
inline std::vector<std::size_t> nucleus_test_set(const HermitianEmbedding& emb, BlockIndex b1, BlockIndex b2) {
  std::vector<std::size_t> S;
  for (PointId p : emb.unital.block(b1)) S.push_back(emb.point_map[p]);
  for (auto p : emb.plane->points_on(emb.line_map[b2])) {
    const PointId u = emb.unital_point[p];
    if (u == HermitianEmbedding::kNoPoint || !emb.unital.contains(b2, u)) S.push_back(p);
  }
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  return S;
}

/// Line perspectivities composed through nuclei, acting on the points of
/// the line l1 of block b1.
struct Gamma1Analysis {
  std::size_t group_order = 0;
  bool cyclic = false;
  /// Plane indices; positions in `line_points` are what the group permutes.
  std::vector<std::size_t> line_points;
  std::size_t z = kNoIndex;
  std::vector<std::size_t> nuclei;
  /// Points of l1 other than Z fixed by the whole group.
  std::vector<std::size_t> fixed_points;
  /// The unique fixed point V1 when exactly one exists.
  std::optional<std::size_t> v1;
  bool preserves_block = false;
  /// Orbit lengths on l1 minus {Z, V1}.
  std::vector<std::size_t> orbit_lengths;
  bool nuclei_collinear = false;
  /// Line m through all nuclei (defined when there are at least two).
  std::optional<std::size_t> m;
  bool z_on_m = false;
  bool v1_on_m = false;
};

inline Gamma1Analysis gamma1_analysis(const HermitianEmbedding& emb, BlockIndex b1, BlockIndex b2) {
  const auto& U = emb.unital;
  if (!U.blocks_disjoint(b1, b2)) throw Error(ErrorCode::NotDisjoint, "blocks must be disjoint");
  const auto& plane = *emb.plane;
  const ProjLine& l1 = emb.line_of(b1);
  const ProjLine& l2 = emb.line_of(b2);

  Gamma1Analysis r;
  r.line_points = plane.points_on(emb.line_map[b1]);
  r.z = plane.index_of(plane.meet(l1, l2));
  const auto S = nucleus_test_set(emb, b1, b2);
  r.nuclei = plane.nuclei(S);

  std::vector<std::size_t> position(plane.points().size(), kNoIndex);
  for (std::size_t i = 0; i < r.line_points.size(); ++i) position[r.line_points[i]] = i;

  // Map l1 -> l1: project from P onto l2, then from Q back onto l1.
  auto project = [&](std::size_t center, std::size_t x, const ProjLine& target) {
    return plane.index_of(plane.meet(plane.join(plane.point(center), plane.point(x)), target));
  };
  std::vector<Perm> gens;
  for (auto P : r.nuclei) {
    for (auto Q : r.nuclei) {
      std::vector<Perm::point_type> images(r.line_points.size());
      for (std::size_t i = 0; i < r.line_points.size(); ++i) {
        const std::size_t on_l2 = project(P, r.line_points[i], l2);
        images[i] = static_cast<Perm::point_type>(position[project(Q, on_l2, l1)]);
      }
      gens.emplace_back(std::move(images));
    }
  }
  const auto G = PermGroup::closure(r.line_points.size(), std::move(gens));
  r.group_order = G.order();
  r.cyclic = G.is_cyclic();

  for (auto x : G.fixed_points()) {
    if (r.line_points[x] != r.z) r.fixed_points.push_back(r.line_points[x]);
  }
  if (r.fixed_points.size() == 1) r.v1 = r.fixed_points.front();

  std::vector<bool> in_b1(plane.points().size(), false);
  for (PointId p : U.block(b1)) in_b1[emb.point_map[p]] = true;
  r.preserves_block = std::all_of(G.generators().begin(), G.generators().end(), [&](const Perm& g) {
    for (std::size_t i = 0; i < r.line_points.size(); ++i)
      if (in_b1[r.line_points[i]] != in_b1[r.line_points[g(static_cast<Perm::point_type>(i))]]) return false;
    return true;
  });

  for (const auto& orbit : G.orbits()) {
    const std::size_t x = r.line_points[orbit.front()];
    if (x == r.z || (r.v1 && x == *r.v1)) continue;
    r.orbit_lengths.push_back(orbit.size());
  }

  if (r.nuclei.size() >= 2) {
    const ProjLine m = plane.join(plane.point(r.nuclei[0]), plane.point(r.nuclei[1]));
    r.m = plane.index_of(m);
    r.nuclei_collinear = std::all_of(r.nuclei.begin(), r.nuclei.end(),
                                     [&](std::size_t P) { return plane.incident(plane.point(P), m); });
    r.z_on_m = plane.incident(plane.point(r.z), m);
    r.v1_on_m = r.v1 && plane.incident(plane.point(*r.v1), m);
  } else {
    r.nuclei_collinear = true;
  }
  return r;
}

}  // namespace unital
