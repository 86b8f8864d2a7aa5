#pragma once

// Small permutation groups with full element enumeration.
//
// Groups met in unital computations act on the n+1 points of a block
// (n <= 6) or on the q^2+1 points of a projective line (q <= 5), so every
// group here is enumerated element by element. No stabilizer chains.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "unital/error.hpp"

namespace unital {

/// Permutation of {0, ..., degree-1} stored as its image list.
///
/// Products compose left to right: (a * b)(x) = b(a(x)), i.e. apply `a`
/// first. This matches the way perspectivities are written as
/// pi_{b1,P,b2} pi_{b2,Q,b1}.
class Perm {
 public:
  using point_type = std::uint32_t;

  Perm() = default;

  explicit Perm(std::vector<point_type> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (point_type x : images_) {
      if (x >= images_.size() || seen[x]) {
        throw Error(ErrorCode::InvalidArgument, "image list is not a bijection");
      }
      seen[x] = true;
    }
  }

  static Perm identity(std::size_t degree) {
    Perm p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), point_type{0});
    return p;
  }

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<point_type>> cycles) {
    std::vector<point_type> images(degree);
    std::iota(images.begin(), images.end(), point_type{0});
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
      std::vector<point_type> c(cycle);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree || used[c[i]]) {
          throw Error(ErrorCode::InvalidArgument, "cycles are not disjoint or out of range");
        }
        used[c[i]] = true;
        images[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return Perm(std::move(images));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  point_type operator()(point_type x) const { return images_[x]; }
  const std::vector<point_type>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  std::size_t fixed_point_count() const noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == i;
    return n;
  }

  Perm inverse() const {
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<point_type>(i);
    return r;
  }

  /// Least common multiple of the cycle lengths.
  std::size_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t result = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  std::string to_cycle_string() const {
    std::ostringstream out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out << '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) out << ' ';
        out << j;
      }
      out << ')';
    }
    const std::string s = out.str();
    return s.empty() ? "()" : s;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) {
      throw Error(ErrorCode::InvalidArgument, "degree mismatch in permutation product");
    }
    Perm r;
    r.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
    return r;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<point_type> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Multiset of element orders: order -> number of elements of that order.
using OrderSpectrum = std::map<std::size_t, std::size_t>;

/// Finitely generated permutation group with every element enumerated.
class PermGroup {
 public:
  static constexpr std::size_t kMaxOrder = 10000;

  /// Enumerates the group generated by `generators` acting on `degree`
  /// points. Breadth-first: each known element is multiplied by every
  /// generator until nothing new appears. Throws TooLarge past `max_order`.
  static PermGroup closure(std::size_t degree, std::vector<Perm> generators,
                           std::size_t max_order = kMaxOrder) {
    for (const auto& g : generators) {
      if (g.degree() != degree) {
        throw Error(ErrorCode::InvalidArgument, "generators must share the group degree");
      }
    }
    PermGroup G;
    G.degree_ = degree;
    G.generators_ = std::move(generators);
    G.add(Perm::identity(degree));
    for (std::size_t next = 0; next < G.elements_.size(); ++next) {
      for (const auto& g : G.generators_) {
        Perm h = G.elements_[next] * g;
        if (!G.index_.contains(h)) {
          if (G.elements_.size() >= max_order) {
            throw Error(ErrorCode::TooLarge,
                        "group order exceeds " + std::to_string(max_order));
          }
          G.add(std::move(h));
        }
      }
    }
    return G;
  }

  /// Degree taken from the first generator; no generators gives the
  /// trivial group on zero points.
  static PermGroup closure(std::vector<Perm> generators) {
    const std::size_t degree = generators.empty() ? 0 : generators.front().degree();
    return closure(degree, std::move(generators));
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  /// Elements in discovery order; the identity is first.
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  bool contains(const Perm& p) const { return index_.contains(p); }

  bool is_trivial() const noexcept { return elements_.size() == 1; }

  bool is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      for (std::size_t j = i + 1; j < generators_.size(); ++j) {
        if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
      }
    }
    return true;
  }

  bool is_cyclic() const {
    const std::size_t n = order();
    return std::any_of(elements_.begin(), elements_.end(),
                       [n](const Perm& g) { return g.order() == n; });
  }

  /// No non-identity element fixes a point.
  bool is_semiregular() const {
    return std::all_of(elements_.begin() + 1, elements_.end(),
                       [](const Perm& g) { return g.fixed_point_count() == 0; });
  }

  OrderSpectrum element_order_spectrum() const {
    OrderSpectrum s;
    for (const auto& g : elements_) ++s[g.order()];
    return s;
  }

  /// Orbits on {0..degree-1}, each sorted, ordered by smallest point.
  std::vector<std::vector<Perm::point_type>> orbits() const {
    std::vector<std::vector<Perm::point_type>> result;
    std::vector<bool> seen(degree_, false);
    for (Perm::point_type x = 0; x < degree_; ++x) {
      if (seen[x]) continue;
      std::vector<Perm::point_type> orbit{x};
      seen[x] = true;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (const auto& g : generators_) {
          auto y = g(orbit[i]);
          if (!seen[y]) {
            seen[y] = true;
            orbit.push_back(y);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      result.push_back(std::move(orbit));
    }
    return result;
  }

  /// Points fixed by every element.
  std::vector<Perm::point_type> fixed_points() const {
    std::vector<Perm::point_type> result;
    for (Perm::point_type x = 0; x < degree_; ++x) {
      bool fixed = std::all_of(generators_.begin(), generators_.end(),
                               [x](const Perm& g) { return g(x) == x; });
      if (fixed) result.push_back(x);
    }
    return result;
  }

  std::size_t center_order() const {
    std::size_t n = 0;
    for (const auto& z : elements_) {
      bool central = std::all_of(generators_.begin(), generators_.end(),
                                 [&z](const Perm& g) { return z * g == g * z; });
      n += central;
    }
    return n;
  }

  /// Order of the commutator subgroup. Quadratic in |G|; meant for small groups.
  std::size_t derived_subgroup_order() const {
    std::unordered_set<Perm, PermHash> commutators;
    for (const auto& a : elements_) {
      const Perm ai = a.inverse();
      for (const auto& b : elements_) {
        commutators.insert(ai * b.inverse() * a * b);
      }
    }
    return closure(degree_, {commutators.begin(), commutators.end()}).order();
  }

 private:
  void add(Perm p) {
    index_.emplace(p, elements_.size());
    elements_.push_back(std::move(p));
  }

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

inline PermGroup closure(std::size_t degree, std::vector<Perm> generators) {
  return PermGroup::closure(degree, std::move(generators));
}

inline std::string to_string(const OrderSpectrum& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [order, count] : s) {
    if (!first) out << ", ";
    first = false;
    out << order << ':' << count;
  }
  out << '}';
  return out.str();
}

}  // namespace unital
