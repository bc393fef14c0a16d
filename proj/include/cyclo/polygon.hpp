#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "cyclo/error.hpp"

namespace cyclo {

// Largest supported dimension: a 28-gon, whose 378 vertex pairs fit in EdgeMask.
inline constexpr int kMaxDim = 13;
inline constexpr int kMaxVertices = 2 * kMaxDim + 2;

using Vertex = int;

/// Dimension of the cyclohedron together with the vertex count n = 2d + 2 of
/// the polygon whose centrally symmetric triangulations are its vertices.
class PolygonDim {
 public:
  constexpr PolygonDim() = default;
  constexpr explicit PolygonDim(int d) : d_(d) {
    if (d < 1 || d > kMaxDim) {
      throw Error(ErrorKind::OutOfRange,
                  "dimension " + std::to_string(d) + " outside [1, " + std::to_string(kMaxDim) + "]");
    }
  }

  constexpr int d() const noexcept { return d_; }
  constexpr int n() const noexcept { return 2 * d_ + 2; }

  constexpr Vertex normalize(int x) const noexcept {
    const int m = x % n();
    return m < 0 ? m + n() : m;
  }
  constexpr Vertex opposite(Vertex x) const noexcept { return normalize(x + d_ + 1); }
  constexpr bool contains(Vertex x) const noexcept { return x >= 0 && x < n(); }

  friend constexpr bool operator==(PolygonDim, PolygonDim) = default;

 private:
  int d_ = 1;
};

constexpr Vertex opposite(Vertex x, PolygonDim dim) noexcept { return dim.opposite(x); }

/// An unordered pair of polygon vertices, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool has(Vertex x) const noexcept { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const noexcept { return u == x ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

enum class EdgeClass { Boundary, Diagonal, Interior };

constexpr bool is_boundary(const Edge& e, PolygonDim dim) noexcept {
  return e.v - e.u == 1 || (e.u == 0 && e.v == dim.n() - 1);
}
constexpr bool is_diagonal(const Edge& e, PolygonDim dim) noexcept {
  return e.v - e.u == dim.d() + 1;
}
constexpr EdgeClass classify(const Edge& e, PolygonDim dim) noexcept {
  if (is_boundary(e, dim)) return EdgeClass::Boundary;
  if (is_diagonal(e, dim)) return EdgeClass::Diagonal;
  return EdgeClass::Interior;
}

constexpr Edge mirror(const Edge& e, PolygonDim dim) noexcept {
  return Edge(dim.opposite(e.u), dim.opposite(e.v));
}

constexpr bool valid_edge(const Edge& e, PolygonDim dim) noexcept {
  return dim.contains(e.u) && dim.contains(e.v) && e.u != e.v;
}

/// True iff the open chords strictly intersect. With u < v normalization this
/// is "exactly one endpoint of e2 lies strictly inside (e1.u, e1.v)".
constexpr bool edges_cross(const Edge& e1, const Edge& e2, PolygonDim = PolygonDim{}) noexcept {
  if (e1.has(e2.u) || e1.has(e2.v)) return false;
  const bool in_u = e1.u < e2.u && e2.u < e1.v;
  const bool in_v = e1.u < e2.v && e2.v < e1.v;
  return in_u != in_v;
}

// Bit index of {u, v}, u < v, in the triangular enumeration of vertex pairs.
constexpr int edge_index(const Edge& e) noexcept { return e.v * (e.v - 1) / 2 + e.u; }
inline constexpr int kMaxEdgeIndex = kMaxVertices * (kMaxVertices - 1) / 2;

namespace detail {
inline constexpr auto kEdgeByIndex = [] {
  std::array<Edge, kMaxEdgeIndex> table{};
  for (int v = 1; v < kMaxVertices; ++v) {
    for (int u = 0; u < v; ++u) table[static_cast<std::size_t>(v * (v - 1) / 2 + u)] = Edge(u, v);
  }
  return table;
}();
}  // namespace detail

constexpr Edge edge_at(int index) noexcept { return detail::kEdgeByIndex[static_cast<std::size_t>(index)]; }

/// Fixed-width membership bitset over vertex pairs; the identity of a state
/// during search.
struct EdgeMask {
  static constexpr int kWords = (kMaxEdgeIndex + 63) / 64;
  std::array<std::uint64_t, kWords> words{};

  constexpr void set(int i) noexcept { words[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) noexcept { words[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr void toggle(int i) noexcept { words[static_cast<std::size_t>(i >> 6)] ^= std::uint64_t{1} << (i & 63); }
  constexpr bool test(int i) const noexcept {
    return (words[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U;
  }

  constexpr void set(const Edge& e) noexcept { set(edge_index(e)); }
  constexpr void toggle(const Edge& e) noexcept { toggle(edge_index(e)); }
  constexpr bool test(const Edge& e) const noexcept { return test(edge_index(e)); }

  constexpr int count() const noexcept {
    int c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = words[static_cast<std::size_t>(w)];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        f(edge_at(w * 64 + b));
      }
    }
  }

  friend constexpr bool operator==(const EdgeMask&, const EdgeMask&) = default;

  // Numeric order of the bit string, most significant word first.
  friend constexpr std::strong_ordering operator<=>(const EdgeMask& a, const EdgeMask& b) noexcept {
    for (int w = kWords - 1; w >= 0; --w) {
      const auto i = static_cast<std::size_t>(w);
      if (a.words[i] != b.words[i]) return a.words[i] <=> b.words[i];
    }
    return std::strong_ordering::equal;
  }
};

struct EdgeMaskHash {
  std::size_t operator()(const EdgeMask& m) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : m.words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

}  // namespace cyclo
