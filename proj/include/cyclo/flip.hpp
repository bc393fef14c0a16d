#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <utility>
#include <vector>

#include "cyclo/triangulation.hpp"

namespace cyclo {

/// One edge of the flip graph. `removed` is the lexicographically smaller of
/// the symmetric pair (or the diagonal); `introduced` is the edge that replaces
/// `removed` in its quadrilateral.
struct FlipMove {
  enum class Kind { SymmetricPair, Diagonal };
  Kind kind = Kind::SymmetricPair;
  Edge removed;
  Edge introduced;

  friend bool operator==(const FlipMove&, const FlipMove&) = default;
};

/// Apexes of the two triangles on interior edge `e`: the common neighbors of
/// its endpoints. In an outerplanar triangulation every 3-cycle is a face.
inline std::pair<Vertex, Vertex> apexes(const Adjacency& adj, const Edge& e) {
  std::uint32_t common = adj[static_cast<std::size_t>(e.u)] & adj[static_cast<std::size_t>(e.v)];
  const int y = std::countr_zero(common);
  common &= common - 1;
  const int y2 = std::countr_zero(common);
  return {y, y2};
}

inline std::pair<Vertex, Vertex> flip_quadrilateral(const CsTriangulation& t, const Edge& e) {
  if (!t.has_interior(e)) {
    throw Error(ErrorKind::NotInteriorEdge, to_string(e) + " is not an interior edge of " + to_string(t));
  }
  return apexes(t.adjacency(), e);
}

namespace detail {

// Mask of the flip of `e` (known interior) given the adjacency of `mask`.
inline EdgeMask flip_mask(const EdgeMask& mask, const Adjacency& adj, const Edge& e, PolygonDim dim,
                          Edge* introduced = nullptr) {
  const auto [y, y2] = apexes(adj, e);
  const Edge in(y, y2);
  EdgeMask out = mask;
  out.toggle(e);
  out.toggle(in);
  if (!is_diagonal(e, dim)) {
    out.toggle(mirror(e, dim));
    out.toggle(mirror(in, dim));
  }
  if (introduced != nullptr) *introduced = in;
  return out;
}

inline bool is_move_key(const Edge& e, PolygonDim dim) { return !(mirror(e, dim) < e); }

}  // namespace detail

/// The symmetric flip of `e`; flip(t, e) == flip(t, mirror(e)).
inline CsTriangulation flip(const CsTriangulation& t, const Edge& e) {
  if (!t.has_interior(e)) {
    throw Error(ErrorKind::NotInteriorEdge, to_string(e) + " is not an interior edge of " + to_string(t));
  }
  return CsTriangulation::from_mask(t.dim(), detail::flip_mask(t.mask(), t.adjacency(), e, t.dim()));
}

inline FlipMove move_for(const CsTriangulation& t, const Edge& e) {
  if (!t.has_interior(e)) {
    throw Error(ErrorKind::NotInteriorEdge, to_string(e) + " is not an interior edge of " + to_string(t));
  }
  const PolygonDim dim = t.dim();
  const Edge key = std::min(e, mirror(e, dim));
  const auto [y, y2] = apexes(t.adjacency(), key);
  return {is_diagonal(key, dim) ? FlipMove::Kind::Diagonal : FlipMove::Kind::SymmetricPair, key, Edge(y, y2)};
}

/// Calls visit(move, neighbor_mask) once per flip class of `mask` (d times for
/// a valid state), in increasing order of the removed edge.
template <typename Visit>
void for_each_neighbor_mask(const EdgeMask& mask, PolygonDim dim, Visit&& visit) {
  const Adjacency adj = adjacency(mask, dim);
  mask.for_each([&](const Edge& e) {
    if (!detail::is_move_key(e, dim)) return;
    Edge introduced;
    const EdgeMask next = detail::flip_mask(mask, adj, e, dim, &introduced);
    const FlipMove move{is_diagonal(e, dim) ? FlipMove::Kind::Diagonal : FlipMove::Kind::SymmetricPair, e,
                        introduced};
    visit(move, next);
  });
}

struct Neighbor {
  FlipMove move;
  CsTriangulation state;
};

/// One entry per flip class, ordered by introduced edge.
inline std::vector<Neighbor> neighbors(const CsTriangulation& t) {
  std::vector<Neighbor> out;
  out.reserve(static_cast<std::size_t>(t.dim().d()));
  for_each_neighbor_mask(t.mask(), t.dim(), [&](const FlipMove& m, const EdgeMask& next) {
    out.push_back({m, CsTriangulation::from_mask(t.dim(), next)});
  });
  std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) {
    return std::pair(a.move.introduced, a.move.removed) < std::pair(b.move.introduced, b.move.removed);
  });
  return out;
}

/// The move taking `from` to `to`, if they are adjacent.
inline std::optional<FlipMove> move_between(const CsTriangulation& from, const CsTriangulation& to) {
  std::optional<FlipMove> found;
  for_each_neighbor_mask(from.mask(), from.dim(), [&](const FlipMove& m, const EdgeMask& next) {
    if (!found && next == to.mask()) found = m;
  });
  return found;
}

}  // namespace cyclo
