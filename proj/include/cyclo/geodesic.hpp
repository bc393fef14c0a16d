#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cyclo/path.hpp"

namespace cyclo {

inline constexpr std::uint64_t kDefaultStateCap = 50'000'000;

enum class SearchMethod { Bfs, BidirectionalBfs, OrbitReduced };

inline std::string_view to_string(SearchMethod m) {
  switch (m) {
    case SearchMethod::Bfs: return "bfs";
    case SearchMethod::BidirectionalBfs: return "bidirectional-bfs";
    case SearchMethod::OrbitReduced: return "orbit-reduced";
  }
  return "unknown";
}

struct DistanceReport {
  int value = 0;
  std::optional<FlipPath> witness;
  // Realizing pair for eccentricity and diameter queries.
  std::optional<std::pair<CsTriangulation, CsTriangulation>> endpoints;
  std::uint64_t explored = 0;
  SearchMethod method = SearchMethod::Bfs;
  // Set when a cap interrupted the search: `value` is then only a lower bound.
  bool partial = false;
};

namespace detail {

// Neighbors of `mask` ordered by introduced edge, for reproducible witnesses.
struct OrderedNeighbors {
  std::array<std::pair<Edge, EdgeMask>, kMaxDim> items;
  int size = 0;
};

inline OrderedNeighbors ordered_neighbors(const EdgeMask& mask, PolygonDim dim) {
  OrderedNeighbors out;
  for_each_neighbor_mask(mask, dim, [&](const FlipMove& m, const EdgeMask& next) {
    if (out.size < kMaxDim) out.items[static_cast<std::size_t>(out.size++)] = {m.introduced, next};
  });
  std::sort(out.items.begin(), out.items.begin() + out.size,
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

struct SearchNode {
  EdgeMask parent;
  int dist;
};
using SearchMap = std::unordered_map<EdgeMask, SearchNode, EdgeMaskHash>;

inline void check_cap(std::uint64_t explored, std::uint64_t cap) {
  if (explored > cap) {
    throw Error(ErrorKind::ResourceLimit,
                "search visited " + std::to_string(explored) + " states, above the cap " + std::to_string(cap));
  }
}

inline std::vector<EdgeMask> trace(const SearchMap& seen, EdgeMask at) {
  std::vector<EdgeMask> chain{at};
  while (seen.at(at).dist > 0) {
    at = seen.at(at).parent;
    chain.push_back(at);
  }
  return chain;
}

inline void require_same_dim(const CsTriangulation& a, const CsTriangulation& b) {
  if (!(a.dim() == b.dim())) {
    throw Error(ErrorKind::DimMismatch, "dimensions " + std::to_string(a.dim().d()) + " and " +
                                            std::to_string(b.dim().d()) + " differ");
  }
}

}  // namespace detail

/// Flip distance by bidirectional breadth-first search, expanding whole layers
/// of the smaller frontier until the two balls meet.
inline DistanceReport distance(const CsTriangulation& from, const CsTriangulation& to, bool want_witness = false,
                               std::uint64_t cap = kDefaultStateCap) {
  detail::require_same_dim(from, to);
  const PolygonDim dim = from.dim();
  DistanceReport report;
  report.method = SearchMethod::BidirectionalBfs;
  if (from == to) {
    report.explored = 1;
    if (want_witness) report.witness = FlipPath::single(from);
    return report;
  }

  struct Side {
    detail::SearchMap seen;
    std::vector<EdgeMask> frontier;
    int depth = 0;
  };
  std::array<Side, 2> sides;
  sides[0].seen.emplace(from.mask(), detail::SearchNode{from.mask(), 0});
  sides[0].frontier.push_back(from.mask());
  sides[1].seen.emplace(to.mask(), detail::SearchNode{to.mask(), 0});
  sides[1].frontier.push_back(to.mask());

  std::optional<EdgeMask> meet;
  int best = 0;
  while (!meet) {
    const int s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
    Side& side = sides[static_cast<std::size_t>(s)];
    const Side& other = sides[static_cast<std::size_t>(1 - s)];
    if (side.frontier.empty()) throw Error(ErrorKind::InvalidArgument, "states are not connected");
    std::vector<EdgeMask> next;
    for (const auto& u : side.frontier) {
      const auto nbs = detail::ordered_neighbors(u, dim);
      for (int i = 0; i < nbs.size; ++i) {
        const EdgeMask& v = nbs.items[static_cast<std::size_t>(i)].second;
        if (!side.seen.emplace(v, detail::SearchNode{u, side.depth + 1}).second) continue;
        next.push_back(v);
        if (auto it = other.seen.find(v); it != other.seen.end()) {
          const int total = side.depth + 1 + it->second.dist;
          if (!meet || total < best) {
            meet = v;
            best = total;
          }
        }
      }
      detail::check_cap(sides[0].seen.size() + sides[1].seen.size(), cap);
    }
    side.frontier = std::move(next);
    ++side.depth;
  }

  report.value = best;
  report.explored = sides[0].seen.size() + sides[1].seen.size();
  if (want_witness) {
    auto head = detail::trace(sides[0].seen, *meet);
    std::reverse(head.begin(), head.end());
    const auto tail = detail::trace(sides[1].seen, *meet);
    head.insert(head.end(), tail.begin() + 1, tail.end());
    std::vector<CsTriangulation> states;
    states.reserve(head.size());
    for (const auto& m : head) states.push_back(CsTriangulation::from_mask(dim, m));
    report.witness = FlipPath::from_states(std::move(states));
  }
  return report;
}

/// Largest distance from `t`; endpoints hold t and the first state found in
/// the last BFS layer.
inline DistanceReport eccentricity(const CsTriangulation& t, bool want_witness = false,
                                   std::uint64_t cap = kDefaultStateCap) {
  const PolygonDim dim = t.dim();
  std::unordered_set<EdgeMask, EdgeMaskHash> seen{t.mask()};
  std::vector<EdgeMask> frontier{t.mask()};
  int depth = 0;
  EdgeMask far = t.mask();
  while (true) {
    std::vector<EdgeMask> next;
    for (const auto& u : frontier) {
      for_each_neighbor_mask(u, dim, [&](const FlipMove&, const EdgeMask& v) {
        if (seen.insert(v).second) next.push_back(v);
      });
      detail::check_cap(seen.size(), cap);
    }
    if (next.empty()) break;
    far = *std::min_element(next.begin(), next.end());
    frontier = std::move(next);
    ++depth;
  }
  DistanceReport report;
  report.value = depth;
  report.explored = seen.size();
  report.method = SearchMethod::Bfs;
  report.endpoints.emplace(t, CsTriangulation::from_mask(dim, far));
  if (want_witness) report.witness = distance(t, report.endpoints->second, true, cap).witness;
  return report;
}

/// Apex of the unique triangle of `t` on boundary edge `b`.
inline Vertex boundary_apex(const CsTriangulation& t, const Edge& b) {
  if (!valid_edge(b, t.dim()) || !is_boundary(b, t.dim())) {
    throw Error(ErrorKind::NotBoundaryEdge, to_string(b) + " is not a boundary edge");
  }
  const auto adj = t.adjacency();
  return std::countr_zero(adj[static_cast<std::size_t>(b.u)] & adj[static_cast<std::size_t>(b.v)]);
}

/// Number of moves along `p` that remove {p,r} or {q,r}, r the current apex
/// over the boundary edge {p,q}.
inline std::size_t count_incident_flips(const FlipPath& path, const Edge& boundary) {
  if (path.states.empty()) return 0;
  const PolygonDim dim = path.states.front().dim();
  if (!valid_edge(boundary, dim) || !is_boundary(boundary, dim)) {
    throw Error(ErrorKind::NotBoundaryEdge, to_string(boundary) + " is not a boundary edge");
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < path.moves.size(); ++i) {
    const Vertex r = boundary_apex(path.states[i], boundary);
    const Edge side_p(boundary.u, r);
    const Edge side_q(boundary.v, r);
    const Edge& removed = path.moves[i].removed;
    const Edge removed_mirror = mirror(removed, dim);
    for (const Edge& e : {removed, removed_mirror}) {
      if (e == side_p || e == side_q) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace cyclo
