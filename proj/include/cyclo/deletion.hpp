#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/geodesic.hpp"

namespace cyclo {

/// Result of deleting a vertex pair: the triangulation one dimension lower and
/// the relabeling from old labels to new ones (-1 for the deleted vertices).
struct Deletion {
  CsTriangulation triangulation;
  std::vector<Vertex> relabel;
};

/// Deletes p and p̄: the boundary edges {p,q} and {p̄,q̄} (q = p + 1) vanish,
/// p and p̄ are replaced by q and q̄ in every other edge, edges that collapse or
/// become boundary are dropped, and survivors are renumbered 0..2d-1 in order.
inline Deletion delete_vertex_mapped(const CsTriangulation& t, Vertex p) {
  const PolygonDim dim = t.dim();
  if (dim.d() < 2) {
    throw Error(ErrorKind::DimensionTooSmall, "deleting a vertex needs d >= 2, got d=" + std::to_string(dim.d()));
  }
  if (!dim.contains(p)) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(p) + " outside the polygon");
  const PolygonDim lower(dim.d() - 1);
  const Vertex pbar = dim.opposite(p);
  const Vertex q = dim.normalize(p + 1);
  const Vertex qbar = dim.opposite(q);

  Deletion out;
  out.relabel.assign(static_cast<std::size_t>(dim.n()), -1);
  for (Vertex v = 0, next = 0; v < dim.n(); ++v) {
    if (v != p && v != pbar) out.relabel[static_cast<std::size_t>(v)] = next++;
  }
  auto substitute = [&](Vertex v) { return v == p ? q : v == pbar ? qbar : v; };

  std::vector<Edge> edges;
  for (const auto& e : t.interior()) {
    const Vertex a = substitute(e.u);
    const Vertex b = substitute(e.v);
    if (a == b) continue;
    const Edge mapped(out.relabel[static_cast<std::size_t>(a)], out.relabel[static_cast<std::size_t>(b)]);
    if (is_boundary(mapped, lower)) continue;
    edges.push_back(mapped);
  }
  out.triangulation = CsTriangulation::from_edges(lower, std::move(edges));
  return out;
}

inline CsTriangulation delete_vertex(const CsTriangulation& t, Vertex p) {
  return delete_vertex_mapped(t, p).triangulation;
}

inline std::pair<CsTriangulation, CsTriangulation> delete_pair(const CsTriangulation& first,
                                                               const CsTriangulation& second, Vertex p) {
  detail::require_same_dim(first, second);
  return {delete_vertex(first, p), delete_vertex(second, p)};
}

/// Deletes p from every state of `path` and drops consecutive repeats.
inline FlipPath project_path(const FlipPath& path, Vertex p) {
  std::vector<CsTriangulation> states;
  for (const auto& s : path.states) {
    auto reduced = delete_vertex(s, p);
    if (states.empty() || !(states.back() == reduced)) states.push_back(std::move(reduced));
  }
  return FlipPath::from_states(std::move(states));
}

using DistanceFn = std::function<int(const CsTriangulation&, const CsTriangulation&)>;

inline DistanceFn bfs_distance_fn(std::uint64_t cap = kDefaultStateCap) {
  return [cap](const CsTriangulation& a, const CsTriangulation& b) { return distance(a, b, false, cap).value; };
}

struct Lemma1Report {
  int delta = 0;          // distance of the pair
  int delta_deleted = 0;  // distance after deleting p
  std::size_t incident = 0;  // flips incident to {p, p+1} along the geodesic
  std::size_t projected_length = 0;
  bool holds = false;  // delta >= delta_deleted + incident
  bool length_identity = false;  // projected_length == delta - incident
};

/// Checks delta(P) >= delta(P minus p) + f along `geodesic` (a shortest path
/// from first to second) together with the projected-path length identity.
inline Lemma1Report lemma1_check(const FlipPath& geodesic, Vertex p, const DistanceFn& dist) {
  const PolygonDim dim = geodesic.front().dim();
  Lemma1Report r;
  r.delta = static_cast<int>(geodesic.length());
  r.incident = count_incident_flips(geodesic, Edge(p, dim.normalize(p + 1)));
  const FlipPath projected = project_path(geodesic, p);
  r.projected_length = projected.length();
  r.delta_deleted = dist(projected.front(), projected.back());
  r.holds = r.delta >= r.delta_deleted + static_cast<int>(r.incident);
  r.length_identity = r.projected_length + r.incident == geodesic.length();
  return r;
}

inline Lemma1Report lemma1_check(const CsTriangulation& first, const CsTriangulation& second, Vertex p,
                                 std::uint64_t cap = kDefaultStateCap) {
  const auto geodesic = distance(first, second, true, cap).witness;
  return lemma1_check(*geodesic, p, bfs_distance_fn(cap));
}

namespace detail {

inline std::vector<Edge> boundary_triangle(const CsTriangulation& t, Vertex p, Vertex q) {
  const Vertex r = boundary_apex(t, Edge(p, q));
  std::vector<Edge> tri{Edge(p, q), Edge(p, r), Edge(q, r)};
  std::sort(tri.begin(), tri.end());
  return tri;
}

inline bool share_edge(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  return std::any_of(a.begin(), a.end(), [&](const Edge& e) { return std::find(b.begin(), b.end(), e) != b.end(); });
}

}  // namespace detail

struct Lemma2Report {
  bool hypotheses = false;
  int delta = 0;
  std::array<int, 2> delta_deleted{};  // after deleting p0, p1
  std::optional<Vertex> witness;       // first x in {p0, p1} with slack >= 2
};

/// For consecutive boundary edges (p0,p1), (p1,p2): if the triangles of
/// `first` on them share no edge and `second` has an ear at p1, looks for
/// x in {p0, p1} with delta(P) >= delta(P minus x) + 2.
inline Lemma2Report lemma2_check(const CsTriangulation& first, const CsTriangulation& second, Vertex p0,
                                 const DistanceFn& dist) {
  detail::require_same_dim(first, second);
  const PolygonDim dim = first.dim();
  Lemma2Report r;
  if (dim.d() < 2) return r;
  const Vertex p1 = dim.normalize(p0 + 1);
  const Vertex p2 = dim.normalize(p0 + 2);
  const auto t01 = detail::boundary_triangle(first, p0, p1);
  const auto t12 = detail::boundary_triangle(first, p1, p2);
  r.hypotheses = !detail::share_edge(t01, t12) && second.contains(Edge(p0, p2));
  if (!r.hypotheses) return r;
  r.delta = dist(first, second);
  const std::array<Vertex, 2> candidates{p0, p1};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto [a, b] = delete_pair(first, second, candidates[i]);
    r.delta_deleted[i] = dist(a, b);
    if (!r.witness && r.delta >= r.delta_deleted[i] + 2) r.witness = candidates[i];
  }
  return r;
}

inline std::optional<Vertex> lemma2_witness(const CsTriangulation& first, const CsTriangulation& second, Vertex p0,
                                            const DistanceFn& dist = bfs_distance_fn()) {
  return lemma2_check(first, second, p0, dist).witness;
}

struct Lemma3Report {
  bool hypotheses = false;
  bool steps_ok = false;  // some chain of ears and witnesses ran to completion
  int delta = 0;
  int delta_final = 0;
  std::vector<Vertex> deleted;  // labels at the time of each deletion
  bool holds = false;           // delta - delta_final >= 2 (edges - 1)
};

/// Chains lemma2 over the boundary path p0, p0+1, ..., p0+edges (edges <= d):
/// deletes one vertex per step at an ear of `second`, edges - 1 times.
/// Deleting x also deletes its antipode, which can glue two triangles of
/// `first` near the far end of the path, so a single greedy chain may stall.
/// The search therefore backtracks over every ear and every witness and keeps
/// the first complete chain, or the best incomplete one for diagnostics.
inline Lemma3Report lemma3_check(const CsTriangulation& first, const CsTriangulation& second, Vertex p0, int edges,
                                 const DistanceFn& dist) {
  detail::require_same_dim(first, second);
  const PolygonDim dim = first.dim();
  if (edges < 2 || edges > dim.d()) {
    throw Error(ErrorKind::OutOfRange, "boundary path length must lie in [2, d]");
  }
  Lemma3Report r;
  std::vector<Vertex> ps;
  for (int i = 0; i <= edges; ++i) ps.push_back(dim.normalize(p0 + i));

  std::vector<std::vector<Edge>> tris;
  for (int i = 0; i < edges; ++i) tris.push_back(detail::boundary_triangle(first, ps[static_cast<std::size_t>(i)], ps[static_cast<std::size_t>(i + 1)]));
  bool disjoint = true;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    for (std::size_t j = i + 1; j < tris.size(); ++j) disjoint = disjoint && !detail::share_edge(tris[i], tris[j]);
  }
  r.hypotheses = disjoint && second.contains(Edge(ps.front(), ps.back()));
  if (!r.hypotheses) return r;

  r.delta = dist(first, second);
  r.delta_final = r.delta;
  std::vector<Vertex> deleted;
  // Returns true once a complete chain meets the bound; r then holds that chain.
  const std::function<bool(const CsTriangulation&, const CsTriangulation&, const std::vector<Vertex>&, int)> search =
      [&](const CsTriangulation& lo, const CsTriangulation& hi, const std::vector<Vertex>& path, int current) {
        if (path.size() == 2) {
          const bool good = r.delta - current >= 2 * (edges - 1);
          if (good || !r.steps_ok) {
            r.steps_ok = true;
            r.delta_final = current;
            r.deleted = deleted;
          }
          return good;
        }
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
          if (!hi.contains(Edge(path[i - 1], path[i + 1]))) continue;
          const auto step = lemma2_check(lo, hi, path[i - 1], dist);
          if (!step.hypotheses) continue;
          for (std::size_t k = 0; k < 2; ++k) {
            if (step.delta < step.delta_deleted[k] + 2) continue;
            const Vertex x = path[i - 1 + k];
            const auto dlo = delete_vertex_mapped(lo, x);
            std::vector<Vertex> next;
            for (Vertex v : path) {
              if (v != x) next.push_back(dlo.relabel[static_cast<std::size_t>(v)]);
            }
            deleted.push_back(x);
            const bool done = search(dlo.triangulation, delete_vertex(hi, x), next, step.delta_deleted[k]);
            deleted.pop_back();
            if (done) return true;
          }
        }
        return false;
      };
  r.holds = search(first, second, ps, r.delta);
  return r;
}

}  // namespace cyclo
