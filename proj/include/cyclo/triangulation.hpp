#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/polygon.hpp"

namespace cyclo {

/// Per-vertex neighbor bitsets of a polygon triangulation, boundary included.
using Adjacency = std::array<std::uint32_t, kMaxVertices>;

inline Adjacency adjacency(const EdgeMask& mask, PolygonDim dim) {
  Adjacency adj{};
  const int n = dim.n();
  for (int x = 0; x < n; ++x) {
    const int y = (x + 1) % n;
    adj[static_cast<std::size_t>(x)] |= 1U << y;
    adj[static_cast<std::size_t>(y)] |= 1U << x;
  }
  mask.for_each([&](const Edge& e) {
    adj[static_cast<std::size_t>(e.u)] |= 1U << e.v;
    adj[static_cast<std::size_t>(e.v)] |= 1U << e.u;
  });
  return adj;
}

/// A set of interior edges of the (2d+2)-gon, intended to be a centrally
/// symmetric triangulation. Construction only normalizes; `validate` checks.
class CsTriangulation {
 public:
  CsTriangulation() = default;

  /// Unchecked: sorts and deduplicates. Throws OutOfRange for labels outside
  /// the polygon and InvalidArgument for degenerate edges.
  static CsTriangulation from_edges(PolygonDim dim, std::vector<Edge> edges) {
    CsTriangulation t;
    t.dim_ = dim;
    for (const auto& e : edges) {
      if (!dim.contains(e.u) || !dim.contains(e.v)) {
        throw Error(ErrorKind::OutOfRange, "edge " + to_string(e) + " has a label outside [0, " +
                                               std::to_string(dim.n()) + ")");
      }
      if (e.u == e.v) throw Error(ErrorKind::InvalidArgument, "degenerate edge " + to_string(e));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& e : edges) t.mask_.set(e);
    t.interior_ = std::move(edges);
    return t;
  }

  static CsTriangulation from_mask(PolygonDim dim, const EdgeMask& mask) {
    CsTriangulation t;
    t.dim_ = dim;
    t.mask_ = mask;
    t.interior_.reserve(static_cast<std::size_t>(2 * dim.d() - 1));
    mask.for_each([&](const Edge& e) { t.interior_.push_back(e); });
    std::sort(t.interior_.begin(), t.interior_.end());
    return t;
  }

  /// Checked construction; throws InvalidTriangulation listing every violation.
  static CsTriangulation create(PolygonDim dim, std::vector<Edge> edges);

  PolygonDim dim() const noexcept { return dim_; }
  std::span<const Edge> interior() const noexcept { return interior_; }
  const EdgeMask& mask() const noexcept { return mask_; }
  bool contains(const Edge& e) const noexcept {
    return valid_edge(e, dim_) && (is_boundary(e, dim_) || mask_.test(e));
  }
  bool has_interior(const Edge& e) const noexcept {
    return valid_edge(e, dim_) && !is_boundary(e, dim_) && mask_.test(e);
  }

  /// The unique diagonal; for an invalid set, the smallest one (or {0,0} if none).
  Edge diagonal() const noexcept {
    for (const auto& e : interior_) {
      if (is_diagonal(e, dim_)) return e;
    }
    return Edge{};
  }

  Adjacency adjacency() const { return cyclo::adjacency(mask_, dim_); }

  friend bool operator==(const CsTriangulation& a, const CsTriangulation& b) {
    return a.dim_ == b.dim_ && a.mask_ == b.mask_;
  }
  friend bool operator<(const CsTriangulation& a, const CsTriangulation& b) {
    if (a.dim_.d() != b.dim_.d()) return a.dim_.d() < b.dim_.d();
    return a.interior_ < b.interior_;
  }

 private:
  PolygonDim dim_{};
  std::vector<Edge> interior_;
  EdgeMask mask_{};
};

struct Violation {
  enum class Kind { BoundaryEdge, EdgeCount, Crossing, NotSymmetric, DiagonalCount };
  Kind kind;
  std::string message;
  std::vector<Edge> edges;
};

inline std::string_view to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::BoundaryEdge: return "boundary-edge";
    case Violation::Kind::EdgeCount: return "edge-count";
    case Violation::Kind::Crossing: return "crossing";
    case Violation::Kind::NotSymmetric: return "not-symmetric";
    case Violation::Kind::DiagonalCount: return "diagonal-count";
  }
  return "unknown";
}

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(Violation::Kind k) const noexcept {
    return std::any_of(violations.begin(), violations.end(),
                       [k](const Violation& v) { return v.kind == k; });
  }
  std::string summary() const {
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += std::string(to_string(v.kind)) + ": " + v.message;
      for (const auto& e : v.edges) out += " " + to_string(e);
    }
    return out;
  }
};

inline ValidationReport validate(const CsTriangulation& t) {
  ValidationReport report;
  const PolygonDim dim = t.dim();
  const auto edges = t.interior();

  std::vector<Edge> boundary;
  for (const auto& e : edges) {
    if (is_boundary(e, dim)) boundary.push_back(e);
  }
  if (!boundary.empty()) {
    report.violations.push_back(
        {Violation::Kind::BoundaryEdge, "boundary edges listed as interior", boundary});
  }

  const auto expected = static_cast<std::size_t>(2 * dim.d() - 1);
  if (edges.size() != expected) {
    report.violations.push_back({Violation::Kind::EdgeCount,
                                 "expected " + std::to_string(expected) + " interior edges, found " +
                                     std::to_string(edges.size()),
                                 {}});
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges_cross(edges[i], edges[j], dim)) {
        report.violations.push_back({Violation::Kind::Crossing, "edges cross", {edges[i], edges[j]}});
      }
    }
  }

  std::vector<Edge> unmatched;
  for (const auto& e : edges) {
    if (!t.mask().test(mirror(e, dim))) unmatched.push_back(e);
  }
  if (!unmatched.empty()) {
    report.violations.push_back(
        {Violation::Kind::NotSymmetric, "mirror image missing for", unmatched});
  }

  std::vector<Edge> diagonals;
  for (const auto& e : edges) {
    if (is_diagonal(e, dim)) diagonals.push_back(e);
  }
  if (diagonals.size() != 1) {
    report.violations.push_back({Violation::Kind::DiagonalCount,
                                 "expected exactly one diagonal, found " +
                                     std::to_string(diagonals.size()),
                                 diagonals});
  }
  return report;
}

inline CsTriangulation CsTriangulation::create(PolygonDim dim, std::vector<Edge> edges) {
  auto t = from_edges(dim, std::move(edges));
  if (auto report = validate(t); !report.ok()) {
    throw Error(ErrorKind::InvalidTriangulation, report.summary());
  }
  return t;
}

/// Applies a vertex relabeling `map` (a permutation of 0..n-1) to every edge.
inline EdgeMask relabel(const EdgeMask& mask, std::span<const Vertex> map) {
  EdgeMask out{};
  mask.for_each([&](const Edge& e) {
    out.set(Edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]));
  });
  return out;
}

inline CsTriangulation relabel(const CsTriangulation& t, std::span<const Vertex> map) {
  return CsTriangulation::from_mask(t.dim(), relabel(t.mask(), map));
}

inline std::string to_string(const CsTriangulation& t) {
  std::string out = "{";
  for (const auto& e : t.interior()) {
    if (out.size() > 1) out += ",";
    out += to_string(e);
  }
  return out + "}";
}

}  // namespace cyclo
