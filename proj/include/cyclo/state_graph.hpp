#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cyclo/enumerate.hpp"
#include "cyclo/flip.hpp"
#include "cyclo/path.hpp"

namespace cyclo {

/// The whole flip graph of one dimension, states indexed in enumeration order
/// with a fixed-degree adjacency array (each state has exactly d neighbors).
class StateGraph {
 public:
  static constexpr std::uint8_t kUnreached = std::numeric_limits<std::uint8_t>::max();

  explicit StateGraph(PolygonDim dim, std::uint64_t cap = kDefaultEnumerationCap) : dim_(dim) {
    const auto total = static_cast<std::size_t>(cs_count(dim));
    masks_.reserve(total);
    index_.reserve(total);
    for_each_cs_mask(
        dim,
        [&](const EdgeMask& m) {
          index_.emplace(m, static_cast<std::uint32_t>(masks_.size()));
          masks_.push_back(m);
        },
        cap);
    const auto degree = static_cast<std::size_t>(dim.d());
    adjacency_.resize(masks_.size() * degree);
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      std::size_t k = 0;
      for_each_neighbor_mask(masks_[i], dim, [&](const FlipMove&, const EdgeMask& next) {
        adjacency_[i * degree + k++] = index_.at(next);
      });
    }
  }

  PolygonDim dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return masks_.size(); }
  int degree() const noexcept { return dim_.d(); }

  const EdgeMask& mask(std::uint32_t i) const { return masks_[i]; }
  CsTriangulation state(std::uint32_t i) const { return CsTriangulation::from_mask(dim_, masks_[i]); }

  std::optional<std::uint32_t> find(const EdgeMask& m) const {
    if (auto it = index_.find(m); it != index_.end()) return it->second;
    return std::nullopt;
  }
  std::uint32_t index_of(const CsTriangulation& t) const {
    if (!(t.dim() == dim_)) throw Error(ErrorKind::DimMismatch, "state has a different dimension");
    auto i = find(t.mask());
    if (!i) throw Error(ErrorKind::InvalidTriangulation, to_string(t) + " is not a state of this graph");
    return *i;
  }

  std::span<const std::uint32_t> neighbors(std::uint32_t i) const {
    return {adjacency_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_.d()),
            static_cast<std::size_t>(dim_.d())};
  }

  struct SweepResult {
    int eccentricity = 0;
    std::uint32_t farthest = 0;  // smallest index in the last layer
  };

  /// Breadth-first sweep from `source`; `dist` is resized and overwritten and
  /// `queue` is scratch space.
  SweepResult sweep(std::uint32_t source, std::vector<std::uint8_t>& dist, std::vector<std::uint32_t>& queue) const {
    dist.assign(masks_.size(), kUnreached);
    queue.resize(masks_.size());
    std::size_t head = 0;
    std::size_t tail = 0;
    dist[source] = 0;
    queue[tail++] = source;
    const auto degree = static_cast<std::size_t>(dim_.d());
    while (head < tail) {
      const std::uint32_t u = queue[head++];
      const std::uint8_t next = static_cast<std::uint8_t>(dist[u] + 1);
      const std::uint32_t* nb = adjacency_.data() + static_cast<std::size_t>(u) * degree;
      for (std::size_t k = 0; k < degree; ++k) {
        const std::uint32_t v = nb[k];
        if (dist[v] == kUnreached) {
          dist[v] = next;
          queue[tail++] = v;
        }
      }
    }
    SweepResult r;
    r.eccentricity = dist[queue[tail - 1]];
    r.farthest = queue[tail - 1];
    for (std::size_t i = tail; i-- > 0 && dist[queue[i]] == r.eccentricity;) {
      r.farthest = std::min(r.farthest, queue[i]);
    }
    return r;
  }

  /// A geodesic from `a` to `b`, stepping to the neighbor with the smallest
  /// introduced edge among those one step closer to `b`.
  FlipPath geodesic(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint8_t> dist;
    std::vector<std::uint32_t> queue;
    sweep(b, dist, queue);
    std::vector<CsTriangulation> states{state(a)};
    std::uint32_t at = a;
    while (at != b) {
      std::optional<std::pair<Edge, std::uint32_t>> step;
      for_each_neighbor_mask(masks_[at], dim_, [&](const FlipMove& m, const EdgeMask& next) {
        const auto j = index_.at(next);
        if (dist[j] + 1 == dist[at] && (!step || m.introduced < step->first)) step.emplace(m.introduced, j);
      });
      at = step->second;
      states.push_back(state(at));
    }
    return FlipPath::from_states(std::move(states));
  }

 private:
  PolygonDim dim_;
  std::vector<EdgeMask> masks_;
  std::unordered_map<EdgeMask, std::uint32_t, EdgeMaskHash> index_;
  std::vector<std::uint32_t> adjacency_;
};

/// All-pairs distances of a small dimension, one byte per pair.
class DistanceTable {
 public:
  explicit DistanceTable(const StateGraph& graph) : graph_(&graph), n_(graph.size()) {
    table_.resize(n_ * n_);
    std::vector<std::uint8_t> dist;
    std::vector<std::uint32_t> queue;
    for (std::size_t s = 0; s < n_; ++s) {
      graph.sweep(static_cast<std::uint32_t>(s), dist, queue);
      std::copy(dist.begin(), dist.end(), table_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
  }

  const StateGraph& graph() const noexcept { return *graph_; }
  int operator()(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
  int operator()(const CsTriangulation& a, const CsTriangulation& b) const {
    return (*this)(graph_->index_of(a), graph_->index_of(b));
  }

 private:
  const StateGraph* graph_;
  std::size_t n_;
  std::vector<std::uint8_t> table_;
};

}  // namespace cyclo
