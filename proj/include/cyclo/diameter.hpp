#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "cyclo/constructions.hpp"
#include "cyclo/geodesic.hpp"
#include "cyclo/state_graph.hpp"
#include "cyclo/symmetry.hpp"

namespace cyclo {

/// Largest state count for which the indexed graph is built (d <= 12).
inline constexpr std::uint64_t kDefaultGraphCap = 3'000'000;
/// Work cap used by `--deep`: enough for d = 10 with orbit reduction.
inline constexpr std::uint64_t kDeepStateCap = 5'000'000'000;

struct DiameterOptions {
  // Total states visited across all sweeps.
  std::uint64_t cap = kDefaultStateCap;
  // When the cap is too small: report a tagged lower bound instead of throwing.
  bool allow_partial = false;
  unsigned threads = 1;
  std::uint64_t graph_cap = kDefaultGraphCap;
  bool want_witness = false;
};

namespace detail {

// Breadth-first search from `source` over the implicit graph that stops once
// `cap` states are known; the deepest layer reached is a distance lower bound.
inline DistanceReport capped_eccentricity(const CsTriangulation& source, std::uint64_t cap) {
  const PolygonDim dim = source.dim();
  std::unordered_set<EdgeMask, EdgeMaskHash> seen{source.mask()};
  std::vector<EdgeMask> frontier{source.mask()};
  int depth = 0;
  EdgeMask far = source.mask();
  bool interrupted = false;
  while (!interrupted) {
    std::vector<EdgeMask> next;
    for (const auto& u : frontier) {
      for_each_neighbor_mask(u, dim, [&](const FlipMove&, const EdgeMask& v) {
        if (seen.size() < cap && seen.insert(v).second) next.push_back(v);
      });
      if (seen.size() >= cap) {
        interrupted = true;
        break;
      }
    }
    if (next.empty()) break;
    far = *std::min_element(next.begin(), next.end());
    frontier = std::move(next);
    ++depth;
  }
  DistanceReport r;
  r.value = depth;
  r.explored = seen.size();
  r.method = SearchMethod::Bfs;
  r.partial = interrupted;
  r.endpoints.emplace(source, CsTriangulation::from_mask(dim, far));
  return r;
}

}  // namespace detail

/// Diameter of the flip graph: the largest eccentricity over one source per
/// dihedral orbit. Sources are swept in enumeration order; with
/// `allow_partial` only the first floor(cap / states) are used and the result
/// is flagged partial.
inline DistanceReport diameter(PolygonDim dim, const DiameterOptions& opt = {}) {
  const std::uint64_t total = cs_count(dim);
  const auto refuse = [&](const std::string& why) {
    throw Error(ErrorKind::ResourceLimit, "diameter for d=" + std::to_string(dim.d()) + ": " + why);
  };

  // Not even one full sweep fits: explore from the fan triangulation only.
  const auto fallback = [&] {
    auto r = detail::capped_eccentricity(build_fan_minus(dim), std::min(opt.cap, total));
    r.partial = true;
    if (opt.want_witness) r.witness = distance(r.endpoints->first, r.endpoints->second, true, opt.cap).witness;
    return r;
  };
  if (total > opt.graph_cap || total > opt.cap) {
    if (!opt.allow_partial) refuse(std::to_string(total) + " states exceed the cap");
    return fallback();
  }

  const StateGraph graph(dim, total);
  std::vector<std::uint32_t> sources;
  for (std::uint32_t i = 0; i < graph.size(); ++i) {
    if (is_orbit_representative(graph.mask(i), dim)) sources.push_back(i);
  }
  bool partial = false;
  const std::uint64_t budget = opt.cap / total;
  if (sources.size() > budget) {
    if (!opt.allow_partial) {
      refuse(std::to_string(sources.size()) + " orbit sweeps of " + std::to_string(total) +
             " states exceed the cap " + std::to_string(opt.cap));
    }
    sources.resize(static_cast<std::size_t>(budget));
    partial = true;
  }

  std::vector<StateGraph::SweepResult> results(sources.size());
  const auto work = [&](std::size_t first, std::size_t stride) {
    std::vector<std::uint8_t> dist;
    std::vector<std::uint32_t> queue;
    for (std::size_t i = first; i < sources.size(); i += stride) results[i] = graph.sweep(sources[i], dist, queue);
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(opt.threads, sources.size()));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }

  // First source (enumeration order) attaining the maximum.
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].eccentricity > results[best].eccentricity) best = i;
  }
  DistanceReport r;
  r.method = SearchMethod::OrbitReduced;
  r.partial = partial;
  r.explored = static_cast<std::uint64_t>(sources.size()) * total;
  if (!sources.empty()) {
    r.value = results[best].eccentricity;
    r.endpoints.emplace(graph.state(sources[best]), graph.state(results[best].farthest));
    if (opt.want_witness) r.witness = graph.geodesic(sources[best], results[best].farthest);
  }
  return r;
}

}  // namespace cyclo
