#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cyclo/triangulation.hpp"

namespace cyclo {

inline constexpr std::uint64_t kDefaultEnumerationCap = 20'000'000;

inline constexpr std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Number of triangulations of a convex polygon with `vertices` vertices.
inline constexpr std::uint64_t polygon_triangulation_count(int vertices) {
  if (vertices < 3) return 1;
  const int m = vertices - 2;
  return binomial(2 * m, m) / static_cast<std::uint64_t>(m + 1);
}

/// Number of centrally symmetric triangulations: one diagonal among d + 1,
/// times the Catalan number of the (d+2)-gon on either side.
inline constexpr std::uint64_t cs_count(PolygonDim dim) { return binomial(2 * dim.d(), dim.d()); }

namespace detail {

struct Interval {
  int lo;
  int hi;
};

// Triangulates the intervals pending on `stack` (all spanning at least three
// positions), calling `emit` once per completed triangulation. Restores
// `stack` and `chords` before returning.
template <typename Emit>
void triangulate_intervals(std::vector<Interval>& stack, std::vector<Edge>& chords, Emit& emit) {
  if (stack.empty()) {
    emit(chords);
    return;
  }
  const Interval iv = stack.back();
  stack.pop_back();
  const auto base_stack = stack.size();
  const auto base_chords = chords.size();
  for (int apex = iv.lo + 1; apex < iv.hi; ++apex) {
    if (apex - iv.lo >= 2) {
      chords.emplace_back(iv.lo, apex);
      stack.push_back({iv.lo, apex});
    }
    if (iv.hi - apex >= 2) {
      chords.emplace_back(apex, iv.hi);
      stack.push_back({apex, iv.hi});
    }
    triangulate_intervals(stack, chords, emit);
    stack.resize(base_stack);
    chords.resize(base_chords);
  }
  stack.push_back(iv);
}

}  // namespace detail

/// Streams every triangulation of the convex polygon on positions 0..k-1 as
/// its list of chords (the side {0, k-1} is treated as boundary).
template <typename Visitor>
void for_each_polygon_triangulation(int k, Visitor&& visit) {
  std::vector<detail::Interval> stack;
  if (k >= 4) stack.push_back({0, k - 1});
  std::vector<Edge> chords;
  detail::triangulate_intervals(stack, chords, visit);
}

/// Streams each centrally symmetric triangulation exactly once, as an EdgeMask.
/// Order: by diagonal {x, x + d + 1} for x = 0..d, then by half triangulation.
template <typename Visitor>
void for_each_cs_mask(PolygonDim dim, Visitor&& visit, std::uint64_t cap = kDefaultEnumerationCap) {
  if (cs_count(dim) > cap) {
    throw Error(ErrorKind::ResourceLimit, "d=" + std::to_string(dim.d()) + " has " +
                                              std::to_string(cs_count(dim)) +
                                              " triangulations, above the enumeration cap " +
                                              std::to_string(cap));
  }
  const int d = dim.d();
  for (int x = 0; x <= d; ++x) {
    auto on_half = [&](const std::vector<Edge>& chords) {
      EdgeMask mask{};
      mask.set(Edge(x, x + d + 1));
      for (const auto& c : chords) {
        const Edge e(dim.normalize(x + c.u), dim.normalize(x + c.v));
        mask.set(e);
        mask.set(mirror(e, dim));
      }
      visit(mask);
    };
    for_each_polygon_triangulation(d + 2, on_half);
  }
}

inline std::vector<CsTriangulation> enumerate_cs(PolygonDim dim, std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<CsTriangulation> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(cs_count(dim), cap)));
  for_each_cs_mask(dim, [&](const EdgeMask& m) { out.push_back(CsTriangulation::from_mask(dim, m)); }, cap);
  return out;
}

/// Uniformly random centrally symmetric triangulation.
template <typename Rng>
CsTriangulation random_cs(PolygonDim dim, Rng& rng) {
  const int d = dim.d();
  const int x = std::uniform_int_distribution<int>(0, d)(rng);
  EdgeMask mask{};
  mask.set(Edge(x, x + d + 1));
  std::vector<detail::Interval> stack{{0, d + 1}};
  while (!stack.empty()) {
    const auto iv = stack.back();
    stack.pop_back();
    if (iv.hi - iv.lo < 2) continue;
    const int size = iv.hi - iv.lo + 1;
    std::uint64_t pick =
        std::uniform_int_distribution<std::uint64_t>(0, polygon_triangulation_count(size) - 1)(rng);
    int apex = iv.lo + 1;
    for (; apex < iv.hi; ++apex) {
      const std::uint64_t ways = polygon_triangulation_count(apex - iv.lo + 1) *
                                 polygon_triangulation_count(iv.hi - apex + 1);
      if (pick < ways) break;
      pick -= ways;
    }
    for (const Edge c : {Edge(iv.lo, apex), Edge(apex, iv.hi)}) {
      if (c.v - c.u < 2) continue;
      const Edge e(dim.normalize(x + c.u), dim.normalize(x + c.v));
      mask.set(e);
      mask.set(mirror(e, dim));
    }
    stack.push_back({iv.lo, apex});
    stack.push_back({apex, iv.hi});
  }
  return CsTriangulation::from_mask(dim, mask);
}

}  // namespace cyclo
