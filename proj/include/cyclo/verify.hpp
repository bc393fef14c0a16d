#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cyclo/constructions.hpp"
#include "cyclo/diameter.hpp"
#include "cyclo/state_graph.hpp"

namespace cyclo {

/// ceil(5d/2) - 2, the upper bound on the diameter.
inline int diameter_upper_bound(int d) { return (5 * d + 1) / 2 - 2; }

struct TableRow {
  int d = 0;
  int value = 0;
  bool partial = false;
  std::uint64_t explored = 0;
  int upper = 0;
  double lower = 0.0;
  bool jump = false;  // exact and larger by 3 than the exact previous row

  bool within_bounds() const { return partial || (lower <= value && value <= upper); }
};

inline TableRow table_row(int d, const DistanceReport& r, const std::optional<TableRow>& previous) {
  TableRow row;
  row.d = d;
  row.value = r.value;
  row.partial = r.partial;
  row.explored = r.explored;
  row.upper = diameter_upper_bound(d);
  row.lower = theorem3_bound(d);
  row.jump = !r.partial && previous && !previous->partial && previous->d == d - 1 && r.value - previous->value == 3;
  return row;
}

struct BoundCheck {
  std::string name;
  int d = 0;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first_violation;

  bool ok() const { return violations == 0; }
  void fail(const std::string& what) {
    if (violations++ == 0) first_violation = what;
  }
};

struct VerifyOptions {
  std::size_t random_pairs = 1000;
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultStateCap;
  int exhaustive_upto = 5;       // upper-bound path over all pairs up to this d
  int all_staircases_upto = 7;   // every pair, not only c = d, up to this d
};

/// Every pair with c = d (all pairs when d is small enough) must be at least
/// the Theorem 2 bound apart.
inline BoundCheck check_theorem2(int d, const VerifyOptions& opt = {}) {
  BoundCheck check{"theorem2", d, 0, 0, {}};
  for (const auto& pair : constructible_pairs(d)) {
    const auto& p = pair.params;
    if (p.c != d && d > opt.all_staircases_upto) continue;
    ++check.instances;
    const int dist = distance(pair.minus, pair.plus, false, opt.cap).value;
    const Rational bound = theorem2_bound(p);
    if (Rational(dist) < bound) {
      check.fail("(a,b,c,d)=(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c) + "," +
                 std::to_string(d) + ") distance " + std::to_string(dist) + " < " + bound.str());
    }
  }
  return check;
}

/// The Theorem 3 pair meets both the final and the intermediate bound.
inline BoundCheck check_theorem3(int d, const VerifyOptions& opt = {}) {
  BoundCheck check{"theorem3", d, 0, 0, {}};
  if (d <= 5) return check;
  const auto pair = theorem3_pair(d);
  check.instances = 1;
  const int dist = distance(pair.minus, pair.plus, false, opt.cap).value;
  const double final_bound = theorem3_bound(d);
  const double intermediate = theorem3_intermediate(d, pair.params.a);
  if (dist < final_bound || dist < intermediate) {
    check.fail("distance " + std::to_string(dist) + " below " + std::to_string(final_bound) + " or " +
               std::to_string(intermediate));
  }
  return check;
}

/// upper_bound_path is a valid path no shorter than the distance and no longer
/// than ceil(5d/2) - 2: over all ordered pairs for small d, else random pairs.
inline BoundCheck check_upper_path(int d, const VerifyOptions& opt = {}) {
  BoundCheck check{"upper-path", d, 0, 0, {}};
  const PolygonDim dim(d);
  const int limit = diameter_upper_bound(d);
  const auto examine = [&](const CsTriangulation& a, const CsTriangulation& b, int dist) {
    ++check.instances;
    const FlipPath path = upper_bound_path(a, b);
    const std::string problem = check_path(path);
    const auto len = static_cast<int>(path.length());
    if (!problem.empty() || !(path.front() == a) || !(path.back() == b) || len < dist || len > limit) {
      check.fail(to_string(a) + " -> " + to_string(b) + ": length " + std::to_string(len) + ", distance " +
                 std::to_string(dist) + (problem.empty() ? "" : ", " + problem));
    }
  };
  if (d <= opt.exhaustive_upto) {
    const StateGraph graph(dim);
    std::vector<std::uint8_t> dist;
    std::vector<std::uint32_t> queue;
    for (std::uint32_t i = 0; i < graph.size(); ++i) {
      graph.sweep(i, dist, queue);
      const auto from = graph.state(i);
      for (std::uint32_t j = 0; j < graph.size(); ++j) examine(from, graph.state(j), dist[j]);
    }
  } else {
    std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(d));
    for (std::size_t i = 0; i < opt.random_pairs; ++i) {
      const auto a = random_cs(dim, rng);
      const auto b = random_cs(dim, rng);
      examine(a, b, distance(a, b, false, opt.cap).value);
    }
  }
  return check;
}

inline std::vector<BoundCheck> verify_bounds(int d_lo, int d_hi, const VerifyOptions& opt = {}) {
  std::vector<BoundCheck> out;
  for (int d = d_lo; d <= d_hi; ++d) {
    out.push_back(check_theorem2(d, opt));
    if (d > 5) out.push_back(check_theorem3(d, opt));
    out.push_back(check_upper_path(d, opt));
  }
  return out;
}

}  // namespace cyclo
