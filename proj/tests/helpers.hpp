#pragma once

#include <random>
#include <vector>

#include "cyclo/cyclo.hpp"
#include "oracles.hpp"

namespace testing_helpers {

inline cyclo::CsTriangulation make(int d, std::vector<cyclo::Edge> edges) {
  return cyclo::CsTriangulation::create(cyclo::PolygonDim(d), std::move(edges));
}

inline oracle::EdgeSet to_oracle(const cyclo::CsTriangulation& t) {
  oracle::EdgeSet out;
  for (const auto& e : t.interior()) out.insert({e.u, e.v});
  return out;
}

inline cyclo::CsTriangulation from_oracle(int d, const oracle::EdgeSet& s) {
  std::vector<cyclo::Edge> edges;
  for (const auto& [u, v] : s) edges.emplace_back(u, v);
  return cyclo::CsTriangulation::create(cyclo::PolygonDim(d), std::move(edges));
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(20240601 + salt); }

}  // namespace testing_helpers
