#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cyclo/flip.hpp"

namespace cyclo {

/// Sequence of triangulations, consecutive ones related by the recorded flip.
struct FlipPath {
  std::vector<CsTriangulation> states;
  std::vector<FlipMove> moves;

  std::size_t length() const noexcept { return moves.size(); }
  const CsTriangulation& front() const { return states.front(); }
  const CsTriangulation& back() const { return states.back(); }

  static FlipPath single(const CsTriangulation& t) { return FlipPath{{t}, {}}; }

  /// Builds moves from consecutive states; throws InvalidArgument when two
  /// consecutive states are not related by a flip.
  static FlipPath from_states(std::vector<CsTriangulation> states) {
    FlipPath p;
    p.states = std::move(states);
    for (std::size_t i = 0; i + 1 < p.states.size(); ++i) {
      auto m = move_between(p.states[i], p.states[i + 1]);
      if (!m) {
        throw Error(ErrorKind::InvalidArgument,
                    "states " + std::to_string(i) + " and " + std::to_string(i + 1) + " are not adjacent");
      }
      p.moves.push_back(*m);
    }
    return p;
  }

  void push(const CsTriangulation& next) {
    auto m = move_between(states.back(), next);
    if (!m) throw Error(ErrorKind::InvalidArgument, "appended state is not adjacent to the path end");
    moves.push_back(*m);
    states.push_back(next);
  }

  FlipPath reversed() const {
    std::vector<CsTriangulation> s(states.rbegin(), states.rend());
    return from_states(std::move(s));
  }

  /// Appends `tail`, whose first state must equal this path's last state.
  void append(const FlipPath& tail) {
    if (tail.states.empty()) return;
    if (!(tail.states.front() == states.back())) {
      throw Error(ErrorKind::InvalidArgument, "paths do not share an endpoint");
    }
    states.insert(states.end(), tail.states.begin() + 1, tail.states.end());
    moves.insert(moves.end(), tail.moves.begin(), tail.moves.end());
  }
};

/// Empty string when the path is well formed; otherwise the first problem.
inline std::string check_path(const FlipPath& p) {
  if (p.states.empty()) return "path has no states";
  if (p.moves.size() + 1 != p.states.size()) return "move count does not match state count";
  const PolygonDim dim = p.states.front().dim();
  for (std::size_t i = 0; i < p.states.size(); ++i) {
    const auto& s = p.states[i];
    if (!(s.dim() == dim)) return "state " + std::to_string(i) + " has a different dimension";
    if (auto r = validate(s); !r.ok()) return "state " + std::to_string(i) + " invalid: " + r.summary();
  }
  for (std::size_t i = 0; i < p.moves.size(); ++i) {
    const auto& m = p.moves[i];
    const auto& from = p.states[i];
    if (!from.has_interior(m.removed)) return "move " + std::to_string(i) + " removes a missing edge";
    if (!(flip(from, m.removed) == p.states[i + 1])) {
      return "move " + std::to_string(i) + " does not produce the next state";
    }
    if (!(move_for(from, m.removed) == m)) return "move " + std::to_string(i) + " is not canonical";
  }
  return {};
}

}  // namespace cyclo
