#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/path.hpp"
#include "cyclo/symmetry.hpp"

namespace cyclo {

// ---------------------------------------------------------------------------
// Fans and the upper-bound path

/// Diagonal {0, 0̄} with every other interior edge of the upper half at 0.
inline CsTriangulation build_fan_minus(PolygonDim dim) {
  const int d = dim.d();
  std::vector<Edge> edges{Edge(0, d + 1)};
  for (int x = 2; x <= d; ++x) {
    edges.emplace_back(0, x);
    edges.push_back(mirror(Edge(0, x), dim));
  }
  return CsTriangulation::create(dim, std::move(edges));
}

/// Diagonal {x, x̄}; on the side containing vertex 0 every interior edge is
/// incident to 0, on the other side to 0̄.
inline CsTriangulation build_fan_plus(PolygonDim dim, Vertex x) {
  const int d = dim.d();
  if (x < 1 || x > d) {
    throw Error(ErrorKind::OutOfRange, "fan diagonal vertex " + std::to_string(x) + " outside [1, " +
                                           std::to_string(d) + "]");
  }
  std::vector<Edge> edges{Edge(x, dim.opposite(x))};
  auto add = [&](Vertex y) {
    edges.emplace_back(0, y);
    edges.push_back(mirror(Edge(0, y), dim));
  };
  for (int y = 2; y <= x; ++y) add(y);
  for (int y = dim.opposite(x); y <= 2 * d; ++y) add(y);
  return CsTriangulation::create(dim, std::move(edges));
}

namespace detail {

// Vertices of the half polygon bounded by the diagonal of `t` that contains
// `hub`, in clockwise order from one diagonal endpoint to the other. A hub on
// the diagonal selects the half running clockwise from it.
inline std::vector<Vertex> fan_region(const CsTriangulation& t, Vertex hub) {
  const PolygonDim dim = t.dim();
  const Edge diag = t.diagonal();
  Vertex start = diag.u;
  if (hub == diag.v) {
    start = diag.v;
  } else if (hub != diag.u && !(diag.u < hub && hub < diag.v)) {
    start = diag.v;
  }
  std::vector<Vertex> region;
  for (int i = 0; i <= dim.d() + 1; ++i) region.push_back(dim.normalize(start + i));
  return region;
}

}  // namespace detail

/// Greedy flips turning the half of `t` that contains `hub` into a fan at
/// `hub` (the opposite half becomes a fan at the opposite vertex). Each flip
/// adds one edge at `hub`, so the path has at most d - 1 moves.
inline FlipPath comb_transform(const CsTriangulation& t, Vertex hub) {
  const PolygonDim dim = t.dim();
  if (!dim.contains(hub)) throw Error(ErrorKind::OutOfRange, "hub outside the polygon");
  const auto region = detail::fan_region(t, hub);
  const int len = static_cast<int>(region.size());
  std::vector<int> pos_of(static_cast<std::size_t>(dim.n()), -1);
  for (int i = 0; i < len; ++i) pos_of[static_cast<std::size_t>(region[static_cast<std::size_t>(i)])] = i;
  const int h = pos_of[static_cast<std::size_t>(hub)];

  FlipPath path = FlipPath::single(t);
  while (true) {
    const auto& cur = path.back();
    const auto adj = cur.adjacency();
    // Neighbors of the hub inside the region, in angular order around it.
    std::vector<int> around;
    for (int i = 0; i < len; ++i) {
      if (i != h && (adj[static_cast<std::size_t>(hub)] >> region[static_cast<std::size_t>(i)] & 1U)) {
        around.push_back(i);
      }
    }
    std::sort(around.begin(), around.end(),
              [&](int a, int b) { return (a - h + len) % len < (b - h + len) % len; });
    std::optional<Edge> target;
    for (std::size_t k = 0; k + 1 < around.size() && !target; ++k) {
      const int i = around[k];
      const int j = around[k + 1];
      const int gap = std::abs(i - j);
      if (gap == 1 || gap == len - 1) continue;
      target = Edge(region[static_cast<std::size_t>(i)], region[static_cast<std::size_t>(j)]);
    }
    if (!target) break;
    path.push(flip(cur, *target));
  }
  return path;
}

/// A path from `from` to `to` of length at most ceil(5d/2) - 2: both ends are
/// combed into fans sharing hub 0 after relabeling, then bridged.
inline FlipPath upper_bound_path(const CsTriangulation& from, const CsTriangulation& to) {
  if (!(from.dim() == to.dim())) {
    throw Error(ErrorKind::DimMismatch, "dimensions " + std::to_string(from.dim().d()) + " and " +
                                            std::to_string(to.dim().d()) + " differ");
  }
  if (from == to) return FlipPath::single(from);
  const PolygonDim dim = from.dim();
  const int d = dim.d();

  // Rotate so that the diagonal of `from` is {0, 0̄}; if the diagonal of `to`
  // sits low, re-orient counterclockwise so 0̄ becomes 0.
  DihedralElement g{dim.normalize(-from.diagonal().u), false};
  int x = dim.normalize(g.apply(to.diagonal().u, dim));
  if (x > d) x -= d + 1;
  if (x != 0 && x < d / 2 + 1) {
    // v -> (d + 1) - (v - a)
    g = DihedralElement{dim.normalize(d + 1 + from.diagonal().u), true};
    x = dim.normalize(g.apply(to.diagonal().u, dim));
    if (x > d) x -= d + 1;
  }
  const CsTriangulation lo = apply(g, from);
  const CsTriangulation hi = apply(g, to);

  FlipPath path = comb_transform(lo, 0);
  const FlipPath tail = comb_transform(hi, 0);
  if (x != 0) {
    FlipPath bridge = FlipPath::single(tail.back());
    bridge.push(flip(bridge.back(), Edge(x, dim.opposite(x))));
    for (int y = x; y <= d - 1; ++y) bridge.push(flip(bridge.back(), Edge(y, d + 1)));
    path.append(bridge.reversed());
  }
  if (!(path.back() == tail.back())) {
    throw Error(ErrorKind::InvalidArgument, "fan routes failed to meet");
  }
  path.append(tail.reversed());

  const DihedralElement back = g.inverse(dim);
  std::vector<CsTriangulation> states;
  states.reserve(path.states.size());
  for (const auto& s : path.states) states.push_back(apply(back, s));
  return FlipPath::from_states(std::move(states));
}

// ---------------------------------------------------------------------------
// Exact rationals for the bound formulas

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(Rational a, Rational b) { return !(b < a); }

  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

// ---------------------------------------------------------------------------
// (a,b,c,d)-pairs

struct AbcdParams {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  int k = 0;  // floor(b/2) + 1, the ear vertex of A-
  int l = 0;  // start vertex of the central zigzag of A+
  std::vector<int> staircase;  // teeth per comb of A+, combs at d̄, d̄-1, ..., c̄
  int tau_minus = 0;
  int tau_plus = 0;

  // Alternative closed forms for l, reported for comparison with `l`.
  int l_body() const { return a + b - d + 2; }
  int l_caption() const { return a + b - c + 4; }
  int l_derived() const { return a + b - c + 2; }
  bool l_below_k() const { return l < k; }
};

struct AbcdPair {
  AbcdParams params;
  CsTriangulation minus;
  CsTriangulation plus;
};

enum class PairGate {
  Inequalities,      // b < c <= d, d <= a + b, a + b/2 + 1 < d
  StrictInterleave,  // additionally l < k
};

/// Names of the defining inequalities that (a, b, c, d) violates.
inline std::vector<std::string> violated_inequalities(int a, int b, int c, int d) {
  std::vector<std::string> out;
  if (!(b < c && c <= d)) out.push_back("(1) b < c <= d");
  if (!(d <= a + b)) out.push_back("(2) d <= a + b");
  if (!(2 * a + b + 2 < 2 * d)) out.push_back("(3) a + b/2 + 1 < d");
  return out;
}

namespace detail {

inline int derived_a(int b, int /*c*/, int d, const std::vector<int>& staircase) {
  int extra = 0;
  for (int t : staircase) extra += t - 2;
  return (d - b - 1) + extra + 1;
}

inline CsTriangulation build_a_minus(PolygonDim dim, int b, int c) {
  const int d = dim.d();
  std::vector<Edge> half{Edge(0, d + 1)};
  for (int x = c; x <= d; ++x) half.emplace_back(0, x);
  for (int x = b; x <= c; ++x) half.emplace_back(1, x);
  for (int i = 1; static_cast<int>(half.size()) < 1 + (d - c + 1) + (c - b + 1) + (b - 3); ++i) {
    const int m = (i + 1) / 2;
    half.push_back(i % 2 == 1 ? Edge(m + 1, b + 1 - m) : Edge(m + 1, b - m));
  }
  std::vector<Edge> edges = half;
  for (const auto& e : half) edges.push_back(mirror(e, dim));
  return CsTriangulation::create(dim, std::move(edges));
}

inline CsTriangulation build_a_plus(PolygonDim dim, int c, int l, const std::vector<int>& staircase) {
  const int d = dim.d();
  std::vector<Edge> half;
  int low = 1;
  for (std::size_t i = 0; i < staircase.size(); ++i) {
    const int hub = 2 * d + 1 - static_cast<int>(i);
    for (int j = 0; j < staircase[i]; ++j) half.emplace_back(low + j, hub);
    low += staircase[i] - 1;
  }
  // Central zigzag between {l, c̄} and {c, l̄}: chords l+i to l̄+(m-i) and
  // l+i to l̄+(m-i-1), so each of l..c-1 meets exactly two of them.
  const int m = c - l;
  const int lbar = dim.opposite(l);
  for (int i = 0; i <= m; ++i) {
    half.emplace_back(l + i, lbar + m - i);
    if (i < m) half.emplace_back(l + i, lbar + m - i - 1);
  }
  std::vector<Edge> edges = half;
  for (const auto& e : half) edges.push_back(mirror(e, dim));
  return CsTriangulation::create(dim, std::move(edges));
}

}  // namespace detail

/// Builds A- and A+ for the given parameters. Throws InvalidStaircase for a
/// malformed staircase and ConstraintViolation when a defining inequality
/// (or, under StrictInterleave, l < k) fails.
inline AbcdPair build_abcd_pair(int b, int c, int d, const std::vector<int>& staircase,
                                PairGate gate = PairGate::Inequalities) {
  if (d < 1 || d > kMaxDim) throw Error(ErrorKind::OutOfRange, "d outside [1, " + std::to_string(kMaxDim) + "]");
  if (!(b < c && c <= d) || b < 1) {
    throw Error(ErrorKind::ConstraintViolation, "inequality (1) b < c <= d fails for b=" + std::to_string(b) +
                                                    " c=" + std::to_string(c) + " d=" + std::to_string(d));
  }
  if (static_cast<int>(staircase.size()) != d - c + 1) {
    throw Error(ErrorKind::InvalidStaircase, "expected " + std::to_string(d - c + 1) + " combs, got " +
                                                 std::to_string(staircase.size()));
  }
  if (std::any_of(staircase.begin(), staircase.end(), [](int t) { return t < 2; })) {
    throw Error(ErrorKind::InvalidStaircase, "every comb needs at least two teeth");
  }

  AbcdParams p;
  p.b = b;
  p.c = c;
  p.d = d;
  p.staircase = staircase;
  p.a = detail::derived_a(b, c, d, staircase);
  p.k = b / 2 + 1;
  p.l = std::accumulate(staircase.begin(), staircase.end(), 0) - (d - c);
  p.tau_minus = 2 * (d - b - 1);
  p.tau_plus = 0;
  for (int t : staircase) p.tau_plus += 2 * (t - 2);

  if (auto bad = violated_inequalities(p.a, b, c, d); !bad.empty()) {
    throw Error(ErrorKind::ConstraintViolation, "inequality " + bad.front() + " fails for (a,b,c,d)=(" +
                                                    std::to_string(p.a) + "," + std::to_string(b) + "," +
                                                    std::to_string(c) + "," + std::to_string(d) + ")");
  }
  if (p.l > c) {
    throw Error(ErrorKind::InvalidStaircase, "staircase ends at l=" + std::to_string(p.l) + " beyond c=" +
                                                 std::to_string(c));
  }
  if (gate == PairGate::StrictInterleave && !p.l_below_k()) {
    throw Error(ErrorKind::ConstraintViolation,
                "l < k fails: l=" + std::to_string(p.l) + " k=" + std::to_string(p.k));
  }

  const PolygonDim dim(d);
  AbcdPair pair{p, detail::build_a_minus(dim, b, c), detail::build_a_plus(dim, c, p.l, staircase)};
  return pair;
}

/// Staircases of d - c + 1 combs with at least two teeth each that end at or
/// before vertex c, in lexicographic order.
inline std::vector<std::vector<int>> staircases(int c, int d) {
  std::vector<std::vector<int>> out;
  const int combs = d - c + 1;
  const int max_total = d;  // l = total - (d - c) <= c
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (static_cast<int>(cur.size()) == combs) {
      out.push_back(cur);
      return;
    }
    const int left_after = combs - static_cast<int>(cur.size()) - 1;
    for (int t = 2; t <= remaining - 2 * left_after; ++t) {
      cur.push_back(t);
      self(self, remaining - t);
      cur.pop_back();
    }
  };
  rec(rec, max_total);
  return out;
}

inline bool constructible(int b, int c, int d, const std::vector<int>& staircase,
                          PairGate gate = PairGate::Inequalities) {
  try {
    build_abcd_pair(b, c, d, staircase, gate);
    return true;
  } catch (const Error&) {
    return false;
  }
}

/// All-two-teeth staircase when it yields a pair; otherwise the first comb
/// takes the fewest extra teeth that make the quadruple constructible.
inline std::vector<int> default_staircase(int b, int c, int d, PairGate gate = PairGate::Inequalities) {
  const auto combs = static_cast<std::size_t>(std::max(d - c + 1, 0));
  std::vector<int> s(combs, 2);
  if (combs == 0) return s;
  std::string first_reason;
  for (int extra = 0; extra <= d; ++extra) {
    s.front() = 2 + extra;
    try {
      build_abcd_pair(b, c, d, s, gate);
      return s;
    } catch (const Error& e) {
      if (first_reason.empty()) first_reason = e.detail();
    }
  }
  throw Error(ErrorKind::ConstraintViolation, "no staircase makes (b,c,d)=(" + std::to_string(b) + "," +
                                                  std::to_string(c) + "," + std::to_string(d) +
                                                  ") a pair; all-two-teeth staircase: " + first_reason);
}

/// Every pair of dimension d reachable by some (b, c, staircase).
inline std::vector<AbcdPair> constructible_pairs(int d, PairGate gate = PairGate::Inequalities) {
  std::vector<AbcdPair> out;
  for (int c = 2; c <= d; ++c) {
    for (int b = 1; b < c; ++b) {
      for (const auto& s : staircases(c, d)) {
        try {
          out.push_back(build_abcd_pair(b, c, d, s, gate));
        } catch (const Error&) {
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bounds

/// 3d - (b/2 + (2c - b)/a + 3a + 5), exact.
inline Rational theorem2_bound(const AbcdParams& p) {
  return Rational(3 * p.d) - (Rational(p.b, 2) + Rational(2 * p.c - p.b, p.a) + Rational(3 * p.a + 5));
}

inline double theorem3_bound(int d) { return 2.5 * d - 4.0 * std::sqrt(static_cast<double>(d)) - 4.0; }

inline double theorem3_intermediate(int d, int a) {
  return 2.5 * (d - a) - static_cast<double>(d + 2) / a - 4.0;
}

/// (5/2)a + (d+2)/a <= 4 sqrt(d), tested exactly as (5a^2 + 2(d+2))^2 <= 64 a^2 d.
inline bool satisfies_theorem3_window(int d, int a) {
  __extension__ using Wide = __int128;  // squares overflow 64 bits for large d
  const auto lhs = static_cast<Wide>(5 * static_cast<std::int64_t>(a) * a + 2 * (static_cast<std::int64_t>(d) + 2));
  const auto rhs = static_cast<Wide>(64) * a * a * d;
  return lhs * lhs <= rhs;
}

/// Smallest a with 1 <= a < (d-1)/2 satisfying the window inequality.
inline int choose_a(int d) {
  if (d <= 5) throw Error(ErrorKind::OutOfRange, "choose_a needs d > 5");
  for (int a = 1; 2 * a < d - 1; ++a) {
    if (satisfies_theorem3_window(d, a)) return a;
  }
  throw Error(ErrorKind::NoSolution, "no admissible a for d=" + std::to_string(d));
}

/// The pair with b = d - a, c = d - a + 1 and two teeth per comb.
inline AbcdPair theorem3_pair(int d) {
  const int a = choose_a(d);
  return build_abcd_pair(d - a, d - a + 1, d, std::vector<int>(static_cast<std::size_t>(a), 2));
}

}  // namespace cyclo
