#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"

using namespace cyclo;
using testing_helpers::make;

TEST(Fans, Examples) {
  EXPECT_EQ(build_fan_minus(PolygonDim(2)), make(2, {Edge(0, 3), Edge(0, 2), Edge(3, 5)}));
  EXPECT_EQ(build_fan_minus(PolygonDim(4)),
            make(4, {Edge(0, 5), Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(5, 7), Edge(5, 8), Edge(5, 9)}));
  EXPECT_EQ(build_fan_plus(PolygonDim(2), 1), make(2, {Edge(1, 4), Edge(0, 4), Edge(1, 3)}));
  const auto p = build_fan_plus(PolygonDim(4), 3);
  EXPECT_EQ(p.interior().size(), 7U);
  EXPECT_EQ(p.diagonal(), Edge(3, 8));
  try {
    build_fan_plus(PolygonDim(4), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
}

TEST(Fans, ValidForAllDimensions) {
  for (int d = 1; d <= 12; ++d) {
    const PolygonDim dim(d);
    EXPECT_TRUE(validate(build_fan_minus(dim)).ok());
    for (int x = 1; x <= d; ++x) {
      const auto t = build_fan_plus(dim, x);
      EXPECT_TRUE(validate(t).ok());
      EXPECT_TRUE(t.has_interior(Edge(x, dim.opposite(x))));
    }
  }
}

TEST(Fans, BridgeLength) {
  // U+(x) is within d - x + 1 flips of U-.
  for (int d = 1; d <= 6; ++d) {
    const PolygonDim dim(d);
    for (int x = 1; x <= d; ++x) {
      EXPECT_LE(distance(build_fan_minus(dim), build_fan_plus(dim, x)).value, d - x + 1);
    }
  }
}

TEST(CombTransform, Examples) {
  EXPECT_EQ(comb_transform(build_fan_minus(PolygonDim(5)), 0).length(), 0U);
  const auto t = make(2, {Edge(1, 4), Edge(0, 4), Edge(1, 3)});
  const auto p = comb_transform(t, 1);
  EXPECT_LE(p.length(), 1U);
  EXPECT_EQ(check_path(p), "");
}

TEST(CombTransform, ExhaustiveLengthAndShape) {
  for (int d = 1; d <= 6; ++d) {
    const PolygonDim dim(d);
    for (const auto& t : enumerate_cs(dim)) {
      const Vertex hub = t.diagonal().u;
      const auto p = comb_transform(t, hub);
      ASSERT_EQ(check_path(p), "");
      ASSERT_LE(p.length(), static_cast<std::size_t>(d - 1));
      // Every non-diagonal edge at the hub side ends at the hub or its opposite.
      const Vertex far = dim.opposite(hub);
      for (const auto& e : p.back().interior()) {
        ASSERT_TRUE(e.has(hub) || e.has(far)) << to_string(p.back());
      }
      ASSERT_EQ(p.back().diagonal(), t.diagonal());
    }
  }
}

TEST(UpperPath, ExhaustiveSmall) {
  for (int d = 1; d <= 4; ++d) {
    const auto check = check_upper_path(d);
    EXPECT_TRUE(check.ok()) << check.first_violation;
    EXPECT_EQ(check.instances, cs_count(PolygonDim(d)) * cs_count(PolygonDim(d)));
  }
  const auto same = build_fan_minus(PolygonDim(3));
  EXPECT_EQ(upper_bound_path(same, same).length(), 0U);
  EXPECT_THROW(upper_bound_path(same, build_fan_minus(PolygonDim(4))), Error);
}

TEST(UpperPath, SevenDiameterWitness) {
  const auto r = diameter(PolygonDim(7));
  const auto path = upper_bound_path(r.endpoints->first, r.endpoints->second);
  EXPECT_EQ(r.value, 14);
  EXPECT_LE(path.length(), 16U);
  EXPECT_GE(path.length(), 14U);
  EXPECT_EQ(check_path(path), "");
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -2).str(), "-1/2");
  EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
  EXPECT_EQ((Rational(1, 2) + Rational(1, 3)).str(), "5/6");
}

TEST(Bounds, TheoremTwoArithmetic) {
  AbcdParams p;
  p.a = 1, p.b = 3, p.c = 4, p.d = 4;
  EXPECT_EQ(theorem2_bound(p), Rational(-5, 2));
  p.a = 3, p.b = 7, p.c = 8, p.d = 9;
  EXPECT_EQ(theorem2_bound(p), Rational(13, 2));
  p.a = 2, p.b = 4, p.c = 5, p.d = 6;
  EXPECT_EQ(theorem2_bound(p), Rational(2));
}

TEST(Bounds, TheoremThreeArithmetic) {
  EXPECT_DOUBLE_EQ(theorem3_bound(4), -2.0);
  EXPECT_DOUBLE_EQ(theorem3_bound(100), 206.0);
  EXPECT_DOUBLE_EQ(theorem3_intermediate(6, 2), 2.0);
}

TEST(Bounds, ChooseA) {
  EXPECT_EQ(choose_a(6), 2);
  const int a100 = choose_a(100);
  EXPECT_LE(2.5 * a100 + 102.0 / a100, 40.0);
  EXPECT_THROW(choose_a(5), Error);
  for (int d = 6; d <= 10000; ++d) {
    const int a = choose_a(d);
    ASSERT_GE(a, 1);
    ASSERT_LT(2 * a, d - 1) << d;
    // Floating-point view of the window, with a margin for rounding.
    ASSERT_LE(2.5 * a + static_cast<double>(d + 2) / a, 4.0 * std::sqrt(static_cast<double>(d)) + 1e-9) << d;
  }
}

TEST(Bounds, ChooseAWindowD6) {
  // |a - 4 sqrt(d)/5| <= sqrt(6d - 20)/5 and a < (d - 1)/2.
  const double lo = 4.0 * std::sqrt(6.0) / 5.0 - std::sqrt(16.0) / 5.0;
  const double hi = 4.0 * std::sqrt(6.0) / 5.0 + std::sqrt(16.0) / 5.0;
  EXPECT_NEAR(lo, 1.16, 0.01);
  EXPECT_NEAR(hi, 2.76, 0.01);
  int smallest = 0;
  for (int a = 1; a < 3; ++a) {
    if (a >= lo && a <= hi) {
      smallest = a;
      break;
    }
  }
  EXPECT_EQ(choose_a(6), smallest);
}

namespace {

std::set<Edge> edges_of(const CsTriangulation& t) { return {t.interior().begin(), t.interior().end()}; }

}  // namespace

TEST(AbcdPair, ExampleThreeFourFour) {
  const auto pair = build_abcd_pair(3, 4, 4, {2});
  EXPECT_EQ(pair.params.a, 1);
  EXPECT_EQ(pair.params.k, 2);
  EXPECT_EQ(pair.params.l, 2);
  EXPECT_FALSE(pair.params.l_below_k());
  EXPECT_EQ(pair.minus, make(4, {Edge(0, 5), Edge(0, 4), Edge(1, 3), Edge(1, 4), Edge(5, 9), Edge(6, 8), Edge(6, 9)}));
  EXPECT_EQ(pair.plus, make(4, {Edge(1, 9), Edge(2, 9), Edge(2, 8), Edge(3, 8), Edge(3, 7), Edge(4, 7), Edge(4, 6)}));
  try {
    build_abcd_pair(3, 4, 4, {2}, PairGate::StrictInterleave);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstraintViolation);
  }
}

TEST(AbcdPair, TheoremThreePairSixIsAZigzag) {
  const auto pair = build_abcd_pair(4, 5, 6, {2, 2});
  EXPECT_EQ(pair.params.a, 2);
  EXPECT_EQ(pair.params.tau_minus, 2);
  EXPECT_EQ(pair.params.tau_plus, 0);
  EXPECT_EQ(theorem3_pair(6).plus, pair.plus);
  // A zigzag: every vertex meets at most two interior edges and the edges
  // form one path.
  std::map<Vertex, int> degree;
  for (const auto& e : pair.plus.interior()) {
    ++degree[e.u];
    ++degree[e.v];
  }
  int ends = 0;
  for (const auto& [v, k] : degree) {
    EXPECT_LE(k, 2);
    ends += k == 1 ? 1 : 0;
  }
  EXPECT_EQ(ends, 2);
  // Consecutive edges along the path share a vertex and turn alternately.
  EXPECT_EQ(degree.size(), pair.plus.interior().size() + 1);
}

TEST(AbcdPair, Errors) {
  try {
    build_abcd_pair(4, 4, 6, {2, 2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstraintViolation);
    EXPECT_NE(std::string(e.what()).find("(1)"), std::string::npos);
  }
  try {
    build_abcd_pair(4, 5, 6, {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidStaircase);
  }
  try {
    build_abcd_pair(4, 5, 6, {1, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidStaircase);
  }
  try {
    build_abcd_pair(1, 6, 6, {2});  // a = 5, d <= a + b holds, (3) fails
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstraintViolation);
    EXPECT_NE(std::string(e.what()).find("(3)"), std::string::npos);
  }
}

TEST(AbcdPair, InvariantsOfEveryConstructiblePair) {
  for (int d = 2; d <= 9; ++d) {
    for (const auto& pair : constructible_pairs(d)) {
      const auto& p = pair.params;
      const std::string tag = "(b,c,d)=(" + std::to_string(p.b) + "," + std::to_string(p.c) + "," + std::to_string(d) + ")";
      ASSERT_TRUE(validate(pair.minus).ok()) << tag;
      ASSERT_TRUE(validate(pair.plus).ok()) << tag;
      ASSERT_TRUE(violated_inequalities(p.a, p.b, p.c, p.d).empty()) << tag;
      // a = (tau- + tau+)/2 + 1, and a exceeds the interior teeth of A-.
      ASSERT_EQ(2 * (p.a - 1), p.tau_minus + p.tau_plus) << tag;
      ASSERT_GT(2 * p.a, p.tau_minus) << tag;
      ASSERT_EQ(p.l, p.l_derived()) << tag;
      ASSERT_EQ(p.k, p.b / 2 + 1);
      // No shared interior edge.
      const auto lo = edges_of(pair.minus);
      for (const auto& e : pair.plus.interior()) ASSERT_FALSE(lo.count(e)) << tag << " " << to_string(e);
      // Comb at 0 with d - c + 2 teeth counting the diagonal, comb at 1 with
      // c - b + 1 teeth.
      int at0 = 0;
      int at1 = 0;
      for (const auto& e : pair.minus.interior()) {
        if (e.u == 0 && e.v <= d + 1) ++at0;
        if (e.u == 1 && e.v <= d + 1) ++at1;
      }
      ASSERT_EQ(at0, d - p.c + 2) << tag;
      ASSERT_EQ(at1, p.c - p.b + 1) << tag;
      ASSERT_TRUE(pair.plus.has_interior(Edge(1, PolygonDim(d).opposite(d)))) << tag;
    }
  }
}

TEST(AbcdPair, TheoremTwoHoldsForSmallPairs) {
  for (int d = 2; d <= 6; ++d) {
    const auto check = check_theorem2(d);
    EXPECT_TRUE(check.ok()) << check.first_violation;
  }
}

TEST(AbcdPair, StaircasesEnumeration) {
  const auto s = staircases(4, 6);  // three combs, total at most 6
  ASSERT_EQ(s.size(), 1U);
  EXPECT_EQ(s[0], (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(default_staircase(4, 5, 6), (std::vector<int>{2, 2}));
}

TEST(AbcdPair, TheoremThreePairIsUniqueUpToEight) {
  for (int d = 6; d <= 8; ++d) {
    const int a = choose_a(d);
    const int b = d - a;
    const int c = d - a + 1;
    std::vector<AbcdPair> found;
    for (const auto& s : staircases(c, d)) {
      try {
        auto pair = build_abcd_pair(b, c, d, s);
        if (pair.params.a == a) found.push_back(std::move(pair));
      } catch (const Error&) {
      }
    }
    ASSERT_EQ(found.size(), 1U) << "d=" << d;
    EXPECT_EQ(found.front().minus, theorem3_pair(d).minus);
    EXPECT_EQ(found.front().plus, theorem3_pair(d).plus);
  }
}
