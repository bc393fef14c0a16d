#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <unistd.h>

#include "helpers.hpp"

using namespace cyclo;
using testing_helpers::make;

TEST(TextFormat, SerializeAndParse) {
  const auto t = make(2, {Edge(0, 2), Edge(0, 3), Edge(3, 5)});
  EXPECT_EQ(serialize(t), "n 6\n0 2\n0 3\n3 5\n");
  EXPECT_EQ(parse_triangulation("# hexagon\nn 6\n0 3  # diagonal\n0 2\n3 5\n"), t);
}

TEST(TextFormat, RoundTrip) {
  auto rng = testing_helpers::rng(21);
  for (int d = 1; d <= 8; ++d) {
    for (int i = 0; i < 50; ++i) {
      const auto t = random_cs(PolygonDim(d), rng);
      const std::string text = serialize(t);
      ASSERT_EQ(parse_triangulation(text), t);
      ASSERT_EQ(serialize(parse_triangulation(text)), text);
    }
  }
}

TEST(TextFormat, MultipleBlocks) {
  const auto a = build_fan_minus(PolygonDim(3));
  const auto b = build_fan_plus(PolygonDim(3), 2);
  const auto parsed = parse_triangulations(serialize(std::vector<CsTriangulation>{a, b}));
  ASSERT_EQ(parsed.size(), 2U);
  EXPECT_EQ(parsed[0], a);
  EXPECT_EQ(parsed[1], b);
}

namespace {

std::string parse_message(const std::string& text) {
  try {
    parse_triangulation(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    return e.what();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return {};
}

}  // namespace

TEST(TextFormat, ErrorsNameTheLine) {
  EXPECT_NE(parse_message("n 6\n0 2\n0 x\n3 5\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_message("n 6\n0 2\n0 3 4\n3 5\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_message("n 6\n0 2\n0 9\n3 5\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_message("n 6\n0 1\n0 3\n3 4\n").find("line 2"), std::string::npos);
  EXPECT_NE(parse_message("n 7\n").find("line 1"), std::string::npos);
  EXPECT_NE(parse_message("0 2\n").find("line 1"), std::string::npos);
  EXPECT_NE(parse_message("n 6\n0 2\n0 3\n1 4\n").find("line 1"), std::string::npos);
  EXPECT_NE(parse_message("").find("line 1"), std::string::npos);
}

TEST(Svg, SquareAndDeterminism) {
  const auto sq = make(1, {Edge(0, 2)});
  const auto svg = render_svg(sq);
  EXPECT_EQ(svg.rfind("<svg", 0), 0U);
  std::size_t circles = 0;
  std::size_t lines = 0;
  for (std::size_t at = 0; (at = svg.find("<circle", at)) != std::string::npos; ++at) ++circles;
  for (std::size_t at = 0; (at = svg.find("<line", at)) != std::string::npos; ++at) ++lines;
  EXPECT_EQ(circles, 4U);
  EXPECT_EQ(lines, 1U);
  EXPECT_EQ(render_svg(sq), svg);
}

TEST(Svg, StylesCombsAndDottedEdges) {
  const auto pair = theorem3_pair(6);
  SvgOptions opt;
  opt.dotted = {pair.minus.interior().front()};
  const auto svg = render_svg(pair.minus, opt);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  EXPECT_NE(svg.find("stroke-width=\"1\""), std::string::npos);    // inner tooth
  EXPECT_NE(svg.find("stroke-width=\"2.5\""), std::string::npos);  // extreme tooth
  EXPECT_EQ(render_svg(pair.minus, opt), svg);
}

TEST(Records, DistanceReportFields) {
  const auto a = build_fan_minus(PolygonDim(3));
  const auto b = build_fan_plus(PolygonDim(3), 1);
  const auto j = to_json(distance(a, b, true));
  EXPECT_EQ(j["value"], distance(a, b).value);
  EXPECT_EQ(j["method"], "bidirectional-bfs");
  EXPECT_EQ(j["partial"], false);
  EXPECT_EQ(j["witness"]["length"], j["value"]);
  EXPECT_EQ(triangulation_from_json(to_json(a)), a);
  const auto rec = make_record("distance", j);
  EXPECT_EQ(rec["schema"], kRecordSchema);
  EXPECT_EQ(record_line(rec), record_line(make_record("distance", to_json(distance(a, b, true)))));
}

TEST(Records, CacheRoundTripAndCoherence) {
  const auto dir = std::filesystem::temp_directory_path() / ("cyclo-cache-test-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  auto rng = testing_helpers::rng(31);
  std::vector<std::pair<std::string, Json>> stored;
  {
    ResultCache cache(dir);
    for (int i = 0; i < 100; ++i) {
      const auto a = random_cs(PolygonDim(4), rng);
      const auto b = random_cs(PolygonDim(4), rng);
      const std::string key = "distance " + serialize(a) + "|" + serialize(b);
      const Json rec = to_json(distance(a, b));
      if (!cache.lookup(key)) cache.store(key, rec);
      stored.emplace_back(key, rec);
    }
  }
  ResultCache reloaded(dir);
  for (const auto& [key, rec] : stored) {
    const auto hit = reloaded.lookup(key);
    ASSERT_TRUE(hit);
    // Recomputing from the key's triangulations reproduces the cached bytes.
    const auto bar = key.find('|');
    const auto a = parse_triangulation(key.substr(9, bar - 9));
    const auto b = parse_triangulation(key.substr(bar + 1));
    EXPECT_EQ(record_line(*hit), record_line(to_json(distance(a, b))));
  }
  std::filesystem::remove_all(dir);
}

TEST(Records, CacheIgnoresOtherSchemas) {
  const auto dir = std::filesystem::temp_directory_path() / ("cyclo-cache-schema-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  write_file((dir / "cache.jsonl").string(),
             "{\"schema\":99,\"key\":\"k\",\"record\":1}\nnot json\n{\"schema\":1,\"key\":\"k2\",\"record\":2}\n");
  ResultCache cache(dir);
  EXPECT_FALSE(cache.lookup("k"));
  EXPECT_EQ(*cache.lookup("k2"), 2);
  std::filesystem::remove_all(dir);
}

TEST(Verify, TableRowsAndJumps) {
  std::optional<TableRow> prev;
  const int values[] = {1, 3, 5, 7, 9, 11, 14, 16};
  for (int d = 1; d <= 8; ++d) {
    DistanceReport r;
    r.value = values[d - 1];
    const auto row = table_row(d, r, prev);
    EXPECT_TRUE(row.within_bounds());
    EXPECT_EQ(row.jump, d == 7) << d;
    prev = row;
  }
  EXPECT_EQ(diameter_upper_bound(7), 16);
  EXPECT_EQ(diameter_upper_bound(10), 23);
}

TEST(Verify, BoundsFourToSix) {
  for (const auto& check : verify_bounds(4, 6)) EXPECT_TRUE(check.ok()) << check.name << " " << check.first_violation;
}
