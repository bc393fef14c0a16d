#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "cyclo/triangulation.hpp"

namespace cyclo {

struct SvgOptions {
  double size = 400.0;
  // Edges drawn dotted, for example the edges a flip introduced.
  std::vector<Edge> dotted;
  std::string title;
};

namespace detail {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

// True when `e` lies strictly between two other interior edges at one of its
// endpoints, i.e. it is a non-extreme tooth of a comb.
inline bool is_inner_tooth(const CsTriangulation& t, const Edge& e) {
  const int n = t.dim().n();
  for (Vertex v : {e.u, e.v}) {
    const Vertex w = e.other(v);
    const int offset = ((w - v) % n + n) % n;
    bool before = false;
    bool after = false;
    for (const auto& f : t.interior()) {
      if (!f.has(v) || f == e) continue;
      const int o = ((f.other(v) - v) % n + n) % n;
      (o < offset ? before : after) = true;
    }
    if (before && after) return true;
  }
  return false;
}

}  // namespace detail

/// Polygon on a circle with vertex 0 at the top and labels increasing
/// clockwise. Extreme comb teeth are thick, inner teeth thin, the diagonal is
/// drawn in a separate color.
inline std::string render_svg(const CsTriangulation& t, const SvgOptions& opt = {}) {
  const int n = t.dim().n();
  const double c = opt.size / 2.0;
  const double r = opt.size * 0.4;
  std::vector<std::pair<double, double>> pos;
  std::vector<std::pair<double, double>> label;
  for (int i = 0; i < n; ++i) {
    const double angle = -std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * i / n;
    pos.emplace_back(c + r * std::cos(angle), c + r * std::sin(angle));
    label.emplace_back(c + (r + 16.0) * std::cos(angle), c + (r + 16.0) * std::sin(angle));
  }
  const auto line = [&](const Edge& e, const std::string& style) {
    const auto& [x1, y1] = pos[static_cast<std::size_t>(e.u)];
    const auto& [x2, y2] = pos[static_cast<std::size_t>(e.v)];
    return "  <line x1=\"" + detail::fmt(x1) + "\" y1=\"" + detail::fmt(y1) + "\" x2=\"" + detail::fmt(x2) +
           "\" y2=\"" + detail::fmt(y2) + "\" " + style + "/>\n";
  };

  const std::string size = detail::fmt(opt.size);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
                    "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  if (!opt.title.empty()) out += "  <title>" + opt.title + "</title>\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::string outline;
  for (int i = 0; i < n; ++i) {
    const auto& [x, y] = pos[static_cast<std::size_t>(i)];
    outline += (i ? " " : "") + detail::fmt(x) + "," + detail::fmt(y);
  }
  out += "  <polygon points=\"" + outline + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (const auto& e : t.interior()) {
    const bool dotted = std::find(opt.dotted.begin(), opt.dotted.end(), e) != opt.dotted.end();
    const std::string color = is_diagonal(e, t.dim()) ? "#b22222" : "black";
    const std::string width = detail::is_inner_tooth(t, e) ? "1" : "2.5";
    out += line(e, "stroke=\"" + color + "\" stroke-width=\"" + width + "\"" +
                       (dotted ? " stroke-dasharray=\"2,4\"" : ""));
  }
  for (int i = 0; i < n; ++i) {
    const auto& [x, y] = pos[static_cast<std::size_t>(i)];
    const auto& [lx, ly] = label[static_cast<std::size_t>(i)];
    out += "  <circle cx=\"" + detail::fmt(x) + "\" cy=\"" + detail::fmt(y) + "\" r=\"3\" fill=\"black\"/>\n";
    out += "  <text x=\"" + detail::fmt(lx) + "\" y=\"" + detail::fmt(ly) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
           std::to_string(i) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace cyclo
