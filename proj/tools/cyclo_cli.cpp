// cyclo: command-line workbench for centrally symmetric triangulations and
// their flip graph.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cyclo/cyclo.hpp"

namespace {

using namespace cyclo;

enum class Format { Text, Records };

constexpr int kExitViolation = 1;
constexpr int kExitCacheMismatch = 3;

struct Common {
  bool witness = false;
  bool no_cache = false;
  bool deep = false;
  std::optional<std::uint64_t> cap;
  unsigned threads = 1;
  Format format = Format::Text;

  std::uint64_t effective_cap() const { return cap ? *cap : deep ? kDeepStateCap : kDefaultStateCap; }
};

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int d = std::stoi(s);
      return {d, d};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "expected a dimension or a range like 1..8, got `" + s + "`");
  }
}

std::string fmt2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

void print_states(std::ostream& out, const FlipPath& path) {
  for (std::size_t i = 0; i < path.states.size(); ++i) {
    if (i > 0) {
      const auto& m = path.moves[i - 1];
      out << "\n# flip " << to_string(m.removed) << " -> " << to_string(m.introduced) << "\n";
    }
    out << serialize(path.states[i]);
  }
}

/// Looks a query up in the cache, or runs it and stores exact results. With
/// --no-cache the query always runs and is compared against any cached copy.
class CachedRunner {
 public:
  explicit CachedRunner(const Common& common) : common_(common) {
    if (auto dir = ResultCache::default_dir()) cache_.emplace(*dir);
  }

  template <typename Compute>
  Json run(const std::string& key, Compute&& compute) {
    std::optional<Json> cached;
    if (cache_) cached = cache_->lookup(key);
    if (cached && !common_.no_cache) return *cached;
    Json fresh = compute();
    const bool exact = !fresh.value("partial", false);
    if (cached && exact && record_line(*cached) != record_line(fresh)) {
      mismatch_ = true;
      std::cerr << "cache mismatch for " << key << "\n  cached:   " << record_line(*cached)
                << "\n  computed: " << record_line(fresh) << "\n";
    }
    if (cache_ && exact && !cached) {
      try {
        cache_->store(key, fresh);
      } catch (const Error& e) {
        std::cerr << "warning: " << e.what() << "\n";
      }
    }
    return fresh;
  }

  bool mismatch() const { return mismatch_; }

 private:
  const Common& common_;
  std::optional<ResultCache> cache_;
  bool mismatch_ = false;
};

Json diameter_record(int d, const Common& common, CachedRunner& runner) {
  const std::string key = "diameter d=" + std::to_string(d) + (common.witness ? " witness" : "");
  return runner.run(key, [&] {
    DiameterOptions opt;
    opt.cap = common.effective_cap();
    opt.allow_partial = true;
    opt.threads = common.threads;
    opt.want_witness = common.witness;
    Json j = to_json(diameter(PolygonDim(d), opt));
    j["d"] = d;
    return j;
  });
}

std::string value_text(const Json& r) {
  return std::to_string(r.at("value").get<int>()) + (r.at("partial").get<bool>() ? "*" : "");
}

int cmd_table(const std::string& range, const Common& common) {
  const auto [lo, hi] = parse_range(range);
  CachedRunner runner(common);
  std::optional<TableRow> previous;
  bool bad = false;
  if (common.format == Format::Text) std::cout << " d  Delta  upper   lower  note\n";
  for (int d = lo; d <= hi; ++d) {
    const Json r = diameter_record(d, common, runner);
    DistanceReport report;
    report.value = r.at("value").get<int>();
    report.partial = r.at("partial").get<bool>();
    report.explored = r.at("explored").get<std::uint64_t>();
    const TableRow row = table_row(d, report, previous);
    bad = bad || !row.within_bounds();
    if (common.format == Format::Records) {
      std::cout << record_line(make_record("table-row", {{"d", d},
                                                          {"value", row.value},
                                                          {"partial", row.partial},
                                                          {"explored", row.explored},
                                                          {"upper", row.upper},
                                                          {"lower", row.lower},
                                                          {"jump", row.jump},
                                                          {"within_bounds", row.within_bounds()}}))
                << "\n";
    } else {
      std::string note = row.jump ? "+3" : "";
      if (row.partial) note += note.empty() ? "partial (lower bound)" : " partial (lower bound)";
      if (!row.within_bounds()) note += " OUT OF BOUNDS";
      char line[128];
      std::snprintf(line, sizeof line, "%2d  %5s  %5d  %6s  %s", d, value_text(r).c_str(), row.upper,
                    fmt2(row.lower).c_str(), note.c_str());
      std::string text = line;
      while (!text.empty() && text.back() == ' ') text.pop_back();
      std::cout << text << "\n";
    }
    previous = row;
  }
  if (runner.mismatch()) return kExitCacheMismatch;
  return bad ? kExitViolation : 0;
}

int cmd_diameter(int d, const Common& common) {
  CachedRunner runner(common);
  const Json r = diameter_record(d, common, runner);
  if (common.format == Format::Records) {
    std::cout << record_line(make_record("diameter", r)) << "\n";
  } else {
    std::cout << "diameter " << value_text(r) << "\n";
    if (r.at("partial").get<bool>()) std::cout << "# partial: the cap interrupted the search, value is a lower bound\n";
    std::cout << "explored " << r.at("explored").get<std::uint64_t>() << "\n";
    if (r.contains("endpoints")) {
      std::cout << "\n# realizing pair\n"
                << serialize(triangulation_from_json(r["endpoints"][0])) << "\n"
                << serialize(triangulation_from_json(r["endpoints"][1]));
    }
  }
  return runner.mismatch() ? kExitCacheMismatch : 0;
}

int cmd_distance(const std::string& f1, const std::string& f2, const Common& common) {
  const auto a = load_triangulation(f1);
  const auto b = load_triangulation(f2);
  CachedRunner runner(common);
  const std::string key =
      "distance " + serialize(a) + "|" + serialize(b) + (common.witness ? " witness" : "");
  const Json r = runner.run(key, [&] { return to_json(distance(a, b, common.witness, common.effective_cap())); });
  if (common.format == Format::Records) {
    std::cout << record_line(make_record("distance", r)) << "\n";
  } else {
    std::cout << "distance " << r.at("value").get<int>() << "\n";
    std::cout << "explored " << r.at("explored").get<std::uint64_t>() << "\n";
    if (r.contains("witness")) {
      std::vector<CsTriangulation> states;
      for (const auto& s : r["witness"]["states"]) states.push_back(triangulation_from_json(s));
      std::cout << "\n# geodesic\n";
      print_states(std::cout, FlipPath::from_states(std::move(states)));
    }
  }
  return runner.mismatch() ? kExitCacheMismatch : 0;
}

int cmd_upper_path(const std::string& f1, const std::string& f2, const Common& common) {
  const auto a = load_triangulation(f1);
  const auto b = load_triangulation(f2);
  const FlipPath path = upper_bound_path(a, b);
  const int bound = diameter_upper_bound(a.dim().d());
  std::optional<int> exact;
  try {
    exact = distance(a, b, false, common.effective_cap()).value;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ResourceLimit) throw;
  }
  const bool ok = static_cast<int>(path.length()) <= bound && (!exact || *exact <= static_cast<int>(path.length()));
  if (common.format == Format::Records) {
    Json j = {{"length", path.length()}, {"bound", bound}, {"ok", ok}};
    j["distance"] = exact ? Json(*exact) : Json(nullptr);
    if (common.witness) j["path"] = to_json(path);
    std::cout << record_line(make_record("upper-path", j)) << "\n";
  } else {
    std::cout << "length " << path.length() << "\n";
    std::cout << "bound " << bound << "\n";
    std::cout << "distance " << (exact ? std::to_string(*exact) : "unknown (cap)") << "\n";
    if (common.witness) {
      std::cout << "\n# path\n";
      print_states(std::cout, path);
    }
  }
  return ok ? 0 : kExitViolation;
}

int cmd_delete(const std::string& file, int p, const std::string& out, const Common& common) {
  const auto t = load_triangulation(file);
  const auto result = delete_vertex_mapped(t, p);
  if (!out.empty()) write_file(out, serialize(result.triangulation));
  if (common.format == Format::Records) {
    std::cout << record_line(make_record("delete", {{"p", p},
                                                    {"input", to_json(t)},
                                                    {"result", to_json(result.triangulation)},
                                                    {"relabel", result.relabel}}))
              << "\n";
  } else {
    std::cout << "# relabel";
    for (std::size_t v = 0; v < result.relabel.size(); ++v) {
      std::cout << " " << v << ":" << (result.relabel[v] < 0 ? "-" : std::to_string(result.relabel[v]));
    }
    std::cout << "\n" << serialize(result.triangulation);
  }
  return 0;
}

int cmd_pair(const std::vector<std::string>& args, bool strict, const std::string& save, const Common& common) {
  std::map<std::string, std::string> kv;
  for (const auto& a : args) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected key=value, got `" + a + "`");
    kv[a.substr(0, eq)] = a.substr(eq + 1);
  }
  const auto need = [&](const std::string& k) {
    if (!kv.count(k)) throw Error(ErrorKind::InvalidArgument, "missing " + k + "=<int>");
    return std::stoi(kv[k]);
  };
  const int b = need("b");
  const int c = need("c");
  const int d = need("d");
  const PairGate gate = strict ? PairGate::StrictInterleave : PairGate::Inequalities;
  std::vector<int> staircase;
  if (kv.count("staircase")) {
    std::stringstream ss(kv["staircase"]);
    for (std::string t; std::getline(ss, t, ',');) staircase.push_back(std::stoi(t));
  } else {
    staircase = default_staircase(b, c, d, gate);
  }
  const auto pair = build_abcd_pair(b, c, d, staircase, gate);
  const auto& p = pair.params;
  if (!save.empty()) {
    write_file(save + "-minus.txt", serialize(pair.minus));
    write_file(save + "-plus.txt", serialize(pair.plus));
  }
  if (common.format == Format::Records) {
    std::cout << record_line(make_record("pair", {{"a", p.a},
                                                  {"b", p.b},
                                                  {"c", p.c},
                                                  {"d", p.d},
                                                  {"k", p.k},
                                                  {"l", p.l},
                                                  {"l_body", p.l_body()},
                                                  {"l_caption", p.l_caption()},
                                                  {"l_derived", p.l_derived()},
                                                  {"l_below_k", p.l_below_k()},
                                                  {"staircase", p.staircase},
                                                  {"tau_minus", p.tau_minus},
                                                  {"tau_plus", p.tau_plus},
                                                  {"theorem2_bound", theorem2_bound(p).str()},
                                                  {"minus", to_json(pair.minus)},
                                                  {"plus", to_json(pair.plus)}}))
              << "\n";
    return 0;
  }
  std::string stairs;
  for (int t : p.staircase) stairs += (stairs.empty() ? "" : ",") + std::to_string(t);
  std::cout << "a " << p.a << "\nb " << p.b << "\nc " << p.c << "\nd " << p.d << "\nk " << p.k << "\nl " << p.l
            << "\nstaircase " << stairs << "\ntau- " << p.tau_minus << "\ntau+ " << p.tau_plus
            << "\ntheorem2-bound " << theorem2_bound(p).str() << "\n";
  std::cout << "# l closed forms: a+b-d+2=" << p.l_body() << " a+b-c+4=" << p.l_caption()
            << " a+b-c+2=" << p.l_derived() << "\n";
  std::cout << "# l < k: " << (p.l_below_k() ? "yes" : "no") << "\n";
  std::cout << "\n# A-\n" << serialize(pair.minus) << "\n# A+\n" << serialize(pair.plus);
  return 0;
}

int cmd_verify_bounds(const std::string& range, const Common& common) {
  const auto [lo, hi] = parse_range(range);
  VerifyOptions opt;
  opt.cap = common.effective_cap();
  bool ok = true;
  for (const auto& check : verify_bounds(lo, hi, opt)) {
    ok = ok && check.ok();
    if (common.format == Format::Records) {
      std::cout << record_line(make_record("bound-check", {{"check", check.name},
                                                           {"d", check.d},
                                                           {"instances", check.instances},
                                                           {"violations", check.violations},
                                                           {"first_violation", check.first_violation}}))
                << "\n";
    } else {
      std::cout << (check.ok() ? "PASS " : "FAIL ") << check.name << " d=" << check.d
                << " instances=" << check.instances << " violations=" << check.violations;
      if (!check.ok()) std::cout << " first: " << check.first_violation;
      std::cout << "\n";
    }
  }
  return ok ? 0 : kExitViolation;
}

std::vector<Edge> parse_edge_list(const std::string& s) {
  std::vector<Edge> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected u-v, got `" + item + "`");
    out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return out;
}

int cmd_render(const std::string& file, const std::string& out, const std::string& dotted, const std::string& title) {
  const auto t = load_triangulation(file);
  SvgOptions opt;
  opt.dotted = parse_edge_list(dotted);
  opt.title = title;
  const std::string svg = render_svg(t, opt);
  if (out.empty() || out == "-") {
    std::cout << svg;
  } else {
    write_file(out, svg);
  }
  return 0;
}

int cmd_enumerate(int d, bool count_only, bool orbits, const Common& common) {
  const PolygonDim dim(d);
  std::vector<CsTriangulation> states;
  std::uint64_t count = 0;
  for_each_cs_mask(
      dim,
      [&](const EdgeMask& m) {
        if (orbits && !is_orbit_representative(m, dim)) return;
        ++count;
        if (!count_only) states.push_back(CsTriangulation::from_mask(dim, m));
      },
      common.cap ? *common.cap : kDefaultEnumerationCap);
  if (common.format == Format::Records) {
    std::cout << record_line(make_record("enumerate", {{"d", d}, {"orbits", orbits}, {"count", count}})) << "\n";
    for (const auto& s : states) std::cout << record_line(make_record("state", to_json(s))) << "\n";
  } else if (count_only) {
    std::cout << count << "\n";
  } else {
    std::cout << serialize(states);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flip graphs of centrally symmetric polygon triangulations"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  std::string format = "text";
  app.add_flag("--witness", common.witness, "Also output a realizing path or pair");
  app.add_flag("--no-cache", common.no_cache, "Recompute and cross-check against cached results");
  app.add_flag("--deep", common.deep, "Raise the work cap so d = 9, 10 diameters are exact");
  app.add_option("--cap", common.cap, "Cap on visited states");
  app.add_option("--threads", common.threads, "Worker threads for diameter sweeps")->check(CLI::Range(1U, 256U));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}));

  std::string range;
  auto* table = app.add_subcommand("table", "Diameters for a range of dimensions");
  table->add_option("range", range, "Dimension or range like 1..8")->required();

  int d = 0;
  auto* diam = app.add_subcommand("diameter", "Diameter of one dimension");
  diam->add_option("d", d, "Dimension")->required();

  std::string f1;
  std::string f2;
  auto* dist = app.add_subcommand("distance", "Flip distance between two triangulation files");
  dist->add_option("from", f1)->required()->check(CLI::ExistingFile);
  dist->add_option("to", f2)->required()->check(CLI::ExistingFile);

  auto* upper = app.add_subcommand("upper-path", "Constructive path of length at most ceil(5d/2)-2");
  upper->add_option("from", f1)->required()->check(CLI::ExistingFile);
  upper->add_option("to", f2)->required()->check(CLI::ExistingFile);

  int vertex = 0;
  std::string out;
  auto* del = app.add_subcommand("delete", "Delete a vertex and its opposite");
  del->add_option("file", f1)->required()->check(CLI::ExistingFile);
  del->add_option("p", vertex, "Vertex to delete")->required();
  del->add_option("-o,--out", out, "Write the result to this file");

  std::vector<std::string> pair_args;
  bool strict = false;
  std::string save;
  auto* pair = app.add_subcommand("pair", "Build an (a,b,c,d)-pair: b=<int> c=<int> d=<int> [staircase=t1,t2,...]");
  pair->add_option("params", pair_args)->required();
  pair->add_flag("--strict", strict, "Also require l < k");
  pair->add_option("--save", save, "Write PREFIX-minus.txt and PREFIX-plus.txt");

  auto* verify = app.add_subcommand("verify-bounds", "Empirical checks of the upper and lower bounds");
  verify->add_option("range", range, "Dimension or range like 4..7")->required();

  std::string dotted;
  std::string title;
  auto* render = app.add_subcommand("render", "Draw a triangulation as SVG");
  render->add_option("file", f1)->required()->check(CLI::ExistingFile);
  render->add_option("-o,--out", out, "Output SVG file (default stdout)");
  render->add_option("--dotted", dotted, "Edges drawn dotted, as u-v,u-v");
  render->add_option("--title", title);

  bool count_only = false;
  bool orbits = false;
  auto* enumerate = app.add_subcommand("enumerate", "List all triangulations of one dimension");
  enumerate->add_option("d", d, "Dimension")->required();
  enumerate->add_flag("--count", count_only, "Print only the number of states");
  enumerate->add_flag("--orbits", orbits, "One state per dihedral orbit");

  CLI11_PARSE(app, argc, argv);
  common.format = format == "records" ? Format::Records : Format::Text;

  try {
    if (*table) return cmd_table(range, common);
    if (*diam) return cmd_diameter(d, common);
    if (*dist) return cmd_distance(f1, f2, common);
    if (*upper) return cmd_upper_path(f1, f2, common);
    if (*del) return cmd_delete(f1, vertex, out, common);
    if (*pair) return cmd_pair(pair_args, strict, save, common);
    if (*verify) return cmd_verify_bounds(range, common);
    if (*render) return cmd_render(f1, out, dotted, title);
    if (*enumerate) return cmd_enumerate(d, count_only, orbits, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ResourceLimit ? 4 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
