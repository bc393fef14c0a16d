#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "cyclo/geodesic.hpp"

namespace cyclo {

inline constexpr int kRecordSchema = 1;

using Json = nlohmann::json;

inline Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json to_json(const CsTriangulation& t) {
  Json edges = Json::array();
  for (const auto& e : t.interior()) edges.push_back(to_json(e));
  return {{"d", t.dim().d()}, {"edges", edges}};
}

inline CsTriangulation triangulation_from_json(const Json& j) {
  try {
    const PolygonDim dim(j.at("d").get<int>());
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return CsTriangulation::create(dim, std::move(edges));
  } catch (const Json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("malformed triangulation record: ") + ex.what());
  }
}

inline Json to_json(const FlipPath& p) {
  Json states = Json::array();
  for (const auto& s : p.states) states.push_back(to_json(s));
  Json moves = Json::array();
  for (const auto& m : p.moves) moves.push_back({{"removed", to_json(m.removed)}, {"introduced", to_json(m.introduced)}});
  return {{"length", p.length()}, {"states", states}, {"moves", moves}};
}

/// Record of a distance-like result. Carries no timing so that records of the
/// same query are byte-identical.
inline Json to_json(const DistanceReport& r) {
  Json j = {{"value", r.value}, {"explored", r.explored}, {"method", std::string(to_string(r.method))},
            {"partial", r.partial}};
  if (r.endpoints) j["endpoints"] = Json::array({to_json(r.endpoints->first), to_json(r.endpoints->second)});
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

/// One line of the record stream: schema tag, record kind and payload fields.
inline Json make_record(const std::string& kind, Json fields) {
  Json j = std::move(fields);
  j["schema"] = kRecordSchema;
  j["kind"] = kind;
  return j;
}

inline std::string record_line(const Json& j) { return j.dump(); }

/// Persistent map from query keys to records, stored as JSON Lines
/// (`{"schema":1,"key":...,"record":...}`). Later lines win; lines with
/// another schema are ignored.
class ResultCache {
 public:
  static constexpr const char* kEnvVar = "CYCLO_CACHE_DIR";

  explicit ResultCache(std::filesystem::path dir) : file_(std::move(dir) / "cache.jsonl") { load(); }

  /// Directory from the environment, else $XDG_CACHE_HOME/cyclo or ~/.cache/cyclo.
  static std::optional<std::filesystem::path> default_dir() {
    if (const char* dir = std::getenv(kEnvVar); dir != nullptr && *dir != '\0') return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
      return std::filesystem::path(xdg) / "cyclo";
    }
    if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
      return std::filesystem::path(home) / ".cache" / "cyclo";
    }
    return std::nullopt;
  }

  const std::filesystem::path& file() const noexcept { return file_; }

  std::optional<Json> lookup(const std::string& key) const {
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    return std::nullopt;
  }

  void store(const std::string& key, const Json& record) {
    std::error_code ec;
    std::filesystem::create_directories(file_.parent_path(), ec);
    std::ofstream out(file_, std::ios::app);
    if (!out) throw Error(ErrorKind::Io, "cannot append to " + file_.string());
    out << Json{{"schema", kRecordSchema}, {"key", key}, {"record", record}}.dump() << "\n";
    entries_[key] = record;
  }

 private:
  void load() {
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
      const Json j = Json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object() || j.value("schema", 0) != kRecordSchema) continue;
      if (!j.contains("key") || !j.contains("record") || !j["key"].is_string()) continue;
      entries_[j["key"].get<std::string>()] = j["record"];
    }
  }

  std::filesystem::path file_;
  std::map<std::string, Json> entries_;
};

}  // namespace cyclo
