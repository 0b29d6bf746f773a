#include "drg/catalog.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "drg/spectral.hpp"

#ifndef DRG_DEFAULT_DATA_DIR
#define DRG_DEFAULT_DATA_DIR "data/graphs"
#endif

namespace drg {

namespace fs = std::filesystem;

const std::vector<CatalogEntry>& catalog() {
  using S = SourceKind;
  static const std::vector<CatalogEntry> entries{
      {"a", "odd4", "Odd graph O4", "{4,3,3;1,1,2}", S::Construction, "odd:4"},
      {"b", "sylvester", "Sylvester graph", "{5,4,2;1,1,4}", S::Construction, "sylvester"},
      {"c", "hs_second_subconstituent", "second subconstituent of the Hoffman-Singleton graph", "{6,5,1;1,1,6}",
       S::Construction, "second_subconstituent:0"},
      {"d", "perkel", "Perkel graph", "{6,5,2;1,1,3}", S::DataFile, ""},
      {"e", "symplectic_7cover_k9", "symplectic 7-cover of K9", "{8,6,1;1,1,8}", S::DataFile, ""},
      {"f", "coxeter", "Coxeter graph", "{3,2,2,1;1,1,1,2}", S::Construction, "coxeter"},
      {"g", "dodecahedron", "dodecahedron", "{3,2,1,1,1;1,1,1,2,3}", S::Construction, "dodecahedron"},
      {"h", "biggs_smith", "Biggs-Smith graph", "{3,2,2,2,1,1,1;1,1,1,1,1,1,3}", S::DataFile, ""},
      {"i", "wells", "Wells graph", "{5,4,1,1;1,1,4,5}", S::DataFile, ""},
      {"j", "icosahedron", "icosahedron", "{5,2,1;1,2,5}", S::Construction, "icosahedron"},
      {"k", "doro", "Doro graph", "{10,6,4;1,2,5}", S::DataFile, ""},
      {"l", "halved_6_cube", "halved 6-cube", "{15,6,1;1,6,15}", S::Construction, "halved_cube:6"},
      {"m", "gosset", "Gosset graph", "{27,10,1;1,10,27}", S::Construction, "gosset"},
      {"n", "halved_7_cube", "halved 7-cube", "{21,10,3;1,6,15}", S::Construction, "halved_cube:7"},
      {"o", "klein", "Klein graph", "{7,4,1;1,2,7}", S::DataFile, ""},
      {"p", "taylor_9_6", "the two non-geometric graphs with array {9,6,1;1,2,9}", "{9,6,1;1,2,9}", S::DataFile,
       ""},
      {"q", "doob", "Doob graph of diameter 3", "{9,6,3;1,2,3}", S::Construction, "doob_diam3"},
      {"r", "taylor_15_10", "graphs with array {15,10,1;1,2,15}", "{15,10,1;1,2,15}", S::DataFile, ""},
      {"s", "putative_18_12", "putative graph, open", "{18,12,1;1,2,18}", S::Open, ""},
  };
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& key) {
  for (const auto& e : catalog())
    if (e.name == key || e.item == key) return e;
  throw std::invalid_argument("unknown catalog entry \"" + key + "\"");
}

std::string default_data_dir() {
  if (const char* env = std::getenv("DRG_DATA_DIR"); env && *env) return env;
  return DRG_DEFAULT_DATA_DIR;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

std::map<std::string, ManifestEntry> load_manifest(const std::string& dir) {
  const fs::path path = fs::path(dir) / "manifest.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("manifest not found: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed manifest " + path.string() + ": " + e.what());
  }
  std::map<std::string, ManifestEntry> out;
  try {
    for (const auto& [name, v] : j.at("graphs").items()) {
      ManifestEntry m;
      m.file = v.at("file").get<std::string>();
      m.array = v.at("array").get<std::string>();
      if (v.contains("sha256") && !v.at("sha256").is_null()) m.sha256 = v.at("sha256").get<std::string>();
      m.graphs = v.value("graphs", 1);
      out.emplace(name, std::move(m));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed manifest " + path.string() + ": " + e.what());
  }
  return out;
}

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Verified: return "verified";
    case VerifyStatus::Mismatch: return "mismatch";
    case VerifyStatus::DataAbsent: return "data absent";
    case VerifyStatus::DigestMismatch: return "digest mismatch";
    case VerifyStatus::Open: return "open";
  }
  return "?";
}

std::optional<std::vector<Graph>> load_data_graphs(const std::string& name, const std::string& data_dir) {
  std::map<std::string, ManifestEntry> manifest;
  try {
    manifest = load_manifest(data_dir);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
  const auto it = manifest.find(name);
  if (it == manifest.end()) return std::nullopt;
  const fs::path path = fs::path(data_dir) / it->second.file;
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  if (it->second.sha256 && sha256_hex(bytes) != *it->second.sha256)
    throw std::runtime_error("digest mismatch for " + path.string());
  std::vector<Graph> graphs;
  std::istringstream lines(bytes);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(decode_graph6(line));
    graphs.back().set_label(name + (graphs.size() > 1 ? "#" + std::to_string(graphs.size()) : ""));
  }
  return graphs;
}

GraphVerification verify_graph(const Graph& g, bool geometricity) {
  GraphVerification v;
  v.label = g.label();
  v.order = g.order();
  const auto dr = check_distance_regular(g);
  if (!dr.distance_regular) {
    const auto& bad = *dr.violation;
    v.detail = "not distance-regular at x = " + std::to_string(bad.x) + ", y = " + std::to_string(bad.y) +
               ", i = " + std::to_string(bad.i) + ": " + bad.what;
    return v;
  }
  v.array = dr.array;
  if (g.order() <= 5000) {
    const auto ev = adjacency_spectrum_numeric(g);
    v.theta_min_numeric = ev.back();
    const double exact = spectrum(*v.array).theta_min().theta.approx();
    if (std::abs(ev.back() - exact) > 1e-9) v.detail = "numeric smallest eigenvalue disagrees with exact spectrum";
  }
  if (geometricity && g.order() <= 200) v.geometricity = is_geometric_small(g, *v.array).verdict;
  return v;
}

EntryVerification verify_entry(const CatalogEntry& e, const std::string& data_dir, bool geometricity) {
  EntryVerification out;
  out.entry = &e;
  const auto start = std::chrono::steady_clock::now();
  std::vector<Graph> graphs;
  switch (e.source) {
    case SourceKind::Open:
      out.status = VerifyStatus::Open;
      out.detail = "no construction known; existence open";
      return out;
    case SourceKind::Construction:
      graphs.push_back(construct(e.construction));
      break;
    case SourceKind::DataFile:
      try {
        auto loaded = load_data_graphs(e.name, data_dir);
        if (!loaded) {
          out.status = VerifyStatus::DataAbsent;
          out.detail = "data absent: no graph6 file for \"" + e.name + "\" in " + data_dir;
          return out;
        }
        graphs = std::move(*loaded);
      } catch (const std::runtime_error& err) {
        out.status = VerifyStatus::DigestMismatch;
        out.detail = err.what();
        return out;
      }
      break;
  }
  const IntersectionArray expected = parse_array(e.array);
  out.status = VerifyStatus::Verified;
  for (const auto& g : graphs) {
    auto v = verify_graph(g, geometricity);
    if (!v.array || *v.array != expected || !v.detail.empty() || v.geometricity == Geometricity::Geometric)
      out.status = VerifyStatus::Mismatch;
    out.graphs.push_back(std::move(v));
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace drg
