#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drg/graph.hpp"

namespace drg {

/// How a catalog graph is obtained.
enum class SourceKind { Construction, DataFile, Open };

struct CatalogEntry {
  std::string item;   // "a".."s"
  std::string name;   // short identifier, also the manifest key for data files
  std::string title;  // human-readable graph name
  std::string array;  // "{..;..}"
  SourceKind source = SourceKind::Construction;
  std::string construction;  // construct() spec when source == Construction
};

/// The non-geometric distance-regular graphs with smallest eigenvalue >= -3
/// and diameter >= 3, in classification order.
const std::vector<CatalogEntry>& catalog();
/// Throws std::invalid_argument for unknown names or items.
const CatalogEntry& catalog_entry(const std::string& name_or_item);

struct ManifestEntry {
  std::string file;
  std::string array;
  std::optional<std::string> sha256;
  int graphs = 1;
};

/// name -> entry, from <dir>/manifest.json. Throws std::runtime_error when
/// the manifest is missing or malformed.
std::map<std::string, ManifestEntry> load_manifest(const std::string& dir);

/// $DRG_DATA_DIR when set, else the directory compiled into the library.
std::string default_data_dir();

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

enum class VerifyStatus { Verified, Mismatch, DataAbsent, DigestMismatch, Open };
std::string to_string(VerifyStatus s);

struct GraphVerification {
  std::string label;
  int order = 0;
  std::optional<IntersectionArray> array;
  std::optional<double> theta_min_numeric;
  std::optional<Geometricity> geometricity;
  std::string detail;
};

struct EntryVerification {
  const CatalogEntry* entry = nullptr;
  VerifyStatus status = VerifyStatus::DataAbsent;
  std::vector<GraphVerification> graphs;
  std::string detail;
  double seconds = 0.0;
};

/// Checks one graph: distance-regularity, array, numeric smallest eigenvalue
/// against the exact spectrum, and (for n <= 200) geometricity.
GraphVerification verify_graph(const Graph& g, bool geometricity = true);

/// Builds or loads the graph(s) of a catalog entry and verifies them against
/// the expected array.
EntryVerification verify_entry(const CatalogEntry& e, const std::string& data_dir, bool geometricity = true);

/// Loads the graph(s) of a manifest entry, checking the digest first.
/// Returns nullopt when the file is absent; throws std::runtime_error on a
/// digest mismatch.
std::optional<std::vector<Graph>> load_data_graphs(const std::string& name, const std::string& data_dir);

}  // namespace drg
