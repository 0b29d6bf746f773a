#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "drg/catalog.hpp"

using namespace drg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("drg_catalog_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Catalog, NineteenEntriesInOrder) {
  const auto& c = catalog();
  ASSERT_EQ(c.size(), 19u);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c[i].item, std::string(1, static_cast<char>('a' + i)));
  EXPECT_EQ(catalog_entry("a").array, "{4,3,3;1,1,2}");
  EXPECT_EQ(catalog_entry("gosset").item, "m");
  EXPECT_THROW(catalog_entry("zz"), std::invalid_argument);
}

TEST(Catalog, ArraysParseAndAreValid) {
  std::set<std::string> names;
  for (const auto& e : catalog()) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    const auto ia = parse_array(e.array);
    EXPECT_TRUE(formal_validity(ia).ok) << e.name;
    EXPECT_GE(ia.diameter(), 3) << e.name;
    if (e.source == SourceKind::Construction) {
      EXPECT_FALSE(e.construction.empty()) << e.name;
    }
  }
}

TEST(Catalog, ManifestCoversDataEntries) {
  const auto m = load_manifest(DRG_TEST_DATA_DIR);
  for (const auto& e : catalog()) {
    if (e.source != SourceKind::DataFile) continue;
    ASSERT_EQ(m.count(e.name), 1u) << e.name;
    EXPECT_EQ(m.at(e.name).array, e.array) << e.name;
  }
}

TEST(Catalog, ShippedDigestsMatchFiles) {
  const fs::path dir = DRG_TEST_DATA_DIR;
  for (const auto& [name, entry] : load_manifest(dir.string())) {
    if (!entry.sha256) continue;
    ASSERT_TRUE(fs::exists(dir / entry.file)) << name;
    EXPECT_EQ(sha256_hex(read_file(dir / entry.file)), *entry.sha256) << name;
  }
}

TEST(Catalog, ConstructibleEntriesVerify) {
  for (const auto& e : catalog()) {
    if (e.source != SourceKind::Construction) continue;
    const auto v = verify_entry(e, DRG_TEST_DATA_DIR, false);
    EXPECT_EQ(v.status, VerifyStatus::Verified) << e.name << ": " << v.detail;
    ASSERT_FALSE(v.graphs.empty());
    ASSERT_TRUE(v.graphs[0].array) << e.name;
    EXPECT_EQ(format_array(*v.graphs[0].array), e.array);
    ASSERT_TRUE(v.graphs[0].theta_min_numeric);
    EXPECT_GE(*v.graphs[0].theta_min_numeric, -3.0 - 1e-9) << e.name;
  }
}

TEST(Catalog, DataAbsentAndOpen) {
  const auto v = verify_entry(catalog_entry("perkel"), DRG_TEST_DATA_DIR, false);
  EXPECT_EQ(v.status, VerifyStatus::DataAbsent);
  EXPECT_EQ(verify_entry(catalog_entry("s"), DRG_TEST_DATA_DIR, false).status, VerifyStatus::Open);
  EXPECT_FALSE(load_data_graphs("perkel", DRG_TEST_DATA_DIR));
}

TEST(Catalog, DataFileEntryLoadsFromTempDir) {
  TempDir tmp;
  const std::string g6 = encode_graph6(dodecahedron()) + "\n";
  tmp.write("perkel.g6", g6);
  tmp.write("manifest.json", R"({"graphs": {"perkel": {"file": "perkel.g6", "array": "{6,5,2;1,1,3}", "sha256": ")" +
                                 sha256_hex(g6) + R"("}}})");
  const auto graphs = load_data_graphs("perkel", tmp.path.string());
  ASSERT_TRUE(graphs);
  ASSERT_EQ(graphs->size(), 1u);
  // The file holds the wrong graph, so verification reports a mismatch.
  EXPECT_EQ(verify_entry(catalog_entry("perkel"), tmp.path.string(), false).status, VerifyStatus::Mismatch);
}

TEST(Catalog, DigestMismatchIsReported) {
  TempDir tmp;
  tmp.write("coxeter.g6", encode_graph6(coxeter()) + "\n");
  tmp.write("manifest.json", R"({"graphs": {"coxeter": {"file": "coxeter.g6", "array": "{3,2,2,1;1,1,1,2}",
      "sha256": "0000000000000000000000000000000000000000000000000000000000000000"}}})");
  EXPECT_THROW(load_data_graphs("coxeter", tmp.path.string()), std::runtime_error);
}

TEST(Catalog, MalformedManifest) {
  TempDir tmp;
  EXPECT_THROW(load_manifest(tmp.path.string()), std::runtime_error);
  tmp.write("manifest.json", "{not json");
  EXPECT_THROW(load_manifest(tmp.path.string()), std::runtime_error);
  tmp.write("manifest.json", R"({"graphs": {"x": {"array": "{3;1}"}}})");
  EXPECT_THROW(load_manifest(tmp.path.string()), std::runtime_error);
}

TEST(Catalog, DefaultDataDirHonoursEnvironment) {
  ::setenv("DRG_DATA_DIR", "/tmp/somewhere", 1);
  EXPECT_EQ(default_data_dir(), "/tmp/somewhere");
  ::unsetenv("DRG_DATA_DIR");
  EXPECT_FALSE(default_data_dir().empty());
}
