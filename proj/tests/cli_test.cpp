#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wfs/cli.hpp"

namespace wfs {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("wfs_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

TEST(Cli, SetWfsJson) {
  auto r = call({"tables", "set", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["category"], "set");
  EXPECT_EQ(doc["items"].size(), 6u);
  EXPECT_EQ(doc["hasse"].size(), 7u);
  EXPECT_EQ(nlohmann::json::parse(doc.dump()), doc);
}

TEST(Cli, DotOutput) {
  auto r = call({"tables", "set", "--format", "dot"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_EQ(count(r.out, "[label="), 6u);
  EXPECT_EQ(count(r.out, " -> "), 7u);
}

TEST(Cli, TableFormatIsDeterministic) {
  for (const std::string kind : {"set", "pointed", "vect"}) {
    auto a = call({"tables", kind, "--what", "model-structures", "--verbose"});
    auto b = call({"tables", kind, "--what", "model-structures", "--verbose"});
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, ModelStructureCounts) {
  const std::pair<std::string, std::size_t> expected[] = {{"set", 9}, {"pointed", 7}, {"vect", 5}};
  for (const auto& [kind, n] : expected) {
    auto r = call({"tables", kind, "--what", "model-structures", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["items"].size(), n) << kind;
    for (const auto& rej : doc["rejections"]) EXPECT_EQ(rej["failed"], "two-of-three");
  }
}

TEST(Cli, QuillenJson) {
  auto doc = nlohmann::json::parse(call({"tables", "set", "--what", "quillen", "--format", "json"}).out);
  EXPECT_EQ(doc["components"].size(), 3u);
  EXPECT_FALSE(doc["include_empty_left_adjoint"].get<bool>());
  auto with_empty = nlohmann::json::parse(
      call({"tables", "set", "--what", "quillen", "--include-empty-left-adjoint", "--format", "json"}).out);
  EXPECT_EQ(with_empty["empty_only_edges"].size(), 3u);
}

TEST(Cli, GenPosetThenEnumerate) {
  auto dir = temp_dir("gen");
  auto file = (dir / "square.yaml").string();
  auto g = call({"gen-poset", "--chain", "1", "--chain", "1", "--output", file});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  EXPECT_NE(g.out.find("4 objects, 9 morphisms"), std::string::npos);
  auto r = call({"enumerate", "--input", file, "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["category"], "square");
  EXPECT_EQ(doc["items"].size(), 10u);
}

TEST(Cli, BadCategoryFileIsInvalid) {
  auto dir = temp_dir("bad");
  auto file = dir / "bad.yaml";
  std::ofstream(file) << "objects: [a]\nmorphisms:\n  - {name: f, src: a, dst: b}\n";
  auto r = call({"enumerate", "--input", file.string()});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.err.find("unknown target object 'b'"), std::string::npos) << r.err;
  EXPECT_EQ(call({"enumerate", "--input", (dir / "missing.yaml").string()}).code, kExitInvalid);
}

TEST(Cli, InvalidArguments) {
  EXPECT_EQ(call({}).code, kExitInvalid);
  EXPECT_EQ(call({"tables"}).code, kExitInvalid);
  EXPECT_EQ(call({"tables", "groups"}).code, kExitInvalid);
  EXPECT_EQ(call({"tables", "set", "--format", "xml"}).code, kExitInvalid);
  EXPECT_EQ(call({"tables", "vect", "--what", "quillen"}).code, kExitInvalid);
  EXPECT_EQ(call({"tables", "set", "--include-empty-left-adjoint"}).code, kExitInvalid);
  EXPECT_EQ(call({"derive-tables", "--kind", "set", "--bound", "many", "--output", "/tmp"}).code, kExitInvalid);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, DeriveTablesMatchesCheckedIn) {
  auto dir = temp_dir("derive");
  auto r = call({"derive-tables", "--kind", "vect", "--bound", "3", "--output", dir.string()});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "vect.json"));
  auto wider = call({"derive-tables", "--kind", "vect", "--bound", "2", "--output", dir.string()});
  EXPECT_EQ(wider.code, kExitMismatch);
}

TEST(Cli, VerifySuites) {
  auto r = call({"verify", "--suite", "tables"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(call({"verify", "--suite", "lifting", "--max-size", "2"}).code, kExitOk);
  EXPECT_EQ(call({"verify", "--suite", "nonsense"}).code, kExitInvalid);
}

}  // namespace
}  // namespace wfs
