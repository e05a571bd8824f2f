#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "wfs/category_io.hpp"

namespace wfs {
namespace {

constexpr const char* kArrow = R"(objects: [a, b]
morphisms:
  - {name: id_a, src: a, dst: a}
  - {name: f, src: a, dst: b}
  - {name: id_b, src: b, dst: b}
identities: {a: id_a, b: id_b}
composition:
  - {first: id_a, then: id_a, equals: id_a}
  - {first: id_a, then: f, equals: f}
  - {first: f, then: id_b, equals: f}
  - {first: id_b, then: id_b, equals: id_b}
)";

CategoryFileError parse_error(const std::string& text) {
  try {
    parse_category(text);
  } catch (const CategoryFileError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return CategoryFileError({});
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return s.replace(at, from.size(), to);
}

TEST(CategoryIo, ParsesWalkingArrow) {
  auto c = parse_category(kArrow);
  EXPECT_EQ(c.object_count(), 2);
  EXPECT_EQ(c.morphism_count(), 3);
  EXPECT_EQ(c.compose(0, 1), 1);
  EXPECT_EQ(c.compose(1, 0), FiniteCategory::kNoComposite);
  EXPECT_TRUE(validate(c).empty());
}

TEST(CategoryIo, RoundTrip) {
  for (const auto& c : {chain_poset(2), product(chain_poset(1), chain_poset(1)), set_skeleton(2).category})
    EXPECT_EQ(parse_category(format_category(c)), c);
}

TEST(CategoryIo, AcceptsJson) {
  auto c = parse_category(R"({"objects": ["x"], "morphisms": [{"name": "id", "src": "x", "dst": "x"}],
    "identities": {"x": "id"}, "composition": [{"first": "id", "then": "id", "equals": "id"}]})");
  EXPECT_EQ(c.object_name(0), "x");
  EXPECT_EQ(c.morphism_count(), 1);
}

TEST(CategoryIo, UnknownObjectHasPosition) {
  auto e = parse_error(replace(kArrow, "{name: f, src: a, dst: b}", "{name: f, src: a, dst: c}"));
  ASSERT_EQ(e.problems().size(), 1u);
  EXPECT_EQ(e.problems()[0].position.line, 4);
  EXPECT_EQ(e.problems()[0].position.column, 5);
  EXPECT_EQ(e.problems()[0].message, "unknown target object 'c'");
  EXPECT_EQ(std::string(e.what()), "4:5: unknown target object 'c'");
}

TEST(CategoryIo, SyntaxErrorHasPosition) {
  auto e = parse_error("objects: [a, b\nmorphisms: []\n");
  ASSERT_EQ(e.problems().size(), 1u);
  EXPECT_GT(e.problems()[0].position.line, 0);
}

TEST(CategoryIo, MissingCompositeReported) {
  auto e = parse_error(replace(kArrow, "  - {first: f, then: id_b, equals: f}\n", ""));
  ASSERT_EQ(e.problems().size(), 1u);
  EXPECT_EQ(e.problems()[0].message, "missing composite of (f, id_b)");
  EXPECT_EQ(e.problems()[0].position.line, 8);
}

TEST(CategoryIo, DuplicateAndNonComposable) {
  auto dup = parse_error(replace(kArrow, "  - {first: id_b, then: id_b, equals: id_b}\n",
                                 "  - {first: id_b, then: id_b, equals: id_b}\n  - {first: f, then: id_b, equals: f}\n"));
  ASSERT_EQ(dup.problems().size(), 1u);
  EXPECT_EQ(dup.problems()[0].message, "composite of (f, id_b) listed twice");
  EXPECT_EQ(dup.problems()[0].position.line, 12);

  auto bad = parse_error(replace(kArrow, "  - {first: id_b, then: id_b, equals: id_b}\n",
                                 "  - {first: id_b, then: id_b, equals: id_b}\n  - {first: f, then: f, equals: f}\n"));
  ASSERT_EQ(bad.problems().size(), 1u);
  EXPECT_EQ(bad.problems()[0].message, "pair (f, f) is not composable");
}

TEST(CategoryIo, IdentityLawReportedAtMorphism) {
  auto e = parse_error(replace(kArrow, "{first: f, then: id_b, equals: f}", "{first: f, then: id_b, equals: g}"));
  EXPECT_EQ(e.problems()[0].message, "unknown morphism 'g'");

  // Two parallel arrows; id_a then f is recorded as g.
  std::string two = replace(kArrow, "  - {name: id_b, src: b, dst: b}\n",
                            "  - {name: id_b, src: b, dst: b}\n  - {name: g, src: a, dst: b}\n");
  two = replace(two, "{first: id_a, then: f, equals: f}", "{first: id_a, then: f, equals: g}");
  two += "  - {first: id_a, then: g, equals: g}\n  - {first: g, then: id_b, equals: g}\n";
  auto law = parse_error(two);
  ASSERT_EQ(law.problems().size(), 1u);
  EXPECT_EQ(law.problems()[0].message, "identity law at f");
  EXPECT_EQ(law.problems()[0].position.line, 4);
}

TEST(CategoryIo, MissingFileIsError) {
  EXPECT_THROW(load_category_file("/nonexistent/category.yaml"), CategoryFileError);
  auto path = std::filesystem::temp_directory_path() / "wfs_category_io_test.yaml";
  std::ofstream(path) << kArrow;
  EXPECT_EQ(load_category_file(path).morphism_count(), 3);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace wfs
