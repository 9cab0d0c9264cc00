#include <optional>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

using namespace flatnest;

namespace {

Json example_spec() {
  return Json::parse(R"({
    "atoms": ["x", "y", "z", "u"],
    "host": {"preset": "simplex-3"},
    "levels": [{"building_set": [["x"], ["y"], ["z"], ["u"], ["x", "y"]]},
               {"flat": ["2x+y"]}],
    "options": {"path": "all"}
  })");
}

std::optional<ErrorKind> parse_error_kind(const std::string& text) {
  try {
    parse_spec(Json::parse(text));
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST(Pipeline, ParsesSpec) {
  auto spec = parse_spec(example_spec());
  EXPECT_EQ(spec.ground.size(), 4u);
  EXPECT_EQ(spec.host, simplex_boundary(fx::xyzu()));
  ASSERT_EQ(spec.levels.size(), 2u);
  EXPECT_EQ(spec.levels[0].kind, Level::Kind::building_set);
  EXPECT_EQ(spec.levels[1].flat, fx::flat(spec.ground, {"2x+y"}));
  EXPECT_EQ(spec.options.path, Path::all);
}

TEST(Pipeline, MembersFormAndObjectSums) {
  auto j = Json::parse(R"({"atoms": ["x","y"], "host": {"bases": [[{"x":1}], [{"y":1}]]},
                           "levels": [{"flat": {"members": [{"x": 1, "y": 1}]}}]})");
  auto spec = parse_spec(j);
  EXPECT_EQ(spec.levels[0].flat, fx::flat(spec.ground, {"x+y"}));
}

TEST(Pipeline, ParseErrors) {
  EXPECT_EQ(parse_error_kind(R"([])"), ErrorKind::parse);
  EXPECT_EQ(parse_error_kind(R"({"host": {"preset": "simplex-2"}, "extra": 1})"), ErrorKind::parse);
  EXPECT_EQ(parse_error_kind(R"({"host": {"bases": [["x"]]}})"), ErrorKind::parse);
  EXPECT_EQ(parse_error_kind(R"({"atoms": ["x"], "host": {"bases": [["w"]]}})"), ErrorKind::parse);
  EXPECT_EQ(parse_error_kind(R"({"host": {"preset": "simplex-2"}, "levels": [{"flat": ["x+y"]}, {"building_set": []}]})"),
            ErrorKind::parse);
  EXPECT_EQ(parse_error_kind(R"({"host": {"preset": "simplex-2"}, "options": {"path": "fast"}})"), ErrorKind::parse);
  EXPECT_EQ(parse_error_kind(R"({"host": {"preset": "simplex-2"}, "options": {"threads": 0}})"), ErrorKind::parse);
  EXPECT_EQ(parse_error_kind(R"({"host": {"preset": "simplex-2"}, "options": {"emit": ["png"]}})"), ErrorKind::parse);
  EXPECT_EQ(parse_error_kind(R"({"host": {"preset": "simplex-2"}, "levels": [{"literal": ["x"]}]})"), ErrorKind::parse);
  EXPECT_EQ(parse_error_kind(R"({"atoms": ["a","b","c"], "host": {"preset": "simplex-2"}})"), ErrorKind::parse);
}

TEST(Pipeline, RunAllPathsAgree) {
  auto result = run(parse_spec(example_spec()));
  EXPECT_EQ(result.exit_code, 0);
  const auto& r = result.report;
  ASSERT_EQ(r["stages"].size(), 2u);
  EXPECT_EQ(r["stages"][0]["basis_count"], 6);
  EXPECT_EQ(r["stages"][1]["basis_count"], 8);
  EXPECT_TRUE(r["comparison"]["oracle"]["equal"].get<bool>());
  EXPECT_TRUE(r["comparison"]["blowup"]["equal"].get<bool>());
  EXPECT_EQ(r["host"]["fvector"], Json::parse("[4,6,4]"));
}

TEST(Pipeline, LiteralLevels) {
  auto j = Json::parse(R"({
    "host": {"preset": "simplex-3"},
    "levels": [{"literal": ["{x}", "{y}", "{z}", "{u}", "{x,y}"]},
               {"literal": ["{{x}}", "{{y}}", "{{z}}", "{{u}}", "{{x,y}}", "{{x},{x,y}}"]}],
    "options": {"path": "oracle"}
  })");
  auto result = run(parse_spec(j), true);
  const auto& last = result.report["stages"][1];
  EXPECT_EQ(last["basis_count"], 8);
  ASSERT_TRUE(last.contains("literal_bases"));
  EXPECT_EQ(last["literal_bases"].size(), 8u);
  j["options"]["path"] = "flat";
  auto flat = run(parse_spec(j));
  EXPECT_EQ(flat.report["stages"][1]["bases"], last["bases"]);
}

TEST(Pipeline, ValidationFailures) {
  auto j = example_spec();
  j["levels"][1]["flat"] = Json::array({"3x"});
  try {
    run(parse_spec(j));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(exit_code_for(e.kind()), 2);
  }
}

TEST(Pipeline, Caps) {
  auto spec = parse_spec(example_spec());
  spec.options.max_atoms = 3;
  try {
    run(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(exit_code_for(e.kind()), 4);
  }
  auto big = parse_spec(catalog_spec("simplex-5"));
  big.options.path = Path::oracle;
  big.levels.push_back(Level{Level::Kind::flat, {}, FlatBuildingSet{}, {}});
  try {
    run(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
}

TEST(Pipeline, CheckFaithful) {
  auto j = Json::parse(R"({"atoms": ["x","y"], "host": {"bases": [["x","x+y","2x+y"]]},
                           "options": {"check_faithful": true}})");
  try {
    run(parse_spec(j));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not faithfully realized"), std::string::npos);
  }
}

TEST(Pipeline, Diff) {
  auto pentagon = facet_complex_preset("polygon-5");
  auto square = facet_complex_preset("polygon-4");
  GroundSet g = pentagon.ground;
  auto sq = map_complex(square.complex, [&](const SumVec& v) {
    std::vector<Integer> c(5, 0);
    for (std::size_t i = 0; i < 4; ++i) c[i] = v[i];
    return SumVec(c);
  });
  auto d = diff_complexes(pentagon.complex, sq);
  EXPECT_EQ(d.only_left.size(), 2u);
  EXPECT_EQ(d.only_right.size(), 1u);
  auto j = diff_to_json(g, d);
  EXPECT_FALSE(j["equal"].get<bool>());
  EXPECT_EQ(j["count"], 3);
  EXPECT_TRUE(diff_complexes(sq, sq).empty());
}

TEST(Pipeline, CatalogSpecs) {
  auto perm = run(parse_spec(catalog_spec("permutohedron-3")));
  EXPECT_EQ(perm.report["stages"][0]["fvector"], Json::parse("[14,36,24]"));
  auto assoc = run(parse_spec(catalog_spec("associahedron-2")));
  EXPECT_EQ(assoc.report["stages"][0]["fvector"], Json::parse("[5,5]"));
  auto assoc3 = run(parse_spec(catalog_spec("associahedron-3")));
  EXPECT_EQ(assoc3.report["stages"][0]["basis_count"], 14);
  auto pa = run(parse_spec(catalog_spec("pa-3")));
  EXPECT_EQ(pa.report["stages"][1]["basis_count"], 120);
  auto cube = run(parse_spec(catalog_spec("cube-3")));
  EXPECT_EQ(cube.report["host"]["basis_count"], 8);
  EXPECT_THROW(catalog_spec("dodecahedron"), Error);
}

TEST(Pipeline, DeterministicAcrossThreads) {
  auto spec = parse_spec(catalog_spec("pa-3"));
  spec.options.threads = 1;
  auto one = dump(run(spec).report);
  spec.options.threads = 4;
  EXPECT_EQ(dump(run(spec).report), one);
}

TEST(Pipeline, PathNames) {
  for (Path p : {Path::flat, Path::oracle, Path::blowup, Path::all}) EXPECT_EQ(parse_path(path_name(p)), p);
}
