#include "doctest.h"

#include <sstream>
#include <string>

#include "common/builders.hpp"
#include "igband/error.hpp"
#include "igband/json_io.hpp"
#include "igband/pipeline.hpp"
#include "igband/presentation.hpp"

using namespace igband;

namespace {

std::string const kF23 = "gens a b c\nrel a*b = c\nrel b*c = a\nrel c*a = b\n";

}  // namespace

TEST_SUITE_BEGIN("pipeline");

TEST_CASE("one run carries every stage") {
  auto report = run_pipeline(parse_group_presentation(kF23));

  CHECK_FALSE(report.converted);
  CHECK(report.warnings.empty());
  CHECK(report.band.size == 50);
  CHECK(report.green.n_d == 2);
  CHECK(report.grid.rows() == 8);
  CHECK(report.grid.cols() == 5);
  CHECK(report.squares.size() == 82);
  CHECK(report.ig.gen_names.size() == 40);
  CHECK(report.ig.relations.size() == 94);
  CHECK(report.simplified.trace.survivors.size() == 3);
  CHECK(render_presentation(report.simplified.presentation) ==
        render_presentation(report.input));

  REQUIRE(report.theorem.has_value());
  CHECK(report.theorem->overall() == CheckVerdict::Pass);
  CHECK(report.theorem->input_order == 8);

  REQUIRE(report.rees.has_value());
  CHECK_FALSE(report.oracle_overflow);
  CHECK(report.rees->oracle.order() == 8);

  REQUIRE_FALSE(report.notes.empty());
  CHECK(report.notes.back().find("regular variant") != std::string::npos);
}

TEST_CASE("stage failures name the stage") {
  GroupPresentation bad;
  bad.generators.push_back(igband_tests::gen("a"));
  Relation r;
  r.lhs = make_word({{"z", 1}});
  r.rhs = {};
  bad.relations.push_back(r);
  try {
    run_pipeline(bad);
    FAIL("expected a stage error");
  } catch (Error const& e) {
    CHECK(std::string(e.what()).rfind("input: ", 0) == 0);
  }
}

TEST_CASE("the text report shows the value grid") {
  auto report = run_pipeline(parse_group_presentation(kF23));
  std::string text = render_pipeline_text(report);
  CHECK(text.find("0'  1  a  b  c  1") != std::string::npos);
  CHECK(text.find("overall: pass") != std::string::npos);
  // The report indents the grid two spaces; every grid line must appear.
  std::istringstream grid(render_grid_table(report.table));
  std::string line;
  while (std::getline(grid, line)) {
    CHECK(text.find("  " + line + "\n") != std::string::npos);
  }
}

TEST_CASE("json output is stable across runs") {
  auto p = parse_group_presentation(kF23);
  std::string first = json_to_string(pipeline_json(run_pipeline(p)));
  std::string second = json_to_string(pipeline_json(run_pipeline(p)));
  CHECK(first == second);

  Json j = Json::parse(first);
  CHECK(j["schema"] == 1);
  CHECK(j["converted"] == false);
  CHECK(j["band"]["size"] == 50);
  CHECK(j["word_problem_model"]["group_order"] == 8);
  CHECK(j["verification"]["overall"] == "pass");
}

TEST_CASE("an unbounded group degrades honestly") {
  PipelineOptions opts;
  opts.max_cosets = 500;
  auto report =
      run_pipeline(parse_group_presentation("gens a b\nrel a^2 = 1\n"), opts);

  CHECK(report.converted);
  CHECK(report.oracle_overflow);
  CHECK_FALSE(report.rees.has_value());
  REQUIRE(report.theorem.has_value());
  CHECK(report.theorem->presentations_match == CheckVerdict::Pass);
  CHECK(report.theorem->overall() == CheckVerdict::Unknown);
  CHECK(report.theorem->input_order == -1);

  Json j = pipeline_json(report);
  CHECK(j["word_problem_model"].is_null());
  CHECK(j["verification"]["orders"]["input"].is_null());
  CHECK(j["verification"]["overall"] == "unknown");

  bool noted = false;
  for (auto const& n : report.notes) {
    if (n.find("word-problem model was not built") != std::string::npos) {
      noted = true;
    }
  }
  CHECK(noted);
}

TEST_CASE("verification and the model can be switched off") {
  PipelineOptions opts;
  opts.run_verify = false;
  opts.run_rees = false;
  auto report = run_pipeline(parse_group_presentation("gens a\nrel a = 1\n"),
                             opts);
  CHECK_FALSE(report.theorem.has_value());
  CHECK_FALSE(report.rees.has_value());
  CHECK_FALSE(report.oracle_overflow);
}

TEST_CASE("raw band tables parse with full validation") {
  auto good = parse_band_table_text(
      R"({"n": 2, "table": [[0, 0], [1, 1]], "names": ["x", "y"]})");
  CHECK(good.n == 2);
  CHECK(good.table[1][0] == 1);
  CHECK(good.names == std::vector<std::string>{"x", "y"});

  auto unnamed = parse_band_table_text(R"({"n": 1, "table": [[0]]})");
  CHECK(unnamed.names.empty());

  CHECK_THROWS_AS(parse_band_table_text("not json"), Error);
  CHECK_THROWS_AS(parse_band_table_text(R"({"table": [[0]]})"), Error);
  CHECK_THROWS_AS(
      parse_band_table_text(R"({"n": 2, "table": [[0, 0]]})"), Error);
  CHECK_THROWS_AS(
      parse_band_table_text(R"({"n": 2, "table": [[0], [1, 1]]})"), Error);
  CHECK_THROWS_AS(
      parse_band_table_text(R"({"n": 2, "table": [[0, 3], [1, 1]]})"), Error);
  CHECK_THROWS_AS(
      parse_band_table_text(
          R"({"n": 2, "table": [[0, 0], [1, 1]], "names": ["x"]})"),
      Error);
  CHECK_THROWS_AS(parse_band_table_text(R"({"n": 0, "table": []})"), Error);
}

TEST_CASE("serializer spot checks") {
  auto report = run_pipeline(parse_group_presentation(kF23));

  Json simp = simplify_json(report.simplified, report.table);
  CHECK(simp["grid_table_text"] == render_grid_table(report.table));
  CHECK(simp["strategy"] == "paper");
  CHECK(simp["survivors"].size() == 3);

  auto enumeration = todd_coxeter(report.input);
  REQUIRE_FALSE(enumeration.overflow());
  Json table = coset_table_json(*enumeration.table);
  CHECK(table["cosets"] == 8);
  CHECK(table["generators"].size() == 3);
  CHECK(table["representatives"][0] == "1");
  CHECK(table["action"]["a"].size() == 8);
  CHECK(table["action"]["a^-1"].size() == 8);
}

TEST_SUITE_END();
