#include "doctest.h"

#include <set>

#include "common/builders.hpp"
#include "igband/coset_table.hpp"
#include "igband/error.hpp"
#include "igband/presentation.hpp"

using namespace igband;

TEST_SUITE_BEGIN("presentations");

TEST_CASE("parser reads the line grammar") {
  auto p = parse_group_presentation(
      "# quaternion flavoured\n"
      "gens a b c\n"
      "rel a*b = c\n"
      "rel b*c = a\n"
      "rel c*a = b\n");
  REQUIRE(p.generators.size() == 3);
  CHECK(p.generators[0].name == "a");
  REQUIRE(p.relations.size() == 3);
  CHECK(word_to_string(p.relations[0].lhs) == "a*b");
  CHECK(word_to_string(p.relations[0].rhs) == "c");
}

TEST_CASE("parser expands powers and accepts 1 as the empty word") {
  auto p = parse_group_presentation("gens a\nrel a^4 = 1\n");
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].lhs == make_word({{"a", 4}}));
  CHECK(p.relations[0].rhs.empty());
  for (auto const& l : p.relations[0].lhs) CHECK(l.exp == 1);
}

TEST_CASE("parser reports positions and causes") {
  auto expect_throw = [](std::string const& text, int line) {
    try {
      parse_group_presentation(text);
      FAIL("expected a parse error for: " << text);
    } catch (ParseError const& e) {
      CHECK(e.line == line);
    }
  };
  expect_throw("gens a\nrel b = 1\n", 2);       // undeclared generator
  expect_throw("gens a a\n", 1);                // duplicate generator
  expect_throw("gens inf\n", 1);                // reserved name
  expect_throw("gens 0\n", 1);                  // reserved name
  expect_throw("gens a\nrel a == 1\n", 2);      // malformed equation
  expect_throw("rel a = 1\n", 1);               // relation before gens
  expect_throw("gens a\nbogus a\n", 2);         // unknown directive
}

TEST_CASE("render and parse round-trip") {
  auto p = parse_group_presentation("gens a b\nrel a^2*b^-1 = 1\nrel b^3 = a\n");
  auto q = parse_group_presentation(render_presentation(p));
  REQUIRE(q.relations.size() == p.relations.size());
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    CHECK(q.relations[i].lhs == p.relations[i].lhs);
    CHECK(q.relations[i].rhs == p.relations[i].rhs);
  }
}

TEST_CASE("triple-form input is returned unchanged") {
  auto p = parse_group_presentation(
      "gens a b c\nrel a*b = c\nrel b*c = a\nrel c*a = b\n");
  auto conv = to_cayley_form(p);
  CHECK(render_presentation(conv.presentation) == render_presentation(p));
  CHECK(conv.presentation.relations.size() == 3);
}

TEST_CASE("free presentations stay free of triples") {
  auto p = parse_group_presentation("gens a b\n");
  auto conv = to_cayley_form(p);
  CHECK(conv.presentation.relations.empty());
  CHECK(conv.presentation.generators.size() == 2);
}

TEST_CASE("a power relator is chain-split through fresh generators") {
  auto p = parse_group_presentation("gens a\nrel a^4 = 1\n");
  auto conv = to_cayley_form(p);
  std::set<std::string> names;
  for (auto const& g : conv.presentation.generators) names.insert(g.name);
  CHECK(names.count("a") == 1);
  CHECK(names.count("u") == 1);  // adjoined identity
  CHECK(conv.presentation.generators.size() == 4);  // a, u, two chain links
  // Conversion preserves the group: both present Z4.
  auto before = todd_coxeter(p);
  auto after = todd_coxeter(conv.presentation.to_group_presentation());
  REQUIRE_FALSE(before.overflow());
  REQUIRE_FALSE(after.overflow());
  CHECK(before.table->n == 4);
  CHECK(after.table->n == 4);
}

TEST_CASE("inverse letters go through formal inverse generators") {
  auto p = parse_group_presentation("gens a b\nrel a*b^-1 = 1\nrel a^3 = 1\n");
  auto conv = to_cayley_form(p);
  bool has_inverse_gen = false;
  for (auto const& g : conv.presentation.generators) {
    if (g.name.find("_inv") != std::string::npos) has_inverse_gen = true;
  }
  CHECK(has_inverse_gen);
  auto before = todd_coxeter(p);
  auto after = todd_coxeter(conv.presentation.to_group_presentation());
  REQUIRE_FALSE(before.overflow());
  REQUIRE_FALSE(after.overflow());
  CHECK(before.table->n == 3);
  CHECK(after.table->n == 3);
}

TEST_CASE("conversion preserves group order across shapes") {
  struct Sample {
    char const* text;
    int order;
  };
  Sample samples[] = {
      {"gens a\nrel a^5 = 1\n", 5},
      {"gens r s\nrel r^3 = 1\nrel s^2 = 1\nrel r*s*r*s = 1\n", 6},
      {"gens x y\nrel x^2 = y\nrel y^2 = 1\n", 4},
  };
  for (auto const& s : samples) {
    auto p = parse_group_presentation(s.text);
    auto conv = to_cayley_form(p);
    auto r = todd_coxeter(conv.presentation.to_group_presentation());
    REQUIRE_FALSE(r.overflow());
    CHECK(r.table->n == s.order);
  }
}

TEST_CASE("validate_cayley_form flags duplicates as warnings") {
  CayleyFormPresentation p;
  p.generators = {igband_tests::gen("a"), igband_tests::gen("b")};
  p.relations = {{"a", "a", "b"}, {"a", "a", "b"}};
  auto issues = validate_cayley_form(p);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].severity == CayleyViolation::Severity::Warning);
  auto deduped = dedup_triples(p);
  CHECK(deduped.relations.size() == 1);
}

TEST_CASE("validate rejects undeclared generators in relations") {
  GroupPresentation p;
  p.generators = {igband_tests::gen("a")};
  p.relations.push_back(Relation{make_word({{"a", 1}, {"z", 1}}), {}});
  CHECK_THROWS_AS(p.validate(), Error);
}

TEST_SUITE_END();
