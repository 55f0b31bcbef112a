#include "doctest.h"

#include <algorithm>
#include <random>

#include "common/builders.hpp"
#include "igband/coset_table.hpp"
#include "igband/error.hpp"
#include "igband/green.hpp"
#include "igband/group_oracle.hpp"
#include "igband/ig_presentation.hpp"
#include "igband/presentation.hpp"
#include "igband/squares.hpp"
#include "igband/tietze.hpp"
#include "igband/verify.hpp"

using namespace igband;

namespace {

std::string const kS3 = "gens r s\nrel r^3 = 1\nrel s^2 = 1\nrel r*s*r*s = 1\n";
std::string const kF23 = "gens a b c\nrel a*b = c\nrel b*c = a\nrel c*a = b\n";

int order_of(std::string const& text) {
  auto r = todd_coxeter(parse_group_presentation(text));
  REQUIRE_FALSE(r.overflow());
  return r.table->n;
}

}  // namespace

TEST_SUITE_BEGIN("group_engine");

TEST_CASE("enumeration pins the orders of small groups") {
  CHECK(order_of("") == 1);
  CHECK(order_of("gens a\nrel a = 1\n") == 1);
  CHECK(order_of("gens a\nrel a^4 = 1\n") == 4);
  CHECK(order_of(kS3) == 6);
  CHECK(order_of(kF23) == 8);
  CHECK(order_of("gens a b\nrel a^2 = 1\nrel b^2 = 1\nrel a*b*a*b = 1\n") == 4);
}

TEST_CASE("a Cayley-table presentation presents the tabulated group") {
  auto table = igband_tests::cyclic(3);
  auto p = igband_tests::cayley_table_presentation(table);
  auto r = todd_coxeter(p);
  REQUIRE_FALSE(r.overflow());
  CHECK(r.table->n == 3);

  // Cross-check multiplication against the table itself: the oracle's
  // product of g_i and g_j must be the canonical form of g_{t[i][j]}.
  auto built = build_group_oracle(p);
  REQUIRE_FALSE(built.overflow());
  auto const& oracle = *built.oracle;
  CHECK(oracle.order() == 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Word gi = make_word({{p.generators[i].name, 1}});
      Word gj = make_word({{p.generators[j].name, 1}});
      Word product = oracle.multiply(gi, gj);
      Word expected =
          oracle.canonical(make_word({{p.generators[table[i][j]].name, 1}}));
      CHECK(product == expected);
    }
  }
}

TEST_CASE("the standardized table does not depend on relator order") {
  for (auto const* text : {kS3.c_str(), kF23.c_str()}) {
    auto p = parse_group_presentation(text);
    auto reference = todd_coxeter(p);
    REQUIRE_FALSE(reference.overflow());
    std::mt19937 rng(7);
    for (int round = 0; round < 5; ++round) {
      auto shuffled = p;
      std::shuffle(shuffled.relations.begin(), shuffled.relations.end(), rng);
      auto r = todd_coxeter(shuffled);
      REQUIRE_FALSE(r.overflow());
      CHECK(r.table->action == reference.table->action);
      CHECK(r.table->reps == reference.table->reps);
    }
  }
}

TEST_CASE("representatives come from a breadth-first scan") {
  auto r = todd_coxeter(parse_group_presentation("gens a\nrel a^4 = 1\n"));
  REQUIRE_FALSE(r.overflow());
  auto const& t = *r.table;
  REQUIRE(t.n == 4);
  CHECK(word_to_string(t.reps[0]) == "1");
  CHECK(word_to_string(t.reps[1]) == "a");
  CHECK(word_to_string(t.reps[2]) == "a^-1");
  CHECK(word_to_string(t.reps[3]) == "a^2");
  // The table acts on the right: coset of w, then letter.
  CHECK(t.apply(0, Letter{"a", 1}) == 1);
  CHECK(t.apply(1, Letter{"a", 1}) == 3);
  CHECK(t.trace(0, make_word({{"a", 2}})) == 3);
  CHECK(t.trace(0, make_word({{"a", 4}})) == 0);
  CHECK(t.trace(0, make_word({{"z", 1}})) == -1);
  // Every representative traces from the base coset to its own index.
  for (int c = 0; c < t.n; ++c) CHECK(t.trace(0, t.reps[c]) == c);
}

TEST_CASE("enumeration reports unknown at the limit instead of guessing") {
  auto free_rank1 = todd_coxeter(parse_group_presentation("gens a\n"), 500);
  CHECK(free_rank1.overflow());
  CHECK(free_rank1.cosets_defined <= 500);

  auto infinite =
      todd_coxeter(parse_group_presentation("gens a b\nrel a^2 = 1\n"), 1000);
  CHECK(infinite.overflow());
  CHECK(infinite.max_cosets == 1000);
}

TEST_CASE("oracle over a finite group") {
  auto built =
      build_group_oracle(parse_group_presentation("gens a\nrel a^4 = 1\n"));
  REQUIRE_FALSE(built.overflow());
  auto const& o = *built.oracle;
  CHECK(o.finite());
  CHECK(o.order() == 4);
  CHECK(o.elements().size() == 4);
  CHECK(o.elements()[0].empty());

  Word w = make_word({{"a", 5}});
  CHECK(word_to_string(o.canonical(w)) == "a");
  CHECK(o.canonical(o.canonical(w)) == o.canonical(w));
  CHECK(o.is_identity(make_word({{"a", 4}})));
  CHECK(o.equal(make_word({{"a", -1}}), make_word({{"a", 3}})));
  CHECK(o.is_identity(o.multiply(w, o.invert(w))));
  for (int i = 0; i < 4; ++i) CHECK(o.element_index(o.elements()[i]) == i);
}

TEST_CASE("oracle over a free group skips enumeration") {
  auto built = build_group_oracle(parse_group_presentation("gens a b\n"));
  REQUIRE_FALSE(built.overflow());
  auto const& o = *built.oracle;
  CHECK(o.mode() == GroupOracle::Mode::Free);
  CHECK_FALSE(o.finite());
  CHECK(o.canonical(make_word({{"a", 1}, {"b", 1}, {"b", -1}})) ==
        make_word({{"a", 1}}));
  CHECK(o.is_identity(make_word({{"a", 1}, {"a", -1}})));
  CHECK_THROWS_AS(o.order(), Error);

  // Relators that reduce away still count as free.
  auto degenerate = build_group_oracle(
      parse_group_presentation("gens a\nrel a*a^-1 = 1\n"));
  REQUIRE_FALSE(degenerate.overflow());
  CHECK(degenerate.oracle->mode() == GroupOracle::Mode::Free);

  // The empty presentation is the trivial group, enumerated directly.
  auto trivial = build_group_oracle(parse_group_presentation(""));
  REQUIRE_FALSE(trivial.overflow());
  CHECK(trivial.oracle->finite());
  CHECK(trivial.oracle->order() == 1);
}

TEST_CASE("homomorphism checking") {
  auto s3 = parse_group_presentation(kS3);
  auto z2 = parse_group_presentation("gens x\nrel x^2 = 1\n");

  GenMap sign = {{"r", {}}, {"s", make_word({{"x", 1}})}};
  auto ok = verify_homomorphism(s3, z2, sign);
  CHECK(ok.verdict == CheckVerdict::Pass);

  GenMap broken = {{"r", make_word({{"x", 1}})}, {"s", make_word({{"x", 1}})}};
  CHECK(verify_homomorphism(s3, z2, broken).verdict == CheckVerdict::Fail);

  GenMap partial = {{"r", {}}};
  CHECK(verify_homomorphism(s3, z2, partial).verdict == CheckVerdict::Fail);

  auto infinite = parse_group_presentation("gens a b\nrel a^2 = 1\n");
  GenMap into = {{"r", {}}, {"s", make_word({{"a", 1}})}};
  CHECK(verify_homomorphism(s3, infinite, into, 1000).verdict ==
        CheckVerdict::Unknown);
}

TEST_CASE("the theorem report fails honestly on a mismatch") {
  auto p = parse_group_presentation(kF23);
  Band b = build_band(to_cayley_form(p).presentation);
  GreenClasses g = green_classes(b);
  DClassGrid grid = dclass_grid(b, g, b.constant_element(0, 0));
  auto squares = singular_squares(b, g, grid);
  IgPresentation ig = maximal_subgroup_presentation(b, g, grid, squares);
  SimplifyResult r = simplify(ig);

  auto report = verify_theorem(p, ig, r);
  CHECK(report.presentations_match == CheckVerdict::Pass);
  CHECK(report.overall() == CheckVerdict::Pass);
  CHECK(report.input_order == 8);
  CHECK(report.subgroup_order == 8);
  CHECK(report.simplified_order == 8);

  auto other = parse_group_presentation("gens a b c\nrel a*b = c\n");
  auto mismatch = verify_theorem(other, ig, r);
  CHECK(mismatch.presentations_match == CheckVerdict::Fail);
  CHECK(mismatch.overall() == CheckVerdict::Fail);
}

TEST_SUITE_END();
