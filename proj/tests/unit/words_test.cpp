#include "doctest.h"

#include "igband/word.hpp"

using namespace igband;

TEST_SUITE_BEGIN("words");

TEST_CASE("make_word expands powers into atomic letters") {
  Word w = make_word({{"a", 3}, {"b", -2}});
  REQUIRE(w.size() == 5);
  for (int i = 0; i < 3; ++i) {
    CHECK(w[i] == Letter{"a", 1});
  }
  for (int i = 3; i < 5; ++i) {
    CHECK(w[i] == Letter{"b", -1});
  }
}

TEST_CASE("word_to_string compresses runs") {
  CHECK(word_to_string(make_word({{"a", 3}})) == "a^3");
  CHECK(word_to_string(make_word({{"a", 1}, {"b", -2}, {"a", 1}})) ==
        "a*b^-2*a");
  CHECK(word_to_string({}) == "1");
  CHECK(word_to_string(make_word({{"a", -1}})) == "a^-1");
}

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
  Word w = make_word({{"a", 1}, {"b", 1}, {"b", -1}, {"a", -1}, {"c", 1}});
  CHECK(free_reduce(w) == make_word({{"c", 1}}));
  CHECK(free_reduce(make_word({{"a", 1}, {"a", -1}})).empty());
  // Cancellation cascades through the gap left by an inner pair.
  Word nested = make_word({{"a", 1}, {"b", 1}, {"b", -1}, {"a", -1}});
  CHECK(free_reduce(nested).empty());
}

TEST_CASE("cyclic_reduce trims matching ends") {
  Word w = make_word({{"a", -1}, {"b", 1}, {"c", 1}, {"a", 1}});
  CHECK(cyclic_reduce(free_reduce(w)) == make_word({{"b", 1}, {"c", 1}}));
}

TEST_CASE("inverse reverses and flips") {
  Word w = make_word({{"a", 1}, {"b", -1}});
  CHECK(inverse(w) == make_word({{"b", 1}, {"a", -1}}));
  CHECK(free_reduce(concat(w, inverse(w))).empty());
}

TEST_CASE("substitute replaces every occurrence, respecting sign") {
  Word w = make_word({{"x", 1}, {"y", 1}, {"x", -1}});
  Word image = make_word({{"a", 1}, {"b", 1}});
  Word out = substitute(w, "x", image);
  CHECK(out == make_word({{"a", 1}, {"b", 1}, {"y", 1}, {"b", -1}, {"a", -1}}));
  CHECK(substitute(w, "z", image) == w);
}

TEST_CASE("contains_generator sees both signs") {
  Word w = make_word({{"a", 1}, {"b", -1}});
  CHECK(contains_generator(w, "a"));
  CHECK(contains_generator(w, "b"));
  CHECK_FALSE(contains_generator(w, "c"));
}

TEST_CASE("canonical_relator is invariant under rotation and inversion") {
  Word w = make_word({{"a", 1}, {"b", 1}, {"c", -1}});
  Word rotated = make_word({{"b", 1}, {"c", -1}, {"a", 1}});
  Word inverted = inverse(w);
  CHECK(canonical_relator(w) == canonical_relator(rotated));
  CHECK(canonical_relator(w) == canonical_relator(inverted));
  // Conjugates reduce to the same canonical form.
  Word conjugate = free_reduce(
      concat(concat(make_word({{"d", 1}}), w), make_word({{"d", -1}})));
  CHECK(canonical_relator(w) == canonical_relator(conjugate));
}

TEST_CASE("canonical_relator of a trivial word is empty") {
  CHECK(canonical_relator({}).empty());
  CHECK(canonical_relator(make_word({{"a", 1}, {"a", -1}})).empty());
}

TEST_SUITE_END();
