#ifndef IGBAND_WORD_HPP
#define IGBAND_WORD_HPP

#include <string>
#include <vector>

namespace igband {

// A single letter of a group word: a generator name together with an
// exponent, which is always +1 or -1.  Powers are expanded at parse time, so
// a word of length n holds exactly n letters.
struct Letter {
  std::string gen;
  int exp = 1;

  friend bool operator==(Letter const& x, Letter const& y) {
    return x.exp == y.exp && x.gen == y.gen;
  }
  friend auto operator<=>(Letter const& x, Letter const& y) = default;
};

using Word = std::vector<Letter>;

inline Letter inverse(Letter const& l) { return Letter{l.gen, -l.exp}; }

// Reverses the word and inverts every letter.
Word inverse(Word const& w);

Word concat(Word const& x, Word const& y);

// Cancels adjacent inverse pairs until none remain.  Idempotent, and never
// increases the length.
Word free_reduce(Word const& w);

// Removes a conjugating prefix/suffix pair (w must already be freely
// reduced).  Used when comparing relators up to cyclic rotation.
Word cyclic_reduce(Word const& w);

// Replaces every occurrence of the generator `gen` (in either exponent) by
// `image` (inverted as needed).  The result is not freely reduced.
Word substitute(Word const& w, std::string const& gen, Word const& image);

bool contains_generator(Word const& w, std::string const& gen);

// Least word, lexicographically by (name, exponent), among all cyclic
// rotations of w and of its inverse.  Canonical key for relator equality.
Word canonical_relator(Word const& w);

// Renders a word in the presentation grammar: letters joined by '*', runs of
// a repeated letter compressed to powers, the empty word printed as "1".
std::string word_to_string(Word const& w);

// Builds a word from (name, exponent) pairs; exponents of larger magnitude
// are expanded into single letters.
Word make_word(std::vector<std::pair<std::string, int>> const& letters);

}  // namespace igband

#endif  // IGBAND_WORD_HPP
