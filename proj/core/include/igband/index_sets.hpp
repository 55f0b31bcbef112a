#ifndef IGBAND_INDEX_SETS_HPP
#define IGBAND_INDEX_SETS_HPP

#include <string>
#include <vector>

#include "igband/presentation.hpp"

namespace igband {

// A row or column index of the band built from a Cayley-form presentation
// with generator set A.  Rows are indexed by A u {0} together with a primed
// copy of it, columns by A u {0} and one extra symbol inf.  These live in a
// namespace of their own: a generator named "0" or "inf" is rejected by the
// presentation layer.
struct IndexSymbol {
  enum class Base { Zero, Gen, Infinity };
  Base base = Base::Zero;
  std::string gen;     // Base::Gen only
  bool primed = false; // never set for Infinity

  // Identifier-safe form: "0", "a", "0p", "ap", "inf".
  std::string token() const;
  // Human form: "0", "a", "0'", "a'", "inf".
  std::string display() const;

  friend bool operator==(IndexSymbol const&, IndexSymbol const&) = default;
};

// Row set I (size 2|A|+2) ordered as 0, A in declaration order, then the
// primed copies in the same order; column set J (size |A|+2) ordered as 0, A,
// inf.
struct IndexSets {
  std::vector<IndexSymbol> I;
  std::vector<IndexSymbol> J;
  int n_gens = 0;

  static IndexSets from_generators(std::vector<GenSymbol> const& gens);

  int a0_size() const { return n_gens + 1; }

  // Positions within I.
  int row_zero() const { return 0; }
  int row_gen(int g) const { return 1 + g; }
  int row_zero_primed() const { return a0_size(); }
  int row_gen_primed(int g) const { return a0_size() + 1 + g; }
  bool row_is_primed(int i) const { return i >= a0_size(); }
  // Maps a row to its primed/unprimed partner.
  int row_partner(int i) const {
    return row_is_primed(i) ? i - a0_size() : i + a0_size();
  }

  // Positions within J.
  int col_zero() const { return 0; }
  int col_gen(int g) const { return 1 + g; }
  int col_inf() const { return n_gens + 1; }

  // -1 when not found.
  int find_row(std::string const& token_or_display) const;
  int find_col(std::string const& token_or_display) const;
};

}  // namespace igband

#endif  // IGBAND_INDEX_SETS_HPP
