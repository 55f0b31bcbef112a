#ifndef IGBAND_COSET_TABLE_HPP
#define IGBAND_COSET_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "igband/presentation.hpp"

namespace igband {

// A complete coset table for the trivial subgroup: the right regular action
// of the presented group on itself.  Cosets are numbered 0..n-1 with coset 0
// the subgroup coset; the table is standardized, so it depends only on the
// presented group and the generator order, not on the relator order or the
// enumeration history.
struct CosetTable {
  std::vector<std::string> generators;
  int n = 0;
  // action[2*g][c] is c * g, action[2*g + 1][c] is c * g^-1.
  std::vector<std::vector<int>> action;
  // Canonical representative of each coset: the first word reaching it in a
  // breadth-first scan that tries positive letters in declaration order and
  // then the inverses.  Minimal length, deterministic.
  std::vector<Word> reps;

  int apply(int coset, Letter const& l) const;
  // -1 when the word mentions a generator outside the table.
  int trace(int coset, Word const& w) const;
};

struct EnumerationResult {
  std::optional<CosetTable> table;  // empty on overflow
  long long cosets_defined = 0;
  int max_cosets = 0;

  bool overflow() const { return !table.has_value(); }
};

// Coset enumeration over the trivial subgroup, relator-cycling style: each
// live coset is scanned against every relator in turn, gaps are filled by
// defining the lowest-numbered fresh coset, and the finished table is
// compressed and standardized.  Enumeration gives up once max_cosets cosets
// have been defined (alive or dead); an overflow result means "unknown at
// this limit", never "infinite".
EnumerationResult todd_coxeter(GroupPresentation const& p,
                               int max_cosets = 100000);

}  // namespace igband

#endif  // IGBAND_COSET_TABLE_HPP
