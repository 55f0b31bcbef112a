#ifndef IGBAND_SQUARES_HPP
#define IGBAND_SQUARES_HPP

#include <string>
#include <vector>

#include "igband/green.hpp"

namespace igband {

// How an element f strictly above a D-class acts on the rows and columns of
// that class's grid: sigma(r) is the row of f * cell(r, c) (the same for
// every c), tau(c) the column of cell(r, c) * f.  Both maps are idempotent.
struct ActionMaps {
  int witness = -1;
  std::vector<int> sigma;  // over grid rows
  std::vector<int> tau;    // over grid columns
};

// Throws Error when f does not lie strictly above the grid's class or the
// reads are inconsistent (which signals a non-band input).
ActionMaps action_maps(Band const& b, GreenClasses const& g, int f,
                       DClassGrid const& grid);

enum class SquareKind { LeftRight, UpDown };

std::string to_string(SquareKind k);

// A singular square of the grid: rows i < k, columns j < l, such that some
// witness f above the class either fixes both rows and collapses the two
// columns onto one of them (left-right), or fixes both columns and
// collapses the rows (up-down).  Witnesses with the same geometry and kind
// are merged.
struct SingularSquare {
  int i, k;  // grid rows, i < k
  int j, l;  // grid columns, j < l
  SquareKind kind;
  std::vector<int> witnesses;                // element indices, ascending
  std::vector<std::string> witness_labels;   // display labels, same order
};

// All singular squares of the grid, ordered by (i, k, j, l, kind).
std::vector<SingularSquare> singular_squares(Band const& b,
                                             GreenClasses const& g,
                                             DClassGrid const& grid);

// Decides singularity of one square from first principles: scans every
// element above the class and recomputes the four action values by direct
// multiplication.  Used to cross-check the enumeration.  Throws Error on a
// degenerate square (i == k or j == l).
bool is_singular_square_oracle(Band const& b, GreenClasses const& g,
                               DClassGrid const& grid, int i, int k, int j,
                               int l);

}  // namespace igband

#endif  // IGBAND_SQUARES_HPP
