#ifndef IGBAND_IG_PRESENTATION_HPP
#define IGBAND_IG_PRESENTATION_HPP

#include <string>
#include <vector>

#include "igband/band.hpp"
#include "igband/green.hpp"
#include "igband/presentation.hpp"
#include "igband/squares.hpp"

namespace igband {

// Defining presentation of the free idempotent generated semigroup over a
// band: one generator per element, one relation x y = xy for every ordered
// basic pair, where (x, y) is basic when xy or yx equals x or y.
struct BandPresentation {
  std::vector<std::string> generators;  // token label per band element
  std::vector<Relation> relations;
};

BandPresentation ig_presentation(Band const& b);

// Presentation of the maximal subgroup at the base cell of a D-class grid:
// one generator per cell, the base row and base column set to the identity,
// and one relation per singular square equating its two column transports.
struct IgPresentation {
  // generators[g] is the grid cell of generator g; gen id = row * cols + col.
  struct Cell {
    int row = 0;
    int col = 0;
  };
  std::vector<Cell> generators;
  std::vector<std::string> gen_names;
  std::vector<Relation> relations;
  // Index into squares of the square that produced each relation, -1 for
  // the base row/column relations.
  std::vector<int> relation_square;
  std::vector<SingularSquare> squares;
  // Least witness of each square, as a structured label.  Simplification
  // uses these to recognize relations tied to the relation layer of a band
  // built from a group presentation.
  std::vector<ElementLabel> square_witness;
  int base_row = 0;
  int base_col = 0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  // True when the grid rows and columns are the index sets of a band built
  // from a group presentation, in their natural order.
  bool structured = false;

  int rows() const { return static_cast<int>(row_labels.size()); }
  int cols() const { return static_cast<int>(col_labels.size()); }
  int gen_at(int row, int col) const { return row * cols() + col; }

  GroupPresentation to_group_presentation() const;
};

IgPresentation maximal_subgroup_presentation(
    Band const& b, GreenClasses const& g, DClassGrid const& grid,
    std::vector<SingularSquare> const& squares);

}  // namespace igband

#endif  // IGBAND_IG_PRESENTATION_HPP
