#ifndef IGBAND_GREEN_HPP
#define IGBAND_GREEN_HPP

#include <string>
#include <vector>

#include "igband/band.hpp"

namespace igband {

// Green's relations of a finite band, computed from the multiplication
// table: x R y iff xy = y and yx = x, x L y iff xy = x and yx = y, and D is
// the join of R and L.  The D-classes form a semilattice: the class of xy
// depends only on the classes of x and y and is their meet.
struct GreenClasses {
  std::vector<int> r_class;  // per element
  std::vector<int> l_class;
  std::vector<int> d_class;
  int n_r = 0;
  int n_l = 0;
  int n_d = 0;
  std::vector<std::vector<int>> d_members;
  std::vector<int> d_meet;  // n_d x n_d, row-major

  int meet(int da, int db) const { return d_meet[da * n_d + db]; }
  // Partial order: da <= db iff meet(da, db) == da.
  bool leq(int da, int db) const { return meet(da, db) == da; }
  bool strictly_below(int da, int db) const {
    return da != db && leq(da, db);
  }
};

// Throws Error when b fails the band axioms.
GreenClasses green_classes(Band const& b);

// The egg-box picture of one D-class: rows are its R-classes, columns its
// L-classes, and every cell holds the unique idempotent in the
// intersection.  The base element sits at cell (0, 0).  For the minimal
// ideal of a presentation band with base K(0,0), rows and columns follow the
// index-set order and are labelled by index symbols; otherwise rows and
// columns are ordered base first, then by least element index.
struct DClassGrid {
  int d_class = -1;
  std::vector<std::vector<int>> cells;  // [row][col] -> element
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  int rows() const { return static_cast<int>(cells.size()); }
  int cols() const {
    return cells.empty() ? 0 : static_cast<int>(cells.front().size());
  }
  // Position of an element within the grid; (-1, -1) when absent.
  std::pair<int, int> locate(int element) const;
};

DClassGrid dclass_grid(Band const& b, GreenClasses const& g, int base);

}  // namespace igband

#endif  // IGBAND_GREEN_HPP
