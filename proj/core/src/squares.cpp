#include "igband/squares.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "igband/error.hpp"

namespace igband {

std::string to_string(SquareKind k) {
  return k == SquareKind::LeftRight ? "left-right" : "up-down";
}

ActionMaps action_maps(Band const& b, GreenClasses const& g, int f,
                       DClassGrid const& grid) {
  if (f < 0 || f >= b.size) {
    throw Error("witness element out of range");
  }
  if (!g.strictly_below(grid.d_class, g.d_class[f])) {
    throw Error("witness does not lie strictly above the grid's class: "
                + b.labels[f].display(b.index_sets ? &*b.index_sets
                                                   : nullptr));
  }

  ActionMaps maps;
  maps.witness = f;
  maps.sigma.assign(grid.rows(), -1);
  maps.tau.assign(grid.cols(), -1);

  for (int r = 0; r < grid.rows(); ++r) {
    for (int c = 0; c < grid.cols(); ++c) {
      auto const [pr, pc] = grid.locate(b.mul(f, grid.cells[r][c]));
      if (pr < 0) {
        throw Error("left product escapes the grid's class");
      }
      if (pc != c) {
        throw Error("left action moved a column (non-band input?)");
      }
      if (maps.sigma[r] == -1) {
        maps.sigma[r] = pr;
      } else if (maps.sigma[r] != pr) {
        throw Error("inconsistent row reads (non-band input?)");
      }
    }
  }
  for (int c = 0; c < grid.cols(); ++c) {
    for (int r = 0; r < grid.rows(); ++r) {
      auto const [pr, pc] = grid.locate(b.mul(grid.cells[r][c], f));
      if (pr < 0) {
        throw Error("right product escapes the grid's class");
      }
      if (pr != r) {
        throw Error("right action moved a row (non-band input?)");
      }
      if (maps.tau[c] == -1) {
        maps.tau[c] = pc;
      } else if (maps.tau[c] != pc) {
        throw Error("inconsistent column reads (non-band input?)");
      }
    }
  }
  for (int r = 0; r < grid.rows(); ++r) {
    if (maps.sigma[maps.sigma[r]] != maps.sigma[r]) {
      throw Error("row action is not idempotent (non-band input?)");
    }
  }
  for (int c = 0; c < grid.cols(); ++c) {
    if (maps.tau[maps.tau[c]] != maps.tau[c]) {
      throw Error("column action is not idempotent (non-band input?)");
    }
  }
  return maps;
}

namespace {

// The two singularity conditions.  Both are invariant under swapping i with
// k and j with l, so checking the canonical orientation i < k, j < l covers
// all four orientations of the square.
bool left_right_condition(ActionMaps const& m, int i, int k, int j, int l) {
  return m.sigma[i] == i && m.sigma[k] == k && m.tau[j] == m.tau[l]
         && (m.tau[j] == j || m.tau[j] == l);
}

bool up_down_condition(ActionMaps const& m, int i, int k, int j, int l) {
  return m.sigma[i] == m.sigma[k] && (m.sigma[i] == i || m.sigma[i] == k)
         && m.tau[j] == j && m.tau[l] == l;
}

}  // namespace

std::vector<SingularSquare> singular_squares(Band const& b,
                                             GreenClasses const& g,
                                             DClassGrid const& grid) {
  std::map<std::tuple<int, int, int, int, SquareKind>, std::vector<int>>
      found;
  for (int f = 0; f < b.size; ++f) {
    if (!g.strictly_below(grid.d_class, g.d_class[f])) {
      continue;
    }
    ActionMaps const m = action_maps(b, g, f, grid);
    for (int i = 0; i < grid.rows(); ++i) {
      for (int k = i + 1; k < grid.rows(); ++k) {
        for (int j = 0; j < grid.cols(); ++j) {
          for (int l = j + 1; l < grid.cols(); ++l) {
            if (left_right_condition(m, i, k, j, l)) {
              found[{i, k, j, l, SquareKind::LeftRight}].push_back(f);
            }
            if (up_down_condition(m, i, k, j, l)) {
              found[{i, k, j, l, SquareKind::UpDown}].push_back(f);
            }
          }
        }
      }
    }
  }

  std::vector<SingularSquare> out;
  IndexSets const* sets = b.index_sets ? &*b.index_sets : nullptr;
  for (auto const& [key, witnesses] : found) {
    auto const [i, k, j, l, kind] = key;
    SingularSquare sq;
    sq.i = i;
    sq.k = k;
    sq.j = j;
    sq.l = l;
    sq.kind = kind;
    sq.witnesses = witnesses;
    for (int w : witnesses) {
      sq.witness_labels.push_back(b.labels[w].display(sets));
    }
    out.push_back(std::move(sq));
  }
  std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
    return std::tie(x.i, x.k, x.j, x.l, x.kind)
           < std::tie(y.i, y.k, y.j, y.l, y.kind);
  });
  return out;
}

bool is_singular_square_oracle(Band const& b, GreenClasses const& g,
                               DClassGrid const& grid, int i, int k, int j,
                               int l) {
  if (i == k || j == l) {
    throw Error("degenerate square: rows and columns must be distinct");
  }
  if (i < 0 || k < 0 || j < 0 || l < 0 || i >= grid.rows() || k >= grid.rows()
      || j >= grid.cols() || l >= grid.cols()) {
    throw Error("square indices out of range");
  }
  for (int f = 0; f < b.size; ++f) {
    if (!g.strictly_below(grid.d_class, g.d_class[f])) {
      continue;
    }
    // Four direct reads, no shared action-map machinery.
    auto row_of = [&](int e) { return grid.locate(e).first; };
    auto col_of = [&](int e) { return grid.locate(e).second; };
    int const si = row_of(b.mul(f, grid.cells[i][j]));
    int const sk = row_of(b.mul(f, grid.cells[k][j]));
    int const tj = col_of(b.mul(grid.cells[i][j], f));
    int const tl = col_of(b.mul(grid.cells[i][l], f));
    bool const left_right =
        si == i && sk == k && tj == tl && (tj == j || tj == l);
    bool const up_down = si == sk && (si == i || si == k) && tj == j
                         && tl == l;
    if (left_right || up_down) {
      return true;
    }
  }
  return false;
}

}  // namespace igband
