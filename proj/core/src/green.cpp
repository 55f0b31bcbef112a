#include "igband/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "igband/error.hpp"

namespace igband {

namespace {

// Union-find over element indices.
struct Partition {
  std::vector<int> parent;

  explicit Partition(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void join(int x, int y) { parent[find(x)] = find(y); }

  // Numbers the classes 0..k-1 in order of least member.
  std::vector<int> number(int& count) {
    std::map<int, int> ids;
    std::vector<int> out(parent.size());
    for (size_t e = 0; e < parent.size(); ++e) {
      int const root = find(static_cast<int>(e));
      auto const [it, fresh] = ids.emplace(root, static_cast<int>(ids.size()));
      out[e] = it->second;
      (void)fresh;
    }
    count = static_cast<int>(ids.size());
    return out;
  }
};

}  // namespace

GreenClasses green_classes(Band const& b) {
  if (auto const check = is_band(b); !check.ok()) {
    throw Error("input is not a band: " + check.message());
  }

  int const n = b.size;
  Partition r(n), l(n), d(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      int const xy = b.mul(x, y);
      int const yx = b.mul(y, x);
      if (xy == y && yx == x) {
        r.join(x, y);
        d.join(x, y);
      }
      if (xy == x && yx == y) {
        l.join(x, y);
        d.join(x, y);
      }
    }
  }

  GreenClasses g;
  g.r_class = r.number(g.n_r);
  g.l_class = l.number(g.n_l);
  g.d_class = d.number(g.n_d);
  g.d_members.resize(g.n_d);
  for (int e = 0; e < n; ++e) {
    g.d_members[g.d_class[e]].push_back(e);
  }

  // The product of representatives lands in the meet class; the result is
  // independent of the choice because the quotient by D is a semilattice.
  g.d_meet.assign(static_cast<size_t>(g.n_d) * g.n_d, -1);
  for (int da = 0; da < g.n_d; ++da) {
    for (int db = 0; db < g.n_d; ++db) {
      int const x = g.d_members[da].front();
      int const y = g.d_members[db].front();
      g.d_meet[da * g.n_d + db] = g.d_class[b.mul(x, y)];
    }
  }
  return g;
}

std::pair<int, int> DClassGrid::locate(int element) const {
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < cols(); ++c) {
      if (cells[r][c] == element) {
        return {r, c};
      }
    }
  }
  return {-1, -1};
}

DClassGrid dclass_grid(Band const& b, GreenClasses const& g, int base) {
  if (base < 0 || base >= b.size) {
    throw Error("base element out of range");
  }
  DClassGrid grid;
  grid.d_class = g.d_class[base];
  auto const& members = g.d_members[grid.d_class];

  // Collect the R- and L-classes present in this D-class, ordered base
  // first then by least member.
  std::vector<int> row_ids, col_ids;
  std::vector<int> row_min, col_min;
  for (int e : members) {
    if (std::find(row_ids.begin(), row_ids.end(), g.r_class[e])
        == row_ids.end()) {
      row_ids.push_back(g.r_class[e]);
      row_min.push_back(e);
    }
    if (std::find(col_ids.begin(), col_ids.end(), g.l_class[e])
        == col_ids.end()) {
      col_ids.push_back(g.l_class[e]);
      col_min.push_back(e);
    }
  }
  auto order = [](std::vector<int>& ids, std::vector<int>& mins, int first) {
    std::vector<size_t> perm(ids.size());
    std::iota(perm.begin(), perm.end(), size_t{0});
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t c) {
      bool const fa = ids[a] == first;
      bool const fc = ids[c] == first;
      if (fa != fc) {
        return fa;
      }
      return mins[a] < mins[c];
    });
    std::vector<int> ids2, mins2;
    for (size_t k : perm) {
      ids2.push_back(ids[k]);
      mins2.push_back(mins[k]);
    }
    ids = ids2;
    mins = mins2;
  };
  order(row_ids, row_min, g.r_class[base]);
  order(col_ids, col_min, g.l_class[base]);

  grid.cells.assign(row_ids.size(), std::vector<int>(col_ids.size(), -1));
  for (int e : members) {
    auto const r = std::find(row_ids.begin(), row_ids.end(), g.r_class[e])
                   - row_ids.begin();
    auto const c = std::find(col_ids.begin(), col_ids.end(), g.l_class[e])
                   - col_ids.begin();
    if (grid.cells[r][c] != -1) {
      throw Error("two elements share an R-class and an L-class");
    }
    grid.cells[r][c] = e;
  }
  for (auto const& row : grid.cells) {
    for (int cell : row) {
      if (cell < 0) {
        throw Error("D-class is not a full rectangle");
      }
    }
  }

  // Labelling.  The minimal ideal of a presentation band based at K(0,0)
  // keeps its index-set labels; everything else gets positional labels.
  bool index_labelled = false;
  if (b.index_sets) {
    if (b.labels[base].kind == ElementLabel::Kind::Constant) {
      IndexSets const& s = *b.index_sets;
      if (grid.rows() == static_cast<int>(s.I.size())
          && grid.cols() == static_cast<int>(s.J.size())) {
        // Rows of constant pairs are ordered by their row index because the
        // base-first rule coincides with index order for base K(0,0).
        std::vector<std::vector<int>> cells(grid.rows(),
                                            std::vector<int>(grid.cols()));
        bool coherent = true;
        for (int e : members) {
          auto const& l = b.labels[e];
          if (l.kind != ElementLabel::Kind::Constant) {
            coherent = false;
            break;
          }
          cells[l.row][l.col] = e;
        }
        if (coherent && b.labels[base].row == 0 && b.labels[base].col == 0) {
          grid.cells = cells;
          for (auto const& sym : s.I) {
            grid.row_labels.push_back(sym.display());
          }
          for (auto const& sym : s.J) {
            grid.col_labels.push_back(sym.display());
          }
          index_labelled = true;
        }
      }
    }
  }
  if (!index_labelled) {
    for (int r = 0; r < grid.rows(); ++r) {
      grid.row_labels.push_back("r" + std::to_string(r));
    }
    for (int c = 0; c < grid.cols(); ++c) {
      grid.col_labels.push_back("c" + std::to_string(c));
    }
  }
  return grid;
}

}  // namespace igband
