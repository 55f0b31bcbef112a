#include "igband/ig_presentation.hpp"

#include <set>

#include "igband/error.hpp"
#include "igband/word.hpp"

namespace igband {

BandPresentation ig_presentation(Band const& b) {
  BandPresentation p;
  auto const* idx = b.index_sets ? &*b.index_sets : nullptr;
  p.generators.reserve(b.size);
  for (int e = 0; e < b.size; ++e) {
    p.generators.push_back(b.labels[e].token(idx));
  }
  for (int x = 0; x < b.size; ++x) {
    for (int y = 0; y < b.size; ++y) {
      int xy = b.mul(x, y);
      int yx = b.mul(y, x);
      bool basic = xy == x || xy == y || yx == x || yx == y;
      if (!basic) continue;
      Relation r;
      r.lhs = {Letter{p.generators[x], 1}, Letter{p.generators[y], 1}};
      r.rhs = {Letter{p.generators[xy], 1}};
      p.relations.push_back(std::move(r));
    }
  }
  return p;
}

namespace {

// Cell generator names: by index-set tokens when the grid is the natural
// grid of a band built from a group presentation, by the grid's own labels
// otherwise.  Any collision (possible for adversarial raw element names)
// drops the whole scheme to positional names.
std::vector<std::string> cell_names(Band const& b, DClassGrid const& grid,
                                    bool structured) {
  int rows = grid.rows();
  int cols = grid.cols();
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (structured) {
        auto const& label = b.labels[grid.cells[r][c]];
        names.push_back("f_" + b.index_sets->I[label.row].token() + "_" +
                        b.index_sets->J[label.col].token());
      } else {
        names.push_back("f_" + grid.row_labels[r] + "_" + grid.col_labels[c]);
      }
    }
  }
  std::set<std::string> unique(names.begin(), names.end());
  if (unique.size() != names.size()) {
    names.clear();
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        names.push_back("f" + std::to_string(r) + "_" + std::to_string(c));
      }
    }
  }
  return names;
}

bool grid_is_structured(Band const& b, DClassGrid const& grid) {
  if (!b.index_sets) return false;
  auto const& idx = *b.index_sets;
  if (grid.rows() != static_cast<int>(idx.I.size())) return false;
  if (grid.cols() != static_cast<int>(idx.J.size())) return false;
  for (int r = 0; r < grid.rows(); ++r) {
    for (int c = 0; c < grid.cols(); ++c) {
      auto const& label = b.labels[grid.cells[r][c]];
      if (label.kind != ElementLabel::Kind::Constant) return false;
      if (label.row != r || label.col != c) return false;
    }
  }
  return true;
}

}  // namespace

IgPresentation maximal_subgroup_presentation(
    Band const& b, GreenClasses const& g, DClassGrid const& grid,
    std::vector<SingularSquare> const& squares) {
  (void)g;
  int rows = grid.rows();
  int cols = grid.cols();
  if (rows < 1 || cols < 1) throw Error("empty grid");

  IgPresentation p;
  p.structured = grid_is_structured(b, grid);
  p.gen_names = cell_names(b, grid, p.structured);
  p.row_labels = grid.row_labels;
  p.col_labels = grid.col_labels;
  p.base_row = 0;
  p.base_col = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      p.generators.push_back(IgPresentation::Cell{r, c});
    }
  }

  auto fgen = [&](int r, int c) {
    return Letter{p.gen_names[p.gen_at(r, c)], 1};
  };

  // Base row and base column generators are the identity; the shared corner
  // is stated once.
  for (int r = 0; r < rows; ++r) {
    p.relations.push_back(Relation{{fgen(r, 0)}, {}});
    p.relation_square.push_back(-1);
  }
  for (int c = 1; c < cols; ++c) {
    p.relations.push_back(Relation{{fgen(0, c)}, {}});
    p.relation_square.push_back(-1);
  }

  // One relation per singular square; distinct squares occasionally carry
  // the same relation, so dedup by canonical relator.
  std::set<Word> seen;
  for (std::size_t s = 0; s < squares.size(); ++s) {
    auto const& sq = squares[s];
    Relation rel;
    rel.lhs = {Letter{fgen(sq.i, sq.j).gen, -1}, fgen(sq.i, sq.l)};
    rel.rhs = {Letter{fgen(sq.k, sq.j).gen, -1}, fgen(sq.k, sq.l)};
    Word relator = canonical_relator(concat(rel.lhs, inverse(rel.rhs)));
    if (!seen.insert(relator).second) continue;
    p.relations.push_back(std::move(rel));
    p.relation_square.push_back(static_cast<int>(s));
  }
  p.squares = squares;
  p.square_witness.reserve(squares.size());
  for (auto const& sq : squares) {
    if (sq.witnesses.empty()) throw Error("singular square without witness");
    p.square_witness.push_back(b.labels[sq.witnesses.front()]);
  }
  return p;
}

GroupPresentation IgPresentation::to_group_presentation() const {
  GroupPresentation g;
  for (auto const& name : gen_names) {
    g.generators.push_back(GenSymbol{name, GenOrigin::User, "", 0});
  }
  g.relations = relations;
  g.validate();
  return g;
}

}  // namespace igband
