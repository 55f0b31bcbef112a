#include "igband/rees.hpp"

#include <string>

#include "igband/error.hpp"
#include "igband/word.hpp"

namespace igband {

namespace {

// The group value at cell (i, j): the identity except that primed rows pick
// up their column's generator and the sink column picks up the row's
// generator.  This is the closed form of the values the traced
// simplification assigns to the cell generators, uniform in the input
// presentation.
Word cell_value(IndexSets const& idx, int i, int j) {
  Word w;
  auto const& row = idx.I[i];
  auto const& col = idx.J[j];
  if (row.primed && col.base == IndexSymbol::Base::Gen) {
    w.push_back(Letter{col.gen, 1});
  }
  if (col.base == IndexSymbol::Base::Infinity &&
      row.base == IndexSymbol::Base::Gen) {
    w.push_back(Letter{row.gen, 1});
  }
  return w;
}

}  // namespace

bool ReesModel::is_constant(int element) const {
  if (element < 0 || element >= band_size) {
    throw Error("band element out of range");
  }
  return labels[element].kind == ElementLabel::Kind::Constant;
}

IgNormalForm ReesModel::embed(int element) const {
  IgNormalForm nf;
  if (!is_constant(element)) {
    nf.kind = IgNormalForm::Kind::Lbar;
    nf.element = element;
    return nf;
  }
  auto const& label = labels[element];
  nf.kind = IgNormalForm::Kind::Kbar;
  nf.row = label.row;
  nf.col = label.col;
  nf.value = value[label.row][label.col];
  return nf;
}

IgNormalForm ReesModel::rees_multiply(IgNormalForm const& a,
                                      IgNormalForm const& b) const {
  if (a.kind != IgNormalForm::Kind::Kbar ||
      b.kind != IgNormalForm::Kind::Kbar) {
    throw Error("rees_multiply expects two triples");
  }
  IgNormalForm nf;
  nf.kind = IgNormalForm::Kind::Kbar;
  nf.row = a.row;
  nf.col = b.col;
  nf.value = oracle.canonical(
      concat(concat(a.value, sandwich[a.col][b.row]), b.value));
  return nf;
}

IgNormalForm ReesModel::append(IgNormalForm const& acc, int element) const {
  bool constant = is_constant(element);
  if (acc.kind == IgNormalForm::Kind::Lbar) {
    if (!constant) {
      // The upper class is left-zero, so an upper prefix collapses to its
      // first letter.
      return acc;
    }
    // Left rewrite: route the upper letter through the kernel cell it fixes
    // in the incoming letter's column block, using the base column.
    auto const& f = labels[element];
    auto const& sigma = pairs[acc.element].sigma;
    IgNormalForm left = embed(constant_id[sigma[f.row]][idx.col_zero()]);
    return rees_multiply(left, embed(element));
  }
  if (constant) {
    return rees_multiply(acc, embed(element));
  }
  // Right rewrite: multiply by the embedded image of the cell the upper
  // letter sends (fixed unprimed row, current column) to.  The unprimed
  // image row is the deterministic choice among the two fixed rows; the
  // primed one gives the same product.
  auto const& sigma = pairs[element].sigma;
  auto const& tau = pairs[element].tau;
  int fixed_row = sigma[idx.row_zero()];
  int new_col = tau[acc.col];
  return rees_multiply(acc, embed(constant_id[fixed_row][new_col]));
}

IgNormalForm ReesModel::normal_form(std::vector<int> const& word) const {
  if (word.empty()) throw Error("empty word over the band");
  IgNormalForm acc = embed(word.front());
  for (std::size_t t = 1; t < word.size(); ++t) {
    acc = append(acc, word[t]);
  }
  return acc;
}

bool ReesModel::equal(std::vector<int> const& a,
                      std::vector<int> const& b) const {
  return normal_form(a) == normal_form(b);
}

std::string ReesModel::display(IgNormalForm const& nf) const {
  if (nf.kind == IgNormalForm::Kind::Lbar) {
    return "Lbar(" + labels[nf.element].display(&idx) + ")";
  }
  return "Kbar(" + idx.I[nf.row].display() + ", " + word_to_string(nf.value) +
         ", " + idx.J[nf.col].display() + ")";
}

ReesModel build_rees_model(Band const& b, GroupOracle oracle) {
  if (!b.index_sets || !b.transformation_backed()) {
    throw Error("the word-problem model needs a band built from a "
                "presentation");
  }
  ReesModel m(std::move(oracle));
  m.idx = *b.index_sets;
  m.band_size = b.size;
  m.labels = b.labels;
  m.pairs = b.pairs;

  int rows = m.rows();
  int cols = m.cols();
  m.value.assign(rows, std::vector<Word>(cols));
  m.sandwich.assign(cols, std::vector<Word>(rows));
  m.constant_id.assign(rows, std::vector<int>(cols, -1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m.value[i][j] = m.oracle.canonical(cell_value(m.idx, i, j));
      m.sandwich[j][i] = m.oracle.invert(m.value[i][j]);
      m.constant_id[i][j] = b.constant_element(i, j);
    }
  }

  // Model verification against the band.
  //
  // Embedded kernel letters must be idempotent, and the Rees product must
  // agree with the band on basic kernel pairs (same row or same column).
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      IgNormalForm e = m.embed(m.constant_id[i][j]);
      if (!(m.rees_multiply(e, e) == e)) {
        throw Error("model check failed: embedded cell (" +
                    m.idx.I[i].display() + ", " + m.idx.J[j].display() +
                    ") is not idempotent");
      }
      for (int l = 0; l < cols; ++l) {
        IgNormalForm f = m.embed(m.constant_id[i][l]);
        int prod = b.mul(m.constant_id[i][j], m.constant_id[i][l]);
        if (!(m.rees_multiply(e, f) == m.embed(prod))) {
          throw Error("model check failed on a same-row basic pair");
        }
      }
      for (int k = 0; k < rows; ++k) {
        IgNormalForm f = m.embed(m.constant_id[k][j]);
        int prod = b.mul(m.constant_id[i][j], m.constant_id[k][j]);
        if (!(m.rees_multiply(e, f) == m.embed(prod))) {
          throw Error("model check failed on a same-column basic pair");
        }
      }
    }
  }
  // The rewrite rules must respect every defining relation that involves an
  // upper letter: when (e, f) is a basic pair, both ordered products must
  // land on the embedded band product.  Upper-upper pairs hold by
  // construction (the upper class is left-zero and append collapses an
  // upper suffix onto an upper accumulator), so kernel-upper pairs are the
  // ones checked.
  for (int e : b.upper) {
    for (int f : b.kernel) {
      int ef = b.mul(e, f);
      int fe = b.mul(f, e);
      if (ef != f && fe != f) continue;
      if (!(m.append(m.embed(e), f) == m.embed(ef))) {
        throw Error("model check failed: left rewrite breaks a basic pair");
      }
      if (!(m.append(m.embed(f), e) == m.embed(fe))) {
        throw Error("model check failed: right rewrite breaks a basic pair");
      }
    }
  }
  return m;
}

}  // namespace igband
