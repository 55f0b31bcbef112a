#ifndef IGBAND_REES_HPP
#define IGBAND_REES_HPP

#include <string>
#include <vector>

#include "igband/band.hpp"
#include "igband/group_oracle.hpp"
#include "igband/index_sets.hpp"

namespace igband {

// Normal form of a word over the generators of the free idempotent
// generated semigroup: either a pure upper-layer letter (a word of upper
// letters collapses to its first letter) or a Rees triple (row, group
// element, column) once a kernel letter has been absorbed.
struct IgNormalForm {
  enum class Kind { Lbar, Kbar };
  Kind kind = Kind::Kbar;
  int element = -1;  // Lbar: the band element
  int row = -1;      // Kbar
  int col = -1;      // Kbar
  Word value;        // Kbar: canonical group word

  friend bool operator==(IgNormalForm const& a, IgNormalForm const& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::Lbar) return a.element == b.element;
    return a.row == b.row && a.col == b.col && a.value == b.value;
  }
};

// Word-problem model for the free idempotent generated semigroup over a
// band built from a group presentation: kernel letters embed into a Rees
// matrix semigroup over the group, upper letters act by the two rewrite
// rules, and equality of normal forms decides equality of words.
struct ReesModel {
  explicit ReesModel(GroupOracle o) : oracle(std::move(o)) {}

  IndexSets idx;
  GroupOracle oracle;
  int band_size = 0;
  // Grid of group values: value[i][j] is the element sitting at cell (i,j),
  // canonical over the input generators.
  std::vector<std::vector<Word>> value;
  // sandwich[j][i] is the inverse of value[i][j], canonical.
  std::vector<std::vector<Word>> sandwich;
  std::vector<ElementLabel> labels;          // per band element
  std::vector<TransformationPair> pairs;     // per band element
  std::vector<std::vector<int>> constant_id; // cell -> band element

  int rows() const { return static_cast<int>(idx.I.size()); }
  int cols() const { return static_cast<int>(idx.J.size()); }

  bool is_constant(int element) const;
  // The image of a single generator: a Rees triple for kernel letters, an
  // atomic upper letter otherwise.
  IgNormalForm embed(int element) const;
  // Rees product of two triples through the sandwich matrix.
  IgNormalForm rees_multiply(IgNormalForm const& a,
                             IgNormalForm const& b) const;
  // Extends a normal form by one more generator letter.
  IgNormalForm append(IgNormalForm const& acc, int element) const;
  IgNormalForm normal_form(std::vector<int> const& word) const;
  bool equal(std::vector<int> const& a, std::vector<int> const& b) const;
  std::string display(IgNormalForm const& nf) const;
};

// Builds the model from a band with index sets and an oracle for the group
// it was built from.  Verifies the model against the band: embedded kernel
// letters are idempotent, multiplication agrees with the band on basic
// pairs, and the rewrite rules fix the products that defining relations pin
// down.  Throws on any violation.
ReesModel build_rees_model(Band const& b, GroupOracle oracle);

}  // namespace igband

#endif  // IGBAND_REES_HPP
