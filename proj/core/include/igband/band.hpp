#ifndef IGBAND_BAND_HPP
#define IGBAND_BAND_HPP

#include <optional>
#include <string>
#include <vector>

#include "igband/index_sets.hpp"
#include "igband/presentation.hpp"

namespace igband {

// A pair of idempotent transformations: sigma acts on row indices (written
// on the left of its argument) and tau on column indices (written on the
// right).  Composition runs sigma right-to-left and tau left-to-right, so
// that for a constant pair e = (i, j) and any f:
//
//   f * e = (sigma_f(i), j)      e * f = (i, (j) tau_f)
struct TransformationPair {
  std::vector<int> sigma;  // over row positions
  std::vector<int> tau;    // over column positions

  friend bool operator==(TransformationPair const&,
                         TransformationPair const&) = default;
};

TransformationPair compose_pairs(TransformationPair const& x,
                                 TransformationPair const& y);

bool is_idempotent_pair(TransformationPair const& p);

// How an element of a band is named.  Constant pairs form the minimal ideal
// (a rectangular band); the four L kinds are the extra elements of the
// construction from a Cayley-form presentation; Raw labels table-ingested
// elements.
struct ElementLabel {
  enum class Kind { Constant, TypeZ, TypeG, TypeGbar, TypeR, Raw };
  Kind kind = Kind::Raw;
  int row = -1;  // Constant: row position in I
  int col = -1;  // Constant: column position in J
  std::string a, b, c;  // TypeG/TypeGbar: a; TypeR: the triple a*b = c
  std::string raw;      // Raw: the element name

  // Wire form: "K(0,a)", "L(Z)", "L(G:a)", "L(Gbar:a)", "L(R:a,b,c)", or the
  // raw name.
  std::string display(IndexSets const* sets) const;
  // Identifier-safe form: "K_0_a", "L_Z", "L_G_a", "L_Gbar_a", "L_R_a_b_c".
  std::string token(IndexSets const* sets) const;
};

// A finite band.  Multiplication is always table-backed; bands built from a
// presentation additionally carry the transformation pairs, their index sets
// and the partition into the minimal ideal K and the upper left-zero class
// L.
struct Band {
  int size = 0;
  std::vector<int> table;  // row-major: table[x * size + y]
  std::vector<ElementLabel> labels;

  // Present only for bands built from a presentation.
  std::optional<IndexSets> index_sets;
  std::vector<TransformationPair> pairs;
  std::vector<int> kernel;  // indices of the constant pairs, row-major
  std::vector<int> upper;   // indices of the L elements

  bool transformation_backed() const { return !pairs.empty(); }

  int mul(int x, int y) const { return table[x * size + y]; }

  // Index of the constant pair at (row, col); band must be
  // transformation-backed.
  int constant_element(int row, int col) const;

  // Looks an element up by its display or token label; -1 when absent.
  int element_by_label(std::string const& label) const;
};

int multiply(Band const& b, int x, int y);

// Builds the band attached to a Cayley-form presentation with generators A
// and relation triples R.  The element list is the 2(|A|+1) x (|A|+2) grid
// of constant pairs in row-major order followed by the upper class in the
// order Z, G(a) for a in A, Gbar(a) for a in A, R(rho) for rho in R.  The
// construction asserts that the result is closed, idempotent, and of size
//
//   (2|A|+2)(|A|+2) + 1 + 2|A| + |R|.
Band build_band(CayleyFormPresentation const& p);

// Builds a band from an explicit multiplication table (validated for
// closure, idempotency and associativity by is_band; call it before use).
// Element names default to e0, e1, ...
Band band_from_table(int n, std::vector<std::vector<int>> const& table,
                     std::vector<std::string> const& names = {});

// Verdict of the band axioms check.  Transformation-backed bands skip the
// associativity scan (composition of maps is associative); table-backed
// bands get the full triple enumeration.
struct BandCheck {
  enum class Law { None, Closure, Idempotency, Associativity };
  Law violated = Law::None;
  int x = -1, y = -1, z = -1;

  bool ok() const { return violated == Law::None; }
  std::string message() const;
};

BandCheck is_band(Band const& b);

// Parses one letter of a word over the elements of a presentation band:
// K(i,j) with index tokens, or L(Z) / L(G:a) / L(Gbar:a) / L(R:a,b,c).
// Throws Error on malformed input or unknown elements.
int parse_band_letter(Band const& b, std::string const& text);

// Splits whitespace-separated letters and parses each.
std::vector<int> parse_band_word(Band const& b, std::string const& text);

}  // namespace igband

#endif  // IGBAND_BAND_HPP
