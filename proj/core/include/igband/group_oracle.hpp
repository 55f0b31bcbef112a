#ifndef IGBAND_GROUP_ORACLE_HPP
#define IGBAND_GROUP_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "igband/coset_table.hpp"
#include "igband/presentation.hpp"

namespace igband {

// Decision procedure for the word problem of a presented group, with
// canonical forms.  Two shapes:
//   Finite: backed by a complete coset table; canonical forms are the
//           breadth-first representative words.
//   Free:   the presentation has no nontrivial relators; free reduction
//           decides everything and the group is free on its generators.
class GroupOracle {
 public:
  enum class Mode { Finite, Free };

  Mode mode() const { return mode_; }
  GroupPresentation const& presentation() const { return presentation_; }
  CosetTable const& table() const;

  bool finite() const;
  // Group order; only meaningful when finite().
  long long order() const;

  Word canonical(Word const& w) const;
  bool equal(Word const& a, Word const& b) const;
  bool is_identity(Word const& w) const;
  // canonical(a * b)
  Word multiply(Word const& a, Word const& b) const;
  Word invert(Word const& w) const;

  // Finite mode: index of the element w in elements(), i.e. its coset.
  int element_index(Word const& w) const;
  std::vector<Word> const& elements() const;

  static GroupOracle finite(GroupPresentation p, CosetTable t);
  static GroupOracle free_group(GroupPresentation p);

 private:
  GroupOracle() = default;
  Mode mode_ = Mode::Free;
  GroupPresentation presentation_;
  CosetTable table_;
};

struct OracleBuildResult {
  std::optional<GroupOracle> oracle;  // empty when enumeration overflowed
  long long cosets_defined = 0;

  bool overflow() const { return !oracle.has_value(); }
};

// Builds an oracle for the presented group.  Presentations whose relators
// all reduce to the empty word are recognized as free and need no
// enumeration; everything else goes through coset enumeration, and an
// overflow at max_cosets yields an empty result (word problem unknown at
// this limit).
OracleBuildResult build_group_oracle(GroupPresentation const& p,
                                     int max_cosets = 100000);

}  // namespace igband

#endif  // IGBAND_GROUP_ORACLE_HPP
