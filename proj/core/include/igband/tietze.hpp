#ifndef IGBAND_TIETZE_HPP
#define IGBAND_TIETZE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "igband/ig_presentation.hpp"
#include "igband/presentation.hpp"

namespace igband {

enum class Strategy { Paper, Greedy };

std::string strategy_name(Strategy s);

// One recorded simplification event.  Eliminations carry the generator and
// its defining word (over the generators alive at that moment); the counts
// of relations that became trivial or duplicate in the follow-up sweep ride
// along.
struct TraceStep {
  enum class Kind { Eliminate, Reorient, Rename };
  Kind kind;
  std::string gen;     // Eliminate: removed generator; Rename: old name
  Word defining;       // Eliminate: defining word; Rename: the new name
  std::string detail;  // human-readable one-liner
  int trivial_removed = 0;
  int duplicates_removed = 0;
  std::size_t gens_after = 0;
  std::size_t relations_after = 0;
};

struct SimplificationTrace {
  Strategy strategy_used = Strategy::Paper;
  std::vector<TraceStep> steps;
  // Every original generator expressed over the final generators.
  std::map<std::string, Word> substitution;
  // Pre-rename survivor name -> final name (empty when nothing was renamed).
  std::map<std::string, std::string> rename;
  std::vector<std::string> survivors;  // final generator names, in order
  std::vector<std::string> notes;
  int checkpoints_run = 0;
};

struct SimplifyOptions {
  Strategy strategy = Strategy::Paper;
  // Consistency checkpoints: re-enumerate the current presentation every
  // checkpoint_interval eliminations and compare group orders with the
  // starting presentation.  Unset means automatic: on for structured
  // presentations with at most 4 group generators.
  std::optional<bool> checkpoints;
  int checkpoint_interval = 10;
  int max_cosets = 100000;
  // Greedy never eliminates through a defining word longer than this.
  int greedy_word_limit = 16;
};

struct SimplifyResult {
  GroupPresentation presentation;
  SimplificationTrace trace;
};

// Simplifies the maximal subgroup presentation by traced eliminations.
//
// The paper strategy follows the fixed schedule that works for every band
// built from a group presentation: base row and column first, then the
// unprimed block, the primed block against row 0', and the last column via
// the three families of upper witnesses; the surviving relations are
// reoriented against their witnessing squares and the survivors renamed to
// the original group generators.  Unstructured input falls back to greedy
// with a note.
//
// The greedy strategy repeatedly removes a generator that occurs exactly
// once in some relator, shortest defining word first.
SimplifyResult simplify(IgPresentation const& ig,
                        SimplifyOptions const& options = {});

GroupPresentation apply_rename(GroupPresentation p,
                               std::map<std::string, std::string> const& m);

// The grid of final values: every cell generator expressed over the final
// generators, rendered as words.
struct GridTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<std::string>> entries;
};

GridTable grid_table(IgPresentation const& ig,
                     SimplificationTrace const& trace);

// Fixed-width text rendering: columns padded to their widest entry,
// separated by two spaces, trailing whitespace stripped.
std::string render_grid_table(GridTable const& t);

}  // namespace igband

#endif  // IGBAND_TIETZE_HPP
