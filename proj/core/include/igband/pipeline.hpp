#ifndef IGBAND_PIPELINE_HPP
#define IGBAND_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "igband/band.hpp"
#include "igband/green.hpp"
#include "igband/ig_presentation.hpp"
#include "igband/json_io.hpp"
#include "igband/presentation.hpp"
#include "igband/rees.hpp"
#include "igband/squares.hpp"
#include "igband/tietze.hpp"
#include "igband/verify.hpp"

namespace igband {

struct PipelineOptions {
  Strategy strategy = Strategy::Paper;
  int max_cosets = 100000;
  std::optional<bool> checkpoints;
  bool run_verify = true;
  bool run_rees = true;
};

// Everything one run produces, stage by stage: the input presentation, its
// Cayley form, the band, its Green structure and minimal-ideal grid, the
// singular squares, the subgroup presentation, the simplification with its
// grid of final values, the isomorphism evidence, and the word-problem
// model (absent when the group's enumeration overflowed).
struct PipelineReport {
  GroupPresentation input;
  CayleyConversion conversion;
  bool converted = false;
  std::vector<CayleyViolation> warnings;
  Band band;
  GreenClasses green;
  DClassGrid grid;
  std::vector<SingularSquare> squares;
  IgPresentation ig;
  SimplifyResult simplified;
  GridTable table;
  std::optional<TheoremReport> theorem;
  std::optional<ReesModel> rees;
  bool oracle_overflow = false;
  std::vector<std::string> notes;
};

// Runs the stages in order.  Errors are rethrown with the failing stage
// named in the message.
PipelineReport run_pipeline(GroupPresentation const& input,
                            PipelineOptions const& options = {});

std::string render_pipeline_text(PipelineReport const& report);
Json pipeline_json(PipelineReport const& report);

}  // namespace igband

#endif  // IGBAND_PIPELINE_HPP
