#ifndef IGBAND_JSON_IO_HPP
#define IGBAND_JSON_IO_HPP

#include <string>
#include <vector>

#include "igband/band.hpp"
#include "igband/coset_table.hpp"
#include "igband/green.hpp"
#include "igband/ig_presentation.hpp"
#include "igband/presentation.hpp"
#include "igband/rees.hpp"
#include "igband/squares.hpp"
#include "igband/tietze.hpp"
#include "igband/verify.hpp"

#include <nlohmann/json.hpp>

namespace igband {

using Json = nlohmann::ordered_json;

Json presentation_json(GroupPresentation const& p);
Json cayley_json(CayleyFormPresentation const& p,
                 std::vector<CayleyViolation> const& warnings = {});
Json band_json(Band const& b);
Json band_table_json(Band const& b);
Json green_json(Band const& b, GreenClasses const& g);
Json grid_json(DClassGrid const& grid);
Json squares_json(std::vector<SingularSquare> const& squares);
Json ig_presentation_json(IgPresentation const& ig);
Json simplify_json(SimplifyResult const& result, GridTable const& table);
Json theorem_json(TheoremReport const& report);
Json rees_json(ReesModel const& model);
Json normal_form_json(ReesModel const& model, IgNormalForm const& nf);
// Full standardized coset table, for external cross-checks.
Json coset_table_json(CosetTable const& t);

// Serializes with a stable layout: two-space indent, trailing newline.
std::string json_to_string(Json const& j);

// Raw band input: an explicit multiplication table with optional element
// names.  Accepted shape: {"n": 3, "table": [[...], ...], "names": [...]}.
struct RawBandInput {
  int n = 0;
  std::vector<std::vector<int>> table;
  std::vector<std::string> names;
};

RawBandInput parse_band_table_text(std::string const& text);

}  // namespace igband

#endif  // IGBAND_JSON_IO_HPP
