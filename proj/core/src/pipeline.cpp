#include "igband/pipeline.hpp"

#include <functional>
#include <sstream>

#include "igband/error.hpp"
#include "igband/group_oracle.hpp"
#include "igband/word.hpp"

namespace igband {

namespace {

template <typename F>
auto stage(std::string const& name, F&& f) {
  try {
    return f();
  } catch (Error const& e) {
    throw Error(name + ": " + e.what());
  }
}

bool already_cayley(GroupPresentation const& p) {
  for (auto const& rel : p.relations) {
    if (rel.lhs.size() != 2 || rel.rhs.size() != 1) return false;
    if (rel.lhs[0].exp != 1 || rel.lhs[1].exp != 1 || rel.rhs[0].exp != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace

PipelineReport run_pipeline(GroupPresentation const& input,
                            PipelineOptions const& options) {
  PipelineReport r;
  r.input = input;
  stage("input", [&] { input.validate(); return 0; });

  r.converted = !already_cayley(input);
  r.conversion = stage("conversion", [&] { return to_cayley_form(input); });
  r.warnings = validate_cayley_form(r.conversion.presentation);

  r.band = stage("band construction",
                 [&] { return build_band(r.conversion.presentation); });
  r.green = stage("green structure", [&] { return green_classes(r.band); });
  r.grid = stage("grid", [&] {
    return dclass_grid(r.band, r.green, r.band.constant_element(0, 0));
  });
  r.squares = stage("singular squares", [&] {
    return singular_squares(r.band, r.green, r.grid);
  });
  r.ig = stage("subgroup presentation", [&] {
    return maximal_subgroup_presentation(r.band, r.green, r.grid, r.squares);
  });

  SimplifyOptions simplify_options;
  simplify_options.strategy = options.strategy;
  simplify_options.checkpoints = options.checkpoints;
  simplify_options.max_cosets = options.max_cosets;
  r.simplified = stage("simplification",
                       [&] { return simplify(r.ig, simplify_options); });
  r.table = grid_table(r.ig, r.simplified.trace);

  if (options.run_verify) {
    r.theorem = stage("verification", [&] {
      return verify_theorem(r.conversion.presentation.to_group_presentation(),
                            r.ig, r.simplified, options.max_cosets);
    });
  }

  if (options.run_rees) {
    auto oracle = stage("word-problem model", [&] {
      return build_group_oracle(
          r.conversion.presentation.to_group_presentation(),
          options.max_cosets);
    });
    if (oracle.overflow()) {
      r.oracle_overflow = true;
      r.notes.push_back(
          "the group's word problem is unknown at the coset limit, so the "
          "word-problem model was not built");
    } else {
      r.rees = stage("word-problem model", [&] {
        return build_rees_model(r.band, std::move(*oracle.oracle));
      });
    }
  }

  r.notes.push_back(
      "singular-square witnesses always lie strictly above the cell's "
      "class");
  if (r.converted) {
    r.notes.push_back(
        "the triple-form conversion is one valid choice; other encodings "
        "of the same group give other bands");
  }
  r.notes.push_back(
      "the same maximal subgroup arises over the regular variant of the "
      "free idempotent generated semigroup");
  return r;
}

namespace {

std::string verdict_line(std::string const& name, CheckVerdict v,
                         std::string const& detail) {
  return "  " + name + ": " + verdict_name(v) +
         (detail.empty() ? "" : " (" + detail + ")") + "\n";
}

}  // namespace

std::string render_pipeline_text(PipelineReport const& r) {
  std::ostringstream out;
  out << "input\n";
  {
    std::istringstream src(render_presentation(r.input));
    std::string line;
    while (std::getline(src, line)) out << "  " << line << "\n";
  }

  out << "conversion\n";
  if (r.converted) {
    std::istringstream src(render_presentation(r.conversion.presentation));
    std::string line;
    while (std::getline(src, line)) out << "  " << line << "\n";
  } else {
    out << "  already in triple form\n";
  }
  for (auto const& w : r.warnings) {
    out << "  "
        << (w.severity == CayleyViolation::Severity::Error ? "error: "
                                                           : "warning: ")
        << w.message << "\n";
  }

  auto const& idx = *r.band.index_sets;
  out << "band\n";
  out << "  size " << r.band.size << " = " << idx.I.size() << " x "
      << idx.J.size() << " constant pairs + " << r.band.upper.size()
      << " upper elements\n";

  out << "green structure\n";
  out << "  " << r.green.n_r << " R-classes, " << r.green.n_l
      << " L-classes, " << r.green.n_d << " D-classes\n";
  out << "  minimal-ideal grid " << r.grid.rows() << " x " << r.grid.cols()
      << "\n";

  int lr = 0;
  for (auto const& s : r.squares) {
    if (s.kind == SquareKind::LeftRight) ++lr;
  }
  out << "singular squares\n";
  out << "  " << r.squares.size() << " total: "
      << (r.squares.size() - lr) << " up-down, " << lr << " left-right\n";

  out << "subgroup presentation\n";
  out << "  " << r.ig.generators.size() << " generators, "
      << r.ig.relations.size() << " relations\n";

  out << "simplification (" << strategy_name(r.simplified.trace.strategy_used)
      << ")\n";
  int eliminations = 0;
  for (auto const& s : r.simplified.trace.steps) {
    if (s.kind == TraceStep::Kind::Eliminate) ++eliminations;
  }
  out << "  " << eliminations << " eliminations\n";
  out << "  survivors:";
  if (r.simplified.trace.survivors.empty()) {
    out << " (none)";
  }
  for (auto const& s : r.simplified.trace.survivors) out << " " << s;
  out << "\n";
  {
    std::istringstream src(render_presentation(r.simplified.presentation));
    std::string line;
    while (std::getline(src, line)) out << "  " << line << "\n";
  }
  out << "grid of final values\n";
  {
    std::istringstream src(render_grid_table(r.table));
    std::string line;
    while (std::getline(src, line)) out << "  " << line << "\n";
  }

  if (r.theorem) {
    out << "verification\n";
    out << verdict_line("presentations", r.theorem->presentations_match,
                        r.theorem->presentations_detail);
    out << verdict_line("forward map", r.theorem->forward.verdict,
                        r.theorem->forward.detail);
    out << verdict_line("backward map", r.theorem->backward.verdict,
                        r.theorem->backward.detail);
    out << verdict_line("orders", r.theorem->orders_match,
                        r.theorem->orders_detail);
    out << "  overall: " << verdict_name(r.theorem->overall()) << "\n";
  }

  if (r.rees) {
    out << "word-problem model\n";
    if (r.rees->oracle.finite()) {
      out << "  group order " << r.rees->oracle.order() << "\n";
    } else {
      out << "  group is free; free reduction decides words\n";
    }
    out << "  sandwich matrix " << r.rees->cols() << " x " << r.rees->rows()
        << " over the group\n";
  } else if (r.oracle_overflow) {
    out << "word-problem model\n";
    out << "  not built: enumeration overflowed\n";
  }

  if (!r.simplified.trace.notes.empty() || !r.notes.empty()) {
    out << "notes\n";
    for (auto const& n : r.simplified.trace.notes) out << "  - " << n << "\n";
    for (auto const& n : r.notes) out << "  - " << n << "\n";
  }
  return out.str();
}

Json pipeline_json(PipelineReport const& r) {
  Json j;
  j["schema"] = 1;
  j["input"] = presentation_json(r.input);
  j["converted"] = r.converted;
  j["cayley"] = cayley_json(r.conversion.presentation, r.warnings);
  j["band"] = band_json(r.band);
  j["green"] = green_json(r.band, r.green);
  j["grid"] = grid_json(r.grid);
  j["squares"] = squares_json(r.squares);
  j["subgroup_presentation"] = ig_presentation_json(r.ig);
  j["simplification"] = simplify_json(r.simplified, r.table);
  if (r.theorem) j["verification"] = theorem_json(*r.theorem);
  if (r.rees) {
    j["word_problem_model"] = rees_json(*r.rees);
  } else if (r.oracle_overflow) {
    j["word_problem_model"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

}  // namespace igband
