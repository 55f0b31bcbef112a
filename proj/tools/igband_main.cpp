// igband: build the band attached to a group presentation, inspect the
// free idempotent generated semigroup over it, and check that the maximal
// subgroup at the base idempotent recovers the input group.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "igband/band.hpp"
#include "igband/coset_table.hpp"
#include "igband/error.hpp"
#include "igband/green.hpp"
#include "igband/group_oracle.hpp"
#include "igband/ig_presentation.hpp"
#include "igband/json_io.hpp"
#include "igband/pipeline.hpp"
#include "igband/presentation.hpp"
#include "igband/rees.hpp"
#include "igband/squares.hpp"
#include "igband/tietze.hpp"
#include "igband/verify.hpp"
#include "igband/word.hpp"

namespace {

using namespace igband;

// 0 success, 1 a verification verdict failed, 2 stage error, 3 word problem
// unknown at the coset limit (without --allow-unknown).
constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitStageError = 2;
constexpr int kExitUnknown = 3;

struct Options {
  std::string input;
  std::string format = "text";
  int max_cosets = 100000;
  std::string strategy = "paper";
  bool allow_unknown = false;
  bool table_input = false;
  bool checkpoints_on = false;
  bool checkpoints_off = false;
  std::vector<std::string> words;

  bool json() const { return format == "json"; }
  Strategy chosen_strategy() const {
    return strategy == "greedy" ? Strategy::Greedy : Strategy::Paper;
  }
  std::optional<bool> checkpoints() const {
    if (checkpoints_on) return true;
    if (checkpoints_off) return false;
    return std::nullopt;
  }
};

std::string slurp(std::string const& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit_indented(std::ostream& out, std::string const& block) {
  std::istringstream src(block);
  std::string line;
  while (std::getline(src, line)) out << "  " << line << "\n";
}

Json envelope(std::string const& command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

GroupPresentation load_presentation(Options const& opt) {
  GroupPresentation p = parse_group_presentation(slurp(opt.input));
  p.validate();
  return p;
}

// Everything the band-side subcommands share.  For presentation input the
// band comes from the triple form; for --table it comes from the explicit
// multiplication table, checked against the band axioms.
struct BandStage {
  std::optional<GroupPresentation> input;
  CayleyConversion conversion;
  bool converted = false;
  std::vector<CayleyViolation> warnings;
  Band band;
};

BandStage load_band(Options const& opt) {
  BandStage s;
  if (opt.table_input) {
    RawBandInput raw = parse_band_table_text(slurp(opt.input));
    s.band = band_from_table(raw.n, raw.table, raw.names);
    BandCheck check = is_band(s.band);
    if (!check.ok()) throw Error(check.message());
    return s;
  }
  s.input = load_presentation(opt);
  s.conversion = to_cayley_form(*s.input);
  s.converted =
      render_presentation(s.conversion.presentation) !=
      render_presentation(*s.input);
  s.warnings = validate_cayley_form(s.conversion.presentation);
  for (auto const& w : s.warnings) {
    if (w.severity == CayleyViolation::Severity::Error) {
      throw Error(w.message);
    }
  }
  s.conversion.presentation = dedup_triples(s.conversion.presentation);
  s.band = build_band(s.conversion.presentation);
  return s;
}

// Base idempotent for the egg-box grid: least element of the minimal
// D-class.  For a presentation band this is the constant pair at (0, 0).
int grid_base(GreenClasses const& g) {
  int dmin = 0;
  for (int d = 1; d < g.n_d; ++d) dmin = g.meet(dmin, d);
  int base = g.d_members[dmin].front();
  for (int e : g.d_members[dmin]) base = std::min(base, e);
  return base;
}

void print_presentation_block(std::ostream& out, std::string const& title,
                              GroupPresentation const& p) {
  out << title << "\n";
  emit_indented(out, render_presentation(p));
}

int run_cayley(Options const& opt) {
  BandStage s = load_band(opt);
  if (opt.json()) {
    Json j = envelope("cayley");
    j["input"] = presentation_json(*s.input);
    j["converted"] = s.converted;
    j["cayley"] = cayley_json(s.conversion.presentation, s.warnings);
    std::cout << json_to_string(j);
    return kExitOk;
  }
  std::ostringstream out;
  print_presentation_block(out, "input", *s.input);
  out << "conversion\n";
  if (s.converted) {
    emit_indented(out, render_presentation(s.conversion.presentation));
  } else {
    out << "  already in triple form\n";
  }
  for (auto const& w : s.warnings) {
    out << "  warning: " << w.message << "\n";
  }
  std::cout << out.str();
  return kExitOk;
}

int run_build(Options const& opt) {
  BandStage s = load_band(opt);
  if (opt.json()) {
    Json j = envelope("build");
    j["band"] = band_json(s.band);
    j["table"] = band_table_json(s.band);
    std::cout << json_to_string(j);
    return kExitOk;
  }
  std::ostringstream out;
  out << "band\n";
  if (s.band.index_sets) {
    auto const& idx = *s.band.index_sets;
    int n = static_cast<int>(idx.J.size()) - 2;  // generator count
    out << "  size " << s.band.size << " = " << idx.I.size() << " x "
        << idx.J.size() << " constant pairs + " << s.band.upper.size()
        << " upper elements\n";
    out << "  size formula (2n+2)(n+2) + 1 + 2n + r with n = " << n
        << ", r = " << (s.band.upper.size() - 1 - 2 * n) << ": pass\n";
  } else {
    out << "  size " << s.band.size << " (table input)\n";
    out << "  band axioms: pass\n";
  }
  std::cout << out.str();
  return kExitOk;
}

int run_squares(Options const& opt) {
  BandStage s = load_band(opt);
  GreenClasses g = green_classes(s.band);
  DClassGrid grid = dclass_grid(s.band, g, grid_base(g));
  std::vector<SingularSquare> squares = singular_squares(s.band, g, grid);
  if (opt.json()) {
    Json j = envelope("squares");
    j["green"] = green_json(s.band, g);
    j["grid"] = grid_json(grid);
    j["squares"] = squares_json(squares);
    std::cout << json_to_string(j);
    return kExitOk;
  }
  std::ostringstream out;
  out << "green structure\n";
  out << "  " << g.n_r << " R-classes, " << g.n_l << " L-classes, " << g.n_d
      << " D-classes\n";
  out << "  grid " << grid.rows() << " x " << grid.cols()
      << " at the minimal ideal\n";
  int lr = 0;
  for (auto const& sq : squares) {
    if (sq.kind == SquareKind::LeftRight) ++lr;
  }
  out << "singular squares\n";
  out << "  " << squares.size() << " total: " << (squares.size() - lr)
      << " up-down, " << lr << " left-right\n";
  for (auto const& sq : squares) {
    out << "  " << to_string(sq.kind) << " rows (" << grid.row_labels[sq.i]
        << ", " << grid.row_labels[sq.k] << ") cols ("
        << grid.col_labels[sq.j] << ", " << grid.col_labels[sq.l]
        << ") witnesses:";
    for (auto const& w : sq.witness_labels) out << " " << w;
    out << "\n";
  }
  std::cout << out.str();
  return kExitOk;
}

int run_present(Options const& opt) {
  BandStage s = load_band(opt);
  GreenClasses g = green_classes(s.band);
  DClassGrid grid = dclass_grid(s.band, g, grid_base(g));
  std::vector<SingularSquare> squares = singular_squares(s.band, g, grid);
  IgPresentation ig = maximal_subgroup_presentation(s.band, g, grid, squares);
  if (opt.json()) {
    Json j = envelope("present");
    j["presentation"] = ig_presentation_json(ig);
    std::cout << json_to_string(j);
    return kExitOk;
  }
  std::ostringstream out;
  out << "subgroup presentation\n";
  out << "  base cell (" << ig.row_labels[ig.base_row] << ", "
      << ig.col_labels[ig.base_col] << ")\n";
  out << "  " << ig.generators.size() << " generators, "
      << ig.relations.size() << " relations\n";
  emit_indented(out, render_presentation(ig.to_group_presentation()));
  std::cout << out.str();
  return kExitOk;
}

struct SimplifyStage {
  BandStage band;
  IgPresentation ig;
  SimplifyResult result;
  GridTable table;
};

SimplifyStage run_simplify_stages(Options const& opt) {
  SimplifyStage s;
  s.band = load_band(opt);
  GreenClasses g = green_classes(s.band.band);
  DClassGrid grid = dclass_grid(s.band.band, g, grid_base(g));
  std::vector<SingularSquare> squares = singular_squares(s.band.band, g, grid);
  s.ig = maximal_subgroup_presentation(s.band.band, g, grid, squares);
  SimplifyOptions so;
  so.strategy = opt.chosen_strategy();
  so.checkpoints = opt.checkpoints();
  so.max_cosets = opt.max_cosets;
  s.result = simplify(s.ig, so);
  s.table = grid_table(s.ig, s.result.trace);
  return s;
}

void print_simplification(std::ostream& out, SimplifyResult const& r,
                          GridTable const& table) {
  out << "simplification (" << strategy_name(r.trace.strategy_used) << ")\n";
  for (auto const& step : r.trace.steps) {
    switch (step.kind) {
      case TraceStep::Kind::Eliminate:
        out << "  eliminate " << step.gen << " := "
            << word_to_string(step.defining);
        break;
      case TraceStep::Kind::Reorient:
        out << "  reorient " << step.detail;
        break;
      case TraceStep::Kind::Rename:
        out << "  rename " << step.gen << " -> "
            << word_to_string(step.defining);
        break;
    }
    out << "  [" << step.gens_after << " gens, " << step.relations_after
        << " rels]\n";
  }
  if (r.trace.checkpoints_run > 0) {
    out << "  consistency checkpoints: " << r.trace.checkpoints_run << "\n";
  }
  out << "  survivors:";
  if (r.trace.survivors.empty()) out << " (none)";
  for (auto const& name : r.trace.survivors) out << " " << name;
  out << "\n";
  out << "final presentation\n";
  if (r.presentation.generators.empty()) {
    out << "  (empty: the trivial group)\n";
  } else {
    emit_indented(out, render_presentation(r.presentation));
  }
  out << "grid of final values\n";
  emit_indented(out, render_grid_table(table));
  if (!r.trace.notes.empty()) {
    out << "notes\n";
    for (auto const& n : r.trace.notes) out << "  - " << n << "\n";
  }
}

int run_simplify(Options const& opt) {
  SimplifyStage s = run_simplify_stages(opt);
  if (opt.json()) {
    Json j = envelope("simplify");
    j["simplify"] = simplify_json(s.result, s.table);
    std::cout << json_to_string(j);
    return kExitOk;
  }
  std::ostringstream out;
  print_simplification(out, s.result, s.table);
  std::cout << out.str();
  return kExitOk;
}

std::string verdict_line(std::string const& what, CheckVerdict v,
                         std::string const& detail) {
  std::string line = "  " + what + ": " + verdict_name(v);
  if (!detail.empty()) line += " (" + detail + ")";
  return line + "\n";
}

int verdict_exit(CheckVerdict overall, bool allow_unknown) {
  if (overall == CheckVerdict::Fail) return kExitVerdictFail;
  if (overall == CheckVerdict::Unknown) {
    return allow_unknown ? kExitOk : kExitUnknown;
  }
  return kExitOk;
}

int run_verify(Options const& opt) {
  SimplifyStage s = run_simplify_stages(opt);
  // The theorem is about the presentation the band was built from: the
  // triple form, whose group is the input group up to isomorphism.
  GroupPresentation target =
      s.band.conversion.presentation.to_group_presentation();
  TheoremReport report = verify_theorem(target, s.ig, s.result,
                                        opt.max_cosets);
  if (opt.json()) {
    Json j = envelope("verify");
    j["theorem"] = theorem_json(report);
    // The group's standardized coset table, for external cross-checks.
    EnumerationResult e = todd_coxeter(target, opt.max_cosets);
    j["input_coset_table"] =
        e.table ? coset_table_json(*e.table) : Json(nullptr);
    std::cout << json_to_string(j);
  } else {
    std::ostringstream out;
    out << "verification\n";
    out << verdict_line("presentations", report.presentations_match,
                        report.presentations_detail);
    out << verdict_line("forward map", report.forward.verdict,
                        report.forward.detail);
    out << verdict_line("backward map", report.backward.verdict,
                        report.backward.detail);
    out << verdict_line("orders", report.orders_match, report.orders_detail);
    out << "  overall: " << verdict_name(report.overall()) << "\n";
    std::cout << out.str();
  }
  return verdict_exit(report.overall(), opt.allow_unknown);
}

// The model needs the group's word problem; overflow leaves nothing to
// report unless unknowns are allowed.
std::optional<ReesModel> build_model(Options const& opt, BandStage const& s,
                                     long long& cosets_defined) {
  GroupPresentation group = s.conversion.presentation.to_group_presentation();
  OracleBuildResult oracle = build_group_oracle(group, opt.max_cosets);
  cosets_defined = oracle.cosets_defined;
  if (oracle.overflow()) return std::nullopt;
  return build_rees_model(s.band, std::move(*oracle.oracle));
}

int report_overflow(Options const& opt, std::string const& command,
                    long long cosets_defined) {
  std::ostringstream msg;
  msg << "word problem unknown: enumeration stopped at " << cosets_defined
      << " cosets; raise --max-cosets";
  if (!opt.allow_unknown) {
    std::cerr << "error: " << msg.str() << "\n";
    return kExitUnknown;
  }
  if (opt.json()) {
    Json j = envelope(command);
    j["rees"] = nullptr;
    j["note"] = msg.str();
    std::cout << json_to_string(j);
  } else {
    std::cout << "word-problem model\n  not built: " << msg.str() << "\n";
  }
  return kExitOk;
}

int run_rees(Options const& opt) {
  BandStage s = load_band(opt);
  if (!s.band.index_sets) {
    throw Error("the word-problem model needs a presentation input");
  }
  long long cosets_defined = 0;
  std::optional<ReesModel> model = build_model(opt, s, cosets_defined);
  if (!model) return report_overflow(opt, "rees", cosets_defined);
  if (opt.json()) {
    Json j = envelope("rees");
    j["rees"] = rees_json(*model);
    std::cout << json_to_string(j);
    return kExitOk;
  }
  std::ostringstream out;
  out << "word-problem model\n";
  if (model->oracle.finite()) {
    out << "  group order " << model->oracle.order() << "\n";
  } else {
    out << "  group is free; free reduction decides words\n";
  }
  out << "  sandwich matrix " << model->cols() << " x " << model->rows()
      << " over the group\n";
  out << "grid of cell values\n";
  GridTable values;
  for (auto const& sym : model->idx.I) values.row_labels.push_back(sym.display());
  for (auto const& sym : model->idx.J) values.col_labels.push_back(sym.display());
  for (int i = 0; i < model->rows(); ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < model->cols(); ++j) {
      row.push_back(word_to_string(model->value[i][j]));
    }
    values.entries.push_back(std::move(row));
  }
  emit_indented(out, render_grid_table(values));
  std::cout << out.str();
  return kExitOk;
}

int run_word(Options const& opt) {
  BandStage s = load_band(opt);
  if (!s.band.index_sets) {
    throw Error("the word-problem model needs a presentation input");
  }
  long long cosets_defined = 0;
  std::optional<ReesModel> model = build_model(opt, s, cosets_defined);
  if (!model) return report_overflow(opt, "word", cosets_defined);
  Json results = Json::array();
  std::ostringstream out;
  for (auto const& text : opt.words) {
    std::vector<int> letters = parse_band_word(s.band, text);
    IgNormalForm nf = model->normal_form(letters);
    if (opt.json()) {
      Json one;
      one["input"] = text;
      one["normal_form"] = normal_form_json(*model, nf);
      results.push_back(std::move(one));
    } else {
      out << text << "\n  = " << model->display(nf) << "\n";
    }
  }
  if (opt.json()) {
    Json j = envelope("word");
    j["words"] = std::move(results);
    std::cout << json_to_string(j);
  } else {
    std::cout << out.str();
  }
  return kExitOk;
}

int run_full_pipeline(Options const& opt) {
  GroupPresentation input = load_presentation(opt);
  PipelineOptions po;
  po.strategy = opt.chosen_strategy();
  po.max_cosets = opt.max_cosets;
  po.checkpoints = opt.checkpoints();
  PipelineReport report = run_pipeline(input, po);
  if (opt.json()) {
    std::cout << json_to_string(pipeline_json(report));
  } else {
    std::cout << render_pipeline_text(report);
  }
  CheckVerdict overall =
      report.theorem ? report.theorem->overall() : CheckVerdict::Unknown;
  if (overall != CheckVerdict::Fail && report.oracle_overflow) {
    overall = CheckVerdict::Unknown;
  }
  return verdict_exit(overall, opt.allow_unknown);
}

void add_common_flags(CLI::App* cmd, Options& opt, bool with_strategy,
                      bool with_table) {
  cmd->add_option("-i,--input", opt.input,
                  "input file, or - for standard input")
      ->required();
  cmd->add_option("-f,--format", opt.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--max-cosets", opt.max_cosets,
                  "coset limit for enumerations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--allow-unknown", opt.allow_unknown,
                "exit 0 when verdicts are unknown at the coset limit");
  if (with_strategy) {
    cmd->add_option("--strategy", opt.strategy, "simplification strategy")
        ->check(CLI::IsMember({"paper", "greedy"}))
        ->capture_default_str();
    cmd->add_flag("--checkpoints", opt.checkpoints_on,
                  "re-enumerate during simplification to cross-check orders");
    cmd->add_flag("--no-checkpoints", opt.checkpoints_off,
                  "skip simplification checkpoints");
  }
  if (with_table) {
    cmd->add_flag("--table", opt.table_input,
                  "input is a band multiplication table in JSON");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "band of a group presentation and the free idempotent generated "
      "semigroup over it"};
  app.require_subcommand(1);

  Options opt;
  int rc = kExitOk;

  struct Sub {
    char const* name;
    char const* help;
    int (*run)(Options const&);
    bool strategy;
    bool table;
    bool words;
  };
  Sub const subs[] = {
      {"cayley", "convert a presentation to triple form", run_cayley, false,
       false, false},
      {"build", "build the band and report its shape", run_build, false, true,
       false},
      {"squares", "Green structure and singular squares", run_squares, false,
       true, false},
      {"present", "maximal subgroup presentation at the base idempotent",
       run_present, false, true, false},
      {"simplify", "simplify the subgroup presentation with a traced schedule",
       run_simplify, true, true, false},
      {"verify", "check the simplified presentation against the input group",
       run_verify, true, false, false},
      {"rees", "word-problem model over the Rees matrix semigroup", run_rees,
       false, false, false},
      {"word", "normal forms of words over the band generators", run_word,
       false, false, true},
      {"pipeline", "run every stage and report end to end", run_full_pipeline,
       true, false, false},
  };
  for (Sub const& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    add_common_flags(cmd, opt, sub.strategy, sub.table);
    if (sub.words) {
      cmd->add_option("words", opt.words,
                      "words over the band generators, e.g. \"K(0,a) L(Z)\"")
          ->required();
    }
    auto run = sub.run;
    cmd->callback([&, run] { rc = run(opt); });
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e);
  } catch (igband::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStageError;
  }
  return rc;
}
