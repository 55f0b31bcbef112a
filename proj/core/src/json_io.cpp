#include "igband/json_io.hpp"

#include <nlohmann/json.hpp>

#include "igband/error.hpp"
#include "igband/word.hpp"

namespace igband {

namespace {

Json relation_json(Relation const& r) {
  Json j;
  j["lhs"] = word_to_string(r.lhs);
  j["rhs"] = word_to_string(r.rhs);
  return j;
}

}  // namespace

Json presentation_json(GroupPresentation const& p) {
  Json j;
  j["generators"] = Json::array();
  for (auto const& g : p.generators) {
    Json gen;
    gen["name"] = g.name;
    gen["origin"] = origin_to_string(g);
    j["generators"].push_back(gen);
  }
  j["relations"] = Json::array();
  for (auto const& r : p.relations) j["relations"].push_back(relation_json(r));
  return j;
}

Json cayley_json(CayleyFormPresentation const& p,
                 std::vector<CayleyViolation> const& warnings) {
  Json j;
  j["generators"] = Json::array();
  for (auto const& g : p.generators) {
    Json gen;
    gen["name"] = g.name;
    gen["origin"] = origin_to_string(g);
    j["generators"].push_back(gen);
  }
  j["triples"] = Json::array();
  for (auto const& t : p.relations) {
    j["triples"].push_back(Json::array({t.a, t.b, t.c}));
  }
  if (!warnings.empty()) {
    j["warnings"] = Json::array();
    for (auto const& w : warnings) {
      j["warnings"].push_back(
          std::string(w.severity == CayleyViolation::Severity::Error
                          ? "error: "
                          : "warning: ") +
          w.message);
    }
  }
  return j;
}

Json band_json(Band const& b) {
  Json j;
  j["size"] = b.size;
  auto const* idx = b.index_sets ? &*b.index_sets : nullptr;
  if (idx) {
    j["kernel_rows"] = static_cast<int>(idx->I.size());
    j["kernel_cols"] = static_cast<int>(idx->J.size());
    j["upper_size"] = static_cast<int>(b.upper.size());
  }
  j["elements"] = Json::array();
  for (auto const& label : b.labels) {
    j["elements"].push_back(label.display(idx));
  }
  return j;
}

Json band_table_json(Band const& b) {
  Json j;
  j["n"] = b.size;
  auto const* idx = b.index_sets ? &*b.index_sets : nullptr;
  j["names"] = Json::array();
  for (auto const& label : b.labels) j["names"].push_back(label.token(idx));
  j["table"] = Json::array();
  for (int x = 0; x < b.size; ++x) {
    Json row = Json::array();
    for (int y = 0; y < b.size; ++y) row.push_back(b.mul(x, y));
    j["table"].push_back(row);
  }
  return j;
}

Json green_json(Band const& b, GreenClasses const& g) {
  Json j;
  j["r_classes"] = g.n_r;
  j["l_classes"] = g.n_l;
  j["d_classes"] = g.n_d;
  j["d_class_sizes"] = Json::array();
  for (auto const& members : g.d_members) {
    j["d_class_sizes"].push_back(static_cast<int>(members.size()));
  }
  (void)b;
  return j;
}

Json grid_json(DClassGrid const& grid) {
  Json j;
  j["d_class"] = grid.d_class;
  j["rows"] = grid.row_labels;
  j["cols"] = grid.col_labels;
  j["cells"] = Json::array();
  for (auto const& row : grid.cells) {
    j["cells"].push_back(row);
  }
  return j;
}

Json squares_json(std::vector<SingularSquare> const& squares) {
  Json j;
  j["count"] = static_cast<int>(squares.size());
  int lr = 0;
  for (auto const& s : squares) {
    if (s.kind == SquareKind::LeftRight) ++lr;
  }
  j["left_right"] = lr;
  j["up_down"] = static_cast<int>(squares.size()) - lr;
  j["squares"] = Json::array();
  for (auto const& s : squares) {
    Json sq;
    sq["i"] = s.i;
    sq["k"] = s.k;
    sq["j"] = s.j;
    sq["l"] = s.l;
    sq["kind"] = to_string(s.kind);
    sq["witnesses"] = s.witness_labels;
    j["squares"].push_back(sq);
  }
  return j;
}

Json ig_presentation_json(IgPresentation const& ig) {
  Json j;
  j["generator_count"] = static_cast<int>(ig.generators.size());
  j["relation_count"] = static_cast<int>(ig.relations.size());
  j["base_row"] = ig.row_labels[ig.base_row];
  j["base_col"] = ig.col_labels[ig.base_col];
  j["generators"] = ig.gen_names;
  j["relations"] = Json::array();
  for (std::size_t i = 0; i < ig.relations.size(); ++i) {
    Json rel = relation_json(ig.relations[i]);
    rel["square"] = ig.relation_square[i];
    j["relations"].push_back(rel);
  }
  return j;
}

Json simplify_json(SimplifyResult const& result, GridTable const& table) {
  Json j;
  j["strategy"] = strategy_name(result.trace.strategy_used);
  j["steps"] = Json::array();
  for (auto const& s : result.trace.steps) {
    Json step;
    switch (s.kind) {
      case TraceStep::Kind::Eliminate: step["kind"] = "eliminate"; break;
      case TraceStep::Kind::Reorient: step["kind"] = "reorient"; break;
      case TraceStep::Kind::Rename: step["kind"] = "rename"; break;
    }
    step["detail"] = s.detail;
    if (s.kind == TraceStep::Kind::Eliminate) {
      step["gen"] = s.gen;
      step["defining"] = word_to_string(s.defining);
      step["trivial_removed"] = s.trivial_removed;
      step["duplicates_removed"] = s.duplicates_removed;
    }
    step["generators_left"] = static_cast<int>(s.gens_after);
    step["relations_left"] = static_cast<int>(s.relations_after);
    j["steps"].push_back(step);
  }
  j["survivors"] = result.trace.survivors;
  j["rename"] = Json::object();
  for (auto const& [from, to] : result.trace.rename) j["rename"][from] = to;
  j["substitution"] = Json::object();
  for (auto const& [gen, value] : result.trace.substitution) {
    j["substitution"][gen] = word_to_string(value);
  }
  j["checkpoints_run"] = result.trace.checkpoints_run;
  if (!result.trace.notes.empty()) j["notes"] = result.trace.notes;
  j["presentation"] = presentation_json(result.presentation);
  Json grid;
  grid["rows"] = table.row_labels;
  grid["cols"] = table.col_labels;
  grid["entries"] = Json::array();
  for (auto const& row : table.entries) grid["entries"].push_back(row);
  j["grid_table"] = grid;
  j["grid_table_text"] = render_grid_table(table);
  return j;
}

namespace {

Json order_json(long long order) {
  if (order < 0) return nullptr;
  return order;
}

Json hom_json(HomCheckResult const& h) {
  Json j;
  j["verdict"] = verdict_name(h.verdict);
  j["detail"] = h.detail;
  return j;
}

}  // namespace

Json theorem_json(TheoremReport const& report) {
  Json j;
  j["presentations_match"] = verdict_name(report.presentations_match);
  j["presentations_detail"] = report.presentations_detail;
  j["forward"] = hom_json(report.forward);
  j["backward"] = hom_json(report.backward);
  Json orders;
  orders["verdict"] = verdict_name(report.orders_match);
  orders["detail"] = report.orders_detail;
  orders["input"] = order_json(report.input_order);
  orders["subgroup_presentation"] = order_json(report.subgroup_order);
  orders["simplified"] = order_json(report.simplified_order);
  j["orders"] = orders;
  j["overall"] = verdict_name(report.overall());
  return j;
}

Json rees_json(ReesModel const& model) {
  Json j;
  j["rows"] = Json::array();
  for (auto const& r : model.idx.I) j["rows"].push_back(r.display());
  j["cols"] = Json::array();
  for (auto const& c : model.idx.J) j["cols"].push_back(c.display());
  j["group_order"] =
      model.oracle.finite() ? Json(model.oracle.order()) : Json(nullptr);
  j["values"] = Json::array();
  for (int i = 0; i < model.rows(); ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < model.cols(); ++jj) {
      row.push_back(word_to_string(model.value[i][jj]));
    }
    j["values"].push_back(row);
  }
  j["sandwich"] = Json::array();
  for (int jj = 0; jj < model.cols(); ++jj) {
    Json row = Json::array();
    for (int i = 0; i < model.rows(); ++i) {
      row.push_back(word_to_string(model.sandwich[jj][i]));
    }
    j["sandwich"].push_back(row);
  }
  return j;
}

Json normal_form_json(ReesModel const& model, IgNormalForm const& nf) {
  Json j;
  if (nf.kind == IgNormalForm::Kind::Lbar) {
    j["kind"] = "Lbar";
    j["element"] = model.labels[nf.element].display(&model.idx);
  } else {
    j["kind"] = "Kbar";
    j["row"] = model.idx.I[nf.row].display();
    j["value"] = word_to_string(nf.value);
    j["col"] = model.idx.J[nf.col].display();
  }
  j["display"] = model.display(nf);
  return j;
}

Json coset_table_json(CosetTable const& t) {
  Json j;
  j["generators"] = t.generators;
  j["cosets"] = t.n;
  Json action = Json::object();
  for (std::size_t g = 0; g < t.generators.size(); ++g) {
    action[t.generators[g]] = t.action[2 * g];
    action[t.generators[g] + "^-1"] = t.action[2 * g + 1];
  }
  j["action"] = std::move(action);
  Json reps = Json::array();
  for (Word const& w : t.reps) reps.push_back(word_to_string(w));
  j["representatives"] = std::move(reps);
  return j;
}

std::string json_to_string(Json const& j) { return j.dump(2) + "\n"; }

RawBandInput parse_band_table_text(std::string const& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw Error(std::string("band table is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("band table must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw Error("band table needs an integer field 'n'");
  }
  RawBandInput raw;
  raw.n = j["n"].get<int>();
  if (raw.n < 1) throw Error("band table needs n >= 1");
  if (!j.contains("table") || !j["table"].is_array() ||
      j["table"].size() != static_cast<std::size_t>(raw.n)) {
    throw Error("band table needs an n x n array field 'table'");
  }
  for (auto const& row : j["table"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(raw.n)) {
      throw Error("band table rows must have length n");
    }
    std::vector<int> r;
    for (auto const& cell : row) {
      if (!cell.is_number_integer()) {
        throw Error("band table entries must be integers");
      }
      int v = cell.get<int>();
      if (v < 0 || v >= raw.n) {
        throw Error("band table entry " + std::to_string(v) +
                    " is out of range");
      }
      r.push_back(v);
    }
    raw.table.push_back(std::move(r));
  }
  if (j.contains("names")) {
    if (!j["names"].is_array() ||
        j["names"].size() != static_cast<std::size_t>(raw.n)) {
      throw Error("band table field 'names' must list n strings");
    }
    for (auto const& name : j["names"]) {
      if (!name.is_string()) throw Error("band element names must be strings");
      raw.names.push_back(name.get<std::string>());
    }
  }
  return raw;
}

}  // namespace igband
