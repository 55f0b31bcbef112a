#include "igband/tietze.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "igband/coset_table.hpp"
#include "igband/error.hpp"
#include "igband/word.hpp"

namespace igband {

std::string strategy_name(Strategy s) {
  return s == Strategy::Paper ? "paper" : "greedy";
}

namespace {

Word relator_of(Relation const& r) {
  return free_reduce(concat(r.lhs, inverse(r.rhs)));
}

struct State {
  std::vector<std::string> gens;
  std::vector<Relation> rels;
  std::vector<int> origin;  // producing square per relation, -1 for base
  // Pinned relations ride through every cleanup.  The fixed schedule pins
  // the product-form square relations: each must reach the end once per
  // originating square even when several collapse to the same relator.
  std::vector<char> pinned;
  SimplificationTrace trace;

  bool checkpoints_on = false;
  int interval = 10;
  int max_cosets = 100000;
  long long baseline_order = -1;
  int eliminations = 0;

  GroupPresentation snapshot() const {
    GroupPresentation p;
    for (auto const& g : gens) {
      p.generators.push_back(GenSymbol{g, GenOrigin::User, "", 0});
    }
    p.relations = rels;
    return p;
  }

  int find_witness(std::string const& gen, Word const& defining) const {
    Word target = canonical_relator(
        concat(Word{Letter{gen, 1}}, inverse(defining)));
    int fallback = -1;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (canonical_relator(relator_of(rels[i])) != target) continue;
      if (!pinned[i]) return static_cast<int>(i);
      if (fallback < 0) fallback = static_cast<int>(i);
    }
    return fallback;
  }

  // Drops relations whose relator became trivial and later copies of a
  // relator already present.  Pinned relations always stay and their
  // relators count as present; order is preserved.
  void cleanup(TraceStep& step) {
    std::set<Word> seen;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (pinned[i]) seen.insert(canonical_relator(relator_of(rels[i])));
    }
    std::vector<Relation> kept;
    std::vector<int> kept_origin;
    std::vector<char> kept_pinned;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (!pinned[i]) {
        Word key = canonical_relator(relator_of(rels[i]));
        if (key.empty()) {
          ++step.trivial_removed;
          continue;
        }
        if (!seen.insert(key).second) {
          ++step.duplicates_removed;
          continue;
        }
      }
      kept.push_back(std::move(rels[i]));
      kept_origin.push_back(origin[i]);
      kept_pinned.push_back(pinned[i]);
    }
    rels = std::move(kept);
    origin = std::move(kept_origin);
    pinned = std::move(kept_pinned);
  }

  void checkpoint() {
    if (!checkpoints_on || interval <= 0) return;
    if (eliminations % interval != 0) return;
    auto r = todd_coxeter(snapshot(), max_cosets);
    if (r.overflow()) {
      trace.notes.push_back("checkpoint after elimination " +
                            std::to_string(eliminations) +
                            " skipped: enumeration overflow");
      return;
    }
    ++trace.checkpoints_run;
    if (r.table->n != baseline_order) {
      throw Error("simplification checkpoint failed: group order " +
                  std::to_string(r.table->n) + " differs from " +
                  std::to_string(baseline_order));
    }
  }

  void eliminate(std::string const& gen, Word const& defining,
                 std::map<std::string, Word>& subst) {
    if (contains_generator(defining, gen)) {
      throw Error("defining word for '" + gen + "' mentions the generator");
    }
    auto pos = std::find(gens.begin(), gens.end(), gen);
    if (pos == gens.end()) throw Error("unknown generator '" + gen + "'");
    int w = find_witness(gen, defining);
    if (w < 0) {
      throw Error("no relation witnesses eliminating '" + gen + "' as " +
                  word_to_string(defining));
    }
    rels.erase(rels.begin() + w);
    origin.erase(origin.begin() + w);
    pinned.erase(pinned.begin() + w);
    for (auto& rel : rels) {
      rel.lhs = free_reduce(substitute(rel.lhs, gen, defining));
      rel.rhs = free_reduce(substitute(rel.rhs, gen, defining));
    }
    gens.erase(pos);
    for (auto& [orig, value] : subst) {
      value = free_reduce(substitute(value, gen, defining));
    }
    TraceStep step;
    step.kind = TraceStep::Kind::Eliminate;
    step.gen = gen;
    step.defining = defining;
    step.detail = "eliminate " + gen + " := " + word_to_string(defining);
    cleanup(step);
    step.gens_after = gens.size();
    step.relations_after = rels.size();
    trace.steps.push_back(std::move(step));
    ++eliminations;
    checkpoint();
  }
};

// One greedy elimination candidate: a generator occurring exactly once in a
// relator, ranked by defining-word length, then generator position, then
// relation position.
struct Candidate {
  std::size_t length;
  int gen_index;
  int rel_index;
  std::string gen;
  Word defining;
};

std::optional<Candidate> best_candidate(State const& st, int word_limit) {
  std::optional<Candidate> best;
  for (std::size_t ri = 0; ri < st.rels.size(); ++ri) {
    Word r = cyclic_reduce(relator_of(st.rels[ri]));
    if (r.empty()) continue;
    std::map<std::string, int> count;
    for (auto const& l : r) ++count[l.gen];
    for (std::size_t pos = 0; pos < r.size(); ++pos) {
      if (count[r[pos].gen] != 1) continue;
      Word tail(r.begin() + pos + 1, r.end());
      tail.insert(tail.end(), r.begin(), r.begin() + pos);
      Word defining = r[pos].exp > 0 ? inverse(tail) : tail;
      if (static_cast<int>(defining.size()) > word_limit) continue;
      auto it = std::find(st.gens.begin(), st.gens.end(), r[pos].gen);
      int gi = static_cast<int>(it - st.gens.begin());
      Candidate c{defining.size(), gi, static_cast<int>(ri), r[pos].gen,
                  std::move(defining)};
      if (!best ||
          std::tie(c.length, c.gen_index, c.rel_index) <
              std::tie(best->length, best->gen_index, best->rel_index)) {
        best = std::move(c);
      }
    }
  }
  return best;
}

void run_greedy(State& st, std::map<std::string, Word>& subst,
                int word_limit) {
  while (auto c = best_candidate(st, word_limit)) {
    st.eliminate(c->gen, c->defining, subst);
  }
}

// The fixed schedule for the natural grid of a band built from a group
// presentation with n group generators: rows are 0, the generators, 0', the
// primed generators; columns are 0, the generators, the sink column.
void run_paper_schedule(IgPresentation const& ig, State& st,
                        std::map<std::string, Word>& subst) {
  int rows = ig.rows();
  int cols = ig.cols();
  int n = cols - 2;
  int row0p = n + 1;
  int colinf = cols - 1;
  auto name = [&](int r, int c) { return ig.gen_names[ig.gen_at(r, c)]; };
  auto one = [&](std::string const& g) { return Word{Letter{g, 1}}; };

  // Base column, then the rest of the base row.
  for (int r = 0; r < rows; ++r) st.eliminate(name(r, 0), {}, subst);
  for (int c = 1; c < cols; ++c) st.eliminate(name(0, c), {}, subst);
  // Unprimed block: trivial against the base row.
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) st.eliminate(name(r, c), {}, subst);
  }
  // Primed block: equal to row 0' in the same column.
  for (int r = row0p + 1; r < rows; ++r) {
    for (int c = 1; c <= n; ++c) {
      st.eliminate(name(r, c), one(name(row0p, c)), subst);
    }
  }
  // Sink column, top to bottom of the witness families.
  st.eliminate(name(row0p, colinf), {}, subst);
  for (int a = 1; a <= n; ++a) {
    st.eliminate(name(row0p + a, colinf), one(name(row0p, a)), subst);
  }
  for (int a = 1; a <= n; ++a) {
    st.eliminate(name(a, colinf), one(name(row0p, a)), subst);
  }
}

// Surviving relations on the paper path come from squares witnessed by the
// relation layer; rewrite each into product form and order them by witness.
void reorient_survivors(IgPresentation const& ig, State& st) {
  int n = ig.cols() - 2;
  int row0p = n + 1;
  auto name = [&](int r, int c) { return ig.gen_names[ig.gen_at(r, c)]; };

  std::vector<std::size_t> order(st.rels.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto witness_id = [&](std::size_t idx) {
    int sq = st.origin[idx];
    if (sq < 0) return -1;
    return ig.squares[sq].witnesses.front();
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return witness_id(a) < witness_id(b);
                   });
  std::vector<Relation> rels;
  std::vector<int> origin;
  std::vector<char> pinned;
  for (auto idx : order) {
    rels.push_back(std::move(st.rels[idx]));
    origin.push_back(st.origin[idx]);
    pinned.push_back(st.pinned[idx]);
  }
  st.rels = std::move(rels);
  st.origin = std::move(origin);
  st.pinned = std::move(pinned);

  auto col_of = [&](std::string const& gen) {
    for (int c = 1; c <= n; ++c) {
      if (ig.col_labels[c] == gen) return c;
    }
    return -1;
  };
  for (std::size_t i = 0; i < st.rels.size(); ++i) {
    int sq = st.origin[i];
    ElementLabel const* label =
        sq >= 0 ? &ig.square_witness[sq] : nullptr;
    if (!label || label->kind != ElementLabel::Kind::TypeR) {
      st.trace.notes.push_back(
          "surviving relation " + std::to_string(i) +
          " has no product-form witness; left as eliminated");
      continue;
    }
    int ca = col_of(label->a);
    int cb = col_of(label->b);
    int cc = col_of(label->c);
    if (ca < 0 || cb < 0 || cc < 0) {
      st.trace.notes.push_back(
          "surviving relation " + std::to_string(i) +
          " names a generator outside the column set; left as eliminated");
      continue;
    }
    Relation desired;
    desired.lhs = {Letter{name(row0p, ca), 1}, Letter{name(row0p, cb), 1}};
    desired.rhs = {Letter{name(row0p, cc), 1}};
    if (canonical_relator(relator_of(desired)) !=
        canonical_relator(relator_of(st.rels[i]))) {
      st.trace.notes.push_back(
          "surviving relation " + std::to_string(i) +
          " does not match its witnessing product; left as eliminated");
      continue;
    }
    TraceStep step;
    step.kind = TraceStep::Kind::Reorient;
    step.detail = "reorient to " + word_to_string(desired.lhs) + " = " +
                  word_to_string(desired.rhs);
    step.gens_after = st.gens.size();
    step.relations_after = st.rels.size();
    st.rels[i] = std::move(desired);
    st.trace.steps.push_back(std::move(step));
  }
}

void rename_survivors(IgPresentation const& ig, State& st,
                      std::map<std::string, Word>& subst) {
  int n = ig.cols() - 2;
  int row0p = n + 1;
  std::vector<std::string> expected;
  for (int c = 1; c <= n; ++c) {
    expected.push_back(ig.gen_names[ig.gen_at(row0p, c)]);
  }
  if (st.gens != expected) {
    st.trace.notes.push_back(
        "survivors differ from the expected cell generators; skipping the "
        "final rename");
    return;
  }
  std::map<std::string, std::string> m;
  std::set<std::string> targets;
  for (int c = 1; c <= n; ++c) {
    std::string target = ig.col_labels[c];
    if (!targets.insert(target).second) {
      st.trace.notes.push_back("duplicate rename target '" + target +
                               "'; skipping the final rename");
      return;
    }
    m[expected[c - 1]] = target;
  }
  for (auto& g : st.gens) {
    TraceStep step;
    step.kind = TraceStep::Kind::Rename;
    step.gen = g;
    step.defining = {Letter{m.at(g), 1}};
    step.detail = "rename " + g + " -> " + m.at(g);
    g = m.at(g);
    step.gens_after = st.gens.size();
    step.relations_after = st.rels.size();
    st.trace.steps.push_back(std::move(step));
  }
  auto rename_word = [&](Word& w) {
    for (auto& l : w) {
      auto it = m.find(l.gen);
      if (it != m.end()) l.gen = it->second;
    }
  };
  for (auto& rel : st.rels) {
    rename_word(rel.lhs);
    rename_word(rel.rhs);
  }
  for (auto& [orig, value] : subst) rename_word(value);
  st.trace.rename = std::move(m);
}

}  // namespace

SimplifyResult simplify(IgPresentation const& ig,
                        SimplifyOptions const& options) {
  State st;
  st.gens = ig.gen_names;
  st.rels = ig.relations;
  st.origin = ig.relation_square;
  st.pinned.assign(st.rels.size(), 0);
  st.interval = options.checkpoint_interval;
  st.max_cosets = options.max_cosets;

  Strategy strategy = options.strategy;
  if (strategy == Strategy::Paper && !ig.structured) {
    st.trace.notes.push_back(
        "input grid is not the natural grid of a presentation-built band; "
        "using the greedy strategy");
    strategy = Strategy::Greedy;
  }
  st.trace.strategy_used = strategy;
  if (strategy == Strategy::Paper) {
    for (std::size_t i = 0; i < st.rels.size(); ++i) {
      int sq = st.origin[i];
      if (sq >= 0 &&
          ig.square_witness[sq].kind == ElementLabel::Kind::TypeR) {
        st.pinned[i] = 1;
      }
    }
  }

  int n = ig.cols() - 2;
  bool auto_on = ig.structured && n <= 4;
  st.checkpoints_on = options.checkpoints.value_or(auto_on);
  if (st.checkpoints_on) {
    auto baseline = todd_coxeter(ig.to_group_presentation(),
                                 options.max_cosets);
    if (baseline.overflow()) {
      st.trace.notes.push_back(
          "checkpoints disabled: starting enumeration overflowed");
      st.checkpoints_on = false;
    } else {
      st.baseline_order = baseline.table->n;
    }
  }

  std::map<std::string, Word> subst;
  for (auto const& g : ig.gen_names) {
    subst.emplace(g, Word{Letter{g, 1}});
  }

  if (strategy == Strategy::Paper) {
    run_paper_schedule(ig, st, subst);
    reorient_survivors(ig, st);
    rename_survivors(ig, st, subst);
  } else {
    run_greedy(st, subst, options.greedy_word_limit);
  }

  SimplifyResult result;
  result.presentation = st.snapshot();
  result.presentation.validate();
  st.trace.substitution = std::move(subst);
  st.trace.survivors = st.gens;
  result.trace = std::move(st.trace);
  return result;
}

GroupPresentation apply_rename(GroupPresentation p,
                               std::map<std::string, std::string> const& m) {
  auto rename = [&](std::string& name) {
    auto it = m.find(name);
    if (it != m.end()) name = it->second;
  };
  for (auto& g : p.generators) rename(g.name);
  for (auto& rel : p.relations) {
    for (auto& l : rel.lhs) rename(l.gen);
    for (auto& l : rel.rhs) rename(l.gen);
  }
  p.validate();
  return p;
}

GridTable grid_table(IgPresentation const& ig,
                     SimplificationTrace const& trace) {
  GridTable t;
  t.row_labels = ig.row_labels;
  t.col_labels = ig.col_labels;
  t.entries.assign(ig.rows(), std::vector<std::string>(ig.cols()));
  for (int r = 0; r < ig.rows(); ++r) {
    for (int c = 0; c < ig.cols(); ++c) {
      auto it = trace.substitution.find(ig.gen_names[ig.gen_at(r, c)]);
      t.entries[r][c] =
          it == trace.substitution.end() ? "?" : word_to_string(it->second);
    }
  }
  return t;
}

std::string render_grid_table(GridTable const& t) {
  std::size_t label_w = 0;
  for (auto const& r : t.row_labels) label_w = std::max(label_w, r.size());
  std::vector<std::size_t> col_w(t.col_labels.size());
  for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
    col_w[c] = t.col_labels[c].size();
    for (auto const& row : t.entries) {
      col_w[c] = std::max(col_w[c], row[c].size());
    }
  }
  auto pad = [](std::string const& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  std::string out;
  std::string line = pad("", label_w);
  for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
    line += "  " + pad(t.col_labels[c], col_w[c]);
  }
  out += rstrip(line) + "\n";
  for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
    line = pad(t.row_labels[r], label_w);
    for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
      line += "  " + pad(t.entries[r][c], col_w[c]);
    }
    out += rstrip(line) + "\n";
  }
  return out;
}

}  // namespace igband
