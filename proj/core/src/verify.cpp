#include "igband/verify.hpp"

#include <algorithm>
#include <set>

#include "igband/coset_table.hpp"
#include "igband/error.hpp"
#include "igband/group_oracle.hpp"
#include "igband/word.hpp"

namespace igband {

std::string verdict_name(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::Pass: return "pass";
    case CheckVerdict::Fail: return "fail";
    case CheckVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

HomCheckResult verify_homomorphism(GroupPresentation const& src,
                                   GroupPresentation const& dst,
                                   GenMap const& images, int max_cosets) {
  HomCheckResult r;
  for (auto const& g : src.generators) {
    if (images.find(g.name) == images.end()) {
      r.verdict = CheckVerdict::Fail;
      r.detail = "no image for generator '" + g.name + "'";
      return r;
    }
  }
  auto oracle = build_group_oracle(dst, max_cosets);
  if (oracle.overflow()) {
    r.verdict = CheckVerdict::Unknown;
    r.detail = "target word problem unknown at the coset limit";
    return r;
  }
  for (auto const& rel : src.relations) {
    Word image = concat(rel.lhs, inverse(rel.rhs));
    for (auto const& [gen, value] : images) {
      image = substitute(image, gen, value);
    }
    if (!oracle.oracle->is_identity(image)) {
      r.verdict = CheckVerdict::Fail;
      r.detail = "relator " +
                 word_to_string(free_reduce(concat(rel.lhs,
                                                   inverse(rel.rhs)))) +
                 " does not map to the identity";
      return r;
    }
  }
  r.verdict = CheckVerdict::Pass;
  r.detail = "all " + std::to_string(src.relations.size()) +
             " relators map to the identity";
  return r;
}

namespace {

std::string relation_key(Relation const& r) {
  return word_to_string(r.lhs) + " = " + word_to_string(r.rhs);
}

CheckVerdict literal_match(GroupPresentation const& input,
                           GroupPresentation const& simplified,
                           std::string& detail) {
  std::set<std::string> in_gens, out_gens;
  for (auto const& g : input.generators) in_gens.insert(g.name);
  for (auto const& g : simplified.generators) out_gens.insert(g.name);
  if (in_gens != out_gens) {
    detail = "generator sets differ";
    return CheckVerdict::Fail;
  }
  std::multiset<std::string> in_rels, out_rels;
  for (auto const& r : input.relations) in_rels.insert(relation_key(r));
  for (auto const& r : simplified.relations) out_rels.insert(relation_key(r));
  if (in_rels != out_rels) {
    std::vector<std::string> missing;
    std::set_difference(in_rels.begin(), in_rels.end(), out_rels.begin(),
                        out_rels.end(), std::back_inserter(missing));
    std::vector<std::string> extra;
    std::set_difference(out_rels.begin(), out_rels.end(), in_rels.begin(),
                        in_rels.end(), std::back_inserter(extra));
    detail = "relation multisets differ";
    if (!missing.empty()) detail += "; missing: " + missing.front();
    if (!extra.empty()) detail += "; extra: " + extra.front();
    return CheckVerdict::Fail;
  }
  detail = "generators and relations match";
  return CheckVerdict::Pass;
}

}  // namespace

CheckVerdict TheoremReport::overall() const {
  CheckVerdict all[] = {presentations_match, forward.verdict,
                        backward.verdict, orders_match};
  for (auto v : all) {
    if (v == CheckVerdict::Fail) return CheckVerdict::Fail;
  }
  for (auto v : all) {
    if (v == CheckVerdict::Unknown) return CheckVerdict::Unknown;
  }
  return CheckVerdict::Pass;
}

TheoremReport verify_theorem(GroupPresentation const& input,
                             IgPresentation const& ig,
                             SimplifyResult const& simplified,
                             int max_cosets) {
  TheoremReport report;
  report.presentations_match = literal_match(input, simplified.presentation,
                                             report.presentations_detail);

  // Forward: each input generator to the image of its cell in the primed
  // base row, read off the traced substitution.
  if (ig.structured) {
    int n = ig.cols() - 2;
    int row0p = n + 1;
    GenMap forward_map;
    bool complete = true;
    std::string gap;
    for (int c = 1; c <= n; ++c) {
      // Column c of the grid is labelled by a generator of the presentation
      // the band was built from; input must present the same alphabet.
      std::string const& gen = ig.col_labels[c];
      std::string cell = ig.gen_names[ig.gen_at(row0p, c)];
      auto it = simplified.trace.substitution.find(cell);
      if (!input.has_generator(gen) ||
          it == simplified.trace.substitution.end()) {
        complete = false;
        gap = input.has_generator(gen)
                  ? "traced substitution is incomplete"
                  : "input lacks the grid generator " + gen;
        break;
      }
      forward_map[gen] = it->second;
    }
    if (!complete) {
      report.forward.verdict = CheckVerdict::Unknown;
      report.forward.detail = gap;
    } else {
      report.forward = verify_homomorphism(input, simplified.presentation,
                                           forward_map, max_cosets);
    }
  } else {
    report.forward.verdict = CheckVerdict::Unknown;
    report.forward.detail = "no canonical map for an unstructured grid";
  }

  // Backward: survivors renamed to input generators map to themselves; the
  // greedy strategy leaves no canonical inverse map.
  bool renamed = !simplified.trace.rename.empty() ||
                 (simplified.trace.strategy_used == Strategy::Paper &&
                  simplified.presentation.generators.empty());
  if (renamed) {
    GenMap backward_map;
    bool in_input = true;
    for (auto const& g : simplified.presentation.generators) {
      if (!input.has_generator(g.name)) {
        in_input = false;
        break;
      }
      backward_map[g.name] = Word{Letter{g.name, 1}};
    }
    if (!in_input) {
      report.backward.verdict = CheckVerdict::Fail;
      report.backward.detail =
          "a surviving generator is not an input generator";
    } else {
      report.backward = verify_homomorphism(simplified.presentation, input,
                                            backward_map, max_cosets);
    }
  } else {
    report.backward.verdict = CheckVerdict::Unknown;
    report.backward.detail =
        "survivors were not renamed to input generators";
  }

  // Independent order computations.  Free input never finishes
  // enumerating, so the verdict rests on the other checks there.
  bool free_input = true;
  for (auto const& rel : input.relations) {
    if (!free_reduce(concat(rel.lhs, inverse(rel.rhs))).empty()) {
      free_input = false;
      break;
    }
  }
  if (free_input && !input.generators.empty()) {
    report.orders_match = CheckVerdict::Unknown;
    report.orders_detail = "input group is free of positive rank";
    return report;
  }
  auto run = [&](GroupPresentation const& p) -> long long {
    auto r = todd_coxeter(p, max_cosets);
    if (r.overflow()) return -1;
    return r.table->n;
  };
  report.input_order = run(input);
  report.subgroup_order = run(ig.to_group_presentation());
  report.simplified_order = run(simplified.presentation);
  if (report.input_order < 0 || report.subgroup_order < 0 ||
             report.simplified_order < 0) {
    report.orders_match = CheckVerdict::Unknown;
    report.orders_detail = "an enumeration overflowed at the coset limit";
  } else if (report.input_order == report.subgroup_order &&
             report.input_order == report.simplified_order) {
    report.orders_match = CheckVerdict::Pass;
    report.orders_detail =
        "all three enumerations give order " +
        std::to_string(report.input_order);
  } else {
    report.orders_match = CheckVerdict::Fail;
    report.orders_detail =
        "orders differ: input " + std::to_string(report.input_order) +
        ", subgroup presentation " + std::to_string(report.subgroup_order) +
        ", simplified " + std::to_string(report.simplified_order);
  }
  return report;
}

}  // namespace igband
