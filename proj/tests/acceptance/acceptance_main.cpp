// Acceptance harness: one line of output per criterion, exit status is the
// number of failed criteria.  Every check is an exact property; the only
// tolerances are the wall-clock bounds stated inline.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "common/builders.hpp"
#include "igband/band.hpp"
#include "igband/error.hpp"
#include "igband/green.hpp"
#include "igband/group_oracle.hpp"
#include "igband/ig_presentation.hpp"
#include "igband/pipeline.hpp"
#include "igband/presentation.hpp"
#include "igband/rees.hpp"
#include "igband/squares.hpp"
#include "igband/tietze.hpp"
#include "igband/verify.hpp"
#include "igband/word.hpp"

using namespace igband;
using igband_tests::GroupTable;
using igband_tests::NamedGroup;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> problems;
  std::string summary;

  void require(bool condition, std::string const& what) {
    if (condition) return;
    ok = false;
    problems.push_back(what);
  }
};

std::string const kF23 = "gens a b c\nrel a*b = c\nrel b*c = a\nrel c*a = b\n";

std::string const kGoldenGrid =
    "    0  a  b  c  inf\n"
    "0   1  1  1  1  1\n"
    "a   1  1  1  1  a\n"
    "b   1  1  1  1  b\n"
    "c   1  1  1  1  c\n"
    "0'  1  a  b  c  1\n"
    "a'  1  a  b  c  a\n"
    "b'  1  a  b  c  b\n"
    "c'  1  a  b  c  c\n";

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// The intermediate stages shared by several criteria.
struct Stages {
  Band band;
  GreenClasses green;
  DClassGrid grid;
  std::vector<SingularSquare> squares;
  IgPresentation ig;
};

Stages stages_for(CayleyFormPresentation const& p) {
  Stages s;
  s.band = build_band(p);
  s.green = green_classes(s.band);
  s.grid = dclass_grid(s.band, s.green, s.band.constant_element(0, 0));
  s.squares = singular_squares(s.band, s.green, s.grid);
  s.ig = maximal_subgroup_presentation(s.band, s.green, s.grid, s.squares);
  return s;
}

std::multiset<std::string> relation_keys(GroupPresentation const& p) {
  std::multiset<std::string> keys;
  for (auto const& r : p.relations) {
    keys.insert(word_to_string(r.lhs) + " = " + word_to_string(r.rhs));
  }
  return keys;
}

// The named cases of the size-formula suite: the trivial presentation,
// free groups of rank up to 3, and three small Cayley tables; the rest are
// random triple presentations with up to 5 generators and 10 relations.
std::vector<std::pair<std::string, GroupPresentation>> size_suite() {
  std::vector<std::pair<std::string, GroupPresentation>> suite;
  suite.emplace_back("trivial", parse_group_presentation(""));
  suite.emplace_back("free1", parse_group_presentation("gens a\n"));
  suite.emplace_back("free2", parse_group_presentation("gens a b\n"));
  suite.emplace_back("free3", parse_group_presentation("gens a b c\n"));
  suite.emplace_back(
      "Z2 table",
      igband_tests::cayley_table_presentation(igband_tests::cyclic(2)));
  suite.emplace_back(
      "Z3 table",
      igband_tests::cayley_table_presentation(igband_tests::cyclic(3)));
  suite.emplace_back(
      "S3 table",
      igband_tests::cayley_table_presentation(igband_tests::symmetric3()));

  std::mt19937 rng(20260821);
  char const* names[5] = {"a", "b", "c", "d", "e"};
  for (int round = 0; round < 14; ++round) {
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    int max_rels = std::min(10, n * n * n);
    int r = std::uniform_int_distribution<int>(0, max_rels)(rng);
    std::vector<int> triples(static_cast<std::size_t>(n) * n * n);
    for (std::size_t t = 0; t < triples.size(); ++t) {
      triples[t] = static_cast<int>(t);
    }
    std::shuffle(triples.begin(), triples.end(), rng);
    GroupPresentation p;
    for (int g = 0; g < n; ++g) p.generators.push_back(igband_tests::gen(names[g]));
    for (int t = 0; t < r; ++t) {
      int code = triples[static_cast<std::size_t>(t)];
      Relation rel;
      rel.lhs = make_word({{names[code / (n * n)], 1},
                           {names[(code / n) % n], 1}});
      rel.rhs = make_word({{names[code % n], 1}});
      p.relations.push_back(std::move(rel));
    }
    std::ostringstream label;
    label << "random " << n << "x" << r;
    suite.emplace_back(label.str(), std::move(p));
  }
  return suite;
}

bool is_group_table(GroupTable const& t, std::string* why) {
  int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i) {
    if (t[0][i] != i || t[i][0] != i) {
      *why = "element 0 is not an identity";
      return false;
    }
  }
  for (int i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (int j = 0; j < n; ++j) has_inverse |= t[i][j] == 0;
    if (!has_inverse) {
      *why = "element " + std::to_string(i) + " has no inverse";
      return false;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (t[t[i][j]][k] != t[i][t[j][k]]) {
          *why = "associativity fails";
          return false;
        }
      }
    }
  }
  return true;
}

// Criterion 1: the golden run.  One fixed input, every reported quantity
// pinned exactly, grid rendering byte-identical, under 10 seconds.
Outcome criterion1() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  auto report = run_pipeline(parse_group_presentation(kF23));
  double elapsed = seconds_since(start);

  out.require(report.grid.rows() == 8 && report.grid.cols() == 5,
              "grid shape is not 8x5");
  out.require(report.ig.gen_names.size() == 40, "generator count is not 40");
  out.require(report.band.size == 50, "band size is not 50");
  int lr = 0, ud = 0;
  for (auto const& s : report.squares) {
    if (s.kind == SquareKind::LeftRight) ++lr;
    if (s.kind == SquareKind::UpDown) ++ud;
  }
  out.require(lr == 10, "left-right square count is not 10");
  out.require(ud == 72, "up-down square count is not 72");
  out.require(relation_keys(report.simplified.presentation) ==
                  relation_keys(report.input),
              "final relations differ from the input");
  bool orders = report.theorem && report.theorem->input_order == 8 &&
                report.theorem->subgroup_order == 8 &&
                report.theorem->simplified_order == 8 &&
                report.theorem->overall() == CheckVerdict::Pass;
  out.require(orders, "enumeration does not give order 8 on both sides");
  out.require(render_grid_table(report.table) == kGoldenGrid,
              "grid table is not byte-identical");
  out.require(elapsed < 10.0, "run took " + fmt_seconds(elapsed));
  out.summary = "golden run matched, " + fmt_seconds(elapsed);
  return out;
}

// Criterion 2: the band size formula (2n+2)(n+2) + 1 + 2n + r, exactly,
// over 21 presentations.
Outcome criterion2() {
  Outcome out;
  auto suite = size_suite();
  for (auto const& [label, p] : suite) {
    auto conv = to_cayley_form(p);
    Band b = build_band(conv.presentation);
    int n = static_cast<int>(conv.presentation.generators.size());
    int r = static_cast<int>(conv.presentation.relations.size());
    int expected = (2 * n + 2) * (n + 2) + 1 + 2 * n + r;
    if (b.size != expected) {
      out.require(false, label + ": size " + std::to_string(b.size) +
                             " != " + std::to_string(expected));
    }
  }
  out.summary = "size formula exact on " + std::to_string(suite.size()) +
                " presentations";
  return out;
}

// Criterion 3: the full theorem on a Cayley-table presentation of every
// group of order at most 8, under 2 minutes in total.
Outcome criterion3() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  auto groups = igband_tests::groups_up_to_order_8();
  for (auto const& g : groups) {
    std::string why;
    if (!is_group_table(g.table, &why)) {
      out.require(false, g.name + ": " + why);
      continue;
    }
    auto p = igband_tests::cayley_table_presentation(g.table);
    auto conv = to_cayley_form(p);
    Stages s = stages_for(conv.presentation);
    SimplifyResult simplified = simplify(s.ig);
    TheoremReport report = verify_theorem(p, s.ig, simplified);
    long long order = static_cast<long long>(g.table.size());
    if (report.overall() != CheckVerdict::Pass) {
      out.require(false, g.name + ": verdict " +
                             verdict_name(report.overall()));
    } else if (report.input_order != order ||
               report.subgroup_order != order ||
               report.simplified_order != order) {
      out.require(false, g.name + ": orders do not equal " +
                             std::to_string(order));
    }
  }
  double elapsed = seconds_since(start);
  out.require(elapsed < 120.0, "suite took " + fmt_seconds(elapsed));
  out.summary = std::to_string(groups.size()) +
                " groups verified end to end, " + fmt_seconds(elapsed);
  return out;
}

// Criterion 4: the square enumeration agrees with the definition-level
// oracle on every canonical quadruple, over the criterion-2 bands and ten
// random table bands; on presentation bands every upper element witnesses
// exactly one left-right square.
Outcome criterion4() {
  Outcome out;
  int quadruples = 0;
  int bands = 0;

  auto check_band = [&](std::string const& label, Band const& b,
                        bool presentation_built) {
    ++bands;
    GreenClasses green = green_classes(b);
    int dmin = 0;
    for (int d = 1; d < green.n_d; ++d) dmin = green.meet(dmin, d);
    int base = b.size;
    for (int e : green.d_members[dmin]) base = std::min(base, e);
    DClassGrid grid = dclass_grid(b, green, base);
    auto squares = singular_squares(b, green, grid);

    std::set<std::array<int, 4>> found;
    for (auto const& s : squares) found.insert({s.i, s.k, s.j, s.l});
    for (int i = 0; i < grid.rows(); ++i) {
      for (int k = i + 1; k < grid.rows(); ++k) {
        for (int j = 0; j < grid.cols(); ++j) {
          for (int l = j + 1; l < grid.cols(); ++l) {
            ++quadruples;
            bool enumerated = found.count({i, k, j, l}) > 0;
            if (is_singular_square_oracle(b, green, grid, i, k, j, l) !=
                enumerated) {
              out.require(false, label + ": oracle disagrees at (" +
                                     std::to_string(i) + "," +
                                     std::to_string(k) + "," +
                                     std::to_string(j) + "," +
                                     std::to_string(l) + ")");
            }
          }
        }
      }
    }

    if (!presentation_built) return;
    std::vector<int> witness_count(static_cast<std::size_t>(b.size), 0);
    for (auto const& s : squares) {
      if (s.kind != SquareKind::LeftRight) continue;
      for (int w : s.witnesses) ++witness_count[static_cast<std::size_t>(w)];
    }
    for (int e : b.upper) {
      if (witness_count[static_cast<std::size_t>(e)] != 1) {
        out.require(false, label + ": upper element " + b.labels[e].display(
                               b.index_sets ? &*b.index_sets : nullptr) +
                               " witnesses " +
                               std::to_string(witness_count[
                                   static_cast<std::size_t>(e)]) +
                               " left-right squares");
      }
    }
  };

  for (auto const& [label, p] : size_suite()) {
    auto conv = to_cayley_form(p);
    check_band(label, build_band(conv.presentation), true);
  }
  for (unsigned seed = 1; seed <= 10; ++seed) {
    auto raw = igband_tests::random_retraction_band(seed);
    Band b = band_from_table(raw.n, raw.table);
    if (!is_band(b).ok()) {
      out.require(false, "seed " + std::to_string(seed) +
                             ": table is not a band");
      continue;
    }
    if (b.size > 60) {
      out.require(false, "seed " + std::to_string(seed) +
                             ": band has more than 60 elements");
      continue;
    }
    check_band("retraction seed " + std::to_string(seed), b, false);
  }

  out.summary = "oracle agreement on " + std::to_string(quadruples) +
                " quadruples across " + std::to_string(bands) + " bands";
  return out;
}

// Criterion 5: the word-problem model, for the band of every criterion-3
// group: embedded kernel letters are idempotent, embedding respects every
// basic pair of constants, the base cell carries a copy of the group, and
// the pinned two-letter product comes out right on the golden input.
Outcome criterion5() {
  Outcome out;
  int groups = 0;

  auto check_model = [&](std::string const& label, Band const& b,
                         ReesModel const& m, long long order) {
    if (m.oracle.order() != order) {
      out.require(false, label + ": group order " +
                             std::to_string(m.oracle.order()) + " != " +
                             std::to_string(order));
      return;
    }
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        IgNormalForm e = m.embed(m.constant_id[i][j]);
        if (!(m.rees_multiply(e, e) == e)) {
          out.require(false, label + ": embedded idempotent fails at (" +
                                 std::to_string(i) + "," +
                                 std::to_string(j) + ")");
        }
      }
    }
    // Basic pairs within the kernel.
    for (int x : b.kernel) {
      for (int y : b.kernel) {
        int xy = b.mul(x, y);
        int yx = b.mul(y, x);
        if (xy != x && xy != y && yx != x && yx != y) continue;
        if (!(m.normal_form({x, y}) == m.normal_form({xy}))) {
          out.require(false, label + ": embedding breaks a basic pair");
        }
      }
    }
    // The base H-class is a copy of the group: the sandwich entry there is
    // trivial, so Rees products reduce to oracle products.
    auto elements = m.oracle.elements();
    if (static_cast<long long>(elements.size()) != order) {
      out.require(false, label + ": base H-class order mismatch");
    }
    for (auto const& g : elements) {
      for (auto const& h : elements) {
        IgNormalForm a;
        a.row = 0;
        a.col = 0;
        a.value = g;
        IgNormalForm bb = a;
        bb.value = h;
        IgNormalForm p = m.rees_multiply(a, bb);
        if (p.row != 0 || p.col != 0 || !(p.value == m.oracle.multiply(g, h))) {
          out.require(false, label + ": base cell is not a group copy");
          break;
        }
      }
    }
  };

  for (auto const& g : igband_tests::groups_up_to_order_8()) {
    auto p = igband_tests::cayley_table_presentation(g.table);
    auto conv = to_cayley_form(p);
    Band b = build_band(conv.presentation);
    auto built = build_group_oracle(conv.presentation.to_group_presentation());
    if (built.overflow()) {
      out.require(false, g.name + ": oracle overflow");
      continue;
    }
    ReesModel m = build_rees_model(b, std::move(*built.oracle));
    check_model(g.name, b, m, static_cast<long long>(g.table.size()));
    ++groups;
  }

  // The pinned product on the golden input: the constants at (0, a) and
  // (a', inf) multiply to the one at (0, inf).
  auto conv = to_cayley_form(parse_group_presentation(kF23));
  Band b = build_band(conv.presentation);
  auto built = build_group_oracle(conv.presentation.to_group_presentation());
  out.require(!built.overflow(), "golden input oracle overflow");
  if (!built.overflow()) {
    ReesModel m = build_rees_model(b, std::move(*built.oracle));
    auto const& idx = *b.index_sets;
    int e_0a = m.constant_id[idx.row_zero()][idx.col_gen(0)];
    int e_apinf = m.constant_id[idx.row_gen_primed(0)][idx.col_inf()];
    int e_0inf = m.constant_id[idx.row_zero()][idx.col_inf()];
    out.require(m.normal_form({e_0a, e_apinf}) == m.embed(e_0inf),
                "pinned product (0,a)(a',inf) is not (0,inf)");
    out.require(m.display(m.embed(e_0inf)) == "Kbar(0, 1, inf)",
                "pinned product renders wrong");
    check_model("golden", b, m, 8);
    ++groups;
  }

  out.summary = "model properties hold for " + std::to_string(groups) +
                " instances";
  return out;
}

// Criterion 6: the enumerator itself, pinned on four orders, invariant
// under relator permutation.
Outcome criterion6() {
  Outcome out;

  auto order_of = [&](GroupPresentation const& p) -> long long {
    auto r = todd_coxeter(p);
    if (r.overflow()) return -1;
    return r.table->n;
  };

  out.require(order_of(parse_group_presentation("")) == 1,
              "empty presentation is not order 1");
  auto s3 = parse_group_presentation(
      "gens r s\nrel r^3 = 1\nrel s^2 = 1\nrel r*s*r*s = 1\n");
  out.require(order_of(s3) == 6, "S3 is not order 6");
  auto f23 = parse_group_presentation(kF23);
  out.require(order_of(f23) == 8, "the golden input is not order 8");
  auto z3conv = to_cayley_form(parse_group_presentation("gens a\nrel a^3 = 1\n"))
                    .presentation.to_group_presentation();
  out.require(order_of(z3conv) == 3, "converted Z3 is not order 3");

  std::mt19937 rng(6);
  for (auto const* base : {&s3, &f23, &z3conv}) {
    auto reference = todd_coxeter(*base);
    for (int round = 0; round < 4; ++round) {
      auto shuffled = *base;
      std::shuffle(shuffled.relations.begin(), shuffled.relations.end(), rng);
      auto r = todd_coxeter(shuffled);
      if (r.overflow() || r.table->n != reference.table->n ||
          r.table->action != reference.table->action) {
        out.require(false, "relator permutation changed the result");
      }
    }
  }

  out.summary = "orders 1/6/8/3 pinned, permutation invariant";
  return out;
}

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5, criterion6,
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i]();
    } catch (std::exception const& e) {
      out.ok = false;
      out.problems.push_back(std::string("exception: ") + e.what());
    }
    if (out.ok) {
      std::printf("criterion %zu: pass (%s)\n", i + 1, out.summary.c_str());
    } else {
      ++failures;
      std::printf("criterion %zu: FAIL\n", i + 1);
      for (auto const& p : out.problems) {
        std::printf("  - %s\n", p.c_str());
      }
    }
  }
  if (failures == 0) {
    std::printf("all %zu criteria pass\n", criteria.size());
  } else {
    std::printf("%d of %zu criteria FAILED\n", failures, criteria.size());
  }
  return failures;
}
