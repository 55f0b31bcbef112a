#include "igband/band.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "igband/error.hpp"

namespace igband {

TransformationPair compose_pairs(TransformationPair const& x,
                                 TransformationPair const& y) {
  TransformationPair out;
  out.sigma.resize(x.sigma.size());
  out.tau.resize(x.tau.size());
  // sigma parts act on the left, tau parts on the right:
  // (x*y).sigma(i) = x.sigma(y.sigma(i)) and (j)(x*y).tau = ((j)x.tau)y.tau.
  for (size_t i = 0; i < out.sigma.size(); ++i) {
    out.sigma[i] = x.sigma[y.sigma[i]];
  }
  for (size_t j = 0; j < out.tau.size(); ++j) {
    out.tau[j] = y.tau[x.tau[j]];
  }
  return out;
}

bool is_idempotent_pair(TransformationPair const& p) {
  for (size_t i = 0; i < p.sigma.size(); ++i) {
    if (p.sigma[p.sigma[i]] != p.sigma[i]) {
      return false;
    }
  }
  for (size_t j = 0; j < p.tau.size(); ++j) {
    if (p.tau[p.tau[j]] != p.tau[j]) {
      return false;
    }
  }
  return true;
}

std::string ElementLabel::display(IndexSets const* sets) const {
  switch (kind) {
    case Kind::Constant: {
      std::string r = sets ? sets->I[row].display() : std::to_string(row);
      std::string c = sets ? sets->J[col].display() : std::to_string(col);
      return "K(" + r + "," + c + ")";
    }
    case Kind::TypeZ:
      return "L(Z)";
    case Kind::TypeG:
      return "L(G:" + a + ")";
    case Kind::TypeGbar:
      return "L(Gbar:" + a + ")";
    case Kind::TypeR:
      return "L(R:" + a + "," + b + "," + c + ")";
    case Kind::Raw:
      return raw;
  }
  return raw;
}

std::string ElementLabel::token(IndexSets const* sets) const {
  switch (kind) {
    case Kind::Constant: {
      std::string r = sets ? sets->I[row].token() : std::to_string(row);
      std::string c = sets ? sets->J[col].token() : std::to_string(col);
      return "K_" + r + "_" + c;
    }
    case Kind::TypeZ:
      return "L_Z";
    case Kind::TypeG:
      return "L_G_" + a;
    case Kind::TypeGbar:
      return "L_Gbar_" + a;
    case Kind::TypeR:
      return "L_R_" + a + "_" + b + "_" + c;
    case Kind::Raw:
      return raw;
  }
  return raw;
}

int Band::constant_element(int row, int col) const {
  if (!index_sets) {
    throw Error("band has no index sets");
  }
  return row * static_cast<int>(index_sets->J.size()) + col;
}

int Band::element_by_label(std::string const& label) const {
  IndexSets const* sets = index_sets ? &*index_sets : nullptr;
  for (int e = 0; e < size; ++e) {
    if (labels[e].display(sets) == label || labels[e].token(sets) == label) {
      return e;
    }
  }
  return -1;
}

int multiply(Band const& b, int x, int y) {
  if (x < 0 || x >= b.size || y < 0 || y >= b.size) {
    throw Error("element index out of range");
  }
  return b.mul(x, y);
}

namespace {

TransformationPair constant_pair(IndexSets const& s, int row, int col) {
  TransformationPair p;
  p.sigma.assign(s.I.size(), row);
  p.tau.assign(s.J.size(), col);
  return p;
}

// The upper-class pairs are determined by the cross-section {x, y'} that
// sigma maps onto (A u {0} to x, the primed copy to y') and by the image of
// inf under tau; tau fixes every unprimed column.
TransformationPair upper_pair(IndexSets const& s, int unprimed_image_row,
                              int primed_image_row, int inf_image_col) {
  TransformationPair p;
  p.sigma.resize(s.I.size());
  for (int i = 0; i < static_cast<int>(s.I.size()); ++i) {
    p.sigma[i] = s.row_is_primed(i) ? primed_image_row : unprimed_image_row;
  }
  p.tau.resize(s.J.size());
  for (int j = 0; j < static_cast<int>(s.J.size()); ++j) {
    p.tau[j] = j;
  }
  p.tau[s.col_inf()] = inf_image_col;
  return p;
}

}  // namespace

Band build_band(CayleyFormPresentation const& p) {
  auto violations = validate_cayley_form(p);
  for (auto const& v : violations) {
    if (v.severity == CayleyViolation::Severity::Error) {
      throw Error("invalid Cayley-form presentation: " + v.message);
    }
  }
  CayleyFormPresentation const cf = dedup_triples(p);

  Band b;
  b.index_sets = IndexSets::from_generators(cf.generators);
  IndexSets const& s = *b.index_sets;
  int const ni = static_cast<int>(s.I.size());
  int const nj = static_cast<int>(s.J.size());

  auto gen_pos = [&cf](std::string const& name) {
    for (size_t g = 0; g < cf.generators.size(); ++g) {
      if (cf.generators[g].name == name) {
        return static_cast<int>(g);
      }
    }
    throw Error("triple component is not a declared generator: " + name);
  };

  // Constant pairs, row-major.
  for (int i = 0; i < ni; ++i) {
    for (int j = 0; j < nj; ++j) {
      b.pairs.push_back(constant_pair(s, i, j));
      ElementLabel l;
      l.kind = ElementLabel::Kind::Constant;
      l.row = i;
      l.col = j;
      b.labels.push_back(l);
      b.kernel.push_back(static_cast<int>(b.pairs.size()) - 1);
    }
  }

  // Upper class: Z, then G(a), Gbar(a) for each generator, then R(rho).
  auto push_upper = [&b](TransformationPair pair, ElementLabel label) {
    b.pairs.push_back(std::move(pair));
    b.labels.push_back(std::move(label));
    b.upper.push_back(static_cast<int>(b.pairs.size()) - 1);
  };

  {
    ElementLabel l;
    l.kind = ElementLabel::Kind::TypeZ;
    push_upper(upper_pair(s, s.row_zero(), s.row_zero_primed(), s.col_zero()),
               l);
  }
  for (int g = 0; g < s.n_gens; ++g) {
    ElementLabel l;
    l.kind = ElementLabel::Kind::TypeG;
    l.a = cf.generators[g].name;
    push_upper(
        upper_pair(s, s.row_zero(), s.row_gen_primed(g), s.col_gen(g)), l);
  }
  for (int g = 0; g < s.n_gens; ++g) {
    ElementLabel l;
    l.kind = ElementLabel::Kind::TypeGbar;
    l.a = cf.generators[g].name;
    push_upper(
        upper_pair(s, s.row_gen(g), s.row_gen_primed(g), s.col_zero()), l);
  }
  for (auto const& t : cf.relations) {
    ElementLabel l;
    l.kind = ElementLabel::Kind::TypeR;
    l.a = t.a;
    l.b = t.b;
    l.c = t.c;
    push_upper(upper_pair(s, s.row_gen(gen_pos(t.b)),
                          s.row_gen_primed(gen_pos(t.c)),
                          s.col_gen(gen_pos(t.a))),
               l);
  }

  b.size = static_cast<int>(b.pairs.size());

  long const expected = static_cast<long>(2 * s.n_gens + 2)
                            * (s.n_gens + 2)
                        + 1 + 2 * s.n_gens
                        + static_cast<long>(cf.relations.size());
  if (b.size != expected) {
    throw Error("band size does not match the construction formula");
  }

  // All elements must be distinct idempotent pairs.
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> seen;
  for (int e = 0; e < b.size; ++e) {
    if (!is_idempotent_pair(b.pairs[e])) {
      throw Error("constructed element is not idempotent");
    }
    auto key = std::make_pair(b.pairs[e].sigma, b.pairs[e].tau);
    if (!seen.emplace(std::move(key), e).second) {
      throw Error("constructed elements are not pairwise distinct");
    }
  }

  // Close under composition into the multiplication table.
  b.table.assign(static_cast<size_t>(b.size) * b.size, -1);
  for (int x = 0; x < b.size; ++x) {
    for (int y = 0; y < b.size; ++y) {
      TransformationPair prod = compose_pairs(b.pairs[x], b.pairs[y]);
      auto it = seen.find(std::make_pair(prod.sigma, prod.tau));
      if (it == seen.end()) {
        throw Error("product escapes the element set: "
                    + b.labels[x].display(&s) + " * "
                    + b.labels[y].display(&s));
      }
      b.table[static_cast<size_t>(x) * b.size + y] = it->second;
    }
  }
  return b;
}

Band band_from_table(int n, std::vector<std::vector<int>> const& table,
                     std::vector<std::string> const& names) {
  if (n <= 0) {
    throw Error("band must have at least one element");
  }
  if (static_cast<int>(table.size()) != n) {
    throw Error("table must have exactly n rows");
  }
  if (!names.empty() && static_cast<int>(names.size()) != n) {
    throw Error("names, when given, must have exactly n entries");
  }
  Band b;
  b.size = n;
  b.table.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      throw Error("table row " + std::to_string(i)
                  + " must have exactly n entries");
    }
    for (int j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= n) {
        throw Error("table entry out of range at (" + std::to_string(i) + ", "
                    + std::to_string(j) + ")");
      }
      b.table.push_back(table[i][j]);
    }
  }
  for (int e = 0; e < n; ++e) {
    ElementLabel l;
    l.kind = ElementLabel::Kind::Raw;
    l.raw = names.empty() ? "e" + std::to_string(e) : names[e];
    b.labels.push_back(l);
  }
  return b;
}

std::string BandCheck::message() const {
  switch (violated) {
    case Law::None:
      return "ok";
    case Law::Closure:
      return "table entry out of range at (" + std::to_string(x) + ", "
             + std::to_string(y) + ")";
    case Law::Idempotency:
      return "element " + std::to_string(x) + " is not idempotent";
    case Law::Associativity:
      return "(x*y)*z != x*(y*z) for x=" + std::to_string(x)
             + " y=" + std::to_string(y) + " z=" + std::to_string(z);
  }
  return "ok";
}

BandCheck is_band(Band const& b) {
  BandCheck out;
  for (int x = 0; x < b.size; ++x) {
    for (int y = 0; y < b.size; ++y) {
      int const p = b.mul(x, y);
      if (p < 0 || p >= b.size) {
        out.violated = BandCheck::Law::Closure;
        out.x = x;
        out.y = y;
        return out;
      }
    }
  }
  for (int x = 0; x < b.size; ++x) {
    if (b.mul(x, x) != x) {
      out.violated = BandCheck::Law::Idempotency;
      out.x = x;
      return out;
    }
  }
  // Composition of transformation pairs is associative by construction;
  // only user-supplied tables need the full scan.
  if (!b.transformation_backed()) {
    for (int x = 0; x < b.size; ++x) {
      for (int y = 0; y < b.size; ++y) {
        int const xy = b.mul(x, y);
        for (int z = 0; z < b.size; ++z) {
          if (b.mul(xy, z) != b.mul(x, b.mul(y, z))) {
            out.violated = BandCheck::Law::Associativity;
            out.x = x;
            out.y = y;
            out.z = z;
            return out;
          }
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<std::string> split_list(std::string const& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

int parse_band_letter(Band const& b, std::string const& text) {
  if (!b.index_sets) {
    // Table bands: letters are element names.
    int const e = b.element_by_label(text);
    if (e < 0) {
      throw Error("unknown element: " + text);
    }
    return e;
  }
  IndexSets const& s = *b.index_sets;
  auto const open = text.find('(');
  if (open == std::string::npos || text.back() != ')') {
    throw Error("malformed letter (expected K(...) or L(...)): " + text);
  }
  std::string const head = text.substr(0, open);
  std::string const body = text.substr(open + 1, text.size() - open - 2);
  if (head == "K") {
    auto const parts = split_list(body);
    if (parts.size() != 2) {
      throw Error("K letter needs a row and a column: " + text);
    }
    int const row = s.find_row(parts[0]);
    int const col = s.find_col(parts[1]);
    if (row < 0) {
      throw Error("unknown row index: " + parts[0]);
    }
    if (col < 0) {
      throw Error("unknown column index: " + parts[1]);
    }
    return b.constant_element(row, col);
  }
  if (head == "L") {
    int const e = b.element_by_label("L(" + body + ")");
    if (e < 0) {
      throw Error("unknown element: " + text);
    }
    return e;
  }
  throw Error("malformed letter (expected K(...) or L(...)): " + text);
}

std::vector<int> parse_band_word(Band const& b, std::string const& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    out.push_back(parse_band_letter(b, tok));
  }
  if (out.empty()) {
    throw Error("empty word over the band");
  }
  return out;
}

}  // namespace igband
