#include "igband/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "igband/error.hpp"

namespace igband {

std::string origin_to_string(GenSymbol const& g) {
  switch (g.origin) {
    case GenOrigin::User:
      return "user";
    case GenOrigin::Identity:
      return "identity";
    case GenOrigin::InverseOf:
      return "inverse-of:" + g.parent;
    case GenOrigin::Chain:
      return "chain:" + std::to_string(g.chain_pos);
  }
  return "user";
}

bool GroupPresentation::has_generator(std::string const& name) const {
  return generator_index(name) >= 0;
}

int GroupPresentation::generator_index(std::string const& name) const {
  for (size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].name == name) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

void GroupPresentation::validate() const {
  std::set<std::string> seen;
  for (auto const& g : generators) {
    if (!seen.insert(g.name).second) {
      throw Error("duplicate generator name: " + g.name);
    }
  }
  for (auto const& r : relations) {
    for (auto const* side : {&r.lhs, &r.rhs}) {
      for (auto const& l : *side) {
        if (seen.find(l.gen) == seen.end()) {
          throw Error("relation uses undeclared generator: " + l.gen);
        }
      }
    }
  }
}

GroupPresentation CayleyFormPresentation::to_group_presentation() const {
  GroupPresentation p;
  p.generators = generators;
  for (auto const& t : relations) {
    p.relations.push_back(
        Relation{Word{Letter{t.a, 1}, Letter{t.b, 1}}, Word{Letter{t.c, 1}}});
  }
  return p;
}

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_reserved_name(std::string const& s) {
  return s == "0" || s == "1" || s == "inf";
}

// Cursor over a single line; all positions are 1-based for messages.
struct LineLexer {
  std::string const& text;
  int line;
  size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size()
           && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool at_end() {
    skip_spaces();
    return pos >= text.size();
  }

  int column() const { return static_cast<int>(pos) + 1; }

  [[noreturn]] void fail(std::string const& msg) const {
    throw ParseError(line, column(), msg);
  }

  std::string name() {
    skip_spaces();
    size_t const start = pos;
    while (pos < text.size() && is_name_char(text[pos])) {
      ++pos;
    }
    if (pos == start) {
      fail("expected a name");
    }
    return text.substr(start, pos - start);
  }

  long integer() {
    skip_spaces();
    size_t const start = pos;
    if (pos < text.size() && text[pos] == '-') {
      ++pos;
    }
    while (pos < text.size()
           && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start || (text[start] == '-' && pos == start + 1)) {
      fail("expected an integer");
    }
    return std::stol(text.substr(start, pos - start));
  }

  bool try_consume(char c) {
    skip_spaces();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

struct PendingRelation {
  std::string line_text;
  int line;
  size_t lhs_start;
  size_t lhs_end;  // position of '='
  size_t rhs_start;
};

// Parses the substring [start, end) of a line as a word.
Word parse_word(std::string const& full_line, size_t start, size_t end,
                int line, std::set<std::string> const& gens) {
  std::string const text = full_line.substr(0, end);
  LineLexer lex{text, line, start};
  if (lex.at_end()) {
    lex.fail("expected a word");
  }
  Word w;
  bool first = true;
  do {
    lex.skip_spaces();
    int const col = lex.column();
    std::string const n = lex.name();
    if (n == "1") {
      if (!first || !lex.at_end()) {
        throw ParseError(line, col, "'1' denotes the empty word and cannot "
                                    "appear inside a product");
      }
      return w;
    }
    if (gens.find(n) == gens.end()) {
      throw ParseError(line, col, "undeclared generator: " + n);
    }
    long e = 1;
    if (lex.try_consume('^')) {
      e = lex.integer();
    }
    int const sign = e < 0 ? -1 : 1;
    for (long k = 0; k < e * sign; ++k) {
      w.push_back(Letter{n, sign});
    }
    first = false;
  } while (lex.try_consume('*'));
  if (!lex.at_end()) {
    lex.fail("unexpected trailing input in word");
  }
  return w;
}

}  // namespace

GroupPresentation parse_group_presentation(std::string const& text) {
  GroupPresentation p;
  std::set<std::string> names;
  std::vector<PendingRelation> pending;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto const hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    LineLexer lex{raw, lineno, 0};
    if (lex.at_end()) {
      continue;
    }
    std::string const keyword = lex.name();
    if (keyword == "gens") {
      if (lex.at_end()) {
        lex.fail("'gens' requires at least one name");
      }
      while (!lex.at_end()) {
        lex.skip_spaces();
        int const col = lex.column();
        std::string const n = lex.name();
        if (is_reserved_name(n)) {
          throw ParseError(lineno, col, "reserved name cannot be a "
                                        "generator: " + n);
        }
        if (!names.insert(n).second) {
          throw ParseError(lineno, col, "duplicate generator name: " + n);
        }
        p.generators.push_back(GenSymbol{n, GenOrigin::User, "", 0});
      }
    } else if (keyword == "rel") {
      size_t const eq = raw.find('=', lex.pos);
      if (eq == std::string::npos) {
        lex.fail("'rel' requires '<word> = <word>'");
      }
      pending.push_back(
          PendingRelation{raw, lineno, lex.pos, eq, eq + 1});
    } else {
      throw ParseError(lineno, 1, "expected 'gens' or 'rel', got '" + keyword
                                      + "'");
    }
  }

  // Generators are collected from the whole file before relations are
  // resolved, so declaration order in the text is free.
  for (auto const& pr : pending) {
    Word lhs =
        parse_word(pr.line_text, pr.lhs_start, pr.lhs_end, pr.line, names);
    Word rhs = parse_word(pr.line_text, pr.rhs_start, pr.line_text.size(),
                          pr.line, names);
    p.relations.push_back(Relation{std::move(lhs), std::move(rhs)});
  }
  return p;
}

std::string render_presentation(GroupPresentation const& p) {
  std::string out;
  if (!p.generators.empty()) {
    out += "gens";
    for (auto const& g : p.generators) {
      out += ' ';
      out += g.name;
    }
    out += '\n';
  }
  for (auto const& r : p.relations) {
    out += "rel " + word_to_string(r.lhs) + " = " + word_to_string(r.rhs)
           + "\n";
  }
  return out;
}

std::string render_presentation(CayleyFormPresentation const& p) {
  return render_presentation(p.to_group_presentation());
}

std::vector<CayleyViolation> validate_cayley_form(
    CayleyFormPresentation const& p) {
  std::vector<CayleyViolation> out;
  std::set<std::string> names;
  for (auto const& g : p.generators) {
    if (is_reserved_name(g.name)) {
      out.push_back({CayleyViolation::Severity::Error,
                     "reserved name used as generator: " + g.name});
    }
    if (!names.insert(g.name).second) {
      out.push_back({CayleyViolation::Severity::Error,
                     "duplicate generator name: " + g.name});
    }
  }
  std::set<CayleyTriple> seen;
  for (auto const& t : p.relations) {
    for (auto const* part : {&t.a, &t.b, &t.c}) {
      if (names.find(*part) == names.end()) {
        out.push_back({CayleyViolation::Severity::Error,
                       "triple component is not a declared generator: "
                           + *part});
      }
    }
    if (!seen.insert(t).second) {
      out.push_back({CayleyViolation::Severity::Warning,
                     "duplicate triple removed: " + t.a + "*" + t.b + " = "
                         + t.c});
    }
  }
  return out;
}

CayleyFormPresentation dedup_triples(CayleyFormPresentation const& p) {
  CayleyFormPresentation out;
  out.generators = p.generators;
  std::set<CayleyTriple> seen;
  for (auto const& t : p.relations) {
    if (seen.insert(t).second) {
      out.relations.push_back(t);
    }
  }
  return out;
}

}  // namespace igband
