#ifndef IGBAND_PRESENTATION_HPP
#define IGBAND_PRESENTATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "igband/word.hpp"

namespace igband {

// Where a generator of a presentation came from.  User generators are the
// ones declared in the source text; the Cayley-form conversion introduces
// the other three kinds.
enum class GenOrigin {
  User,
  Identity,   // the adjoined identity generator
  InverseOf,  // formal inverse of another generator (see `parent`)
  Chain,      // fresh generator splitting a long relation (see `chain_pos`)
};

struct GenSymbol {
  std::string name;
  GenOrigin origin = GenOrigin::User;
  std::string parent;  // InverseOf: the generator this one inverts
  int chain_pos = 0;   // Chain: position within the split relation

  friend bool operator==(GenSymbol const& x, GenSymbol const& y) {
    return x.name == y.name;
  }
};

// Serialized form used in reports: "user", "identity", "inverse-of:<g>",
// "chain:<k>".
std::string origin_to_string(GenSymbol const& g);

struct Relation {
  Word lhs;
  Word rhs;

  friend bool operator==(Relation const&, Relation const&) = default;
};

// A finite group presentation: an ordered generator list and a list of
// relations lhs = rhs.  Relators are stored with an empty right side.
struct GroupPresentation {
  std::vector<GenSymbol> generators;
  std::vector<Relation> relations;

  bool has_generator(std::string const& name) const;
  int generator_index(std::string const& name) const;  // -1 when absent

  // Throws Error if a relation uses an undeclared generator or a generator
  // name is duplicated.
  void validate() const;
};

// A presentation in which every relation is a triple a*b = c of positive
// generators.  The input format for the band construction.
struct CayleyTriple {
  std::string a;
  std::string b;
  std::string c;

  friend bool operator==(CayleyTriple const&, CayleyTriple const&) = default;
  friend auto operator<=>(CayleyTriple const&, CayleyTriple const&) = default;
};

struct CayleyFormPresentation {
  std::vector<GenSymbol> generators;
  std::vector<CayleyTriple> relations;

  GroupPresentation to_group_presentation() const;
};

// Parses the line-based grammar:
//
//   gens <name> <name> ...
//   rel <word> = <word>
//
// where <word> is `1` (the empty word) or terms joined by `*`, each term a
// generator name with an optional integer power (`a^-2`).  `#` starts a
// comment.  Generators may be declared in several `gens` lines and are
// collected before relations are resolved.  Throws ParseError with a 1-based
// line and column on syntax errors, undeclared generators, duplicate or
// reserved generator names ("0", "1", "inf").
GroupPresentation parse_group_presentation(std::string const& text);

// Renders a presentation in the same grammar the parser accepts.
std::string render_presentation(GroupPresentation const& p);
std::string render_presentation(CayleyFormPresentation const& p);

// Result of converting an arbitrary presentation to Cayley form.  gen_map
// sends each original generator to its name in the new alphabet (the
// identity embedding: original names are kept).
struct CayleyConversion {
  CayleyFormPresentation presentation;
  std::map<std::string, std::string> gen_map;
};

// Converts to Cayley form, preserving the group up to isomorphism:
//
//  * relations already of the shape a*b = c are kept as triples;
//  * an identity generator u with u*u = u is adjoined as soon as some
//    relation needs it;
//  * letters with exponent -1 are replaced by formal inverse generators
//    <g>_inv with g*<g>_inv = u and <g>_inv*g = u;
//  * every other relation is oriented into a positive equation w = t with t
//    a single generator (t = u for relators) and chain-split via fresh
//    generators d<k>_<relation index>, so a length-k left side contributes
//    exactly k-1 triples;
//  * duplicate triples are removed.
//
// A presentation that is already in Cayley form (in particular any free
// presentation) is returned unchanged.  Fresh names that would clash with
// existing generators get underscores appended until unique.
CayleyConversion to_cayley_form(GroupPresentation const& p);

// A problem found in a Cayley-form presentation.  Errors make the
// presentation unusable; warnings are repaired by the consumer (duplicate
// triples are dropped).
struct CayleyViolation {
  enum class Severity { Error, Warning };
  Severity severity;
  std::string message;
};

std::vector<CayleyViolation> validate_cayley_form(
    CayleyFormPresentation const& p);

// Removes duplicate triples, keeping first occurrences.
CayleyFormPresentation dedup_triples(CayleyFormPresentation const& p);

}  // namespace igband

#endif  // IGBAND_PRESENTATION_HPP
