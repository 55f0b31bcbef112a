#include <algorithm>
#include <map>
#include <set>

#include "igband/error.hpp"
#include "igband/presentation.hpp"

namespace igband {

namespace {

bool is_cayley_triple(Relation const& r) {
  return r.lhs.size() == 2 && r.rhs.size() == 1 && r.lhs[0].exp == 1
         && r.lhs[1].exp == 1 && r.rhs[0].exp == 1;
}

// One relation oriented into a positive equation w = t.  target empty means
// the adjoined identity.
struct Oriented {
  Word w;  // letters may still carry exponent -1 here
  std::string target;
  size_t relation_index;
};

}  // namespace

CayleyConversion to_cayley_form(GroupPresentation const& p) {
  p.validate();

  CayleyConversion out;
  for (auto const& g : p.generators) {
    out.gen_map[g.name] = g.name;
  }

  // Already in Cayley form (every relation a*b = c, vacuously so for free
  // presentations): nothing to do but collect the triples.
  if (std::all_of(p.relations.begin(), p.relations.end(), is_cayley_triple)) {
    CayleyFormPresentation cf;
    cf.generators = p.generators;
    for (auto const& r : p.relations) {
      cf.relations.push_back(
          CayleyTriple{r.lhs[0].gen, r.lhs[1].gen, r.rhs[0].gen});
    }
    out.presentation = dedup_triples(cf);
    return out;
  }

  std::set<std::string> used;
  for (auto const& g : p.generators) {
    used.insert(g.name);
  }
  used.insert("0");
  used.insert("1");
  used.insert("inf");
  auto fresh = [&used](std::string name) {
    while (used.count(name) != 0) {
      name += '_';
    }
    used.insert(name);
    return name;
  };

  // Orient every relation into w = t with t a single positive generator or
  // the identity-to-be.
  std::vector<Oriented> oriented;
  bool needs_u = false;
  for (size_t ri = 0; ri < p.relations.size(); ++ri) {
    Word const lhs = free_reduce(p.relations[ri].lhs);
    Word const rhs = free_reduce(p.relations[ri].rhs);
    if (free_reduce(concat(lhs, inverse(rhs))).empty()) {
      continue;  // trivial relation
    }
    Oriented o;
    o.relation_index = ri;
    if (rhs.size() == 1 && rhs[0].exp == 1 && !lhs.empty()) {
      o.w = lhs;
      o.target = rhs[0].gen;
    } else if (lhs.size() == 1 && lhs[0].exp == 1 && !rhs.empty()) {
      o.w = rhs;
      o.target = lhs[0].gen;
    } else if (rhs.empty()) {
      o.w = lhs;
    } else if (lhs.empty()) {
      o.w = rhs;
    } else {
      o.w = free_reduce(concat(lhs, inverse(rhs)));
    }
    if (o.target.empty() || o.w.size() == 1) {
      needs_u = true;
    }
    for (auto const& l : o.w) {
      if (l.exp < 0) {
        needs_u = true;  // inverse generators relate to u
      }
    }
    oriented.push_back(std::move(o));
  }

  CayleyFormPresentation cf;
  cf.generators = p.generators;

  std::string u;
  if (needs_u) {
    u = fresh("u");
    cf.generators.push_back(GenSymbol{u, GenOrigin::Identity, "", 0});
    cf.relations.push_back(CayleyTriple{u, u, u});
  }

  // Formal inverses, introduced in declaration order of the generators that
  // need one.
  std::map<std::string, std::string> inverse_name;
  for (auto const& g : p.generators) {
    bool needed = false;
    for (auto const& o : oriented) {
      for (auto const& l : o.w) {
        if (l.exp < 0 && l.gen == g.name) {
          needed = true;
        }
      }
    }
    if (needed) {
      std::string const gi = fresh(g.name + "_inv");
      inverse_name[g.name] = gi;
      cf.generators.push_back(GenSymbol{gi, GenOrigin::InverseOf, g.name, 0});
      cf.relations.push_back(CayleyTriple{g.name, gi, u});
      cf.relations.push_back(CayleyTriple{gi, g.name, u});
    }
  }

  auto positive_name = [&inverse_name](Letter const& l) {
    return l.exp > 0 ? l.gen : inverse_name.at(l.gen);
  };

  for (auto const& o : oriented) {
    std::string const target = o.target.empty() ? u : o.target;
    if (o.w.size() == 1) {
      cf.relations.push_back(CayleyTriple{u, positive_name(o.w[0]), target});
      continue;
    }
    // Chain split: a1*a2 = d2, d2*a3 = d3, ..., d{k-1}*ak = target.
    std::string prev = positive_name(o.w[0]);
    for (size_t k = 1; k + 1 < o.w.size(); ++k) {
      std::string const d = fresh(
          "d" + std::to_string(k + 1) + "_" + std::to_string(o.relation_index));
      cf.generators.push_back(
          GenSymbol{d, GenOrigin::Chain, "", static_cast<int>(k + 1)});
      cf.relations.push_back(CayleyTriple{prev, positive_name(o.w[k]), d});
      prev = d;
    }
    cf.relations.push_back(
        CayleyTriple{prev, positive_name(o.w.back()), target});
  }

  out.presentation = dedup_triples(cf);
  return out;
}

}  // namespace igband
