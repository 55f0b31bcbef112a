#include "igband/index_sets.hpp"

namespace igband {

std::string IndexSymbol::token() const {
  std::string out;
  switch (base) {
    case Base::Zero:
      out = "0";
      break;
    case Base::Gen:
      out = gen;
      break;
    case Base::Infinity:
      return "inf";
  }
  if (primed) {
    out += 'p';
  }
  return out;
}

std::string IndexSymbol::display() const {
  std::string out;
  switch (base) {
    case Base::Zero:
      out = "0";
      break;
    case Base::Gen:
      out = gen;
      break;
    case Base::Infinity:
      return "inf";
  }
  if (primed) {
    out += '\'';
  }
  return out;
}

IndexSets IndexSets::from_generators(std::vector<GenSymbol> const& gens) {
  IndexSets s;
  s.n_gens = static_cast<int>(gens.size());
  for (bool primed : {false, true}) {
    s.I.push_back(IndexSymbol{IndexSymbol::Base::Zero, "", primed});
    for (auto const& g : gens) {
      s.I.push_back(IndexSymbol{IndexSymbol::Base::Gen, g.name, primed});
    }
  }
  s.J.push_back(IndexSymbol{IndexSymbol::Base::Zero, "", false});
  for (auto const& g : gens) {
    s.J.push_back(IndexSymbol{IndexSymbol::Base::Gen, g.name, false});
  }
  s.J.push_back(IndexSymbol{IndexSymbol::Base::Infinity, "", false});
  return s;
}

int IndexSets::find_row(std::string const& t) const {
  for (size_t i = 0; i < I.size(); ++i) {
    if (I[i].token() == t || I[i].display() == t) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

int IndexSets::find_col(std::string const& t) const {
  for (size_t j = 0; j < J.size(); ++j) {
    if (J[j].token() == t || J[j].display() == t) {
      return static_cast<int>(j);
    }
  }
  return -1;
}

}  // namespace igband
