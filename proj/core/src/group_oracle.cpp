#include "igband/group_oracle.hpp"

#include "igband/error.hpp"
#include "igband/word.hpp"

namespace igband {

CosetTable const& GroupOracle::table() const {
  if (mode_ != Mode::Finite) {
    throw Error("group oracle has no coset table in free mode");
  }
  return table_;
}

bool GroupOracle::finite() const {
  if (mode_ == Mode::Finite) return true;
  return presentation_.generators.empty();
}

long long GroupOracle::order() const {
  if (mode_ == Mode::Finite) return table_.n;
  if (presentation_.generators.empty()) return 1;
  throw Error("free group of positive rank has no finite order");
}

Word GroupOracle::canonical(Word const& w) const {
  if (mode_ == Mode::Free) return free_reduce(w);
  int c = table_.trace(0, w);
  if (c < 0) throw Error("word uses a generator unknown to the oracle");
  return table_.reps[c];
}

bool GroupOracle::equal(Word const& a, Word const& b) const {
  if (mode_ == Mode::Free) return free_reduce(a) == free_reduce(b);
  return table_.trace(0, a) == table_.trace(0, b);
}

bool GroupOracle::is_identity(Word const& w) const {
  if (mode_ == Mode::Free) return free_reduce(w).empty();
  return table_.trace(0, w) == 0;
}

Word GroupOracle::multiply(Word const& a, Word const& b) const {
  return canonical(concat(a, b));
}

Word GroupOracle::invert(Word const& w) const {
  return canonical(inverse(w));
}

int GroupOracle::element_index(Word const& w) const {
  if (mode_ != Mode::Finite) {
    throw Error("element indexing needs a finite oracle");
  }
  int c = table_.trace(0, w);
  if (c < 0) throw Error("word uses a generator unknown to the oracle");
  return c;
}

std::vector<Word> const& GroupOracle::elements() const {
  if (mode_ != Mode::Finite) {
    throw Error("element listing needs a finite oracle");
  }
  return table_.reps;
}

GroupOracle GroupOracle::finite(GroupPresentation p, CosetTable t) {
  GroupOracle o;
  o.mode_ = Mode::Finite;
  o.presentation_ = std::move(p);
  o.table_ = std::move(t);
  return o;
}

GroupOracle GroupOracle::free_group(GroupPresentation p) {
  GroupOracle o;
  o.mode_ = Mode::Free;
  o.presentation_ = std::move(p);
  return o;
}

OracleBuildResult build_group_oracle(GroupPresentation const& p,
                                     int max_cosets) {
  p.validate();
  bool free = true;
  for (auto const& rel : p.relations) {
    if (!free_reduce(concat(rel.lhs, inverse(rel.rhs))).empty()) {
      free = false;
      break;
    }
  }
  OracleBuildResult result;
  if (free && !p.generators.empty()) {
    result.oracle = GroupOracle::free_group(p);
    result.cosets_defined = 0;
    return result;
  }
  auto enumeration = todd_coxeter(p, max_cosets);
  result.cosets_defined = enumeration.cosets_defined;
  if (enumeration.overflow()) return result;
  result.oracle = GroupOracle::finite(p, std::move(*enumeration.table));
  return result;
}

}  // namespace igband
