#include "igband/word.hpp"

#include <algorithm>

namespace igband {

Word inverse(Word const& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(inverse(*it));
  }
  return out;
}

Word concat(Word const& x, Word const& y) {
  Word out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

Word free_reduce(Word const& w) {
  Word out;
  out.reserve(w.size());
  for (auto const& l : w) {
    if (!out.empty() && out.back().gen == l.gen
        && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(Word const& w) {
  size_t lo = 0;
  size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == inverse(w[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + lo, w.begin() + hi);
}

Word substitute(Word const& w, std::string const& gen, Word const& image) {
  Word out;
  Word const image_inv = inverse(image);
  for (auto const& l : w) {
    if (l.gen != gen) {
      out.push_back(l);
    } else {
      Word const& piece = l.exp > 0 ? image : image_inv;
      out.insert(out.end(), piece.begin(), piece.end());
    }
  }
  return out;
}

bool contains_generator(Word const& w, std::string const& gen) {
  return std::any_of(w.begin(), w.end(),
                     [&](Letter const& l) { return l.gen == gen; });
}

namespace {

Word min_rotation(Word const& w, Word best) {
  for (size_t s = 0; s < w.size(); ++s) {
    Word rot;
    rot.reserve(w.size());
    rot.insert(rot.end(), w.begin() + s, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + s);
    if (best.empty() || rot < best) {
      best = rot;
    }
  }
  return best;
}

}  // namespace

Word canonical_relator(Word const& w) {
  Word r = cyclic_reduce(free_reduce(w));
  if (r.empty()) {
    return r;
  }
  Word best = min_rotation(r, Word());
  best = min_rotation(inverse(r), best);
  return best;
}

std::string word_to_string(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++j;
    }
    int const run = static_cast<int>(j - i);
    if (!out.empty()) {
      out += '*';
    }
    out += w[i].gen;
    int const e = w[i].exp * run;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
    i = j;
  }
  return out;
}

Word make_word(std::vector<std::pair<std::string, int>> const& letters) {
  Word out;
  for (auto const& [name, e] : letters) {
    int const sign = e < 0 ? -1 : 1;
    for (int k = 0; k < e * sign; ++k) {
      out.push_back(Letter{name, sign});
    }
  }
  return out;
}

}  // namespace igband
