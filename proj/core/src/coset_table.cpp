#include "igband/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "igband/error.hpp"
#include "igband/word.hpp"

namespace igband {

int CosetTable::apply(int coset, Letter const& l) const {
  if (coset < 0 || coset >= n) return -1;
  auto it = std::find(generators.begin(), generators.end(), l.gen);
  if (it == generators.end()) return -1;
  int g = static_cast<int>(it - generators.begin());
  int e = l.exp;
  int c = coset;
  int letter = (e > 0) ? 2 * g : 2 * g + 1;
  int steps = e > 0 ? e : -e;
  for (int s = 0; s < steps; ++s) c = action[letter][c];
  return c;
}

int CosetTable::trace(int coset, Word const& w) const {
  int c = coset;
  for (auto const& l : w) {
    c = apply(c, l);
    if (c < 0) return -1;
  }
  return c;
}

namespace {

constexpr int kUndefined = -1;

// Mutable enumeration state.  Letters are 2*g (generator g) and 2*g+1 (its
// inverse); rows are cosets, dead rows keep their last entries so the
// coincidence queue can migrate them.
struct Enumerator {
  int n_letters;
  int limit;
  std::vector<std::vector<int>> row;  // row[coset][letter]
  std::vector<int> parent;            // union-find, parent[c] <= c
  std::deque<int> queue;              // dead cosets awaiting migration
  long long defined = 1;
  bool overflowed = false;

  explicit Enumerator(int letters, int max_cosets)
      : n_letters(letters), limit(max_cosets) {
    row.emplace_back(n_letters, kUndefined);
    parent.push_back(0);
  }

  static int inv(int letter) { return letter ^ 1; }

  int rep(int k) {
    int r = k;
    while (parent[r] != r) r = parent[r];
    while (parent[k] != r) {
      int next = parent[k];
      parent[k] = r;
      k = next;
    }
    return r;
  }

  bool alive(int k) { return rep(k) == k; }

  // Allocates a fresh coset as the image of (from, letter).  False on
  // overflow.
  bool define(int from, int letter) {
    if (static_cast<long long>(row.size()) >= limit) {
      overflowed = true;
      return false;
    }
    int fresh = static_cast<int>(row.size());
    row.emplace_back(n_letters, kUndefined);
    parent.push_back(fresh);
    row[from][letter] = fresh;
    row[fresh][inv(letter)] = from;
    ++defined;
    return true;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    int lo = std::min(a, b);
    int hi = std::max(a, b);
    parent[hi] = lo;
    queue.push_back(hi);
  }

  // Standard coincidence processing: migrate every edge of each dead coset
  // to its representative, queueing any secondary coincidences discovered
  // along the way.
  void coincidence(int a, int b) {
    merge(a, b);
    while (!queue.empty()) {
      int dead = queue.front();
      queue.pop_front();
      for (int x = 0; x < n_letters; ++x) {
        int target = row[dead][x];
        if (target == kUndefined) continue;
        row[target][inv(x)] = kUndefined;
        int mu = rep(dead);
        int nu = rep(target);
        if (row[mu][x] != kUndefined) {
          merge(nu, row[mu][x]);
        } else if (row[nu][inv(x)] != kUndefined) {
          merge(mu, row[nu][inv(x)]);
        } else {
          row[mu][x] = nu;
          row[nu][inv(x)] = mu;
        }
      }
    }
  }

  // Scans relator r at coset a, filling the last gap when exactly one entry
  // is missing and defining new cosets otherwise.  False on overflow.
  bool scan_and_fill(int a, std::vector<int> const& r) {
    int f = a;
    std::size_t i = 0;
    int b = a;
    std::size_t j = r.size();  // backward scan consumed r[j..)
    while (true) {
      while (i < j && row[f][r[i]] != kUndefined) {
        f = row[f][r[i]];
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j > i && row[b][inv(r[j - 1])] != kUndefined) {
        b = row[b][inv(r[j - 1])];
        --j;
      }
      if (j < i) {
        // Cannot happen: both scans stop at defined-entry boundaries.
        throw Error("coset enumeration internal error: scan overlap");
      }
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        row[f][r[i]] = b;
        row[b][inv(r[i])] = f;
        return true;
      }
      if (!define(f, r[i])) return false;
    }
  }
};

std::vector<int> relator_letters(Relation const& rel,
                                 GroupPresentation const& p) {
  Word w = free_reduce(concat(rel.lhs, inverse(rel.rhs)));
  w = cyclic_reduce(w);
  std::vector<int> out;
  for (auto const& l : w) {
    int g = p.generator_index(l.gen);
    if (g < 0) throw Error("relator uses undeclared generator '" + l.gen + "'");
    int letter = (l.exp > 0) ? 2 * g : 2 * g + 1;
    int steps = l.exp > 0 ? l.exp : -l.exp;
    for (int s = 0; s < steps; ++s) out.push_back(letter);
  }
  return out;
}

}  // namespace

EnumerationResult todd_coxeter(GroupPresentation const& p, int max_cosets) {
  p.validate();
  if (max_cosets < 1) throw Error("coset limit must be positive");

  int m = static_cast<int>(p.generators.size());
  int n_letters = 2 * m;

  std::vector<std::vector<int>> relators;
  for (auto const& rel : p.relations) {
    auto r = relator_letters(rel, p);
    if (!r.empty()) relators.push_back(std::move(r));
  }

  EnumerationResult result;
  result.max_cosets = max_cosets;

  Enumerator e(n_letters, max_cosets);
  for (int a = 0; a < static_cast<int>(e.row.size()); ++a) {
    if (!e.alive(a)) continue;
    for (auto const& r : relators) {
      if (!e.scan_and_fill(a, r)) {
        result.cosets_defined = e.defined;
        return result;  // overflow
      }
      if (!e.alive(a)) break;
    }
    if (!e.alive(a)) continue;
    for (int x = 0; x < n_letters; ++x) {
      if (e.row[a][x] == kUndefined && !e.define(a, x)) {
        result.cosets_defined = e.defined;
        return result;  // overflow
      }
    }
  }
  result.cosets_defined = e.defined;

  // Compress: renumber live representatives in increasing order.
  std::vector<int> compact(e.row.size(), -1);
  int n = 0;
  for (int c = 0; c < static_cast<int>(e.row.size()); ++c) {
    if (e.alive(c)) compact[c] = n++;
  }
  std::vector<std::vector<int>> action(n_letters, std::vector<int>(n, -1));
  for (int c = 0; c < static_cast<int>(e.row.size()); ++c) {
    if (compact[c] < 0) continue;
    for (int x = 0; x < n_letters; ++x) {
      int t = e.row[c][x];
      if (t == kUndefined || compact[e.rep(t)] < 0) {
        throw Error("coset enumeration internal error: incomplete table");
      }
      action[x][compact[c]] = compact[e.rep(t)];
    }
  }

  // Standardize: breadth-first relabel, trying positive letters in
  // declaration order and then the inverses.  The resulting numbering (and
  // the representative words read off the search tree) depends only on the
  // action, not on the enumeration history.
  std::vector<int> scan_order;
  for (int g = 0; g < m; ++g) scan_order.push_back(2 * g);
  for (int g = 0; g < m; ++g) scan_order.push_back(2 * g + 1);

  std::vector<int> perm(n, -1);   // old -> new
  std::vector<int> order(n, -1);  // new -> old
  perm[0] = 0;
  order[0] = 0;
  int next = 1;
  std::vector<Word> reps(n);
  for (int nc = 0; nc < n; ++nc) {
    int oc = order[nc];
    for (int x : scan_order) {
      int t = action[x][oc];
      if (perm[t] >= 0) continue;
      perm[t] = next;
      order[next] = t;
      reps[next] = reps[nc];
      reps[next].push_back(Letter{p.generators[x / 2].name, (x % 2) ? -1 : 1});
      ++next;
    }
  }
  if (next != n) {
    throw Error("coset enumeration internal error: table not transitive");
  }

  CosetTable table;
  for (auto const& g : p.generators) table.generators.push_back(g.name);
  table.n = n;
  table.action.assign(n_letters, std::vector<int>(n, -1));
  for (int x = 0; x < n_letters; ++x) {
    for (int c = 0; c < n; ++c) {
      table.action[x][perm[c]] = perm[action[x][c]];
    }
  }
  table.reps = std::move(reps);

  // Verification pass: the table must be a complete, mutually inverse,
  // relator-closed action before anyone downstream trusts it.
  for (int x = 0; x < n_letters; ++x) {
    for (int c = 0; c < n; ++c) {
      int t = table.action[x][c];
      if (t < 0 || t >= n ||
          table.action[Enumerator::inv(x)][t] != c) {
        throw Error("coset enumeration internal error: inconsistent action");
      }
    }
  }
  for (auto const& r : relators) {
    for (int c = 0; c < n; ++c) {
      int t = c;
      for (int x : r) t = table.action[x][t];
      if (t != c) {
        throw Error("coset enumeration internal error: open relator");
      }
    }
  }

  result.table = std::move(table);
  return result;
}

}  // namespace igband
