#include "ggp/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ggp {

namespace {

// Column 2s is generator s, column 2s+1 its inverse.
int inv_col(int x) { return x ^ 1; }

std::vector<int> word_columns(const FreeWord& w) {
  std::vector<int> cols;
  for (const Letter& l : w.letters()) {
    int col = l.exponent > 0 ? 2 * l.symbol : 2 * l.symbol + 1;
    Int n = int_abs(l.exponent);
    if (n > 1000000) throw InputError("relator exponent too large to trace");
    for (Int i = 0; i < n; ++i) cols.push_back(col);
  }
  return cols;
}

// HLT enumeration state.  Rows come and go through a union-find array p;
// every defined entry keeps the mirror invariant tab[a][x] = b iff
// tab[b][x^-1] = a, which lets coincidence processing clean all stale edges
// by walking the rows of dead cosets.
struct Enumerator {
  int ncols;
  int bound;
  std::vector<std::vector<int>> tab;
  std::vector<int> p;
  std::deque<int> dead_queue;
  int live = 1;
  bool exceeded = false;

  Enumerator(int ncols, int bound) : ncols(ncols), bound(bound) {
    tab.emplace_back(ncols, -1);
    p.push_back(0);
  }

  int rep(int k) {
    while (p[k] != k) {
      p[k] = p[p[k]];
      k = p[k];
    }
    return k;
  }

  int define(int c, int x) {
    if (live >= bound) {
      exceeded = true;
      return -1;
    }
    int n = static_cast<int>(tab.size());
    tab.emplace_back(ncols, -1);
    p.push_back(n);
    ++live;
    tab[c][x] = n;
    tab[n][inv_col(x)] = c;
    return n;
  }

  void merge(int k, int l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    int mu = std::min(k, l), nu = std::max(k, l);
    p[nu] = mu;
    --live;
    dead_queue.push_back(nu);
  }

  void coincidence(int k, int l) {
    merge(k, l);
    while (!dead_queue.empty()) {
      int g = dead_queue.front();
      dead_queue.pop_front();
      for (int x = 0; x < ncols; ++x) {
        int d = tab[g][x];
        if (d < 0) continue;
        tab[d][inv_col(x)] = -1;  // mirrored entry, may sit in g's own row
        int mu = rep(g), nu = rep(d);
        if (tab[mu][x] >= 0)
          merge(nu, tab[mu][x]);
        else if (tab[nu][inv_col(x)] >= 0)
          merge(mu, tab[nu][inv_col(x)]);
        else {
          tab[mu][x] = nu;
          tab[nu][inv_col(x)] = mu;
        }
      }
    }
  }

  // Trace the word at coset c, defining cosets to fill the gap; a completed
  // trace that closes wrong is a coincidence.
  void scan_and_fill(int c, const std::vector<int>& word) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(word.size()) - 1;
    for (;;) {
      while (i <= j && tab[f][word[i]] >= 0) f = tab[f][word[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab[b][inv_col(word[j])] >= 0) b = tab[b][inv_col(word[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {  // deduction closes the gap
        tab[f][word[i]] = b;
        tab[b][inv_col(word[i])] = f;
        return;
      }
      int n = define(f, word[i]);
      if (n < 0) return;  // bound hit
      f = n;
      ++i;
    }
  }
};

}  // namespace

EnumerationResult enumerate_cosets(const FpPresentation& p,
                                   const std::vector<FreeWord>& subgroup,
                                   int bound) {
  if (bound < 1) throw InputError("enumeration bound must be positive");
  int ngens = p.alphabet->size();
  std::vector<std::vector<int>> relator_cols;
  for (const FreeWord& r : p.relators) relator_cols.push_back(word_columns(r));
  std::vector<std::vector<int>> subgroup_cols;
  for (const FreeWord& w : subgroup) {
    if (!(w.alphabet() == p.alphabet) &&
        !(w.alphabet() && *w.alphabet() == *p.alphabet))
      throw InputError("subgroup word over a different alphabet");
    subgroup_cols.push_back(word_columns(w));
  }

  Enumerator en(2 * ngens, bound);
  for (const auto& w : subgroup_cols) {
    en.scan_and_fill(en.rep(0), w);
    if (en.exceeded) return {false, {}, en.live};
  }
  // Relator-first scanning, lowest coset first.
  for (int c = 0; c < static_cast<int>(en.tab.size()); ++c) {
    if (en.rep(c) != c) continue;
    for (const auto& r : relator_cols) {
      en.scan_and_fill(c, r);
      if (en.exceeded) return {false, {}, en.live};
      if (en.rep(c) != c) break;  // c died during a coincidence
    }
    if (en.rep(c) != c) continue;
    for (int x = 0; x < en.ncols; ++x) {
      if (en.tab[c][x] >= 0) continue;
      if (en.define(c, x) < 0) return {false, {}, en.live};
    }
  }

  // Canonical renumbering: breadth-first from the subgroup coset, columns in
  // order, so the table is independent of the definition history.
  std::vector<int> newid(en.tab.size(), -1);
  std::vector<int> order;
  int start = en.rep(0);
  newid[start] = 0;
  order.push_back(start);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int c = order[qi];
    for (int x = 0; x < en.ncols; ++x) {
      int d = en.rep(en.tab[c][x]);
      if (newid[d] < 0) {
        newid[d] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  }

  EnumerationResult out;
  out.completed = true;
  out.live_cosets = en.live;
  out.table.presentation = p;
  out.table.subgroup_generators = subgroup;
  out.table.coset_count = static_cast<int>(order.size());
  out.table.action.assign(order.size(), std::vector<int>(2 * ngens, -1));
  for (size_t c = 0; c < order.size(); ++c)
    for (int x = 0; x < en.ncols; ++x)
      out.table.action[c][x] = newid[en.rep(en.tab[order[c]][x])];
  return out;
}

std::vector<std::string> verify_coset_table(const CosetTable& t) {
  std::vector<std::string> bad;
  int ngens = t.presentation.alphabet->size();
  int n = t.coset_count;
  if (static_cast<int>(t.action.size()) != n) {
    bad.push_back("row count mismatch");
    return bad;
  }
  for (int c = 0; c < n; ++c) {
    if (static_cast<int>(t.action[c].size()) != 2 * ngens) {
      bad.push_back("column count mismatch at coset " + std::to_string(c + 1));
      return bad;
    }
    for (int x = 0; x < 2 * ngens; ++x) {
      int d = t.action[c][x];
      if (d < 0 || d >= n) {
        bad.push_back("entry out of range at coset " + std::to_string(c + 1));
        return bad;
      }
      if (t.action[d][inv_col(x)] != c)
        bad.push_back("column " + std::to_string(x) + " not inverse-consistent at coset " +
                      std::to_string(c + 1));
    }
  }
  for (int g = 0; g < ngens; ++g) {
    std::vector<bool> hit(n, false);
    for (int c = 0; c < n; ++c) {
      int d = t.action[c][2 * g];
      if (hit[d]) bad.push_back("generator " + t.presentation.alphabet->name(g) +
                                " is not a permutation");
      hit[d] = true;
    }
  }
  auto trace = [&](int c, const FreeWord& w) {
    for (const int x : word_columns(w)) c = t.action[c][x];
    return c;
  };
  for (size_t i = 0; i < t.presentation.relators.size(); ++i)
    for (int c = 0; c < n; ++c)
      if (trace(c, t.presentation.relators[i]) != c)
        bad.push_back("relator " + std::to_string(i + 1) + " does not close at coset " +
                      std::to_string(c + 1));
  for (size_t i = 0; i < t.subgroup_generators.size(); ++i)
    if (trace(0, t.subgroup_generators[i]) != 0)
      bad.push_back("subgroup generator " + std::to_string(i + 1) +
                    " does not fix coset 1");
  return bad;
}

std::vector<std::string> coset_table_lines(const CosetTable& t) {
  std::vector<std::string> lines;
  for (int c = 0; c < t.coset_count; ++c) {
    std::ostringstream os;
    os << "coset " << (c + 1) << " =";
    for (int x = 0; x < 2 * t.presentation.alphabet->size(); ++x)
      os << ' ' << (t.action[c][x] + 1);
    lines.push_back(os.str());
  }
  return lines;
}

}  // namespace ggp
