// Independent reference computations used only by the tests. Each one follows
// the textbook definition directly and shares no code with the library
// routine it is compared against.
#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "baxter/matrix.hpp"
#include "baxter/monoid.hpp"
#include "baxter/words.hpp"

namespace ref {

using baxter::AWord;
using baxter::Letter;

struct Triple {
  Letter first;
  Letter second;
  int index;
  friend auto operator<=>(Triple const&, Triple const&) = default;
};

/// (b, a, r): a's last occurrence at p, b the least letter > a after p.
inline std::set<Triple> rpi(AWord const& w) {
  std::set<Triple> out;
  int len = static_cast<int>(w.size());
  for (Letter a = 1; a <= w.rank; ++a) {
    int p = -1;
    for (int i = 0; i < len; ++i) {
      if (w[static_cast<std::size_t>(i)] == a) {
        p = i;
      }
    }
    if (p < 0) {
      continue;
    }
    for (Letter b = a + 1; b <= w.rank; ++b) {
      int r = 0;
      for (int i = p + 1; i < len; ++i) {
        r += w[static_cast<std::size_t>(i)] == b ? 1 : 0;
      }
      if (r > 0) {
        out.insert({b, a, r});
        break;
      }
    }
  }
  return out;
}

/// (a, b, l): b's first occurrence at p, a the greatest letter < b before p.
inline std::set<Triple> lpi(AWord const& w) {
  std::set<Triple> out;
  std::size_t len = w.size();
  for (Letter b = 1; b <= w.rank; ++b) {
    std::size_t p = len;
    for (std::size_t i = len; i-- > 0;) {
      if (w[i] == b) {
        p = i;
      }
    }
    if (p == len) {
      continue;
    }
    for (Letter a = b - 1; a >= 1; --a) {
      int l = 0;
      for (std::size_t i = 0; i < p; ++i) {
        l += w[i] == a ? 1 : 0;
      }
      if (l > 0) {
        out.insert({a, b, l});
        break;
      }
    }
  }
  return out;
}

/// Congruence class of w under the defining relations, by breadth-first search.
inline std::set<std::vector<Letter>> rewrite_closure(AWord const& w) {
  std::set<std::vector<Letter>> seen{w.letters};
  std::queue<AWord> todo;
  todo.push(w);
  while (!todo.empty()) {
    AWord cur = todo.front();
    todo.pop();
    for (auto const& v : baxter::rewrite_neighbors(cur)) {
      if (seen.insert(v.letters).second) {
        todo.push(v);
      }
    }
  }
  return seen;
}

/// Partition labels: words with equal labels share a class.
template <class F>
std::vector<std::size_t> partition(std::vector<AWord> const& words, F label_of) {
  using L = decltype(label_of(words.front()));
  std::map<L, std::size_t> ids;
  std::vector<std::size_t> out;
  for (auto const& w : words) {
    auto [it, _] = ids.try_emplace(label_of(w), ids.size());
    out.push_back(it->second);
  }
  return out;
}

/// Minimal word of each rewrite class, computing each class only once.
inline std::vector<std::vector<Letter>> closure_labels(std::vector<AWord> const& words) {
  std::map<std::vector<Letter>, std::vector<Letter>> label;
  std::vector<std::vector<Letter>> out;
  for (auto const& w : words) {
    auto it = label.find(w.letters);
    if (it == label.end()) {
      auto cls = rewrite_closure(w);
      for (auto const& v : cls) {
        label[v] = *cls.begin();
      }
      it = label.find(w.letters);
    }
    out.push_back(it->second);
  }
  return out;
}

/// Full cubic product, summing over every k including below the diagonal.
template <class S>
baxter::UTMatrix<S> mat_mul(baxter::UTMatrix<S> const& a, baxter::UTMatrix<S> const& b) {
  std::size_t n = a.dim();
  std::vector<std::vector<S>> rows(n, std::vector<S>(n, S::zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      S acc = S::zero();
      for (std::size_t k = 0; k < n; ++k) {
        acc = acc + a(i, k) * b(k, j);
      }
      rows[i][j] = acc;
    }
  }
  return baxter::UTMatrix<S>::from_rows(rows);
}

inline AWord random_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(1, n);
  AWord w(n, {});
  int l = len(rng);
  for (int i = 0; i < l; ++i) {
    w.letters.push_back(letter(rng));
  }
  return w;
}

inline baxter::IWord random_iword(std::mt19937_64& rng, std::vector<baxter::IVar> const& vars,
                                  int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  baxter::IWord w;
  int l = len(rng);
  for (int i = 0; i < l; ++i) {
    baxter::IVar x = vars[pick(rng)];
    w.letters.push_back(rng() % 2 ? x.star() : x);
  }
  return w;
}

/// v obtained from u by a few random adjacent transpositions, so that many
/// identities are balanced and a fair share hold.
inline baxter::Identity random_identity(std::mt19937_64& rng,
                                        std::vector<baxter::IVar> const& vars, int max_len) {
  baxter::IWord u = random_iword(rng, vars, 1, max_len);
  baxter::IWord v = u;
  int swaps = 1 + static_cast<int>(rng() % 3);
  for (int s = 0; s < swaps && v.size() > 1; ++s) {
    std::size_t p = rng() % (v.size() - 1);
    std::swap(v.letters[p], v.letters[p + 1]);
  }
  if (rng() % 8 == 0 && !v.empty()) {
    v.letters[rng() % v.size()] = vars[rng() % vars.size()];
  }
  return {u, v};
}

}  // namespace ref
