#include "baxter/monoid.hpp"

#include <algorithm>

#include "baxter/error.hpp"

namespace baxter {

namespace {

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

std::vector<Letter> EvVector::support() const {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) {
      out.push_back(static_cast<Letter>(i + 1));
    }
  }
  return out;
}

EvVector ev(AWord const& w) {
  EvVector e{std::vector<int>(static_cast<std::size_t>(w.rank), 0)};
  for (Letter a : w.letters) {
    ++e.counts[static_cast<std::size_t>(a - 1)];
  }
  return e;
}

PrecedenceSet rpi(AWord const& w) {
  auto n = static_cast<std::size_t>(w.rank);
  std::vector<int> after(n + 1, 0);
  PrecedenceSet out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    auto a = static_cast<std::size_t>(*it);
    if (after[a] == 0) {
      for (std::size_t b = a + 1; b <= n; ++b) {
        if (after[b] > 0) {
          out.entries.push_back({*it, static_cast<Letter>(b), after[b]});
          break;
        }
      }
    }
    ++after[a];
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](Precedence x, Precedence y) { return std::tie(x.hi, x.lo) < std::tie(y.hi, y.lo); });
  return out;
}

PrecedenceSet lpi(AWord const& w) {
  auto n = static_cast<std::size_t>(w.rank);
  std::vector<int> before(n + 1, 0);
  PrecedenceSet out;
  for (Letter b : w.letters) {
    auto bi = static_cast<std::size_t>(b);
    if (before[bi] == 0) {
      for (std::size_t a = bi - 1; a >= 1; --a) {
        if (before[a] > 0) {
          out.entries.push_back({static_cast<Letter>(a), b, before[a]});
          break;
        }
      }
    }
    ++before[bi];
  }
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

Key canonical_key(AWord const& w) { return {w.rank, ev(w), lpi(w), rpi(w)}; }

std::size_t hash_value(Key const& k) {
  std::size_t h = std::hash<int>{}(k.rank);
  for (int c : k.ev.counts) {
    hash_combine(h, std::hash<int>{}(c));
  }
  for (auto const* set : {&k.lpi, &k.rpi}) {
    hash_combine(h, set->entries.size());
    for (Precedence p : set->entries) {
      hash_combine(h, std::hash<int>{}(p.lo));
      hash_combine(h, std::hash<int>{}(p.hi));
      hash_combine(h, std::hash<int>{}(p.index));
    }
  }
  return h;
}

void DenseKey::compute(std::span<Letter const> w, int n) {
  auto un = static_cast<std::size_t>(n);
  data_.assign(5 * un, 0);
  seen_.assign(un + 1, 0);
  for (Letter b : w) {
    auto bi = static_cast<std::size_t>(b);
    if (seen_[bi] == 0) {
      for (std::size_t a = bi - 1; a >= 1; --a) {
        if (seen_[a] > 0) {
          data_[5 * (bi - 1) + 1] = static_cast<int>(a);
          data_[5 * (bi - 1) + 2] = seen_[a];
          break;
        }
      }
    }
    ++seen_[bi];
  }
  for (std::size_t a = 1; a <= un; ++a) {
    data_[5 * (a - 1)] = seen_[a];
  }
  std::fill(seen_.begin(), seen_.end(), 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto a = static_cast<std::size_t>(*it);
    if (seen_[a] == 0) {
      for (std::size_t b = a + 1; b <= un; ++b) {
        if (seen_[b] > 0) {
          data_[5 * (a - 1) + 3] = static_cast<int>(b);
          data_[5 * (a - 1) + 4] = seen_[b];
          break;
        }
      }
    }
    ++seen_[a];
  }
}

BaxtElement::BaxtElement(AWord w) : rep_(std::move(w)), key_(canonical_key(rep_)) {}

BaxtElement::BaxtElement(AWord representative, Key key)
    : rep_(std::move(representative)), key_(std::move(key)) {
  if (canonical_key(rep_) != key_) {
    throw PreconditionError("representative " + to_string(rep_) + " does not match key");
  }
}

BaxtElement canonical(AWord const& w) { return BaxtElement(w); }

bool equivalent(AWord const& u, AWord const& v) {
  if (u.rank != v.rank) {
    throw RangeError("cannot compare words of rank " + std::to_string(u.rank) + " and " +
                     std::to_string(v.rank));
  }
  return canonical_key(u) == canonical_key(v);
}

BaxtElement multiply(BaxtElement const& a, BaxtElement const& b) {
  return BaxtElement(concat(a.representative(), b.representative()));
}

BaxtElement identity_element(int n) { return BaxtElement(AWord(n, {})); }

AWord sharp_word(AWord const& w) {
  AWord out;
  out.rank = w.rank;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(w.rank + 1 - *it);
  }
  return out;
}

BaxtElement sharp(BaxtElement const& e) { return BaxtElement(sharp_word(e.representative())); }

std::vector<AWord> rewrite_neighbors(AWord const& w) {
  std::vector<AWord> out;
  std::size_t len = w.size();
  for (std::size_t p = 0; p + 1 < len; ++p) {
    Letter x = w[p];
    Letter y = w[p + 1];
    if (x == y) {
      continue;
    }
    Letter lo = std::min(x, y);
    Letter hi = std::max(x, y);
    bool ok = false;
    // c u a d v b ~ c u d a v b with a <= b < c <= d
    // b u d a v c ~ b u a d v c with a < b <= c < d
    for (std::size_t i = 0; i < p && !ok; ++i) {
      for (std::size_t j = p + 2; j < len && !ok; ++j) {
        Letter before = w[i];
        Letter after = w[j];
        ok = (lo <= after && after < before && before <= hi) ||
             (lo < before && before <= after && after < hi);
      }
    }
    if (ok) {
      AWord v = w;
      std::swap(v.letters[p], v.letters[p + 1]);
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end(),
            [](AWord const& a, AWord const& b) { return a.letters < b.letters; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<AWord> all_words(int n, int max_len) {
  if (n < 1) {
    throw RangeError("rank must be at least 1");
  }
  std::vector<AWord> out{AWord(n, {})};
  std::size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (Letter a = 1; a <= n; ++a) {
        AWord w = out[i];
        w.letters.push_back(a);
        out.push_back(std::move(w));
      }
    }
    level_start = level_end;
  }
  return out;
}

}  // namespace baxter
