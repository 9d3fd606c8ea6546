#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "baxter/trees.hpp"
#include "baxter/words.hpp"

namespace baxter {

/// Letter counts, indexed by letter - 1.
struct EvVector {
  std::vector<int> counts;
  int operator()(Letter a) const { return counts[static_cast<std::size_t>(a - 1)]; }
  std::vector<Letter> support() const;
  friend bool operator==(EvVector const&, EvVector const&) = default;
  friend auto operator<=>(EvVector const&, EvVector const&) = default;
};

/// An entry (hi, lo, index) of rpi or (lo, hi, index) of lpi.
struct Precedence {
  Letter lo = 0;
  Letter hi = 0;
  int index = 0;
  friend bool operator==(Precedence, Precedence) = default;
  friend auto operator<=>(Precedence, Precedence) = default;
};

/// Right precedences are sorted by (hi, lo), left precedences by (lo, hi).
struct PrecedenceSet {
  std::vector<Precedence> entries;
  friend bool operator==(PrecedenceSet const&, PrecedenceSet const&) = default;
  friend auto operator<=>(PrecedenceSet const&, PrecedenceSet const&) = default;
};

EvVector ev(AWord const& w);
/// For each letter a, with p its last occurrence and b the least letter
/// greater than a occurring after p: (b, a, number of b after p).
PrecedenceSet rpi(AWord const& w);
/// For each letter b, with p its first occurrence and a the greatest letter
/// less than b occurring before p: (a, b, number of a before p).
PrecedenceSet lpi(AWord const& w);

struct Key {
  int rank = 1;
  EvVector ev;
  PrecedenceSet lpi;
  PrecedenceSet rpi;
  friend bool operator==(Key const&, Key const&) = default;
  friend auto operator<=>(Key const&, Key const&) = default;
};

Key canonical_key(AWord const& w);
std::size_t hash_value(Key const& k);

/// Flat key used by hot loops: for each letter, its lpi/rpi partner (0 if
/// none) and index. Compares equal iff the corresponding Keys compare equal.
class DenseKey {
 public:
  void compute(std::span<Letter const> w, int n);
  friend bool operator==(DenseKey const&, DenseKey const&) = default;

 private:
  // per letter a at offset 5*(a-1): count, lpi lo, lpi index, rpi hi, rpi index
  std::vector<int> data_;
  std::vector<int> seen_;
};

/// An element of baxt_n: its key plus the first word it was built from.
class BaxtElement {
 public:
  BaxtElement() = default;
  explicit BaxtElement(AWord w);
  BaxtElement(AWord representative, Key key);

  int rank() const noexcept { return key_.rank; }
  AWord const& representative() const noexcept { return rep_; }
  Key const& key() const noexcept { return key_; }

  friend bool operator==(BaxtElement const& a, BaxtElement const& b) { return a.key_ == b.key_; }
  friend auto operator<=>(BaxtElement const& a, BaxtElement const& b) {
    return a.key_ <=> b.key_;
  }

 private:
  AWord rep_;
  Key key_;
};

BaxtElement canonical(AWord const& w);
bool equivalent(AWord const& u, AWord const& v);
BaxtElement multiply(BaxtElement const& a, BaxtElement const& b);
BaxtElement identity_element(int n);

/// Reverse the word and replace each letter a by n + 1 - a.
AWord sharp_word(AWord const& w);
BaxtElement sharp(BaxtElement const& e);

/// All words reachable by one application of a defining relation, in either
/// direction. Sorted and free of duplicates.
std::vector<AWord> rewrite_neighbors(AWord const& w);

/// All words of length <= max_len over rank n, by length then lexicographically.
std::vector<AWord> all_words(int n, int max_len);

}  // namespace baxter

template <>
struct std::hash<baxter::Key> {
  std::size_t operator()(baxter::Key const& k) const { return baxter::hash_value(k); }
};

template <>
struct std::hash<baxter::BaxtElement> {
  std::size_t operator()(baxter::BaxtElement const& e) const {
    return baxter::hash_value(e.key());
  }
};
