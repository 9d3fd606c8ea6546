#include "baxter/representation.hpp"

namespace baxter {

namespace {

AWord w3(std::vector<Letter> ls) { return AWord(3, std::move(ls)); }

struct Anchors {
  PairCase kind;
  int i1 = 0;
  int i2 = 0;
  int i3 = 0;
  int i4 = 0;
};

Anchors anchors(int i, int j, int n) {
  if (n < 4) {
    throw RankError("pair coordinates need rank at least 4, got " + std::to_string(n));
  }
  if (!(1 <= i && i < j && j <= n)) {
    throw RangeError("pair coordinate needs 1 <= i < j <= n, got (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
  }
  int is = n + 1 - i;
  int js = n + 1 - j;
  if (is == j) {
    return {PairCase::Lambda, i, j};
  }
  if (i < j && j == js && js < is) {
    return {PairCase::Theta, i, j, is};
  }
  if (js < i && i == is && is < j) {
    return {PairCase::Theta, js, i, j};
  }
  if (i < j && j < js && js < is) {
    return {PairCase::Eta, i, j, js, is};
  }
  if (js < is && is < i && i < j) {
    return {PairCase::Eta, js, is, i, j};
  }
  if (i < js && js < j && j < is) {
    return {PairCase::Kappa, i, js, j, is};
  }
  if (js < i && i < is && is < j) {
    return {PairCase::Kappa, js, i, is, j};
  }
  throw PreconditionError("no case for pair (" + std::to_string(i) + "," + std::to_string(j) +
                          ")");
}

// k -> [lo] at a, [hi] at b, [hi lo] strictly between a and c, with b <= c
std::vector<Letter> step(int k, int a, int b, int c, Letter lo, Letter hi) {
  if (k == a) {
    return {lo};
  }
  if (k == b) {
    return {hi};
  }
  if (a < k && k < c) {
    return {hi, lo};
  }
  return {};
}

}  // namespace

PairElement sharp(PairElement const& p) { return {sharp(p.second), sharp(p.first)}; }

PairCase pair_case(int i, int j, int n) { return anchors(i, j, n).kind; }

std::pair<AWord, AWord> phi_ij_letter(int i, int j, int n, Letter k) {
  if (k < 1 || k > n) {
    throw RangeError("letter " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  Anchors a = anchors(i, j, n);
  switch (a.kind) {
    case PairCase::Lambda: {
      auto img = w3(step(k, a.i1, a.i2, a.i2, 1, 3));
      return {img, img};
    }
    case PairCase::Theta:
      return {w3(step(k, a.i1, a.i2, a.i2, 1, 2)), w3(step(k, a.i2, a.i3, a.i3, 2, 3))};
    case PairCase::Eta:
      return {w3(step(k, a.i1, a.i2, a.i2, 1, 2)), w3(step(k, a.i3, a.i4, a.i4, 2, 3))};
    case PairCase::Kappa:
      return {w3(step(k, a.i1, a.i3, a.i3, 1, 2)), w3(step(k, a.i2, a.i4, a.i4, 2, 3))};
  }
  throw PreconditionError("unreachable pair case");
}

PairElement phi_ij(int i, int j, AWord const& w) {
  std::vector<std::pair<AWord, AWord>> table;
  table.reserve(static_cast<std::size_t>(w.rank));
  for (Letter k = 1; k <= w.rank; ++k) {
    table.push_back(phi_ij_letter(i, j, w.rank, k));
  }
  AWord first(3, {});
  AWord second(3, {});
  for (Letter k : w.letters) {
    auto const& [a, b] = table[static_cast<std::size_t>(k - 1)];
    first.letters.insert(first.letters.end(), a.letters.begin(), a.letters.end());
    second.letters.insert(second.letters.end(), b.letters.begin(), b.letters.end());
  }
  return {BaxtElement(std::move(first)), BaxtElement(std::move(second))};
}

PairTuple phi_n(AWord const& w) {
  if (w.rank < 4) {
    throw RankError("phi_n needs rank at least 4, got " + std::to_string(w.rank));
  }
  PairTuple t;
  t.rank = w.rank;
  for (int i = 1; i <= w.rank; ++i) {
    for (int j = i + 1; j <= w.rank; ++j) {
      t.index.emplace_back(i, j);
      t.coords.push_back(phi_ij(i, j, w));
    }
  }
  return t;
}

PairTuple sharp(PairTuple const& t) {
  PairTuple r = t;
  for (auto& c : r.coords) {
    c = sharp(c);
  }
  return r;
}

}  // namespace baxter
