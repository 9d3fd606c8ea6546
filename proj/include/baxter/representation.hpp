#pragma once

#include <string>
#include <utility>
#include <vector>

#include "baxter/error.hpp"
#include "baxter/matrix.hpp"
#include "baxter/monoid.hpp"

namespace baxter {

namespace detail {

inline void require_rank(AWord const& w, int n) {
  if (w.rank != n) {
    throw RankError("expected a word of rank " + std::to_string(n) + ", got rank " +
                    std::to_string(w.rank));
  }
}

template <IdempotentSemiring S>
UTMatrix<S> product(AWord const& w, std::vector<UTMatrix<S>> const& images, std::size_t dim) {
  UTMatrix<S> r = UTMatrix<S>::identity(dim);
  for (Letter a : w.letters) {
    r = mat_mul_serial(r, images[static_cast<std::size_t>(a - 1)]);
  }
  return r;
}

}  // namespace detail

/// Image of each letter under the rank-n representation (n = 1, 2, 3).
template <IdempotentSemiring S>
std::vector<UTMatrix<S>> generator_images(int n) {
  using G = Generators<S>;
  switch (n) {
    case 1:
      return {mat_mul_serial(G::P(), G::Q())};
    case 2:
      return {block_diag<S>({G::s(), G::P(), G::J(), G::one()}),
              block_diag<S>({G::one(), G::K(), G::Q(), G::s()})};
    case 3:
      return {block_diag<S>({G::s(), G::P(), G::P(), G::E(2), G::one(), G::J(), G::E(2),
                             G::J(), G::one()}),
              block_diag<S>({G::one(), G::K(), G::K(), G::P(), G::s(), G::Q(), G::J(), G::J(),
                             G::one()}),
              block_diag<S>({G::one(), G::K(), G::E(2), G::K(), G::one(), G::E(2), G::Q(),
                             G::Q(), G::s()})};
    default:
      throw RankError("matrix representations exist for ranks 1, 2, 3 only, got " +
                      std::to_string(n));
  }
}

inline std::size_t representation_dim(int n) {
  switch (n) {
    case 1:
      return 2;
    case 2:
      return 6;
    case 3:
      return 15;
    default:
      throw RankError("matrix representations exist for ranks 1, 2, 3 only, got " +
                      std::to_string(n));
  }
}

template <IdempotentSemiring S = Tropical>
UTMatrix<S> phi(AWord const& w) {
  return detail::product(w, generator_images<S>(w.rank), representation_dim(w.rank));
}

template <IdempotentSemiring S = Tropical>
UTMatrix<S> phi1(AWord const& w) {
  detail::require_rank(w, 1);
  return phi<S>(w);
}

template <IdempotentSemiring S = Tropical>
UTMatrix<S> phi2(AWord const& w) {
  detail::require_rank(w, 2);
  return phi<S>(w);
}

template <IdempotentSemiring S = Tropical>
UTMatrix<S> phi3(AWord const& w) {
  detail::require_rank(w, 3);
  return phi<S>(w);
}

/// Block-by-block closed forms in terms of |w|_a, lpi and rpi, evaluated
/// without multiplying generator images. The empty word maps to the identity.
template <IdempotentSemiring S = Tropical>
UTMatrix<S> phi2_closed(AWord const& w);
template <IdempotentSemiring S = Tropical>
UTMatrix<S> phi3_closed(AWord const& w);

/// A pair of rank-3 elements with the involution (a, b)# = (b#, a#).
struct PairElement {
  BaxtElement first;
  BaxtElement second;
  friend bool operator==(PairElement const&, PairElement const&) = default;
};

PairElement sharp(PairElement const& p);

enum class PairCase { Lambda, Theta, Eta, Kappa };

PairCase pair_case(int i, int j, int n);
/// Images of a single letter k under the (i, j) coordinate map, as rank-3 words.
std::pair<AWord, AWord> phi_ij_letter(int i, int j, int n, Letter k);
PairElement phi_ij(int i, int j, AWord const& w);

/// One coordinate per pair i < j, in lexicographic order of (i, j).
struct PairTuple {
  int rank = 4;
  std::vector<std::pair<int, int>> index;
  std::vector<PairElement> coords;
  friend bool operator==(PairTuple const&, PairTuple const&) = default;
};

/// Requires rank >= 4.
PairTuple phi_n(AWord const& w);
PairTuple sharp(PairTuple const& t);

/// First components in lexicographic order of (i, j), then second components
/// in reverse order, each mapped through phi3 and placed on the diagonal.
template <IdempotentSemiring S = Tropical>
UTMatrix<S> materialize(PairTuple const& t) {
  std::vector<UTMatrix<S>> blocks;
  blocks.reserve(2 * t.coords.size());
  for (auto const& c : t.coords) {
    blocks.push_back(phi3<S>(c.first.representative()));
  }
  for (auto it = t.coords.rbegin(); it != t.coords.rend(); ++it) {
    blocks.push_back(phi3<S>(it->second.representative()));
  }
  return block_diag(blocks);
}

// closed forms

namespace detail {

inline int lpi_index(Key const& k, Letter lo, Letter hi) {
  for (auto p : k.lpi.entries) {
    if (p.lo == lo && p.hi == hi) {
      return p.index;
    }
  }
  return -1;
}

inline int rpi_index(Key const& k, Letter hi, Letter lo) {
  for (auto p : k.rpi.entries) {
    if (p.lo == lo && p.hi == hi) {
      return p.index;
    }
  }
  return -1;
}

[[noreturn]] inline void uncovered(char const* block, AWord const& w) {
  throw PreconditionError(std::string("closed form for block ") + block +
                          " has no case for " + to_string(w));
}

}  // namespace detail

template <IdempotentSemiring S>
UTMatrix<S> phi2_closed(AWord const& w) {
  using G = Generators<S>;
  detail::require_rank(w, 2);
  if (w.empty()) {
    return UTMatrix<S>::identity(6);
  }
  Key k = canonical_key(w);
  auto count = [&](Letter a) { return static_cast<unsigned>(k.ev(a)); };
  std::vector<Letter> supp = k.ev.support();
  auto supp_is = [&](std::vector<Letter> const& s) { return supp == s; };
  auto has = [&](Letter a) { return k.ev(a) > 0; };
  auto s = S::generator();

  auto l1 = has(1) ? scalar(power(s, count(1))) : G::one();

  UTMatrix<S> l2;
  int ell = detail::lpi_index(k, 1, 2);
  if (supp_is({1})) {
    l2 = matrix_power(G::P(), count(1));
  } else if (has(2) && ell < 0) {
    l2 = G::K();
  } else if (supp_is({1, 2}) && ell >= 0) {
    l2 = mat_mul_serial(matrix_power(G::P(), static_cast<unsigned>(ell)), G::K());
  } else {
    detail::uncovered("2", w);
  }

  UTMatrix<S> l3;
  int r = detail::rpi_index(k, 2, 1);
  if (supp_is({2})) {
    l3 = matrix_power(G::Q(), count(2));
  } else if (has(1) && r < 0) {
    l3 = G::J();
  } else if (supp_is({1, 2}) && r >= 0) {
    l3 = mat_mul_serial(G::J(), matrix_power(G::Q(), static_cast<unsigned>(r)));
  } else {
    detail::uncovered("3", w);
  }

  auto l4 = has(2) ? scalar(power(s, count(2))) : G::one();
  return block_diag<S>({l1, l2, l3, l4});
}

template <IdempotentSemiring S>
UTMatrix<S> phi3_closed(AWord const& w) {
  using G = Generators<S>;
  detail::require_rank(w, 3);
  if (w.empty()) {
    return UTMatrix<S>::identity(15);
  }
  Key k = canonical_key(w);
  auto count = [&](Letter a) { return static_cast<unsigned>(k.ev(a)); };
  std::vector<Letter> supp = k.ev.support();
  auto supp_is = [&](std::vector<Letter> const& s) { return supp == s; };
  auto has = [&](Letter a) { return k.ev(a) > 0; };
  auto s = S::generator();
  auto Pk = [&](int e) {
    return mat_mul_serial(matrix_power(G::P(), static_cast<unsigned>(e)), G::K());
  };
  auto JQ = [&](int e) {
    return mat_mul_serial(G::J(), matrix_power(G::Q(), static_cast<unsigned>(e)));
  };
  int l12 = detail::lpi_index(k, 1, 2);
  int l13 = detail::lpi_index(k, 1, 3);
  int l23 = detail::lpi_index(k, 2, 3);
  int r21 = detail::rpi_index(k, 2, 1);
  int r31 = detail::rpi_index(k, 3, 1);
  int r32 = detail::rpi_index(k, 3, 2);

  auto b1 = has(1) ? scalar(power(s, count(1))) : G::one();

  UTMatrix<S> b2;
  if (supp_is({1})) {
    b2 = matrix_power(G::P(), count(1));
  } else if (supp_is({1, 2}) && l12 >= 0) {
    b2 = Pk(l12);
  } else if (has(1) && has(3) && l13 >= 0) {
    b2 = Pk(l13);
  } else if (supp_is({1, 2, 3}) && l12 >= 0 && l23 >= 0) {
    b2 = Pk(l12);
  } else {
    b2 = G::K();
  }

  UTMatrix<S> b3;
  if (supp_is({1}) || supp_is({1, 3})) {
    b3 = matrix_power(G::P(), count(1));
  } else if (supp_is({3})) {
    b3 = G::E(2);
  } else if (has(1) && has(2) && l12 >= 0) {
    b3 = Pk(l12);
  } else {
    b3 = G::K();
  }

  UTMatrix<S> b4;
  if (supp_is({1})) {
    b4 = G::E(2);
  } else if (supp_is({2}) || supp_is({1, 2})) {
    b4 = matrix_power(G::P(), count(2));
  } else if (has(2) && has(3) && l23 >= 0) {
    b4 = Pk(l23);
  } else {
    b4 = G::K();
  }

  auto b5 = has(2) ? scalar(power(s, count(2))) : G::one();

  UTMatrix<S> b6;
  if (supp_is({2}) || supp_is({2, 3})) {
    b6 = matrix_power(G::Q(), count(2));
  } else if (supp_is({3})) {
    b6 = G::E(2);
  } else if (has(1) && has(2) && r21 >= 0) {
    b6 = JQ(r21);
  } else {
    b6 = G::J();
  }

  UTMatrix<S> b7;
  if (supp_is({1})) {
    b7 = G::E(2);
  } else if (supp_is({3}) || supp_is({1, 3})) {
    b7 = matrix_power(G::Q(), count(3));
  } else if (has(2) && has(3) && r32 >= 0) {
    b7 = JQ(r32);
  } else {
    b7 = G::J();
  }

  UTMatrix<S> b8;
  if (supp_is({3})) {
    b8 = matrix_power(G::Q(), count(3));
  } else if (has(1) && has(3) && r31 >= 0) {
    b8 = JQ(r31);
  } else if (supp_is({2, 3}) && r32 >= 0) {
    b8 = JQ(r32);
  } else if (supp_is({1, 2, 3}) && r21 >= 0 && r32 >= 0) {
    b8 = JQ(r32);
  } else {
    b8 = G::J();
  }

  auto b9 = has(3) ? scalar(power(s, count(3))) : G::one();
  return block_diag<S>({b1, b2, b3, b4, b5, b6, b7, b8, b9});
}

}  // namespace baxter
