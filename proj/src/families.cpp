#include "baxter/families.hpp"

#include <algorithm>
#include <numeric>

#include "baxter/error.hpp"

namespace baxter {

namespace {

constexpr char const* kBasis2[] = {
    "x* h x k x y s x* t x ~= x* h x k y x s x* t x",
    "x* h x k x y s x t x* ~= x* h x k y x s x t x*",
    "x h x* k x y s x* t x ~= x h x* k y x s x* t x",
    "x h x* k x y s x t x* ~= x h x* k y x s x t x*",
    "x* h x k x y s y* t y ~= x* h x k y x s y* t y",
    "x* h x k x y s y t y* ~= x* h x k y x s y t y*",
    "x h x* k x y s y* t y ~= x h x* k y x s y* t y",
    "x h x* k x y s y t y* ~= x h x* k y x s y t y*",
    "x h y k x y s x t y ~= x h y k y x s x t y",
    "x h y k x y s y t x ~= x h y k y x s y t x",
    "x h y k x y s x* t y* ~= x h y k y x s x* t y*",
    "x h y k x y s y* t x* ~= x h y k y x s y* t x*",
    "x* h y* k x y s x* t y* ~= x* h y* k y x s x* t y*",
    "x* h y* k x y s y* t x* ~= x* h y* k y x s y* t x*",
    "x* h x k x y s x t y ~= x* h x k y x s x t y",
    "x* h x k x y s y t x ~= x* h x k y x s y t x",
    "x h x* k x y s x t y ~= x h x* k y x s x t y",
    "x h x* k x y s y t x ~= x h x* k y x s y t x",
    "x* h x k x y s x* t y* ~= x* h x k y x s x* t y*",
    "x* h x k x y s y* t x* ~= x* h x k y x s y* t x*",
    "x h x* k x y s x* t y* ~= x h x* k y x s x* t y*",
    "x h x* k x y s y* t x* ~= x h x* k y x s y* t x*",
};

constexpr char const* kBasis4[] = {
    "x h y k x y s x t y ~= x h y k y x s x t y",
    "x h y k x y s y t x ~= x h y k y x s y t x",
};

IVar xi(int i) { return var("x" + std::to_string(i)); }

std::vector<int> middle_order(int k, std::vector<int> const& perm) {
  std::vector<int> order(static_cast<std::size_t>(2 * k));
  std::iota(order.begin(), order.end(), 1);
  if (perm.empty()) {
    return order;
  }
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != order) {
    throw PreconditionError("middle block order must be a permutation of 1.." +
                            std::to_string(2 * k));
  }
  return perm;
}

// x1*..x2k* . x x* . a M b . x* x . x1* x3* .. x2k-1* x2* x4* .. x2k*
IWord pq_word(int k, std::vector<int> const& perm, IVar a, IVar b) {
  if (k < 2) {
    throw PreconditionError("k must be at least 2, got " + std::to_string(k));
  }
  IVar x = var("x");
  IWord w;
  auto& ls = w.letters;
  for (int i = 1; i <= 2 * k; ++i) {
    ls.push_back(xi(i).star());
  }
  ls.push_back(x);
  ls.push_back(x.star());
  ls.push_back(a);
  for (int i : middle_order(k, perm)) {
    ls.push_back(xi(i));
  }
  ls.push_back(b);
  ls.push_back(x.star());
  ls.push_back(x);
  for (int i = 1; i <= 2 * k; i += 2) {
    ls.push_back(xi(i).star());
  }
  for (int i = 2; i <= 2 * k; i += 2) {
    ls.push_back(xi(i).star());
  }
  if (ls.size() != static_cast<std::size_t>(6 * k + 6)) {
    throw PreconditionError("p/q word has unexpected length");
  }
  return w;
}

std::vector<Identity> parse_all(auto const& texts) {
  std::vector<Identity> out;
  for (char const* t : texts) {
    out.push_back(parse_identity(t));
  }
  return out;
}

}  // namespace

std::vector<Identity> basis2_listed() { return parse_all(kBasis2); }

std::vector<Identity> basis2_reverses() {
  std::vector<Identity> out;
  for (auto const& id : basis2_listed()) {
    out.push_back(reverse(id));
  }
  return out;
}

std::vector<Identity> basis2() {
  std::vector<Identity> out = basis2_listed();
  auto rev = basis2_reverses();
  out.insert(out.end(), rev.begin(), rev.end());
  return out;
}

std::vector<Identity> basis4() { return parse_all(kBasis4); }

IWord p_word(int k, std::vector<int> const& perm) {
  IVar x = var("x");
  return pq_word(k, perm, x.star(), x);
}

IWord q_word(int k, std::vector<int> const& perm) {
  IVar x = var("x");
  return pq_word(k, perm, x, x.star());
}

Identity pk_qk(int k) { return {p_word(k), q_word(k)}; }

std::vector<Identity> family(FamilySpec const& spec) {
  if (spec.name == "basis2") {
    return basis2();
  }
  if (spec.name == "basis4") {
    return basis4();
  }
  if (spec.name == "reverses") {
    return basis2_reverses();
  }
  if (spec.name == "pkqk") {
    return {pk_qk(spec.k)};
  }
  throw PreconditionError("unknown family '" + spec.name +
                          "' (expected basis2, basis4, pkqk or reverses)");
}

}  // namespace baxter
