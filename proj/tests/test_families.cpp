#include <doctest.h>

#include <algorithm>

#include "baxter/checker.hpp"
#include "baxter/error.hpp"
#include "baxter/families.hpp"

using namespace baxter;

TEST_CASE("family sizes") {
  CHECK(basis2_listed().size() == 22);
  CHECK(basis2().size() == 44);
  CHECK(basis2_reverses().size() == 22);
  CHECK(basis4().size() == 2);
  auto b = basis2();
  auto r = basis2_reverses();
  CHECK(std::equal(r.begin(), r.end(), b.begin() + 22));
}

TEST_CASE("listed entries") {
  auto b = basis2_listed();
  Identity first = parse_identity("x* h x k x y s x* t x ~= x* h x k y x s x* t x");
  CHECK(std::find(b.begin(), b.end(), first) != b.end());
  auto b4 = basis4();
  CHECK(b4[0] == parse_identity("x h y k x y s x t y ~= x h y k y x s x t y"));
  CHECK(b4[1] == parse_identity("x h y k x y s y t x ~= x h y k y x s y t x"));
}

TEST_CASE("p_k and q_k") {
  CHECK(to_string(p_word(2)) == "x1* x2* x3* x4* x x* x* x1 x2 x3 x4 x x* x x1* x3* x2* x4*");
  IWord q = q_word(2);
  IWord p = p_word(2);
  REQUIRE(p.size() == q.size());
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != q[i]) {
      diff.push_back(i);
    }
  }
  CHECK(diff == std::vector<std::size_t>{6, 11});
  for (int k = 2; k <= 5; ++k) {
    Identity e = pk_qk(k);
    CHECK(e.lhs.size() == static_cast<std::size_t>(6 * k + 6));
    CHECK(is_balanced(e));
  }
  CHECK_THROWS_AS(pk_qk(1), PreconditionError);
  CHECK(p_word(2, {2, 1, 3, 4}) != p_word(2));
}

TEST_CASE("checker verdicts on the families") {
  for (auto const& e : basis2()) {
    CAPTURE(to_string(e));
    CHECK(check(e, 2).holds());
  }
  for (auto const& e : basis4()) {
    for (int n = 2; n <= 6; ++n) {
      CHECK(check(e, n).holds());
    }
  }
  for (int k = 2; k <= 5; ++k) {
    CHECK(check(pk_qk(k), 3).holds());
    CHECK_FALSE(check(pk_qk(k), 4).holds());
    CHECK_FALSE(check(pk_qk(k), 5).holds());
  }
}

TEST_CASE("family dispatcher") {
  CHECK(family({"basis2", 2}).size() == 44);
  CHECK(family({"basis4", 2}).size() == 2);
  CHECK(family({"reverses", 2}).size() == 22);
  CHECK(family({"pkqk", 3}) == std::vector<Identity>{pk_qk(3)});
  CHECK_THROWS_AS(family({"nope", 2}), PreconditionError);
}
