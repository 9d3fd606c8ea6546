#include <doctest.h>

#include <random>
#include <set>

#include "baxter/checker.hpp"
#include "baxter/error.hpp"
#include "baxter/families.hpp"
#include "baxter/oracle.hpp"
#include "reference.hpp"

using namespace baxter;

namespace {

Identity id(char const* text) { return parse_identity(text); }

std::vector<IVar> pool(int k) {
  std::vector<IVar> out;
  for (int i = 0; i < k; ++i) {
    out.push_back(var(std::string(1, static_cast<char>('a' + i))));
  }
  return out;
}

}  // namespace

TEST_CASE("class counts match a twin-tree dedupe") {
  for (int n = 1; n <= 4; ++n) {
    for (int len = 0; len <= 4; ++len) {
      std::set<std::pair<std::string, std::string>> trees;
      for (auto const& w : all_words(n, len)) {
        TwinPair t = p_baxt(w);
        trees.emplace(to_text(t.left), to_text(t.right));
      }
      CHECK(enumerate_classes(n, len).size() == trees.size());
    }
  }
}

TEST_CASE("substitution evaluation") {
  Identity e = id("x y ~= y x");
  Substitution s{{{var("x"), canonical(parse_aword("1", 2))}, {var("y"), canonical(parse_aword("2", 2))}}};
  CHECK_FALSE(eval_substitution(e.lhs, s, 2) == eval_substitution(e.rhs, s, 2));
  Substitution t{{{var("x"), identity_element(2)}, {var("y"), canonical(parse_aword("2", 2))}}};
  CHECK(eval_substitution(e.lhs, t, 2) == eval_substitution(e.rhs, t, 2));
  Identity m = id("x x* ~= x* x");
  Substitution u{{{var("x"), canonical(parse_aword("1", 2))}}};
  CHECK(eval_substitution(m.lhs, u, 2) == canonical(parse_aword("12", 2)));
  CHECK(eval_substitution(m.rhs, u, 2) == canonical(parse_aword("21", 2)));
  CHECK_THROWS_AS(eval_substitution(parse_iword("z"), u, 2), PreconditionError);
}

TEST_CASE("brute force examples") {
  OracleResult r = brute_force_check(id("x y ~= y x"), 2, {1, 10'000'000});
  REQUIRE(r.refuted());
  CHECK(r.witness->at(var("x")).representative() == parse_aword("1", 2));
  CHECK(r.witness->at(var("y")).representative() == parse_aword("2", 2));
  CHECK_FALSE(brute_force_check(id("x y x* ~= x y x*"), 3).refuted());
  CHECK(brute_force_check(id("x x* ~= x* x"), 2).refuted());
}

TEST_CASE("rank 4 identity survives every assignment of length at most 2") {
  Identity e = id("x h y k x y s x t y ~= x h y k y x s x t y");
  CHECK_THROWS_AS(brute_force_check(e, 4, {2, 10'000'000}), BudgetError);
  OracleResult r = brute_force_check(e, 4, {2, 100'000'000});
  CHECK(r.grid_size == 85'766'121);
  CHECK_FALSE(r.refuted());
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(brute_force_check(id("a b c d e ~= e d c b a"), 4, {3, 1000}), BudgetError);
  CHECK_THROWS_AS(comm_check(id("a b c d e f g h i ~= i h g f e d c b a"), 1000), BudgetError);
  CHECK(default_oracle_len(2) == 3);
  CHECK(default_oracle_len(4) == 2);
  CHECK(default_oracle_len(5) == 1);
}

TEST_CASE("parallel witness equals the serial one") {
  std::mt19937_64 rng(41);
  auto vars = pool(3);
  for (int i = 0; i < 80; ++i) {
    Identity e = ref::random_identity(rng, vars, 7);
    for (int n = 2; n <= 3; ++n) {
      OracleResult a = brute_force_check(e, n), b = brute_force_check_serial(e, n);
      REQUIRE(a.refuted() == b.refuted());
      if (a.refuted()) {
        for (std::size_t k = 0; k < a.witness->values.size(); ++k) {
          CHECK(a.witness->values[k].first == b.witness->values[k].first);
          CHECK(a.witness->values[k].second.representative() ==
                b.witness->values[k].second.representative());
        }
      }
    }
  }
}

TEST_CASE("witnesses really separate the two sides") {
  std::mt19937_64 rng(42);
  auto vars = pool(2);
  for (int i = 0; i < 100; ++i) {
    Identity e = ref::random_identity(rng, vars, 8);
    OracleResult r = brute_force_check(e, 3);
    if (r.refuted()) {
      CHECK_FALSE(eval_substitution(e.lhs, *r.witness, 3) == eval_substitution(e.rhs, *r.witness, 3));
    }
  }
}

TEST_CASE("sampling is reproducible and sound") {
  Identity e = id("x y ~= y x");
  OracleResult a = sampled_check(e, 3, 3, 500, 7), b = sampled_check(e, 3, 3, 500, 7);
  REQUIRE(a.refuted());
  REQUIRE(b.refuted());
  CHECK(a.witness->values[0].second == b.witness->values[0].second);
  CHECK(a.witness->values[1].second == b.witness->values[1].second);
  CHECK_FALSE(sampled_check(pk_qk(2), 3, 1, 2000, 1).refuted());
}

TEST_CASE("commutative model matches balance") {
  CHECK(comm_check(id("x x* ~= x* x")));
  CHECK_FALSE(comm_check(id("x ~= x x")));
  std::mt19937_64 rng(43);
  auto vars = pool(3);
  for (int i = 0; i < 3000; ++i) {
    IWord u = ref::random_iword(rng, vars, 0, 6);
    IWord v = rng() % 2 ? ref::random_identity(rng, vars, 6).rhs : u;
    if (rng() % 2 && !v.empty()) {
      std::shuffle(v.letters.begin(), v.letters.end(), rng);
    }
    Identity e{u, v};
    CHECK(comm_check(e) == is_balanced(e));
  }
}
