#include <doctest.h>

#include <random>

#include "baxter/error.hpp"
#include "baxter/words.hpp"
#include "reference.hpp"

using namespace baxter;

namespace {

IWord w(char const* text) { return parse_iword(text); }

}  // namespace

TEST_CASE("parse_aword digits and separators") {
  AWord a = parse_aword("36131512665", 6);
  CHECK(a.letters == std::vector<Letter>{3, 6, 1, 3, 1, 5, 1, 2, 6, 6, 5});
  CHECK(parse_aword("", 3).empty());
  CHECK(parse_aword("10, 2 11", 12).letters == std::vector<Letter>{10, 2, 11});
  CHECK(to_string(parse_aword("10,2", 12)) == "10,2");
  CHECK(to_string(a) == "36131512665");
}

TEST_CASE("parse_aword errors") {
  CHECK_THROWS_AS(parse_aword("4", 3), RangeError);
  CHECK_THROWS_AS(parse_aword("0", 3), RangeError);
  CHECK_THROWS_AS(parse_aword("1a", 3), ParseError);
}

TEST_CASE("parse_term structure") {
  Term t = parse_term("x(x x(y x*)*)* z y*");
  REQUIRE(t.kind() == Term::Kind::Concat);
  REQUIRE(t.children().size() == 4);
  CHECK(t.children()[0] == Term::atom(var("x")));
  CHECK(t.children()[1].kind() == Term::Kind::Star);
  CHECK(t.children()[2] == Term::atom(var("z")));
  CHECK(t.children()[3] == Term::atom(var("y", true)));
  CHECK(parse_term("x*") == Term::atom(var("x", true)));
}

TEST_CASE("flatten") {
  CHECK(to_string(flatten(parse_term("x(x x(y x*)*)* z y*"))) == "x y x* x* x* z y*");
  CHECK(to_string(flatten(parse_term("x(x^2(y x*)*)* z y*"))) == "x y x* x* x* z y*");
  CHECK(flatten(Term::star(Term::atom(var("x")))) == w("x*"));
  CHECK(flatten(Term::star(Term::star(Term::atom(var("x"))))) == w("x"));
  CHECK(w("(x*)*") == w("x"));
  CHECK(w("(x y)*") == w("y* x*"));
  CHECK(w("(x y)^2") == w("x y x y"));
  CHECK(w("   ").empty());
}

TEST_CASE("parse errors carry positions") {
  for (char const* bad : {"(x", "x)", "*x", "()", "2x", "x^0", "x ^"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_term(bad), ParseError);
  }
  try {
    parse_term("x y )");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("parse_identity") {
  Identity a = parse_identity("x y ≈ y x");
  Identity b = parse_identity("x y ~= y x");
  CHECK(a == b);
  CHECK(to_string(a) == "x y ≈ y x");
  CHECK_THROWS_AS(parse_identity("x y"), ParseError);
  try {
    parse_identity("x y ~= y )");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.position() == 9);
  }
}

TEST_CASE("statistics of the example word") {
  IWord u = w("x* z x y* x y z z x");
  IVar x = var("x"), y = var("y"), z = var("z");
  CHECK(content(u) == std::vector<IVar>{x, x.star(), y, y.star(), z});
  CHECK(occ(x, u) == 3);
  CHECK(occ(x.star(), u) == 1);
  CHECK(occ(y, u) == 1);
  CHECK(bar(u) == w("x z x y x y z z x"));
  std::vector<IVar> just_x{x};
  std::vector<IVar> xy{x, y};
  CHECK(restrict_to(u, just_x) == w("x* x x x"));
  CHECK(restrict_to(u, xy) == w("x* x y* x y x"));
  CHECK(occ_before(y.star(), x, u) == 1);
  CHECK(occ_after(y.star(), x, u) == 2);
  CHECK(initial_part(u) == w("x* z y*"));
  CHECK(final_part(u) == w("y z x"));
  CHECK_THROWS_AS(occ_before(var("q"), x, u), PreconditionError);
  CHECK(bases(u) == std::vector<IVar>{x, y, z});
}

TEST_CASE("reverse and star_word") {
  CHECK(reverse(w("x^5 z y* (z*)^3 x*")) == w("x* z* z* z* y* z x x x x x"));
  CHECK(star_word(w("x y* z")) == w("z* y x*"));
  CHECK(star_word(IWord{}).empty());
  CHECK(star_word(w("x")) == w("x*"));
}

TEST_CASE("involution laws on random words") {
  std::mt19937_64 rng(7);
  std::vector<IVar> vars{var("a"), var("b"), var("c")};
  for (int i = 0; i < 500; ++i) {
    IWord u = ref::random_iword(rng, vars, 0, 12);
    IWord v = ref::random_iword(rng, vars, 0, 12);
    IWord uv = u;
    uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
    IWord sv = star_word(v), su = star_word(u);
    sv.letters.insert(sv.letters.end(), su.letters.begin(), su.letters.end());
    CHECK(star_word(star_word(u)) == u);
    CHECK(reverse(reverse(u)) == u);
    CHECK(star_word(uv) == sv);
    CHECK(parse_iword(to_string(u)) == u);
  }
}
