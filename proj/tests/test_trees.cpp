#include <doctest.h>

#include <algorithm>
#include <random>

#include "baxter/trees.hpp"
#include "reference.hpp"

using namespace baxter;

namespace {

/// Right-strict: left subtree <= label < right subtree. Left-strict: left < label <= right.
bool valid(BST::Node const* n, Letter lo, Letter hi, bool right_strict) {
  if (!n) {
    return true;
  }
  if (n->label < lo || n->label > hi) {
    return false;
  }
  Letter l_hi = right_strict ? n->label : n->label - 1;
  Letter r_lo = right_strict ? n->label + 1 : n->label;
  return valid(n->left.get(), lo, l_hi, right_strict) &&
         valid(n->right.get(), r_lo, hi, right_strict);
}

std::vector<Letter> sorted(std::vector<Letter> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("insertion examples") {
  BST five = BST{}.insert_right_strict(5);
  CHECK(five.root()->label == 5);
  BST t = five.insert_right_strict(6);
  CHECK(t.root()->right->label == 6);
  t = five.insert_right_strict(5);
  CHECK(t.root()->left->label == 5);

  BST three = BST{}.insert_left_strict(3);
  t = three.insert_left_strict(3);
  CHECK(t.root()->right->label == 3);
  t = three.insert_left_strict(1);
  CHECK(t.root()->left->label == 1);
}

TEST_CASE("example word roots") {
  AWord w = parse_aword("36131512665", 6);
  CHECK(p_sylv(w).root()->label == 5);
  CHECK(p_sylv_sharp(w).root()->label == 3);
  TwinPair e = p_baxt(AWord(3, {}));
  CHECK(e.left.empty());
  CHECK(e.right.empty());
}

TEST_CASE("tree_equal") {
  CHECK(tree_equal(p_baxt(parse_aword("2121", 2)).right, p_baxt(parse_aword("2211", 2)).right));
  CHECK_FALSE(tree_equal(BST{}.insert_left_strict(1), BST{}.insert_left_strict(2)));
  CHECK(tree_equal(BST{}, BST{}));
}

TEST_CASE("search tree invariants and label multiset") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    AWord w = ref::random_word(rng, 5, 20);
    BST s = p_sylv(w), ss = p_sylv_sharp(w);
    CHECK(valid(s.root(), 1, 5, true));
    CHECK(valid(ss.root(), 1, 5, false));
    CHECK(sorted(s.inorder()) == sorted(w.letters));
    CHECK(s.inorder() == sorted(w.letters));
    CHECK(ss.inorder() == sorted(w.letters));
    CHECK(s.size() == w.size());
  }
}

TEST_CASE("persistence") {
  BST a = BST{}.insert_right_strict(3).insert_right_strict(1);
  std::string before = to_text(a);
  BST b = a.insert_right_strict(2).insert_right_strict(5);
  CHECK(to_text(a) == before);
  CHECK(a.size() == 2);
  CHECK(b.size() == 4);
}

TEST_CASE("text and dot output") {
  BST t = p_sylv(parse_aword("213", 3));
  CHECK(to_text(t) == "((. 1 2) 3 .)");
  std::string dot = to_dot(t, "S");
  CHECK(dot == to_dot(p_sylv(parse_aword("213", 3)), "S"));
  CHECK(dot.find("digraph S") != std::string::npos);
  CHECK(dot.find("label=\"L\"") != std::string::npos);
}
