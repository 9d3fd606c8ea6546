#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "baxter/words.hpp"

namespace baxter {

/// Persistent binary search tree over letters. Insertion copies the path to
/// the new leaf, so older versions stay valid and subtrees are shared.
class BST {
 public:
  struct Node {
    Letter label;
    std::shared_ptr<Node const> left;
    std::shared_ptr<Node const> right;
  };

  BST() = default;

  bool empty() const noexcept { return root_ == nullptr; }
  Node const* root() const noexcept { return root_.get(); }
  std::size_t size() const;

  /// Equal letters go right: a node with label x sends a to the right iff a >= x.
  BST insert_left_strict(Letter a) const;
  /// Equal letters go left: a node with label x sends a to the right iff a > x.
  BST insert_right_strict(Letter a) const;

  /// Labels in in-order (left, root, right).
  std::vector<Letter> inorder() const;
  /// Labels in left-to-right postfix reading.
  std::vector<Letter> postorder() const;

  friend bool operator==(BST const& a, BST const& b);

 private:
  explicit BST(std::shared_ptr<Node const> root) : root_(std::move(root)) {}
  std::shared_ptr<Node const> root_;
};

/// Right-strict insertion of the letters of w read from right to left.
BST p_sylv(AWord const& w);
/// Left-strict insertion of the letters of w read from left to right.
BST p_sylv_sharp(AWord const& w);

struct TwinPair {
  BST left;   // p_sylv_sharp
  BST right;  // p_sylv
  friend bool operator==(TwinPair const&, TwinPair const&) = default;
};

TwinPair p_baxt(AWord const& w);

bool tree_equal(BST const& a, BST const& b);
/// Graphviz digraph; nodes numbered in preorder, edges labelled L or R.
std::string to_dot(BST const& t, std::string const& graph_name = "T");
std::string to_text(BST const& t);

}  // namespace baxter
