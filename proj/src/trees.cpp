#include "baxter/trees.hpp"

#include <functional>

namespace baxter {

namespace {

using NodePtr = std::shared_ptr<BST::Node const>;

NodePtr insert(NodePtr const& node, Letter a, bool equal_goes_right) {
  if (!node) {
    return std::make_shared<BST::Node const>(BST::Node{a, nullptr, nullptr});
  }
  bool right = equal_goes_right ? a >= node->label : a > node->label;
  if (right) {
    return std::make_shared<BST::Node const>(
        BST::Node{node->label, node->left, insert(node->right, a, equal_goes_right)});
  }
  return std::make_shared<BST::Node const>(
      BST::Node{node->label, insert(node->left, a, equal_goes_right), node->right});
}

bool equal_nodes(BST::Node const* a, BST::Node const* b) {
  if (a == b) {
    return true;
  }
  if (!a || !b) {
    return false;
  }
  return a->label == b->label && equal_nodes(a->left.get(), b->left.get()) &&
         equal_nodes(a->right.get(), b->right.get());
}

}  // namespace

std::size_t BST::size() const {
  std::function<std::size_t(Node const*)> go = [&](Node const* n) -> std::size_t {
    return n ? 1 + go(n->left.get()) + go(n->right.get()) : 0;
  };
  return go(root_.get());
}

BST BST::insert_left_strict(Letter a) const { return BST(insert(root_, a, true)); }

BST BST::insert_right_strict(Letter a) const { return BST(insert(root_, a, false)); }

std::vector<Letter> BST::inorder() const {
  std::vector<Letter> out;
  std::function<void(Node const*)> go = [&](Node const* n) {
    if (n) {
      go(n->left.get());
      out.push_back(n->label);
      go(n->right.get());
    }
  };
  go(root_.get());
  return out;
}

std::vector<Letter> BST::postorder() const {
  std::vector<Letter> out;
  std::function<void(Node const*)> go = [&](Node const* n) {
    if (n) {
      go(n->left.get());
      go(n->right.get());
      out.push_back(n->label);
    }
  };
  go(root_.get());
  return out;
}

bool operator==(BST const& a, BST const& b) { return equal_nodes(a.root(), b.root()); }

BST p_sylv(AWord const& w) {
  BST t;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    t = t.insert_right_strict(*it);
  }
  return t;
}

BST p_sylv_sharp(AWord const& w) {
  BST t;
  for (Letter a : w.letters) {
    t = t.insert_left_strict(a);
  }
  return t;
}

TwinPair p_baxt(AWord const& w) { return {p_sylv_sharp(w), p_sylv(w)}; }

bool tree_equal(BST const& a, BST const& b) { return a == b; }

std::string to_dot(BST const& t, std::string const& graph_name) {
  std::string out = "digraph " + graph_name + " {\n  node [shape=circle];\n";
  int next = 0;
  std::function<int(BST::Node const*)> go = [&](BST::Node const* n) -> int {
    int id = next++;
    out += "  n" + std::to_string(id) + " [label=\"" + std::to_string(n->label) + "\"];\n";
    if (n->left) {
      int child = go(n->left.get());
      out += "  n" + std::to_string(id) + " -> n" + std::to_string(child) + " [label=\"L\"];\n";
    }
    if (n->right) {
      int child = go(n->right.get());
      out += "  n" + std::to_string(id) + " -> n" + std::to_string(child) + " [label=\"R\"];\n";
    }
    return id;
  };
  if (t.root()) {
    go(t.root());
  }
  out += "}\n";
  return out;
}

std::string to_text(BST const& t) {
  std::function<std::string(BST::Node const*)> go = [&](BST::Node const* n) -> std::string {
    if (!n) {
      return ".";
    }
    if (!n->left && !n->right) {
      return std::to_string(n->label);
    }
    return "(" + go(n->left.get()) + " " + std::to_string(n->label) + " " +
           go(n->right.get()) + ")";
  };
  return go(t.root());
}

}  // namespace baxter
