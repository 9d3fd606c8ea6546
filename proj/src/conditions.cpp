#include "baxter/conditions.hpp"

#include <algorithm>

#include "baxter/error.hpp"

namespace baxter {

namespace {

std::size_t leading(IWord const& r, IVar x) {
  std::size_t a = 0;
  while (a < r.size() && r[a] == x) {
    ++a;
  }
  return a;
}

bool at(IWord const& r, std::size_t i, IVar x) { return i < r.size() && r[i] == x; }

// r = x^a x* W with a >= 1 forces r' = x^a x* W'.
bool run_then(IWord const& r, IWord const& rp, IVar x, IVar next) {
  std::size_t a = leading(r, x);
  if (a == 0 || !at(r, a, next)) {
    return true;
  }
  return leading(rp, x) == a && at(rp, a, next);
}

bool same_multiset(IWord const& a, IWord const& b, std::size_t len) {
  if (a.size() < len || b.size() < len) {
    return false;
  }
  std::vector<IVar> x(a.letters.begin(), a.letters.begin() + static_cast<long>(len));
  std::vector<IVar> y(b.letters.begin(), b.letters.begin() + static_cast<long>(len));
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// r = a z W where a is over {p, q} and contains both; then r' = a' z' W' with
// a' a rearrangement of a and z' one of `allowed`.
bool block_then(IWord const& r, IWord const& rp, IVar p, IVar q, IVar z,
                std::vector<IVar> const& allowed) {
  std::size_t len = 0;
  bool has_p = false;
  bool has_q = false;
  while (len < r.size() && (r[len] == p || r[len] == q)) {
    has_p = has_p || r[len] == p;
    has_q = has_q || r[len] == q;
    ++len;
  }
  if (!has_p || !has_q || !at(r, len, z)) {
    return true;
  }
  if (!same_multiset(r, rp, len) || len >= rp.size()) {
    return false;
  }
  return std::find(allowed.begin(), allowed.end(), rp[len]) != allowed.end();
}

std::size_t count_before(IWord const& w, IVar y, IVar x) {
  auto first = std::find(w.begin(), w.end(), y);
  return static_cast<std::size_t>(std::count(w.begin(), first, x));
}

// One direction, prefix side, for letters x, y of different bases.
ConditionResult pair_prefix(IWord const& u, IWord const& v, IVar x, IVar y, int n) {
  std::vector<IVar> keep{x, y};
  IWord r = restrict_to(u, keep);
  IWord rp = restrict_to(v, keep);
  if (!run_then(r, rp, x, x.star())) {
    return {false, Condition::I};
  }
  if (!run_then(r, rp, y, x)) {
    return {false, Condition::II};
  }
  std::vector<IVar> allowed{x};
  if (n == 2) {
    allowed.push_back(y);
  }
  if (!block_then(r, rp, x.star(), y.star(), x, allowed)) {
    return {false, Condition::III};
  }
  if (n >= 3) {
    if (count_before(u, y, x) + count_before(u, y, x.star()) !=
        count_before(v, y, x) + count_before(v, y, x.star())) {
      return {false, Condition::IV};
    }
    if (!block_then(r, rp, x, x.star(), y, {y})) {
      return {false, Condition::V};
    }
  }
  return {};
}

// Both polarities of every base: a pattern may name a letter whose base
// occurs only with the other star flag.
ConditionResult one_way(IWord const& u, IWord const& v, int n) {
  std::vector<IVar> letters;
  for (IVar b : bases(u)) {
    letters.push_back(b);
    letters.push_back(b.star());
  }
  for (int side = 0; side < 2; ++side) {
    IWord uu = side == 0 ? u : reverse(u);
    IWord vv = side == 0 ? v : reverse(v);
    for (IVar x : letters) {
      std::vector<IVar> keep{x};
      if (!run_then(restrict_to(uu, keep), restrict_to(vv, keep), x, x.star())) {
        return {false, Condition::I};
      }
    }
    for (IVar x : letters) {
      for (IVar y : letters) {
        if (x.base == y.base) {
          continue;
        }
        if (auto r = pair_prefix(uu, vv, x, y, n); !r.holds) {
          return r;
        }
      }
    }
  }
  return {};
}

}  // namespace

ConditionResult evaluate_conditions(Identity const& id, int n) {
  if (n != 2 && n != 3) {
    throw RankError("condition evaluator covers ranks 2 and 3, got " + std::to_string(n));
  }
  if (!is_balanced(id)) {
    return {false, Condition::Balanced};
  }
  if (auto r = one_way(id.lhs, id.rhs, n); !r.holds) {
    return r;
  }
  return one_way(id.rhs, id.lhs, n);
}

}  // namespace baxter
