#include "baxter/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "baxter/error.hpp"

namespace baxter {

namespace {

struct Side {
  std::vector<std::pair<std::size_t, bool>> letters;  // (base index, starred)
};

struct Problem {
  std::vector<IVar> vars;
  Side lhs;
  Side rhs;
};

Problem prepare(Identity const& id) {
  Problem p;
  p.vars = bases(id.lhs);
  auto more = bases(id.rhs);
  p.vars.insert(p.vars.end(), more.begin(), more.end());
  std::sort(p.vars.begin(), p.vars.end(), name_less);
  p.vars.erase(std::unique(p.vars.begin(), p.vars.end()), p.vars.end());
  std::unordered_map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < p.vars.size(); ++i) {
    index[p.vars[i].base] = i;
  }
  for (IVar x : id.lhs) {
    p.lhs.letters.emplace_back(index[x.base], x.starred);
  }
  for (IVar x : id.rhs) {
    p.rhs.letters.emplace_back(index[x.base], x.starred);
  }
  return p;
}

struct ClassTable {
  std::vector<BaxtElement> elements;
  std::vector<std::vector<Letter>> plain;
  std::vector<std::vector<Letter>> starred;
};

ClassTable class_table(int n, int max_len) {
  ClassTable t;
  t.elements = enumerate_classes(n, max_len);
  for (auto const& e : t.elements) {
    t.plain.push_back(e.representative().letters);
    t.starred.push_back(sharp_word(e.representative()).letters);
  }
  return t;
}

/// Per-thread scratch for evaluating both sides under one assignment.
class Evaluator {
 public:
  Evaluator(Problem const& p, ClassTable const& t, int n) : p_(p), t_(t), n_(n) {}

  bool differs(std::vector<std::size_t> const& choice) {
    build(p_.lhs, choice, left_);
    build(p_.rhs, choice, right_);
    kl_.compute(left_, n_);
    kr_.compute(right_, n_);
    return !(kl_ == kr_);
  }

 private:
  void build(Side const& s, std::vector<std::size_t> const& choice, std::vector<Letter>& out) {
    out.clear();
    for (auto [b, star] : s.letters) {
      auto const& w = star ? t_.starred[choice[b]] : t_.plain[choice[b]];
      out.insert(out.end(), w.begin(), w.end());
    }
  }

  Problem const& p_;
  ClassTable const& t_;
  int n_;
  std::vector<Letter> left_;
  std::vector<Letter> right_;
  DenseKey kl_;
  DenseKey kr_;
};

void decode(std::uint64_t t, std::size_t radix, std::vector<std::size_t>& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<std::size_t>(t % radix);
    t /= radix;
  }
}

std::uint64_t grid_size(std::size_t classes, std::size_t k, std::uint64_t budget) {
  std::uint64_t g = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (g > budget / std::max<std::size_t>(classes, 1)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    g *= classes;
  }
  return g;
}

Substitution make_substitution(Problem const& p, ClassTable const& t,
                               std::vector<std::size_t> const& choice) {
  Substitution s;
  for (std::size_t i = 0; i < p.vars.size(); ++i) {
    s.values.emplace_back(p.vars[i], t.elements[choice[i]]);
  }
  return s;
}

struct Setup {
  Problem problem;
  ClassTable table;
  OracleResult result;
};

Setup setup(Identity const& id, int n, OracleOptions const& opts) {
  if (n < 1) {
    throw RankError("rank must be at least 1");
  }
  Setup s{prepare(id), {}, {}};
  int len = opts.max_len > 0 ? opts.max_len : default_oracle_len(s.problem.vars.size());
  s.table = class_table(n, len);
  s.result.max_len = len;
  s.result.classes = s.table.elements.size();
  s.result.grid_size = grid_size(s.result.classes, s.problem.vars.size(), opts.budget);
  if (s.result.grid_size > opts.budget) {
    throw BudgetError("oracle grid of " + std::to_string(s.result.classes) + "^" +
                      std::to_string(s.problem.vars.size()) + " assignments exceeds budget " +
                      std::to_string(opts.budget));
  }
  return s;
}

}  // namespace

BaxtElement const& Substitution::at(IVar base) const {
  for (auto const& [x, e] : values) {
    if (x.base == base.base) {
      return e;
    }
  }
  throw PreconditionError("no value for variable " + base_name(base));
}

BaxtElement eval_substitution(IWord const& w, Substitution const& s, int n) {
  AWord out(n, {});
  for (IVar x : w) {
    BaxtElement const& e = s.at(x);
    if (e.rank() != n) {
      throw RangeError("value of " + base_name(x) + " has rank " + std::to_string(e.rank()) +
                       ", expected " + std::to_string(n));
    }
    AWord piece = x.starred ? sharp_word(e.representative()) : e.representative();
    out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
  }
  return BaxtElement(std::move(out));
}

std::vector<BaxtElement> enumerate_classes(int n, int max_len) {
  std::vector<BaxtElement> out;
  std::unordered_set<Key> seen;
  for (AWord& w : all_words(n, max_len)) {
    BaxtElement e(std::move(w));
    if (seen.insert(e.key()).second) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

int default_oracle_len(std::size_t base_count) {
  if (base_count <= 2) {
    return 3;
  }
  return base_count <= 4 ? 2 : 1;
}

OracleResult brute_force_check_serial(Identity const& id, int n, OracleOptions opts) {
  Setup s = setup(id, n, opts);
  Evaluator eval(s.problem, s.table, n);
  std::vector<std::size_t> choice(s.problem.vars.size(), 0);
  for (std::uint64_t t = 0; t < s.result.grid_size; ++t) {
    decode(t, s.result.classes, choice);
    if (eval.differs(choice)) {
      s.result.witness = make_substitution(s.problem, s.table, choice);
      break;
    }
  }
  return s.result;
}

OracleResult brute_force_check(Identity const& id, int n, OracleOptions opts) {
  Setup s = setup(id, n, opts);
  auto const none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{none};
  auto grid = static_cast<std::int64_t>(s.result.grid_size);
#pragma omp parallel
  {
    Evaluator eval(s.problem, s.table, n);
    std::vector<std::size_t> choice(s.problem.vars.size(), 0);
#pragma omp for schedule(dynamic, 512)
    for (std::int64_t i = 0; i < grid; ++i) {
      auto t = static_cast<std::uint64_t>(i);
      if (t > best.load(std::memory_order_relaxed)) {
        continue;
      }
      decode(t, s.result.classes, choice);
      if (eval.differs(choice)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (t < cur && !best.compare_exchange_weak(cur, t)) {
        }
      }
    }
  }
  if (best != none) {
    std::vector<std::size_t> choice(s.problem.vars.size(), 0);
    decode(best, s.result.classes, choice);
    s.result.witness = make_substitution(s.problem, s.table, choice);
  }
  return s.result;
}

OracleResult sampled_check(Identity const& id, int n, int max_len, std::uint64_t samples,
                           std::uint64_t seed) {
  OracleOptions opts;
  opts.max_len = max_len;
  opts.budget = std::numeric_limits<std::uint64_t>::max();
  Setup s = setup(id, n, opts);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, s.result.classes - 1);
  Evaluator eval(s.problem, s.table, n);
  std::vector<std::size_t> choice(s.problem.vars.size(), 0);
  for (std::uint64_t i = 0; i < samples; ++i) {
    for (auto& c : choice) {
      c = pick(rng);
    }
    if (eval.differs(choice)) {
      s.result.witness = make_substitution(s.problem, s.table, choice);
      break;
    }
  }
  return s.result;
}

bool comm_check(Identity const& id, std::uint64_t budget) {
  Problem p = prepare(id);
  std::size_t k = p.vars.size();
  std::uint64_t grid = grid_size(9, k, budget);
  if (grid > budget) {
    throw BudgetError("commutative check needs 9^" + std::to_string(k) +
                      " assignments, over budget " + std::to_string(budget));
  }
  std::vector<std::size_t> choice(k, 0);
  auto value = [&](Side const& side) {
    CommPair sum;
    for (auto [b, star] : side.letters) {
      CommPair v{static_cast<std::int64_t>(choice[b] / 3), static_cast<std::int64_t>(choice[b] % 3)};
      if (star) {
        std::swap(v.a, v.a_star);
      }
      sum.a += v.a;
      sum.a_star += v.a_star;
    }
    return sum;
  };
  for (std::uint64_t t = 0; t < grid; ++t) {
    decode(t, 9, choice);
    if (!(value(p.lhs) == value(p.rhs))) {
      return false;
    }
  }
  return true;
}

}  // namespace baxter
