#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "baxter/monoid.hpp"
#include "baxter/words.hpp"

namespace baxter {

/// Values of the bases of an identity, sorted by variable name. A starred
/// letter evaluates to the image of its base under the involution.
struct Substitution {
  std::vector<std::pair<IVar, BaxtElement>> values;
  BaxtElement const& at(IVar base) const;
};

/// Throws PreconditionError if a base has no value.
BaxtElement eval_substitution(IWord const& w, Substitution const& s, int n);

/// One element per class of words of length <= max_len, represented by its
/// first word in length-then-lexicographic order.
std::vector<BaxtElement> enumerate_classes(int n, int max_len);

struct OracleOptions {
  int max_len = 0;                    // 0: 3 for <= 2 bases, 2 for 3-4, 1 beyond
  std::uint64_t budget = 10'000'000;  // maximum number of assignments
};

struct OracleResult {
  /// Without a witness the verdict is only "no counterexample within the bound".
  std::optional<Substitution> witness;
  int max_len = 0;
  std::size_t classes = 0;
  std::uint64_t grid_size = 0;

  bool refuted() const noexcept { return witness.has_value(); }
};

int default_oracle_len(std::size_t base_count);

/// Tries every assignment of classes to bases. Assignments are ordered with
/// the first base (by name) most significant; the reported witness is the
/// first one in that order. Throws BudgetError if the grid exceeds the budget.
OracleResult brute_force_check(Identity const& id, int n, OracleOptions opts = {});
/// Single-threaded reference for brute_force_check.
OracleResult brute_force_check_serial(Identity const& id, int n, OracleOptions opts = {});
/// Uniform samples from the same grid, seeded.
OracleResult sampled_check(Identity const& id, int n, int max_len, std::uint64_t samples,
                           std::uint64_t seed);

/// Elements of the free commutative monoid on a, a* with a <-> a*.
struct CommPair {
  std::int64_t a = 0;
  std::int64_t a_star = 0;
  friend bool operator==(CommPair, CommPair) = default;
};

/// Checks the identity in the commutative model under every assignment with
/// coordinates in {0, 1, 2}.
bool comm_check(Identity const& id, std::uint64_t budget = 10'000'000);

}  // namespace baxter
