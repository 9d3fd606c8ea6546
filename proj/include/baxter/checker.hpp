#pragma once

#include <optional>
#include <string>
#include <vector>

#include "baxter/words.hpp"

namespace baxter {

enum class Mode { Involution, Plain };
enum class Verdict { Yes, No };

/// Which family of conditions rejected the identity.
enum class Condition { None, Balanced, I, II, III, IV, V, OccLR };

std::string to_string(Mode m);
std::string to_string(Verdict v);
std::string to_string(Condition c);

struct CheckWitness {
  std::vector<IVar> vars;
  std::string side;  // "left" (prefix) or "right" (suffix); empty for counts
  std::string detail;
  friend bool operator==(CheckWitness const&, CheckWitness const&) = default;
};

struct CheckReport {
  Verdict verdict = Verdict::Yes;
  int rank = 1;
  Mode mode = Mode::Involution;
  Condition violated = Condition::None;
  std::optional<CheckWitness> witness;

  bool holds() const noexcept { return verdict == Verdict::Yes; }
};

/// Same number of occurrences of every letter, star flags included.
bool is_balanced(Identity const& id);

CheckReport check_baxt1(Identity const& id);
CheckReport check_baxt2(Identity const& id);
CheckReport check_baxt3(Identity const& id);
CheckReport check_baxt_ge4(Identity const& id, int n);
/// Identities without starred letters in the plain monoid of rank n.
/// Throws PreconditionError if a starred letter occurs.
CheckReport check_plain(Identity const& id, int n);
CheckReport check(Identity const& id, int n, Mode mode = Mode::Involution);

/// Every rearrangement v != u of the letters of u with u = v certified at
/// rank n, sorted. Throws PreconditionError if |u| > 10.
std::vector<IWord> isoterm_search(IWord const& u, int n);

}  // namespace baxter
