#pragma once

#include "baxter/checker.hpp"
#include "baxter/words.hpp"

namespace baxter {

struct ConditionResult {
  bool holds = true;
  Condition violated = Condition::None;
};

/// Pattern-matching form of the rank 2 and rank 3 characterisations: for every
/// ordered pair of letters x, y from different bases, the shape of u[x, y]
/// forces the shape of v[x, y]; for every letter x, the shape of u[x] forces
/// the shape of v[x]. Checked in both directions. Kept deliberately separate
/// from the restriction-based checker so the two can be compared.
ConditionResult evaluate_conditions(Identity const& id, int n);

}  // namespace baxter
