#pragma once

#include <string>
#include <vector>

#include "baxter/words.hpp"

namespace baxter {

/// The 22 displayed rank-2 identities, in display order, without reverses.
std::vector<Identity> basis2_listed();
/// basis2_listed() followed by the reverse of each entry.
std::vector<Identity> basis2();
/// Reverses of basis2_listed(), in the same order.
std::vector<Identity> basis2_reverses();
/// xhykxysxty = xhykyxsxty and xhykxysytx = xhykyxsytx.
std::vector<Identity> basis4();

/// Words over x, x1, ..., x{2k}. `perm` reorders the middle block: entry i
/// names the variable at middle position i (1-based). Empty means identity.
IWord p_word(int k, std::vector<int> const& perm = {});
IWord q_word(int k, std::vector<int> const& perm = {});
Identity pk_qk(int k);

struct FamilySpec {
  std::string name;  // basis2, basis4, pkqk or reverses
  int k = 2;
};

/// Throws PreconditionError for an unknown name or k < 2.
std::vector<Identity> family(FamilySpec const& spec);

}  // namespace baxter
