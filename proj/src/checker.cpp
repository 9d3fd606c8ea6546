#include "baxter/checker.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>

#include "baxter/error.hpp"

namespace baxter {

namespace {

constexpr int kNone = -1;

/// The identity with bases renumbered 0..k-1 in name order. A letter is
/// encoded as 2 * base + starred.
struct Encoded {
  std::vector<IVar> vars;
  std::vector<std::uint32_t> u;
  std::vector<std::uint32_t> v;
  std::vector<std::vector<std::uint32_t>> pos_u;  // positions of each base in u
  std::vector<std::vector<std::uint32_t>> pos_v;

  IVar letter(std::uint32_t code) const { return {vars[code / 2].base, (code & 1U) != 0}; }
};

Encoded encode(Identity const& id) {
  Encoded e;
  std::vector<IVar> all = bases(id.lhs);
  std::vector<IVar> rhs = bases(id.rhs);
  all.insert(all.end(), rhs.begin(), rhs.end());
  std::sort(all.begin(), all.end(), name_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  e.vars = all;
  std::unordered_map<std::uint32_t, std::uint32_t> index;
  for (std::uint32_t i = 0; i < all.size(); ++i) {
    index[all[i].base] = i;
  }
  auto code_word = [&](IWord const& w, std::vector<std::uint32_t>& out,
                       std::vector<std::vector<std::uint32_t>>& pos) {
    out.reserve(w.size());
    pos.assign(all.size(), {});
    for (IVar x : w) {
      std::uint32_t b = index[x.base];
      pos[b].push_back(static_cast<std::uint32_t>(out.size()));
      out.push_back(2 * b + (x.starred ? 1U : 0U));
    }
  };
  code_word(id.lhs, e.u, e.pos_u);
  code_word(id.rhs, e.v, e.pos_v);
  return e;
}

CheckReport yes(int n, Mode mode) { return {Verdict::Yes, n, mode, Condition::None, {}}; }

CheckReport no(int n, Mode mode, Condition c, CheckWitness w) {
  return {Verdict::No, n, mode, c, std::move(w)};
}

std::optional<CheckReport> balance_failure(Encoded const& e, int n, Mode mode) {
  std::size_t codes = 2 * e.vars.size();
  std::vector<std::size_t> cu(codes, 0);
  std::vector<std::size_t> cv(codes, 0);
  for (auto c : e.u) {
    ++cu[c];
  }
  for (auto c : e.v) {
    ++cv[c];
  }
  for (std::uint32_t c = 0; c < codes; ++c) {
    if (cu[c] != cv[c]) {
      IVar x = e.letter(c);
      return no(n, mode, Condition::Balanced,
                {{x}, "", to_string(x) + " occurs " + std::to_string(cu[c]) + " times on the left, " +
                              std::to_string(cv[c]) + " times on the right"});
    }
  }
  return std::nullopt;
}

// Restriction to one or two bases, with letters relabelled 0, 1 (first base)
// and 2, 3 (second base).
void restrict_local(std::vector<std::uint32_t> const& word,
                    std::vector<std::uint32_t> const& pa, std::vector<std::uint32_t> const* pb,
                    std::vector<std::uint8_t>& out) {
  out.clear();
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t nb = pb ? pb->size() : 0;
  while (i < pa.size() || j < nb) {
    if (j >= nb || (i < pa.size() && pa[i] < (*pb)[j])) {
      out.push_back(static_cast<std::uint8_t>(word[pa[i++]] & 1U));
    } else {
      out.push_back(static_cast<std::uint8_t>(2 + (word[(*pb)[j++]] & 1U)));
    }
  }
}

/// Everything the prefix conditions need from one end of a restricted word.
struct EndInfo {
  int first = kNone;
  std::size_t run = 0;
  int next = kNone;
  std::array<int, 4> pren{};  // letter counts in the longest prefix with no x, x* pair
  int pren_next = kNone;
  std::array<bool, 4> present{};
  std::array<std::array<int, 4>, 4> before{};  // before[y][x]: x strictly before the first y
};

template <class It>
EndInfo end_info(It b, It e) {
  EndInfo info;
  if (b == e) {
    return info;
  }
  info.first = *b;
  It it = b;
  while (it != e && *it == info.first) {
    ++info.run;
    ++it;
  }
  info.next = it == e ? kNone : *it;
  bool pren_open = true;
  std::array<int, 4> counts{};
  for (It p = b; p != e; ++p) {
    int x = *p;
    if (pren_open) {
      if (counts[x ^ 1] > 0) {
        pren_open = false;
        info.pren = counts;
        info.pren_next = x;
      }
    }
    if (!info.present[x]) {
      info.present[x] = true;
      info.before[x] = counts;
    }
    ++counts[x];
  }
  if (pren_open) {
    info.pren = counts;
  }
  return info;
}

class PairChecker {
 public:
  PairChecker(Encoded const& e, int rank) : e_(e), rank_(rank) {}

  std::optional<CheckReport> run() {
    std::size_t k = e_.vars.size();
    for (std::uint32_t p = 0; p < k; ++p) {
      if (auto r = check_set(p, kNone)) {
        return r;
      }
    }
    for (std::uint32_t p = 0; p < k; ++p) {
      for (std::uint32_t q = p + 1; q < k; ++q) {
        if (auto r = check_set(p, static_cast<int>(q))) {
          return r;
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::string name(int local) const {
    std::uint32_t base = local < 2 ? p_ : static_cast<std::uint32_t>(q_);
    return to_string(e_.letter(2 * base + static_cast<std::uint32_t>(local & 1)));
  }

  std::string word_name(std::vector<std::uint8_t> const& w) const {
    std::string s;
    for (auto c : w) {
      if (!s.empty()) {
        s.push_back(' ');
      }
      s += name(c);
    }
    return s.empty() ? "1" : s;
  }

  std::string restriction_name() const {
    std::string s = base_name(e_.vars[p_]);
    if (q_ != kNone) {
      s += "," + base_name(e_.vars[static_cast<std::size_t>(q_)]);
    }
    return "[" + s + "]";
  }

  std::vector<IVar> witness_vars() const {
    std::vector<IVar> vs{e_.vars[p_]};
    if (q_ != kNone) {
      vs.push_back(e_.vars[static_cast<std::size_t>(q_)]);
    }
    return vs;
  }

  std::string describe_run(EndInfo const& i, char const* what) const {
    std::string s = std::string(what) + "=" + name(i.first) + "^" + std::to_string(i.run);
    s += i.next == kNone ? " (whole word)" : " then " + name(i.next);
    return s;
  }

  std::string describe_counts(std::array<int, 4> const& c) const {
    std::string s = "{";
    bool any = false;
    for (int x = 0; x < 4; ++x) {
      if (c[static_cast<std::size_t>(x)] > 0) {
        s += (any ? ", " : "") + name(x) + ":" + std::to_string(c[static_cast<std::size_t>(x)]);
        any = true;
      }
    }
    return s + "}";
  }

  CheckReport fail(Condition c, std::string side, std::string detail) const {
    return no(rank_, Mode::Involution, c, {witness_vars(), std::move(side), std::move(detail)});
  }

  static Condition run_kind(EndInfo const& a, EndInfo const& b) {
    EndInfo const& s = a.next != kNone ? a : b;
    return (s.next ^ 1) == s.first ? Condition::I : Condition::II;
  }

  std::optional<CheckReport> compare_end(EndInfo const& a, EndInfo const& b, bool left) const {
    char const* side = left ? "left" : "right";
    char const* run = left ? "pre" : "suf";
    char const* rn = left ? "pren" : "sufn";
    std::string tag = restriction_name();
    if (a.first != b.first || a.run != b.run || a.next != b.next) {
      return fail(run_kind(a, b), side,
                  describe_run(a, run) + " on the left of " + tag + " but " +
                      describe_run(b, run) + " on the right");
    }
    if (a.pren != b.pren || (rank_ >= 3 && a.pren_next != b.pren_next)) {
      auto with_next = [&](EndInfo const& i) {
        std::string s = describe_counts(i.pren);
        if (rank_ >= 3 && i.pren_next != kNone) {
          s += " then " + name(i.pren_next);
        }
        return s;
      };
      return fail(Condition::III, side,
                  std::string(rn) + tag + " has " + with_next(a) + " on the left but " +
                      with_next(b) + " on the right");
    }
    if (rank_ < 3 || q_ == kNone) {
      return std::nullopt;
    }
    for (int y = 0; y < 4; ++y) {
      if (!a.present[static_cast<std::size_t>(y)]) {
        continue;
      }
      int x = y < 2 ? 2 : 0;
      auto const& ba = a.before[static_cast<std::size_t>(y)];
      auto const& bb = b.before[static_cast<std::size_t>(y)];
      auto ux = static_cast<std::size_t>(x);
      int sa = ba[ux] + ba[ux + 1];
      int sb = bb[ux] + bb[ux + 1];
      std::string where = left ? " before the first " : " after the last ";
      if (sa != sb) {
        return fail(Condition::IV, side,
                    std::to_string(sa) + " vs " + std::to_string(sb) + " letters of base " +
                        name(x) + where + name(y));
      }
      auto ystar = static_cast<std::size_t>(y ^ 1);
      if ((ba[ystar] == 0 || bb[ystar] == 0) && (ba[ux] != bb[ux] || ba[ux + 1] != bb[ux + 1])) {
        return fail(Condition::V, side,
                    name(x) + "/" + name(x + 1) + " counts " + std::to_string(ba[ux]) + "/" +
                        std::to_string(ba[ux + 1]) + " vs " + std::to_string(bb[ux]) + "/" +
                        std::to_string(bb[ux + 1]) + where + name(y));
      }
    }
    return std::nullopt;
  }

  std::optional<CheckReport> check_set(std::uint32_t p, int q) {
    p_ = p;
    q_ = q;
    auto const* qu = q == kNone ? nullptr : &e_.pos_u[static_cast<std::size_t>(q)];
    auto const* qv = q == kNone ? nullptr : &e_.pos_v[static_cast<std::size_t>(q)];
    restrict_local(e_.u, e_.pos_u[p], qu, ru_);
    restrict_local(e_.v, e_.pos_v[p], qv, rv_);
    if (ru_ == rv_) {
      return std::nullopt;
    }
    if (auto r = compare_end(end_info(ru_.begin(), ru_.end()), end_info(rv_.begin(), rv_.end()),
                             true)) {
      return r;
    }
    return compare_end(end_info(ru_.rbegin(), ru_.rend()), end_info(rv_.rbegin(), rv_.rend()),
                       false);
  }

  Encoded const& e_;
  int rank_;
  std::uint32_t p_ = 0;
  int q_ = kNone;
  std::vector<std::uint8_t> ru_;
  std::vector<std::uint8_t> rv_;
};

CheckReport check_pairs(Identity const& id, int rank) {
  Encoded e = encode(id);
  if (auto r = balance_failure(e, rank, Mode::Involution)) {
    return *r;
  }
  if (auto r = PairChecker(e, rank).run()) {
    return *r;
  }
  return yes(rank, Mode::Involution);
}

// Occurrences of y before the first x (left) and after the last x (right),
// compared for every ordered pair of distinct letters.
CheckReport check_occ(Identity const& id, int n, Mode mode) {
  Encoded e = encode(id);
  if (auto r = balance_failure(e, n, mode)) {
    return *r;
  }
  std::size_t codes = 2 * e.vars.size();
  auto positions = [&](std::vector<std::uint32_t> const& w) {
    std::vector<std::vector<std::uint32_t>> pos(codes);
    for (std::uint32_t i = 0; i < w.size(); ++i) {
      pos[w[i]].push_back(i);
    }
    return pos;
  };
  auto pu = positions(e.u);
  auto pv = positions(e.v);
  std::vector<std::uint32_t> letters;
  for (std::uint32_t c = 0; c < codes; ++c) {
    if (!pu[c].empty()) {
      letters.push_back(c);
    }
  }
  auto before = [](std::vector<std::uint32_t> const& ys, std::uint32_t at) {
    return static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), at) - ys.begin());
  };
  auto after = [](std::vector<std::uint32_t> const& ys, std::uint32_t at) {
    return static_cast<std::size_t>(ys.end() - std::upper_bound(ys.begin(), ys.end(), at));
  };
  for (auto x : letters) {
    for (auto y : letters) {
      if (x == y) {
        continue;
      }
      std::size_t lu = before(pu[y], pu[x].front());
      std::size_t lv = before(pv[y], pv[x].front());
      std::string names = to_string(e.letter(y)) + " relative to " + to_string(e.letter(x));
      if (lu != lv) {
        return no(n, mode, Condition::OccLR,
                  {{e.letter(x), e.letter(y)}, "left",
                   names + ": " + std::to_string(lu) + " vs " + std::to_string(lv) +
                       " occurrences before the first pivot"});
      }
      std::size_t au = after(pu[y], pu[x].back());
      std::size_t av = after(pv[y], pv[x].back());
      if (au != av) {
        return no(n, mode, Condition::OccLR,
                  {{e.letter(x), e.letter(y)}, "right",
                   names + ": " + std::to_string(au) + " vs " + std::to_string(av) +
                       " occurrences after the last pivot"});
      }
    }
  }
  return yes(n, mode);
}

bool has_star(IWord const& w) {
  return std::any_of(w.begin(), w.end(), [](IVar x) { return x.starred; });
}

}  // namespace

std::string to_string(Mode m) { return m == Mode::Involution ? "involution" : "plain"; }

std::string to_string(Verdict v) { return v == Verdict::Yes ? "YES" : "NO"; }

std::string to_string(Condition c) {
  switch (c) {
    case Condition::None:
      return "none";
    case Condition::Balanced:
      return "Balanced";
    case Condition::I:
      return "I";
    case Condition::II:
      return "II";
    case Condition::III:
      return "III";
    case Condition::IV:
      return "IV";
    case Condition::V:
      return "V";
    case Condition::OccLR:
      return "OccLR";
  }
  return "?";
}

bool is_balanced(Identity const& id) {
  Encoded e = encode(id);
  return !balance_failure(e, 1, Mode::Involution).has_value();
}

CheckReport check_baxt1(Identity const& id) {
  Identity plain{bar(id.lhs), bar(id.rhs)};
  Encoded e = encode(plain);
  if (auto r = balance_failure(e, 1, Mode::Involution)) {
    return *r;
  }
  return yes(1, Mode::Involution);
}

CheckReport check_baxt2(Identity const& id) { return check_pairs(id, 2); }

CheckReport check_baxt3(Identity const& id) { return check_pairs(id, 3); }

CheckReport check_baxt_ge4(Identity const& id, int n) {
  if (n < 4) {
    throw RankError("check_baxt_ge4 needs rank at least 4, got " + std::to_string(n));
  }
  return check_occ(id, n, Mode::Involution);
}

CheckReport check_plain(Identity const& id, int n) {
  if (has_star(id.lhs) || has_star(id.rhs)) {
    throw PreconditionError("plain mode does not accept starred letters");
  }
  if (n < 1) {
    throw RankError("rank must be at least 1");
  }
  if (n == 1) {
    CheckReport r = check_baxt1(id);
    r.mode = Mode::Plain;
    return r;
  }
  return check_occ(id, n, Mode::Plain);
}

CheckReport check(Identity const& id, int n, Mode mode) {
  if (n < 1) {
    throw RankError("rank must be at least 1, got " + std::to_string(n));
  }
  if (mode == Mode::Plain) {
    return check_plain(id, n);
  }
  switch (n) {
    case 1:
      return check_baxt1(id);
    case 2:
      return check_baxt2(id);
    case 3:
      return check_baxt3(id);
    default:
      return check_baxt_ge4(id, n);
  }
}

std::vector<IWord> isoterm_search(IWord const& u, int n) {
  if (u.size() > 10) {
    throw PreconditionError("isoterm search is limited to words of length 10, got " +
                            std::to_string(u.size()));
  }
  auto less = [](IVar a, IVar b) { return name_less(a, b); };
  std::vector<IVar> letters = u.letters;
  std::sort(letters.begin(), letters.end(), less);
  std::vector<IWord> out;
  do {
    IWord v{letters};
    if (v != u && check({u, v}, n).holds()) {
      out.push_back(v);
    }
  } while (std::next_permutation(letters.begin(), letters.end(), less));
  return out;
}

}  // namespace baxter
