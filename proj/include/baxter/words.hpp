#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace baxter {

using Letter = int;

/// A word over the ordered alphabet 1 < 2 < ... < rank.
struct AWord {
  int rank = 1;
  std::vector<Letter> letters;

  AWord() = default;
  AWord(int n, std::vector<Letter> ls);

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(AWord const&, AWord const&) = default;
};

/// Digit strings for rank <= 9, otherwise integers separated by commas or
/// whitespace. Separators are accepted for any rank.
AWord parse_aword(std::string_view text, int n);
std::string to_string(AWord const& w);
AWord concat(AWord const& u, AWord const& v);

/// Interned name of a variable together with its star flag.
struct IVar {
  std::uint32_t base = 0;
  bool starred = false;

  IVar star() const noexcept { return {base, !starred}; }
  IVar bar() const noexcept { return {base, false}; }

  friend bool operator==(IVar, IVar) = default;
  friend auto operator<=>(IVar, IVar) = default;
};

IVar var(std::string_view name, bool starred = false);
std::string const& base_name(IVar x);
std::string to_string(IVar x);

/// Order used wherever output must not depend on interning order.
bool name_less(IVar a, IVar b);

struct IWord {
  std::vector<IVar> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  IVar operator[](std::size_t i) const { return letters[i]; }
  auto begin() const { return letters.begin(); }
  auto end() const { return letters.end(); }

  friend bool operator==(IWord const&, IWord const&) = default;
};

class Term {
 public:
  enum class Kind { Atom, Concat, Star };

  static Term atom(IVar x);
  static Term concat(std::vector<Term> children);
  static Term star(Term child);

  Kind kind() const noexcept { return kind_; }
  IVar var() const noexcept { return var_; }
  std::vector<Term> const& children() const noexcept { return children_; }

  friend bool operator==(Term const&, Term const&) = default;

 private:
  Kind kind_ = Kind::Atom;
  IVar var_{};
  std::vector<Term> children_;
};

/// Grammar: term := factor+, factor := primary ('*' | '^' k)*, primary := ident | '(' term ')'.
/// Identifiers are [A-Za-z_][A-Za-z0-9_]*. A star on a bare identifier is
/// folded into the atom.
Term parse_term(std::string_view text);
IWord flatten(Term const& t);
/// Like flatten(parse_term(text)) but accepts blank text as the empty word.
IWord parse_iword(std::string_view text);
std::string to_string(IWord const& w);

struct Identity {
  IWord lhs;
  IWord rhs;
  friend bool operator==(Identity const&, Identity const&) = default;
};

/// `lhs ≈ rhs` or `lhs ~= rhs`.
Identity parse_identity(std::string_view text);
std::string to_string(Identity const& id);

/// Distinct letters of u, sorted by name then star flag.
std::vector<IVar> content(IWord const& u);
/// Distinct unstarred bases of u, sorted by name.
std::vector<IVar> bases(IWord const& u);
IWord bar(IWord const& u);
std::size_t occ(IVar x, IWord const& u);
/// Keep the letters whose base is one of `keep` (star flags ignored in `keep`).
IWord restrict_to(IWord const& u, std::span<IVar const> keep);
/// Occurrences of x strictly before the first y. Throws if y is absent.
std::size_t occ_before(IVar y, IVar x, IWord const& u);
/// Occurrences of x strictly after the last y. Throws if y is absent.
std::size_t occ_after(IVar y, IVar x, IWord const& u);
/// First occurrence of each base, starred or not.
IWord initial_part(IWord const& u);
/// Last occurrence of each base, starred or not.
IWord final_part(IWord const& u);
IWord reverse(IWord const& u);
/// Reverse and toggle every star flag.
IWord star_word(IWord const& u);

Identity reverse(Identity const& id);
Identity star_identity(Identity const& id);

}  // namespace baxter
