#include "baxter/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

#include "baxter/error.hpp"

namespace baxter {

namespace {

class SymbolTable {
 public:
  std::uint32_t intern(std::string_view name) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(std::string(name)); it != ids_.end()) {
        return it->second;
      }
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] =
        ids_.try_emplace(std::string(name), static_cast<std::uint32_t>(names_.size()));
    if (inserted) {
      names_.emplace_back(name);
    }
    return it->second;
  }

  std::string const& name(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    if (id >= names_.size()) {
      throw RangeError("unknown variable id " + std::to_string(id));
    }
    // deque references stay valid across push_back
    return names_[id];
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::deque<std::string> names_;
};

SymbolTable& symbols() {
  static SymbolTable table;
  return table;
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

void check_letter(Letter a, int n) {
  if (a < 1 || a > n) {
    throw RangeError("letter " + std::to_string(a) + " outside 1.." + std::to_string(n));
  }
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    skip_space();
    if (pos_ == text_.size()) {
      throw ParseError("empty term", pos_);
    }
    Term t = parse_concat();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(describe(), pos_);
    }
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) {
      ++pos_;
    }
  }

  std::string describe() const {
    char c = text_[pos_];
    if (c == ')') {
      return "unbalanced ')'";
    }
    if (c == '*') {
      return "dangling '*'";
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return "identifier cannot start with a digit";
    }
    return std::string("unexpected character '") + c + "'";
  }

  bool at_factor_start() {
    skip_space();
    return pos_ < text_.size() && (is_ident_start(text_[pos_]) || text_[pos_] == '(');
  }

  Term parse_concat() {
    std::vector<Term> factors;
    while (at_factor_start()) {
      factors.push_back(parse_factor());
    }
    if (factors.empty()) {
      if (pos_ == text_.size()) {
        throw ParseError("unexpected end of input", pos_);
      }
      throw ParseError(describe(), pos_);
    }
    if (factors.size() == 1) {
      return std::move(factors.front());
    }
    return Term::concat(std::move(factors));
  }

  Term parse_factor() {
    Term t = parse_primary();
    skip_space();
    while (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '^')) {
      if (text_[pos_] == '^') {
        t = parse_power(std::move(t));
        skip_space();
        continue;
      }
      ++pos_;
      if (t.kind() == Term::Kind::Atom) {
        t = Term::atom(t.var().star());
      } else if (t.kind() == Term::Kind::Star) {
        Term inner = t.children().front();
        t = std::move(inner);
      } else {
        t = Term::star(std::move(t));
      }
      skip_space();
    }
    return t;
  }

  Term parse_power(Term base) {
    std::size_t at = pos_++;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    unsigned k = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, k);
    if (start == pos_ || ec != std::errc() || k == 0 || k > 10000) {
      throw ParseError("exponent must be an integer between 1 and 10000", at);
    }
    return Term::concat(std::vector<Term>(k, base));
  }

  Term parse_primary() {
    if (text_[pos_] == '(') {
      std::size_t open = pos_++;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        throw ParseError("empty group", pos_);
      }
      Term t = parse_concat();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("unbalanced '('", open);
      }
      ++pos_;
      return t;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      ++pos_;
    }
    return Term::atom(var(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void flatten_into(Term const& t, bool starred, std::vector<IVar>& out) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      out.push_back(starred ? t.var().star() : t.var());
      return;
    case Term::Kind::Star:
      flatten_into(t.children().front(), !starred, out);
      return;
    case Term::Kind::Concat:
      if (starred) {
        for (auto it = t.children().rbegin(); it != t.children().rend(); ++it) {
          flatten_into(*it, true, out);
        }
      } else {
        for (auto const& c : t.children()) {
          flatten_into(c, false, out);
        }
      }
      return;
  }
}

}  // namespace

AWord::AWord(int n, std::vector<Letter> ls) : rank(n), letters(std::move(ls)) {
  if (n < 1) {
    throw RangeError("rank must be at least 1");
  }
  for (Letter a : letters) {
    check_letter(a, n);
  }
}

AWord parse_aword(std::string_view text, int n) {
  if (n < 1) {
    throw RangeError("rank must be at least 1");
  }
  bool separated = std::any_of(text.begin(), text.end(),
                               [](char c) { return c == ',' || is_space(c); });
  std::vector<Letter> letters;
  if (!separated && n <= 9) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("expected a digit, found '") + c + "'", i);
      }
      Letter a = c - '0';
      if (a < 1 || a > n) {
        throw RangeError("letter " + std::to_string(a) + " at position " + std::to_string(i) +
                         " outside 1.." + std::to_string(n));
      }
      letters.push_back(a);
    }
    return AWord(n, std::move(letters));
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || is_space(text[i]))) {
      ++i;
    }
    if (i == text.size()) {
      break;
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != ',' && !is_space(text[i])) {
      ++i;
    }
    Letter a = 0;
    auto token = text.substr(start, i - start);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), a);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("malformed letter '" + std::string(token) + "'", start);
    }
    if (a < 1 || a > n) {
      throw RangeError("letter " + std::to_string(a) + " at position " + std::to_string(start) +
                       " outside 1.." + std::to_string(n));
    }
    letters.push_back(a);
  }
  return AWord(n, std::move(letters));
}

std::string to_string(AWord const& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.rank <= 9) {
      out.push_back(static_cast<char>('0' + w[i]));
    } else {
      if (i > 0) {
        out.push_back(',');
      }
      out += std::to_string(w[i]);
    }
  }
  return out;
}

AWord concat(AWord const& u, AWord const& v) {
  if (u.rank != v.rank) {
    throw RangeError("cannot concatenate words of rank " + std::to_string(u.rank) + " and " +
                     std::to_string(v.rank));
  }
  AWord w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

IVar var(std::string_view name, bool starred) {
  if (name.empty() || !is_ident_start(name.front()) ||
      !std::all_of(name.begin(), name.end(), is_ident_char)) {
    throw ParseError("invalid identifier '" + std::string(name) + "'", 0);
  }
  return {symbols().intern(name), starred};
}

std::string const& base_name(IVar x) { return symbols().name(x.base); }

std::string to_string(IVar x) { return x.starred ? base_name(x) + "*" : base_name(x); }

bool name_less(IVar a, IVar b) {
  if (a.base != b.base) {
    return base_name(a) < base_name(b);
  }
  return a.starred < b.starred;
}

Term Term::atom(IVar x) {
  Term t;
  t.kind_ = Kind::Atom;
  t.var_ = x;
  return t;
}

Term Term::concat(std::vector<Term> children) {
  if (children.empty()) {
    throw PreconditionError("concatenation needs at least one factor");
  }
  Term t;
  t.kind_ = Kind::Concat;
  t.children_ = std::move(children);
  return t;
}

Term Term::star(Term child) {
  Term t;
  t.kind_ = Kind::Star;
  t.children_.push_back(std::move(child));
  return t;
}

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

IWord flatten(Term const& t) {
  IWord w;
  flatten_into(t, false, w.letters);
  return w;
}

IWord parse_iword(std::string_view text) {
  if (std::all_of(text.begin(), text.end(), is_space)) {
    return {};
  }
  return flatten(parse_term(text));
}

std::string to_string(IWord const& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out.push_back(' ');
    }
    out += to_string(w[i]);
  }
  return out;
}

Identity parse_identity(std::string_view text) {
  static constexpr std::string_view kApprox = "≈";
  static constexpr std::string_view kAscii = "~=";
  std::size_t at = text.find(kApprox);
  std::size_t width = kApprox.size();
  if (at == std::string_view::npos) {
    at = text.find(kAscii);
    width = kAscii.size();
  }
  if (at == std::string_view::npos) {
    throw ParseError("missing '≈' or '~=' separator", text.size());
  }
  auto side = [&](std::string_view part, std::size_t offset) {
    try {
      return flatten(parse_term(part));
    } catch (ParseError const& e) {
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at position "));
      throw ParseError(msg, offset + e.position());
    }
  };
  Identity id;
  id.lhs = side(text.substr(0, at), 0);
  id.rhs = side(text.substr(at + width), at + width);
  return id;
}

std::string to_string(Identity const& id) {
  return to_string(id.lhs) + " ≈ " + to_string(id.rhs);
}

std::vector<IVar> content(IWord const& u) {
  std::vector<IVar> out(u.begin(), u.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::sort(out.begin(), out.end(), name_less);
  return out;
}

std::vector<IVar> bases(IWord const& u) {
  std::vector<IVar> out;
  out.reserve(u.size());
  for (IVar x : u) {
    out.push_back(x.bar());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::sort(out.begin(), out.end(), name_less);
  return out;
}

IWord bar(IWord const& u) {
  IWord w;
  w.letters.reserve(u.size());
  for (IVar x : u) {
    w.letters.push_back(x.bar());
  }
  return w;
}

std::size_t occ(IVar x, IWord const& u) {
  return static_cast<std::size_t>(std::count(u.begin(), u.end(), x));
}

IWord restrict_to(IWord const& u, std::span<IVar const> keep) {
  std::unordered_set<std::uint32_t> ids;
  for (IVar x : keep) {
    ids.insert(x.base);
  }
  IWord w;
  for (IVar x : u) {
    if (ids.contains(x.base)) {
      w.letters.push_back(x);
    }
  }
  return w;
}

std::size_t occ_before(IVar y, IVar x, IWord const& u) {
  auto first = std::find(u.begin(), u.end(), y);
  if (first == u.end()) {
    throw PreconditionError("pivot " + to_string(y) + " does not occur in the word");
  }
  return static_cast<std::size_t>(std::count(u.begin(), first, x));
}

std::size_t occ_after(IVar y, IVar x, IWord const& u) {
  auto last = std::find(u.letters.rbegin(), u.letters.rend(), y);
  if (last == u.letters.rend()) {
    throw PreconditionError("pivot " + to_string(y) + " does not occur in the word");
  }
  return static_cast<std::size_t>(std::count(u.letters.rbegin(), last, x));
}

IWord initial_part(IWord const& u) {
  std::unordered_set<std::uint32_t> seen;
  IWord w;
  for (IVar x : u) {
    if (seen.insert(x.base).second) {
      w.letters.push_back(x);
    }
  }
  return w;
}

IWord final_part(IWord const& u) {
  std::unordered_set<std::uint32_t> seen;
  IWord w;
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) {
    if (seen.insert(it->base).second) {
      w.letters.push_back(*it);
    }
  }
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

IWord reverse(IWord const& u) {
  IWord w{std::vector<IVar>(u.letters.rbegin(), u.letters.rend())};
  return w;
}

IWord star_word(IWord const& u) {
  IWord w;
  w.letters.reserve(u.size());
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) {
    w.letters.push_back(it->star());
  }
  return w;
}

Identity reverse(Identity const& id) { return {reverse(id.lhs), reverse(id.rhs)}; }

Identity star_identity(Identity const& id) { return {star_word(id.lhs), star_word(id.rhs)}; }

}  // namespace baxter
