#include "baxter/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <omp.h>

#include "baxter/error.hpp"
#include "baxter/families.hpp"
#include "baxter/json_io.hpp"

namespace baxter {

namespace {

struct Options {
  int n = 2;
  std::string mode = "involution";
  int max_len = 0;
  std::string format = "text";
  int k = 2;
  std::uint64_t seed = 0;
  int jobs = 0;
  std::uint64_t samples = 0;
  std::uint64_t budget = 10'000'000;
  bool matrix = false;
  std::string word;
  std::string other;
};

std::string precedence_text(PrecedenceSet const& s, bool right) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    Precedence p = s.entries[i];
    Letter a = right ? p.hi : p.lo;
    Letter b = right ? p.lo : p.hi;
    out += (i ? ", (" : "(") + std::to_string(a) + "-" + std::to_string(b) + "," +
           std::to_string(p.index) + ")";
  }
  return out + "}";
}

std::string matrix_text(UTMatrix<Tropical> const& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      out += (j ? " " : "") + to_string(m(i, j));
    }
    out += "\n";
  }
  return out;
}

std::string report_text(Identity const& id, CheckReport const& r) {
  std::string out = to_string(r.verdict) + "  " + to_string(id);
  if (!r.holds()) {
    out += "\n  violated " + to_string(r.violated);
    if (r.witness) {
      std::string vars;
      for (IVar x : r.witness->vars) {
        vars += (vars.empty() ? "" : ",") + to_string(x);
      }
      out += " [" + vars + "]";
      if (!r.witness->side.empty()) {
        out += " " + r.witness->side;
      }
      out += ": " + r.witness->detail;
    }
  }
  return out;
}

Mode parse_mode(std::string const& m) { return m == "plain" ? Mode::Plain : Mode::Involution; }

int cmd_canon(Options const& o, std::ostream& out) {
  BaxtElement e = canonical(parse_aword(o.word, o.n));
  if (o.format == "json") {
    out << to_json(e).dump() << "\n";
    return 0;
  }
  Key const& k = e.key();
  std::string ev;
  for (std::size_t i = 0; i < k.ev.counts.size(); ++i) {
    ev += (i ? " " : "") + std::to_string(k.ev.counts[i]);
  }
  out << "word " << to_string(e.representative()) << "\nev   [" << ev << "]\nlpi  "
      << precedence_text(k.lpi, false) << "\nrpi  " << precedence_text(k.rpi, true) << "\n";
  return 0;
}

int cmd_equiv(Options const& o, std::ostream& out) {
  bool same = equivalent(parse_aword(o.word, o.n), parse_aword(o.other, o.n));
  if (o.format == "json") {
    out << Json{{"u", o.word}, {"v", o.other}, {"n", o.n}, {"equivalent", same}}.dump() << "\n";
  } else {
    out << (same ? "YES" : "NO") << "\n";
  }
  return same ? 0 : 1;
}

int cmd_sharp(Options const& o, std::ostream& out) {
  BaxtElement e = sharp(canonical(parse_aword(o.word, o.n)));
  if (o.format == "json") {
    out << to_json(e).dump() << "\n";
  } else {
    out << to_string(e.representative()) << "\n";
  }
  return 0;
}

int cmd_trees(Options const& o, std::ostream& out) {
  TwinPair t = p_baxt(parse_aword(o.word, o.n));
  if (o.format == "json") {
    out << Json{{"sylv_sharp", to_json(t.left)}, {"sylv", to_json(t.right)}}.dump() << "\n";
  } else if (o.format == "dot") {
    out << to_dot(t.left, "sylv_sharp") << to_dot(t.right, "sylv");
  } else {
    out << "sylv_sharp " << to_text(t.left) << "\nsylv       " << to_text(t.right) << "\n";
  }
  return 0;
}

int cmd_repr(Options const& o, std::ostream& out) {
  AWord w = parse_aword(o.word, o.n);
  if (o.n >= 4) {
    PairTuple t = phi_n(w);
    if (!o.matrix) {
      if (o.format == "json") {
        out << to_json(t).dump() << "\n";
      } else {
        for (std::size_t c = 0; c < t.coords.size(); ++c) {
          out << "(" << t.index[c].first << "," << t.index[c].second << ") "
              << to_string(t.coords[c].first.representative()) << " | "
              << to_string(t.coords[c].second.representative()) << "\n";
        }
      }
      return 0;
    }
    auto m = materialize(t);
    out << (o.format == "json" ? to_json(m).dump() + "\n" : matrix_text(m));
    return 0;
  }
  auto m = phi(w);
  out << (o.format == "json" ? to_json(m).dump() + "\n" : matrix_text(m));
  return 0;
}

std::vector<std::string> identity_lines(Options const& o, std::istream& in) {
  if (!o.word.empty()) {
    return {o.word};
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    lines.push_back(line);
  }
  return lines;
}

int cmd_check(Options const& o, std::istream& in, std::ostream& out) {
  int status = 0;
  for (auto const& line : identity_lines(o, in)) {
    Identity id = parse_identity(line);
    CheckReport r = check(id, o.n, parse_mode(o.mode));
    if (o.format == "json") {
      Json j = to_json(r);
      j["identity"] = to_string(id);
      out << j.dump() << "\n";
    } else {
      out << report_text(id, r) << "\n";
    }
    if (!r.holds()) {
      status = 1;
    }
  }
  return status;
}

IWord concat_sides(Identity const& id) {
  IWord w = id.lhs;
  w.letters.insert(w.letters.end(), id.rhs.letters.begin(), id.rhs.letters.end());
  return w;
}

Json witness_json(Identity const& id, Substitution const& s, int n) {
  return {{"assignment", to_json(s)},
          {"lhs_key", to_json(eval_substitution(id.lhs, s, n))},
          {"rhs_key", to_json(eval_substitution(id.rhs, s, n))}};
}

int cmd_oracle(Options const& o, std::istream& in, std::ostream& out) {
  int status = 0;
  for (auto const& line : identity_lines(o, in)) {
    Identity id = parse_identity(line);
    OracleResult r;
    if (o.samples > 0) {
      int len = o.max_len > 0 ? o.max_len : default_oracle_len(bases(concat_sides(id)).size());
      r = sampled_check(id, o.n, len, o.samples, o.seed);
    } else {
      r = brute_force_check(id, o.n, {o.max_len, o.budget});
    }
    std::string verdict = r.refuted() ? "REFUTED" : "NO COUNTEREXAMPLE WITHIN BOUND";
    if (o.format == "json") {
      Json j = {{"identity", to_string(id)},
                {"verdict", verdict},
                {"max_len", r.max_len},
                {"classes", r.classes},
                {"witness", r.witness ? witness_json(id, *r.witness, o.n) : Json(nullptr)}};
      out << j.dump() << "\n";
    } else {
      out << verdict << "  " << to_string(id) << "  (n=" << o.n << ", length <= " << r.max_len
          << ", " << r.classes << " classes)\n";
      if (r.witness) {
        for (auto const& [x, e] : r.witness->values) {
          out << "  " << base_name(x) << " -> " << to_string(e.representative()) << "\n";
        }
        out << "  lhs -> " << to_string(eval_substitution(id.lhs, *r.witness, o.n).representative())
            << "\n  rhs -> "
            << to_string(eval_substitution(id.rhs, *r.witness, o.n).representative()) << "\n";
      }
    }
    if (r.refuted()) {
      status = 1;
    }
  }
  return status;
}

int cmd_family(Options const& o, std::ostream& out) {
  auto ids = family({o.word, o.k});
  if (o.format == "json") {
    Json arr = Json::array();
    for (auto const& id : ids) {
      arr.push_back({{"lhs", to_string(id.lhs)}, {"rhs", to_string(id.rhs)}});
    }
    out << arr.dump() << "\n";
    return 0;
  }
  for (auto const& id : ids) {
    out << to_string(id) << "\n";
  }
  return 0;
}

int cmd_isoterm(Options const& o, std::ostream& out) {
  auto found = isoterm_search(parse_iword(o.word), o.n);
  if (o.format == "json") {
    Json arr = Json::array();
    for (auto const& v : found) {
      arr.push_back(to_string(v));
    }
    out << Json{{"word", o.word}, {"n", o.n}, {"equal_rearrangements", arr}}.dump() << "\n";
    return found.empty() ? 0 : 1;
  }
  for (auto const& v : found) {
    out << to_string(v) << "\n";
  }
  if (found.empty()) {
    out << "isoterm\n";
  }
  return found.empty() ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Baxter monoids with involution: normal forms, representations and identities"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* c) {
    c->add_option("--n", o.n, "rank")->check(CLI::Range(1, 1000));
  };
  auto add_format = [&](CLI::App* c, std::vector<std::string> formats) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
  };

  auto* canon = app.add_subcommand("canon", "canonical key of a word");
  canon->add_option("word", o.word, "word over 1..n")->required();
  add_n(canon);
  add_format(canon, {"text", "json"});

  auto* equiv = app.add_subcommand("equiv", "decide whether two words are congruent");
  equiv->add_option("u", o.word)->required();
  equiv->add_option("v", o.other)->required();
  add_n(equiv);
  add_format(equiv, {"text", "json"});

  auto* sharp_cmd = app.add_subcommand("sharp", "apply the involution to a word");
  sharp_cmd->add_option("word", o.word)->required();
  add_n(sharp_cmd);
  add_format(sharp_cmd, {"text", "json"});

  auto* trees = app.add_subcommand("trees", "twin binary search trees of a word");
  trees->add_option("word", o.word)->required();
  add_n(trees);
  add_format(trees, {"text", "json", "dot"});

  auto* repr = app.add_subcommand("repr", "matrix or pair-tuple image of a word");
  repr->add_option("word", o.word)->required();
  add_n(repr);
  add_format(repr, {"text", "json"});
  repr->add_flag("--matrix", o.matrix, "for n >= 4, print the block-diagonal matrix");

  auto* check_id = app.add_subcommand("check-id", "decide an identity (reads stdin if omitted)");
  check_id->add_option("identity", o.word, "u ~= v or u ≈ v");
  add_n(check_id);
  add_format(check_id, {"text", "json"});
  check_id->add_option("--mode", o.mode)->check(CLI::IsMember({"involution", "plain"}));

  auto* oracle = app.add_subcommand("oracle", "search for a substitution refuting an identity");
  oracle->add_option("identity", o.word);
  add_n(oracle);
  add_format(oracle, {"text", "json"});
  oracle->add_option("--max-len", o.max_len, "longest word per variable")->check(CLI::Range(0, 12));
  oracle->add_option("--samples", o.samples, "sample this many assignments instead");
  oracle->add_option("--seed", o.seed, "seed for --samples");
  oracle->add_option("--budget", o.budget, "maximum number of assignments");
  oracle->add_option("--jobs", o.jobs, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);

  auto* fam = app.add_subcommand("family", "print a named family of identities");
  fam->add_option("name", o.word)->required()->check(
      CLI::IsMember({"basis2", "basis4", "pkqk", "reverses"}));
  fam->add_option("--k", o.k)->check(CLI::Range(2, 100));
  add_format(fam, {"text", "json"});

  auto* iso = app.add_subcommand("isoterm", "rearrangements of a word equal to it at rank n");
  iso->add_option("word", o.word)->required();
  add_n(iso);
  add_format(iso, {"text", "json"});

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (o.jobs > 0) {
    omp_set_num_threads(o.jobs);
  }

  try {
    if (*canon) return cmd_canon(o, out);
    if (*equiv) return cmd_equiv(o, out);
    if (*sharp_cmd) return cmd_sharp(o, out);
    if (*trees) return cmd_trees(o, out);
    if (*repr) return cmd_repr(o, out);
    if (*check_id) return cmd_check(o, in, out);
    if (*oracle) return cmd_oracle(o, in, out);
    if (*fam) return cmd_family(o, out);
    if (*iso) return cmd_isoterm(o, out);
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace baxter
