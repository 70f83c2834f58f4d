// Copyright 2026 The gjcluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gj/blanks.hpp"
#include "gj/cluster_automaton.hpp"
#include "gj/cluster_basic.hpp"
#include "gj/error.hpp"
#include "gj/oracle.hpp"
#include "gj/penney.hpp"
#include "gj/series_engine.hpp"
#include "gj/symmetry.hpp"

using namespace gj;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  std::string symmetry = "none";
};

// "A..Z,0,1" -> tokens, with single-character ranges expanded client-side.
std::vector<Letter> parse_alphabet(const std::string& text) {
  std::vector<Letter> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    std::size_t dots = tok.find("..");
    if (dots != std::string::npos && dots == 1 && tok.size() == 4) {
      for (char c = tok[0]; c <= tok[3]; ++c) out.push_back(std::string(1, c));
    } else if (!tok.empty()) {
      out.push_back(tok);
    }
  }
  return out;
}

// "[P,I],[C,A]" -> words; "-" reads one bracketed word per line from stdin.
std::vector<Word> parse_word_list(const std::string& text) {
  std::vector<Word> out;
  if (text == "-") {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.find('[') == std::string::npos) continue;
      out.push_back(parse_word(line));
    }
    return out;
  }
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(parse_word(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(parse_word(cur));
  return out;
}

// Minimal probability expressions: sums of signed terms, each term an
// optional rational coefficient optionally times a symbol ("1/2", "p",
// "1-p", "2*p").
RationalFunction parse_prob(const std::string& text, VarTable& vars) {
  RationalFunction total;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  bool first = true;
  while (skip_ws(), i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw Error("BadProbability", "cannot parse probability " + text);
    }
    first = false;
    skip_ws();
    std::string num, den, name;
    while (i < text.size() && std::isdigit(text[i])) num += text[i++];
    if (i < text.size() && text[i] == '/') {
      ++i;
      while (i < text.size() && std::isdigit(text[i])) den += text[i++];
    }
    if (i < text.size() && text[i] == '*') ++i;
    while (i < text.size() && (std::isalnum(text[i]) || text[i] == '_'))
      name += text[i++];
    RationalFunction term(Polynomial(BigInt(num.empty() ? "1" : num)),
                          Polynomial(BigInt(den.empty() ? "1" : den)));
    if (!name.empty())
      term = term * RationalFunction(Polynomial::variable(vars.intern(name)));
    if (sign < 0) term = -term;
    total = total + term;
  }
  return total;
}

json poly_to_json(const Polynomial& p, const VarTable& vars) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::object();
    for (const auto& [v, e] : m.exps)
      mono[vars.name(VarId{v})] = e;
    terms.push_back(json{{"c", c.to_string()}, {"m", mono}});
  }
  return terms;
}

json rational_to_json(const RationalFunction& f, const VarTable& vars) {
  return json{{"num", poly_to_json(f.num(), vars)},
              {"den", poly_to_json(f.den(), vars)}};
}

void emit_rational(const RationalFunction& f, const VarTable& vars,
                   const Options& opt) {
  if (opt.format == "json") {
    std::cout << json{{"rational", rational_to_json(f, vars)}}.dump() << "\n";
  } else {
    std::cout << f.to_string(vars) << "\n";
  }
}

void emit_series(const Series& g, const VarTable& vars, const Options& opt) {
  bool constant = true;
  for (int i = 0; i <= g.order(); ++i)
    if (!g.coeff(i).is_constant()) constant = false;
  if (opt.format == "json") {
    json out;
    if (constant) {
      json arr = json::array();
      for (int i = 0; i <= g.order(); ++i)
        arr.push_back(g.coeff(i).constant_value().to_string());
      out = json{{"series", arr}};
    } else {
      json arr = json::array();
      for (int i = 0; i <= g.order(); ++i)
        arr.push_back(poly_to_json(g.coeff(i), vars));
      out = json{{"series", arr}};
    }
    std::cout << out.dump() << "\n";
    return;
  }
  if (constant) {
    std::cout << g.to_csv() << "\n";
  } else {
    for (int i = 0; i <= g.order(); ++i)
      std::cout << "s^" << i << ": " << g.coeff(i).to_string(vars) << "\n";
  }
}

Alphabet make_alphabet(const std::string& alphabet, bool symbolic_d,
                       const std::vector<Word>& bad) {
  if (symbolic_d) {
    std::vector<Letter> letters;
    for (const Word& w : bad)
      for (const Letter& l : w) letters.push_back(l);
    return Alphabet::symbolic(std::move(letters));
  }
  if (alphabet.empty())
    throw Error("BadAlphabet", "--alphabet is required (or --symbolic-d)");
  return Alphabet::concrete(parse_alphabet(alphabet));
}

GroupKind parse_group(const std::string& symmetry) {
  if (symmetry == "sym") return GroupKind::Symmetric;
  if (symmetry == "signed") return GroupKind::Signed;
  throw Error("NotInvariant", "unknown symmetry kind " + symmetry);
}

Marking parse_marking(const std::string& text) {
  if (text == "avoid") return Marking::Avoid;
  if (text == "count" || text == "uniform") return Marking::Uniform;
  if (text == "detail" || text == "per-word") return Marking::PerWord;
  throw Error("BadMarking", "unknown marking " + text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact generating functions for words avoiding, or counting, "
      "forbidden factors (cluster method), with runs, wildcard patterns, "
      "Penney-ante games, symmetry reduction and series expansion."};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string alphabet, bad, patterns, blank = "B";
  std::string letters_csv, words_list, probs_csv, marking = "avoid";
  bool symbolic_d = false;
  int order = 10, nmax = 8, memo = 1, dim = 3, nuterms = 15, rparam = 0;
  int length = 0;
  std::uint64_t games = 300, seed = 0;
  double eps = 1e-9;

  auto add_word_opts = [&](CLI::App* sub, bool need_alphabet = true) {
    if (need_alphabet) {
      sub->add_option("--alphabet", alphabet,
                      "Comma-separated letters; single-char ranges like A..Z");
      sub->add_flag("--symbolic-d", symbolic_d,
                    "Leave the alphabet size symbolic (variable d)");
    }
    sub->add_option("--bad", bad,
                    "Bad words as bracketed lists, e.g. \"[P,I],[C,A]\"; "
                    "'-' reads one per line from stdin");
  };

  CLI::App* avoid = app.add_subcommand(
      "avoid", "Generating function of words avoiding the bad words");
  add_word_opts(avoid);
  avoid->add_option("--symmetry", opt.symmetry, "none, sym, or signed")
      ->check(CLI::IsMember({"none", "sym", "signed"}));

  CLI::App* count = app.add_subcommand(
      "count", "F(s,t): words by length and number of bad factors");
  add_word_opts(count);

  CLI::App* detail = app.add_subcommand(
      "detail", "F(s; t[b]...): one marking variable per bad word");
  add_word_opts(detail);

  CLI::App* letters = app.add_subcommand(
      "letters", "Letter-weighted generating function in the x[v]");
  add_word_opts(letters);
  letters->add_option("--marking", marking, "avoid, count, or detail");

  CLI::App* general = app.add_subcommand(
      "general",
      "F(s,t) counting all occurrences, bad words may nest or contain "
      "one another");
  add_word_opts(general);
  general->add_option("--marking", marking, "count or detail");

  CLI::App* runs = app.add_subcommand(
      "runs", "R(s,r): B-avoiding words by number of maximal runs");
  add_word_opts(runs);

  CLI::App* avgruns = app.add_subcommand(
      "avg-runs", "Average number of maximal runs among B-avoiding words");
  add_word_opts(avgruns);
  avgruns->add_option("--nmax", nmax, "Largest length reported");

  CLI::App* blanks_c = app.add_subcommand(
      "blanks-count", "F(s, t_p...): occurrences of wildcard patterns");
  blanks_c->add_option("--alphabet", alphabet)->required();
  blanks_c->add_option("--blank", blank, "The wildcard token (default B)");
  blanks_c->add_option("--patterns", patterns, "Bracketed pattern list")
      ->required();

  CLI::App* blanks_a = app.add_subcommand(
      "blanks-avoid", "Words matching no wildcard pattern anywhere");
  blanks_a->add_option("--alphabet", alphabet)->required();
  blanks_a->add_option("--blank", blank, "The wildcard token (default B)");
  blanks_a->add_option("--patterns", patterns, "Bracketed pattern list")
      ->required();

  CLI::App* penney = app.add_subcommand(
      "penney", "Exact win probabilities of a Penney-ante game");
  penney->add_option("--letters", letters_csv, "Die faces")->required();
  penney->add_option("--words", words_list, "Player words")->required();
  penney->add_option("--probs", probs_csv,
                     "Face probabilities: rationals like 1/2 or symbols "
                     "like p, 1-p")
      ->required();

  CLI::App* penney_sim = app.add_subcommand(
      "penney-sim", "Simulate Penney-ante games (deterministic per seed)");
  penney_sim->add_option("--letters", letters_csv)->required();
  penney_sim->add_option("--words", words_list)->required();
  penney_sim->add_option("--probs", probs_csv)->required();
  penney_sim->add_option("--games", games, "Number of games");
  penney_sim->add_option("--seed", seed, "Random seed");

  CLI::App* best = app.add_subcommand(
      "best-play", "Best counter-move against the opponents' words");
  best->add_option("--letters", letters_csv)->required();
  best->add_option("--words", words_list, "Opponent words")->required();
  best->add_option("--probs", probs_csv)->required();
  best->add_option("--length", length,
                   "Candidate length (default: longest opponent)");

  CLI::App* series = app.add_subcommand(
      "series", "Series expansion through the iterative cluster engine");
  add_word_opts(series);
  series->add_option("--marking", marking, "avoid, count, or detail");
  series->add_option("--order", order, "Truncation order");

  CLI::App* sqfree = app.add_subcommand(
      "sqfree", "Counts of words avoiding squares uu with |u| <= memo");
  sqfree->add_option("--memo", memo, "Largest root length banned")->required();
  sqfree->add_option("--dim", dim, "Alphabet size")->required();
  sqfree->add_option("--nuterms", nuterms, "Last term index")->required();

  CLI::App* growth = app.add_subcommand(
      "growth", "Growth bounds for the memory-limited square-free language");
  growth->add_option("--memo", memo)->required();
  growth->add_option("--dim", dim)->required();
  growth->add_option("--nuterms", nuterms, "Terms for the ratio table");
  growth->add_option("--eps", eps, "Bisection width for the root");

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Ground-truth counts by exhaustive enumeration");
  add_word_opts(oracle_cmd);
  oracle_cmd->add_option("--nmax", nmax, "Largest length scanned");
  std::string oracle_mode = "counts";
  oracle_cmd->add_option("--mode", oracle_mode,
                         "counts, table, or transfer")
      ->check(CLI::IsMember({"counts", "table", "transfer"}));
  oracle_cmd->add_option("--marking", marking,
                         "Marking for --mode transfer");

  CLI::App* phir = app.add_subcommand(
      "phi-r", "Full factor-counting generating function in the x[w]");
  phir->add_option("--alphabet", alphabet)->required();
  phir->add_option("--r", rparam, "Track factors of length <= r+1")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    VarTable vars;
    if (avoid->parsed()) {
      std::vector<Word> words = parse_word_list(bad);
      Alphabet V = make_alphabet(alphabet, symbolic_d, words);
      BadSet B = make_badset(words);
      RationalFunction f = opt.symmetry == "none"
                               ? gj_avoid(V, B, vars)
                               : sym_gj_avoid(V, B, parse_group(opt.symmetry),
                                              vars);
      emit_rational(f, vars, opt);
    } else if (count->parsed()) {
      std::vector<Word> words = parse_word_list(bad);
      Alphabet V = make_alphabet(alphabet, symbolic_d, words);
      emit_rational(gj_count(V, make_badset(words), vars), vars, opt);
    } else if (detail->parsed()) {
      std::vector<Word> words = parse_word_list(bad);
      Alphabet V = make_alphabet(alphabet, symbolic_d, words);
      emit_rational(gj_detail(V, make_badset(words), vars), vars, opt);
    } else if (letters->parsed()) {
      std::vector<Word> words = parse_word_list(bad);
      Alphabet V = make_alphabet(alphabet, false, words);
      emit_rational(
          gj_letters(V, make_badset(words), parse_marking(marking), vars),
          vars, opt);
    } else if (general->parsed()) {
      std::vector<Word> words = parse_word_list(bad);
      Alphabet V = make_alphabet(alphabet, symbolic_d, words);
      Marking m = parse_marking(marking == "avoid" ? "count" : marking);
      emit_rational(gjnz_count(V, make_badset(words), m, vars), vars, opt);
    } else if (runs->parsed()) {
      std::vector<Word> words = parse_word_list(bad);
      Alphabet V = make_alphabet(alphabet, false, words);
      emit_rational(runs_gf(V, make_badset(words), vars), vars, opt);
    } else if (avgruns->parsed()) {
      std::vector<Word> words = parse_word_list(bad);
      Alphabet V = make_alphabet(alphabet, false, words);
      AvgRuns a = avg_runs(V, make_badset(words), nmax);
      if (opt.format == "json") {
        json vals = json::array(), ratios = json::array();
        for (auto& [num, den] : a.values)
          vals.push_back(num.to_string() +
                         (den.is_one() ? "" : "/" + den.to_string()));
        for (double r : a.trailing_ratios) ratios.push_back(r);
        std::cout << json{{"avg_runs", vals},
                          {"c_estimate", a.c_estimate},
                          {"trailing_ratios", ratios}}
                         .dump()
                  << "\n";
      } else {
        for (std::size_t n = 0; n < a.values.size(); ++n) {
          const auto& [num, den] = a.values[n];
          std::cout << "A(" << n << ") = " << num.to_string();
          if (!den.is_one()) std::cout << "/" << den.to_string();
          std::cout << "\n";
        }
        std::cout << "estimate C ~ " << a.c_estimate
                  << " from A(n)/n (not rigorous); trailing:";
        for (double r : a.trailing_ratios) std::cout << " " << r;
        std::cout << "\n";
      }
    } else if (blanks_c->parsed() || blanks_a->parsed()) {
      Alphabet V = Alphabet::concrete(parse_alphabet(alphabet));
      std::vector<PatternWord> pats;
      for (Word& toks : parse_word_list(patterns))
        pats.push_back(PatternWord{std::move(toks), blank});
      RationalFunction f = blanks_c->parsed() ? blanks_count(V, pats, vars)
                                              : blanks_avoid(V, pats, vars);
      emit_rational(f, vars, opt);
    } else if (penney->parsed() || penney_sim->parsed() || best->parsed()) {
      PenneyInstance inst;
      inst.letters = parse_alphabet(letters_csv);
      inst.words = parse_word_list(words_list);
      std::string tok;
      std::istringstream is(probs_csv);
      while (std::getline(is, tok, ','))
        inst.probs.push_back(parse_prob(tok, vars));
      if (penney->parsed()) {
        std::vector<RationalFunction> win = penney_probabilities(inst, vars);
        if (opt.format == "json") {
          json arr = json::array();
          for (const auto& p : win) arr.push_back(rational_to_json(p, vars));
          std::cout << json{{"probabilities", arr}}.dump() << "\n";
        } else {
          for (std::size_t i = 0; i < win.size(); ++i)
            std::cout << (i ? ", " : "") << win[i].to_string(vars);
          std::cout << "\n";
        }
      } else if (penney_sim->parsed()) {
        auto wins = simulate_games(inst, games, seed);
        if (opt.format == "json") {
          std::cout << json{{"wins", wins}}.dump() << "\n";
        } else {
          for (std::size_t i = 0; i < wins.size(); ++i)
            std::cout << (i ? ", " : "") << wins[i];
          std::cout << "\n";
        }
      } else {
        int len = length > 0 ? length : 0;
        if (len == 0)
          for (const Word& w : inst.words)
            len = std::max(len, static_cast<int>(w.size()));
        auto [word, prob] =
            best_last_play(inst.letters, inst.words, inst.probs, len);
        if (opt.format == "json") {
          std::cout << json{{"word", render_word(word)},
                            {"probability", rational_to_json(prob, vars)}}
                           .dump()
                    << "\n";
        } else {
          std::cout << render_word(word) << " " << prob.to_string(vars)
                    << "\n";
        }
      }
    } else if (series->parsed()) {
      std::vector<Word> words = parse_word_list(bad);
      Alphabet V = make_alphabet(alphabet, symbolic_d, words);
      SeriesJob job{V, make_badset(words), parse_marking(marking), order};
      Series g = gj_series(job, vars);
      emit_series(g, vars, opt);
    } else if (sqfree->parsed()) {
      std::vector<BigInt> counts = squarefree_series(memo, dim, nuterms);
      if (opt.format == "json") {
        json arr = json::array();
        for (const auto& c : counts) arr.push_back(c.to_string());
        std::cout << json{{"series", arr}}.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < counts.size(); ++i)
          std::cout << (i ? ", " : "") << counts[i].to_string();
        std::cout << "\n";
      }
    } else if (growth->parsed()) {
      GrowthBounds gb = growth_bounds(memo, dim, nuterms, eps);
      if (opt.format == "json") {
        json ratios = json::array();
        for (double r : gb.ratios) ratios.push_back(r);
        std::cout << json{{"upper_bound", gb.upper_bound},
                          {"rational_route", gb.rational_route},
                          {"root_lo", gb.root_lo},
                          {"root_hi", gb.root_hi},
                          {"ratios", ratios}}
                         .dump()
                  << "\n";
      } else {
        std::cout.precision(10);
        if (gb.rational_route) {
          std::cout << "upper bound " << gb.upper_bound
                    << " (rigorous for the memory-limited language; "
                       "denominator root in ["
                    << gb.root_lo << ", " << gb.root_hi << "])\n";
        } else {
          std::cout << "ratio estimate " << gb.upper_bound
                    << " (not rigorous; closed form skipped at this memo)\n";
        }
        std::cout << "ratios:";
        for (double r : gb.ratios) std::cout << " " << r;
        std::cout << "\n";
      }
    } else if (oracle_cmd->parsed()) {
      std::vector<Word> words = parse_word_list(bad);
      Alphabet V = make_alphabet(alphabet, false, words);
      BadSet B = make_badset(words);
      if (oracle_mode == "counts") {
        auto counts = oracle::dfs_avoid_count(V, B, nmax);
        for (std::size_t i = 0; i < counts.size(); ++i)
          std::cout << (i ? ", " : "") << counts[i].to_string();
        std::cout << "\n";
      } else if (oracle_mode == "table") {
        auto table = oracle::brute_table(V, B, nmax);
        for (int n = 0; n <= nmax; ++n)
          for (const auto& [vec, cnt] :
               table.by_n[static_cast<std::size_t>(n)]) {
            std::cout << n << " [";
            for (std::size_t i = 0; i < vec.size(); ++i)
              std::cout << (i ? "," : "") << vec[i];
            std::cout << "] " << cnt.to_string() << "\n";
          }
      } else {
        oracle::NaiveMarking m = oracle::NaiveMarking::Avoid;
        if (marking == "count" || marking == "uniform")
          m = oracle::NaiveMarking::Uniform;
        if (marking == "detail" || marking == "per-word")
          m = oracle::NaiveMarking::PerWord;
        emit_rational(oracle::naive_transfer(V, B, m, vars), vars, opt);
      }
    } else if (phir->parsed()) {
      Alphabet V = Alphabet::concrete(parse_alphabet(alphabet));
      emit_rational(oracle::phi_r(V, rparam, vars), vars, opt);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";  // starts with the error name
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "Internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
