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

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "gj/cluster_automaton.hpp"
#include "gj/cluster_basic.hpp"
#include "gj/error.hpp"
#include "gj/oracle.hpp"
#include "test_util.hpp"

using namespace gj;
using gjtest::abc;
using gjtest::w;
using gjtest::ws;

namespace {

// Conceptual cluster checker, straight from the definition: a marked word
// whose intervals are genuine occurrences, cover every letter, and leave no
// cut point. Intervals are 1-based inclusive (i, j) plus an item index.
struct MarkedInterval {
  int i, j;
  int item;
};

bool is_generalized_cluster(const Word& word,
                            const std::vector<MarkedInterval>& marks,
                            const std::vector<Word>& items) {
  const int n = static_cast<int>(word.size());
  if (n == 0 || marks.empty()) return false;
  for (const auto& m : marks) {
    if (m.i < 1 || m.j > n || m.i > m.j) return false;
    const Word& item = items[static_cast<std::size_t>(m.item)];
    if (static_cast<int>(item.size()) != m.j - m.i + 1) return false;
    for (int p = m.i; p <= m.j; ++p)
      if (word[static_cast<std::size_t>(p - 1)] !=
          item[static_cast<std::size_t>(p - m.i)])
        return false;
  }
  // Distinct (i, j, item) triples.
  for (std::size_t a = 0; a < marks.size(); ++a)
    for (std::size_t b = a + 1; b < marks.size(); ++b)
      if (marks[a].i == marks[b].i && marks[a].j == marks[b].j &&
          marks[a].item == marks[b].item)
        return false;
  // Every letter covered.
  for (int p = 1; p <= n; ++p) {
    bool covered = false;
    for (const auto& m : marks)
      if (m.i <= p && p <= m.j) covered = true;
    if (!covered) return false;
  }
  // No cut point.
  for (int cut = 1; cut < n; ++cut) {
    bool crossed = false;
    for (const auto& m : marks)
      if (m.i <= cut && cut + 1 <= m.j) crossed = true;
    if (!crossed) return false;
  }
  return true;
}

void check_uniform_table(const RationalFunction& F, VarTable& vars,
                         const Alphabet& V, const BadSet& B, int n_max) {
  auto table = oracle::brute_table(V, B, n_max);
  VarId s = *vars.find("s");
  auto tvar = vars.find("t");
  Series g = Series::from_rational(F, s, n_max);
  for (int n = 0; n <= n_max; ++n) {
    Polynomial expect;
    for (const auto& [total, count] : table.by_total(n)) {
      Polynomial mono(count);
      if (total > 0) {
        REQUIRE(tvar.has_value());
        mono = mono *
               Polynomial::variable(*tvar).pow(static_cast<unsigned>(total));
      }
      expect += mono;
    }
    CHECK(g.coeff(n) == expect);
  }
}

}  // namespace

TEST_CASE("single items") {
  VarTable vars;
  Weighting wt = Weighting::length(vars);
  VarId s = *vars.find("s");
  VarId t = vars.intern("t");
  Polynomial tm1 = Polynomial::variable(t) - Polynomial(1);
  Polynomial s2 = Polynomial::term(Monomial::var(s, 2), BigInt(1));

  SUBCASE("PI cannot chain with itself") {
    auto a = build_cluster_automaton({{w("PI"), tm1}}, wt);
    CHECK(automaton_cluster_weight(a) == RationalFunction(tm1 * s2));
  }
  SUBCASE("AA chains one letter at a time") {
    auto a = build_cluster_automaton({{w("AA"), tm1}}, wt);
    RationalFunction expect(
        tm1 * s2, Polynomial(1) - tm1 * Polynomial::variable(s));
    CHECK(automaton_cluster_weight(a) == expect);
  }
}

TEST_CASE("consistency with the basic engine on reduced sets") {
  Alphabet V = abc("ESX");
  BadSet B = make_badset(ws({"SEX", "XE"}));
  VarTable vars;
  RationalFunction general = gjnz_count(V, B, Marking::Uniform, vars);
  VarTable v2;
  RationalFunction basic = gj_count(V, B, v2);
  CHECK(general == basic);

  VarTable v4;
  RationalFunction empty = gjnz_count(V, make_badset({}), Marking::Uniform, v4);
  VarId s4 = *v4.find("s");
  Polynomial den = Polynomial(1) - Polynomial::term(Monomial::var(s4, 1), BigInt(3));
  CHECK(empty == RationalFunction(Polynomial(1), den));
}

TEST_CASE("nested bad words against the oracle") {
  SUBCASE("PI and PIPI, the ten-letter query included") {
    VarTable vars;
    Alphabet V = abc("IP");
    BadSet B = make_badset(ws({"PI", "PIPI"}));
    RationalFunction F = gjnz_count(V, B, Marking::Uniform, vars);
    check_uniform_table(F, vars, V, B, 10);

    // The ten-letter query: coefficient of s^10 t^m for every m, including
    // m = 13 (which is zero: ten letters admit at most five PI plus four
    // PIPI occurrences) and the extremal m = 9 (the word PIPIPIPIPI).
    VarId s = *vars.find("s");
    VarId t = *vars.find("t");
    Series g = Series::from_rational(F, s, 10);
    auto table = oracle::brute_table(V, B, 10);
    auto coeff_at = [&](int m) { return g.coeff(10).coeff(Monomial::var(t, m)); };
    BigInt at13 = table.by_total(10).count(13) ? table.by_total(10).at(13)
                                               : BigInt(0);
    CHECK(coeff_at(13) == at13);
    CHECK(at13.is_zero());
    CHECK(coeff_at(9) == BigInt(1));
    CHECK(table.by_total(10).at(9) == BigInt(1));
  }
  SUBCASE("CA and CACA full table") {
    VarTable vars;
    Alphabet V = abc("CA");
    BadSet B = make_badset(ws({"CA", "CACA"}));
    RationalFunction F = gjnz_count(V, B, Marking::Uniform, vars);
    check_uniform_table(F, vars, V, B, 8);
  }
  SUBCASE("per-word marking on a nested set") {
    VarTable vars;
    Alphabet V = abc("IP");
    BadSet B = make_badset(ws({"PI", "PIPI"}));
    RationalFunction F = gjnz_count(V, B, Marking::PerWord, vars);
    VarId s = *vars.find("s");
    VarId t1 = *vars.find("t[P,I]");
    VarId t2 = *vars.find("t[P,I,P,I]");
    auto table = oracle::brute_table(V, B, 8);
    Series g = Series::from_rational(F, s, 8);
    for (int n = 0; n <= 8; ++n) {
      Polynomial expect;
      for (const auto& [vec, count] : table.by_n[static_cast<std::size_t>(n)]) {
        Polynomial mono(count);
        if (vec[0] > 0)
          mono = mono * Polynomial::variable(t1).pow(static_cast<unsigned>(vec[0]));
        if (vec[1] > 0)
          mono = mono * Polynomial::variable(t2).pow(static_cast<unsigned>(vec[1]));
        expect += mono;
      }
      CHECK(g.coeff(n) == expect);
    }
  }
}

TEST_CASE("clusters with late bridging intervals") {
  // The canonical insertion order can strand an interval (gap of letters no
  // interval has written) until a longer interval arriving later covers the
  // gap; these fixtures exercise exactly that shape.
  struct Fixture {
    std::string alphabet;
    std::vector<std::string> words;
  };
  for (const auto& fx : {Fixture{"AB", {"B", "ABBA"}},
                         Fixture{"AB", {"A", "B", "ABBA"}},
                         Fixture{"ABC", {"A", "ABCA", "BC"}}}) {
    VarTable vars;
    Alphabet V = abc(fx.alphabet);
    BadSet B = make_badset(gjtest::ws(fx.words));
    RationalFunction F = gjnz_count(V, B, Marking::Uniform, vars);
    check_uniform_table(F, vars, V, B, 8);
  }
}

TEST_CASE("randomized oracle battery") {
  // Thirty seeded fixtures over two or three letters, words up to length
  // five, nesting allowed; the generalized engine must reproduce the
  // exhaustive tables exactly.
  gjtest::Rng rng(0xC0FFEE);
  int checked = 0;
  while (checked < 30) {
    Alphabet V = rng.below(2) ? abc("AB") : abc("ABC");
    std::vector<Word> words;
    int k = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < k; ++i) {
      Word word;
      int len = 1 + static_cast<int>(rng.below(5));
      for (int j = 0; j < len; ++j)
        word.push_back(
            V.letters[rng.below(static_cast<std::uint64_t>(V.size()))]);
      words.push_back(word);
    }
    BadSet B = make_badset(words);
    VarTable vars;
    RationalFunction F = gjnz_count(V, B, Marking::Uniform, vars);
    check_uniform_table(F, vars, V, B, 8);
    ++checked;
  }
}

TEST_CASE("same word carried by two items") {
  // Two items sharing the word 00 (the shared-expansion shape): a single
  // occurrence must pick up both markers independently.
  VarTable vars;
  Weighting wt = Weighting::length(vars);
  VarId t1 = vars.intern("t1");
  VarId t2 = vars.intern("t2");
  Polynomial m1 = Polynomial::variable(t1) - Polynomial(1);
  Polynomial m2 = Polynomial::variable(t2) - Polynomial(1);
  auto a = build_cluster_automaton({{w("00"), m1}, {w("00"), m2}}, wt);
  RationalFunction wC = automaton_cluster_weight(a);
  RationalFunction F =
      assemble_gf(abc("01"), wC, MarkingSpec{Marking::Uniform, false}, vars);
  VarId s = *vars.find("s");
  Series g = Series::from_rational(F, s, 6);
  for (int n = 0; n <= 6; ++n) {
    Polynomial expect;
    for (int code = 0; code < (1 << n); ++code) {
      int occ = 0;
      for (int b = 0; b + 1 < n; ++b)
        if (!(code >> b & 1) && !(code >> (b + 1) & 1)) ++occ;
      Monomial mono;
      if (occ) {
        mono.exps.emplace_back(t1.index, occ);
        mono.exps.emplace_back(t2.index, occ);
        std::sort(mono.exps.begin(), mono.exps.end());
      }
      expect += Polynomial::term(mono, BigInt(1));
    }
    CHECK(g.coeff(n) == expect);
  }
}

TEST_CASE("avoid specialization") {
  VarTable vars;
  Alphabet V = abc("IP");
  BadSet B = make_badset(ws({"PI", "PIPI"}));
  RationalFunction F = gjnz_count(V, B, Marking::Uniform, vars);
  VarId t = *vars.find("t");
  VarTable v2;
  CHECK(F.substitute(t, Polynomial()) == gj_avoid(V, reduce_badset(B), v2));
}

TEST_CASE("the conceptual cluster checker") {
  std::vector<Word> items = ws({"AC", "CA", "CACA", "ICAC", "TICA", "TIT", "TI"});
  auto idx = [&](const std::string& word) {
    auto it = std::find(items.begin(), items.end(), w(word));
    REQUIRE(it != items.end());
    return static_cast<int>(it - items.begin());
  };
  SUBCASE("the eight-letter example is a cluster") {
    std::vector<MarkedInterval> marks{
        {1, 2, idx("TI")},   {1, 3, idx("TIT")},  {3, 6, idx("TICA")},
        {4, 7, idx("ICAC")}, {6, 7, idx("AC")},   {5, 8, idx("CACA")},
        {7, 8, idx("CA")}};
    CHECK(is_generalized_cluster(w("TITICACA"), marks, items));
  }
  SUBCASE("a marked word with a cut point is not a cluster") {
    std::vector<Word> sexy = ws({"SEX", "ESE", "XES"});
    std::vector<MarkedInterval> marks{{1, 3, 0}, {4, 6, 1}, {5, 7, 0}};
    CHECK_FALSE(is_generalized_cluster(w("SEXESEX"), marks, sexy));
  }
  SUBCASE("uncovered letters disqualify") {
    std::vector<Word> one = ws({"AA"});
    CHECK_FALSE(is_generalized_cluster(w("AAA"), {{1, 2, 0}}, one));
  }
}

namespace {

// Maximal-run distribution of B-avoiding words, by enumeration.
std::map<std::pair<int, int>, long> runs_oracle(const Alphabet& V,
                                                const BadSet& B, int n_max) {
  std::map<std::pair<int, int>, long> out;
  const int d = V.size();
  for (int n = 0; n <= n_max; ++n) {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    while (true) {
      Word word;
      for (int v : idx) word.push_back(V.letters[static_cast<std::size_t>(v)]);
      std::vector<long> occ = count_occurrences(word, B);
      bool clean =
          std::all_of(occ.begin(), occ.end(), [](long k) { return k == 0; });
      if (clean) {
        int runs = 0;
        for (std::size_t i = 0; i < word.size(); ++i)
          if (i == 0 || word[i] != word[i - 1]) ++runs;
        ++out[{n, runs}];
      }
      int pos = n - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == d - 1) {
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

void check_runs(const Alphabet& V, const BadSet& B, int n_max) {
  VarTable vars;
  RationalFunction R = runs_gf(V, B, vars);
  VarId s = *vars.find("s");
  VarId r = *vars.find("r");
  Series g = Series::from_rational(R, s, n_max);
  auto expect = runs_oracle(V, B, n_max);
  for (int n = 0; n <= n_max; ++n) {
    Polynomial want;
    for (const auto& [key, count] : expect) {
      if (key.first != n) continue;
      want += Polynomial::term(Monomial::var(r, key.second), BigInt(count));
    }
    CHECK(g.coeff(n) == want);
  }
}

}  // namespace

TEST_CASE("run distributions") {
  SUBCASE("a one-letter alphabet has one run at every length") {
    VarTable vars;
    RationalFunction R = runs_gf(Alphabet::concrete({"0"}), make_badset({}),
                                 vars);
    VarId s = *vars.find("s");
    VarId r = *vars.find("r");
    Series g = Series::from_rational(R, s, 5);
    CHECK(g.coeff(0) == Polynomial(1));
    for (int n = 1; n <= 5; ++n)
      CHECK(g.coeff(n) == Polynomial::variable(r));
  }
  SUBCASE("free binary words") {
    check_runs(abc("01"), make_badset({}), 8);
    // Spot checks: four 3-letter binary words have exactly two runs, and
    // every length has d one-run (constant) words.
    VarTable vars;
    RationalFunction R = runs_gf(abc("01"), make_badset({}), vars);
    VarId s = *vars.find("s");
    VarId r = *vars.find("r");
    Series g = Series::from_rational(R, s, 6);
    CHECK(g.coeff(3).coeff(Monomial::var(r, 2)) == BigInt(4));
    for (int n = 1; n <= 6; ++n)
      CHECK(g.coeff(n).coeff(Monomial::var(r, 1)) == BigInt(2));
  }
  SUBCASE("binary words avoiding 00") {
    check_runs(abc("01"), make_badset({w("00")}), 8);
  }
  SUBCASE("ternary words avoiding a pair") {
    check_runs(abc("012"), make_badset({w("01"), w("20")}), 7);
  }
}

TEST_CASE("average runs") {
  SUBCASE("free binary words: A(n) = 1 + (n-1)/2") {
    AvgRuns a = avg_runs(abc("01"), make_badset({}), 8);
    for (int n = 1; n <= 8; ++n) {
      const auto& [num, den] = a.values[static_cast<std::size_t>(n)];
      // 1 + (n-1)/2 = (n+1)/2
      BigInt expect_num(n + 1), expect_den(2);
      if ((n + 1) % 2 == 0) {
        expect_num = BigInt((n + 1) / 2);
        expect_den = BigInt(1);
      }
      CHECK(num == expect_num);
      CHECK(den == expect_den);
    }
  }
  SUBCASE("three letters, n = 4") {
    AvgRuns a = avg_runs(abc("012"), make_badset({}), 4);
    CHECK(a.values[4].first == BigInt(3));
    CHECK(a.values[4].second == BigInt(1));
  }
  SUBCASE("A(1) is always one run") {
    AvgRuns a = avg_runs(abc("01"), make_badset({w("00")}), 3);
    CHECK(a.values[1].first == BigInt(1));
    CHECK(a.values[1].second == BigInt(1));
  }
  SUBCASE("no avoiding words raises ZeroCount") {
    CHECK_THROWS_AS((void)avg_runs(abc("01"), make_badset(ws({"0", "1"})), 3),
                    Error);
  }
}
