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

#include "gj/blanks.hpp"

#include "gj/cluster_automaton.hpp"
#include "gj/error.hpp"

namespace gj {

int PatternWord::blank_count() const {
  int n = 0;
  for (const Letter& t : tokens)
    if (t == blank) ++n;
  return n;
}

std::string pattern_marker_name(const PatternWord& p) {
  return "t" + render_word(p.tokens);
}

std::vector<Word> expand_pattern(const PatternWord& p, const Alphabet& V) {
  if (V.symbolic_size)
    throw Error("SymbolicAlphabet",
                "blank expansion needs a concrete alphabet");
  if (p.tokens.empty())
    throw Error("BadWordLiteral", "empty pattern");
  for (const Letter& t : p.tokens)
    if (t != p.blank && !V.contains(t))
      throw Error("BadAlphabet", "pattern letter " + t + " is not in the alphabet");

  std::vector<Word> out{Word{}};
  for (const Letter& t : p.tokens) {
    std::vector<Word> next;
    if (t == p.blank) {
      for (const Word& w : out)
        for (const Letter& l : V.letters) {
          Word e = w;
          e.push_back(l);
          next.push_back(std::move(e));
        }
    } else {
      for (const Word& w : out) {
        Word e = w;
        e.push_back(t);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

RationalFunction blanks_count(const Alphabet& V,
                              const std::vector<PatternWord>& patterns,
                              VarTable& vars) {
  Weighting wt = Weighting::length(vars);
  std::vector<ClusterItem> items;
  for (const PatternWord& p : patterns) {
    Polynomial marker =
        Polynomial::variable(vars.intern(pattern_marker_name(p))) -
        Polynomial(BigInt(1));
    for (Word& w : expand_pattern(p, V))
      items.push_back(ClusterItem{std::move(w), marker});
  }
  ClusterAutomaton a = build_cluster_automaton(items, wt);
  RationalFunction wC = automaton_cluster_weight(a);
  return assemble_gf(V, wC, MarkingSpec{Marking::Uniform, false}, vars);
}

RationalFunction blanks_avoid(const Alphabet& V,
                              const std::vector<PatternWord>& patterns,
                              VarTable& vars) {
  std::vector<Word> expansions;
  for (const PatternWord& p : patterns)
    for (Word& w : expand_pattern(p, V)) expansions.push_back(std::move(w));
  BadSet b = reduce_badset(make_badset(std::move(expansions)));
  return gj_avoid(V, b, vars);
}

}  // namespace gj
