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

#include "gj/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gj/error.hpp"

namespace gj {

namespace {

using LetterMap = std::map<Letter, Letter>;

// Generators of the group as letter substitutions; they generate the same
// orbits as the full group.
std::vector<LetterMap> generators(const Alphabet& V, GroupKind kind) {
  std::vector<LetterMap> gens;
  if (kind == GroupKind::Symmetric) {
    for (std::size_t i = 0; i + 1 < V.letters.size(); ++i) {
      LetterMap g;
      g[V.letters[i]] = V.letters[i + 1];
      g[V.letters[i + 1]] = V.letters[i];
      gens.push_back(std::move(g));
    }
    return gens;
  }
  // Signed permutations: tokens are nonzero integers closed under negation.
  std::set<long> mags;
  for (const Letter& l : V.letters) {
    long v;
    try {
      v = std::stol(l);
    } catch (...) {
      throw Error("NotInvariant",
                  "signed action needs integer letters, got " + l);
    }
    if (v == 0) throw Error("NotInvariant", "letter 0 has no sign");
    mags.insert(std::labs(v));
    if (!V.contains(std::to_string(-v)))
      throw Error("NotInvariant",
                  "alphabet is not closed under negation: missing " +
                      std::to_string(-v));
  }
  std::vector<long> m(mags.begin(), mags.end());
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    LetterMap g;  // swap magnitudes m[i] and m[i+1], both signs
    g[std::to_string(m[i])] = std::to_string(m[i + 1]);
    g[std::to_string(m[i + 1])] = std::to_string(m[i]);
    g[std::to_string(-m[i])] = std::to_string(-m[i + 1]);
    g[std::to_string(-m[i + 1])] = std::to_string(-m[i]);
    gens.push_back(std::move(g));
  }
  if (!m.empty()) {
    LetterMap flip;  // flip the sign of the first magnitude
    flip[std::to_string(m[0])] = std::to_string(-m[0]);
    flip[std::to_string(-m[0])] = std::to_string(m[0]);
    gens.push_back(std::move(flip));
  }
  return gens;
}

Word act(const LetterMap& g, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    auto it = g.find(l);
    out.push_back(it == g.end() ? l : it->second);
  }
  return out;
}

}  // namespace

std::vector<std::vector<Word>> badset_orbits(const Alphabet& V, const BadSet& B,
                                             GroupKind kind) {
  std::vector<LetterMap> gens = generators(V, kind);
  std::set<Word> members(B.words.begin(), B.words.end());
  std::set<Word> seen;
  std::vector<std::vector<Word>> orbits;
  for (const Word& w : B.words) {
    if (seen.count(w)) continue;
    std::set<Word> orbit{w};
    std::vector<Word> frontier{w};
    while (!frontier.empty()) {
      Word cur = frontier.back();
      frontier.pop_back();
      for (const LetterMap& g : gens) {
        Word img = act(g, cur);
        if (!members.count(img))
          throw Error("NotInvariant",
                      "image " + render_word(img) + " of " + render_word(cur) +
                          " is not in the bad set");
        if (orbit.insert(img).second) frontier.push_back(img);
      }
    }
    orbits.emplace_back(orbit.begin(), orbit.end());
    for (const Word& o : orbits.back()) seen.insert(o);
  }
  return orbits;
}

bool correlation_multisets_invariant(
    const BadSet& B, const std::vector<std::vector<Word>>& orbits) {
  VarTable scratch;
  Weighting wt = Weighting::length(scratch);
  auto multiset_of = [&](const Word& v) {
    std::multiset<std::string> out;
    for (const Word& u : B.words)
      out.insert(correlation(u, v, wt).to_string(scratch));
    return out;
  };
  for (const auto& orbit : orbits) {
    auto ref = multiset_of(orbit.front());
    for (std::size_t i = 1; i < orbit.size(); ++i)
      if (multiset_of(orbit[i]) != ref) return false;
  }
  return true;
}

SymClusterSystem build_sym_cluster_system(const Alphabet& V, const BadSet& B,
                                          GroupKind kind, Marking marking,
                                          VarTable& vars) {
  if (!B.reduced)
    throw Error("NotReduced", "the symmetric reduction needs a reduced bad set");
  if (marking == Marking::PerWord)
    throw Error("NotInvariant",
                "per-word markers are not invariant under the group action");
  std::vector<std::vector<Word>> orbits = badset_orbits(V, B, kind);
#ifndef NDEBUG
  if (!correlation_multisets_invariant(B, orbits))
    throw Error("NotInvariant", "correlation multisets differ within an orbit");
#endif

  Weighting wt = Weighting::length(vars);
  Polynomial mk = marking == Marking::Avoid
                      ? Polynomial(BigInt(-1))
                      : Polynomial::variable(vars.intern("t")) -
                            Polynomial(BigInt(1));

  std::map<Word, int> orbit_of;
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (const Word& w : orbits[o]) orbit_of[w] = static_cast<int>(o);

  SymClusterSystem out;
  out.sys.base.resize(orbits.size());
  out.sys.in_edges.resize(orbits.size());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const Word& rep = orbits[o].front();
    out.representatives.push_back(rep);
    out.orbit_sizes.push_back(BigInt(static_cast<long>(orbits[o].size())));
    out.sys.base[o] = mk * wt.word_weight(rep);
    std::map<int, Polynomial> grouped;
    for (const Word& u : B.words) {
      Polynomial cor = correlation(u, rep, wt);
      if (cor.is_zero()) continue;
      grouped[orbit_of.at(u)] += cor;
    }
    for (auto& [ou, cor] : grouped)
      out.sys.in_edges[o].emplace_back(ou, mk * cor);
  }
  return out;
}

RationalFunction sym_cluster_weight(const Alphabet& V, const BadSet& B,
                                    GroupKind kind, Marking marking,
                                    VarTable& vars) {
  SymClusterSystem sc = build_sym_cluster_system(V, B, kind, marking, vars);
  return solve_fixed_system_sum(sc.sys, sc.orbit_sizes);
}

RationalFunction sym_gj_avoid(const Alphabet& V, const BadSet& B,
                              GroupKind kind, VarTable& vars) {
  BadSet reduced = B.reduced ? B : reduce_badset(B);
  RationalFunction wC =
      sym_cluster_weight(V, reduced, kind, Marking::Avoid, vars);
  return assemble_gf(V, wC, MarkingSpec{Marking::Avoid, false}, vars);
}

}  // namespace gj
