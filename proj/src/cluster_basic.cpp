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

#include "gj/cluster_basic.hpp"

#include "gj/error.hpp"

namespace gj {

namespace {

// (t-1), (t[b]-1), or the constant -1 under Avoid marking.
Polynomial marker_factor(const Word& b, Marking marking, VarTable& vars) {
  switch (marking) {
    case Marking::Avoid:
      return Polynomial(BigInt(-1));
    case Marking::Uniform:
      return Polynomial::variable(vars.intern("t")) - Polynomial(BigInt(1));
    case Marking::PerWord:
      return Polynomial::variable(vars.intern("t" + render_word(b))) -
             Polynomial(BigInt(1));
  }
  throw Error("Internal", "unknown marking");
}

}  // namespace

ClusterSystem build_cluster_system(const BadSet& B, const MarkingSpec& spec,
                                   const Weighting& wt, VarTable& vars) {
  ClusterSystem out;
  out.unknowns = B.words;  // already in token order
  const int n = static_cast<int>(B.words.size());
  out.sys.base.resize(static_cast<std::size_t>(n));
  out.sys.in_edges.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Word& v = B.words[static_cast<std::size_t>(i)];
    Polynomial mk = marker_factor(v, spec.marking, vars);
    out.sys.base[static_cast<std::size_t>(i)] = mk * wt.word_weight(v);
    for (int j = 0; j < n; ++j) {
      const Word& u = B.words[static_cast<std::size_t>(j)];
      Polynomial cor = correlation(u, v, wt);
      if (cor.is_zero()) continue;  // u not in Comp(v)
      out.sys.in_edges[static_cast<std::size_t>(i)].emplace_back(j, mk * cor);
    }
  }
  return out;
}

RationalFunction cluster_weight(const Alphabet& V, const BadSet& B,
                                const MarkingSpec& spec, VarTable& vars) {
  if (!B.reduced)
    throw Error("NotReduced",
                "the basic cluster method needs a reduced bad set; use the "
                "generalized engine for nested bad words");
  Weighting wt = spec.letter_weights ? Weighting::letters(vars, V)
                                     : Weighting::length(vars);
  ClusterSystem cs = build_cluster_system(B, spec, wt, vars);
  std::vector<bool> all(cs.sys.base.size(), true);
  return solve_fixed_system_sum(cs.sys, all);
}

RationalFunction assemble_gf(const Alphabet& V, const RationalFunction& wC,
                             const MarkingSpec& spec, VarTable& vars) {
  Polynomial linear;
  if (spec.letter_weights) {
    if (V.symbolic_size)
      throw Error("SymbolicAlphabet",
                  "letter weights need a concrete alphabet");
    Weighting wt = Weighting::letters(vars, V);
    for (const Letter& l : V.letters) linear += wt.letter_weight(l);
  } else {
    Polynomial s = Polynomial::variable(vars.intern("s"));
    if (V.symbolic_size) {
      linear = Polynomial::variable(vars.intern("d")) * s;
    } else {
      linear = s.mul_int(BigInt(V.size()));
    }
  }
  RationalFunction denom =
      RationalFunction(Polynomial(BigInt(1)) - linear) - wC;
  return denom.reciprocal();
}

RationalFunction gj_avoid(const Alphabet& V, const BadSet& B, VarTable& vars) {
  BadSet reduced = B.reduced ? B : reduce_badset(B);
  MarkingSpec spec{Marking::Avoid, false};
  RationalFunction wC = cluster_weight(V, reduced, spec, vars);
  return assemble_gf(V, wC, spec, vars);
}

RationalFunction gj_count(const Alphabet& V, const BadSet& B, VarTable& vars) {
  MarkingSpec spec{Marking::Uniform, false};
  RationalFunction wC = cluster_weight(V, B, spec, vars);
  return assemble_gf(V, wC, spec, vars);
}

RationalFunction gj_detail(const Alphabet& V, const BadSet& B,
                           VarTable& vars) {
  MarkingSpec spec{Marking::PerWord, false};
  RationalFunction wC = cluster_weight(V, B, spec, vars);
  return assemble_gf(V, wC, spec, vars);
}

RationalFunction gj_letters(const Alphabet& V, const BadSet& B,
                            Marking marking, VarTable& vars) {
  MarkingSpec spec{marking, true};
  RationalFunction wC = cluster_weight(V, B, spec, vars);
  return assemble_gf(V, wC, spec, vars);
}

}  // namespace gj
