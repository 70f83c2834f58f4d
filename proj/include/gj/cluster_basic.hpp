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

#pragma once

#include "gj/linear_solver.hpp"
#include "gj/words.hpp"

namespace gj {

/// How bad-word occurrences are marked in the cluster equations.
enum class Marking {
  Avoid,    // marker 0: clusters carry a factor of -1 per marked word
  Uniform,  // a single variable t
  PerWord,  // one variable t[b] per bad word
};

struct MarkingSpec {
  Marking marking = Marking::Avoid;
  bool letter_weights = false;  // weight x[v] per letter instead of s
};

/// The cluster system for a reduced bad set: one unknown weight(C[v]) per
/// v in B (in token order). Row v couples only the u in Comp(v); the
/// off-diagonal contribution is marker_v * (u:v) and the base entry is
/// marker_v * weight(v).
struct ClusterSystem {
  std::vector<Word> unknowns;
  FixedSystem sys;
};

ClusterSystem build_cluster_system(const BadSet& B, const MarkingSpec& spec,
                                   const Weighting& wt, VarTable& vars);

/// Total cluster generating function weight(C). Requires a reduced B.
RationalFunction cluster_weight(const Alphabet& V, const BadSet& B,
                                const MarkingSpec& spec, VarTable& vars);

/// 1/(1 - d*s - weight(C)) given weight(C); `d*s` becomes the symbolic
/// variable d when the alphabet size is symbolic, and sum of x[v] under
/// letter weights.
RationalFunction assemble_gf(const Alphabet& V, const RationalFunction& wC,
                             const MarkingSpec& spec, VarTable& vars);

/// Generating function of words avoiding B. Reduces B silently (avoidance
/// is unchanged by reduction).
RationalFunction gj_avoid(const Alphabet& V, const BadSet& B, VarTable& vars);

/// F(s,t) counting words by length and total number of bad factors.
/// Refuses non-reduced input: occurrence counts change under reduction, use
/// the generalized engine for those.
RationalFunction gj_count(const Alphabet& V, const BadSet& B, VarTable& vars);

/// F(s; t[b_1..b_f]) with one marking variable per bad word.
RationalFunction gj_detail(const Alphabet& V, const BadSet& B, VarTable& vars);

/// Letter-weighted generating function in the x[v]; substituting x[v] := s
/// for every v recovers the corresponding length-weighted function.
RationalFunction gj_letters(const Alphabet& V, const BadSet& B,
                            Marking marking, VarTable& vars);

}  // namespace gj
