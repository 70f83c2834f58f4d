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

#include "gj/cluster_basic.hpp"
#include "gj/words.hpp"

namespace gj {

/// Letterwise group actions on words: the full symmetric group on the
/// alphabet, or signed permutations on an alphabet {-k..-1, 1..k} (tokens
/// parsed as nonzero integers, closed under negation, pi(-a) = -pi(a)).
enum class GroupKind { Symmetric, Signed };

/// Orbit partition of B under the action; every orbit is sorted and led by
/// its lexicographically least member (the representative). Throws
/// NotInvariant when some image of a member escapes B.
std::vector<std::vector<Word>> badset_orbits(const Alphabet& V, const BadSet& B,
                                             GroupKind kind);

/// Cluster system with one unknown per orbit: by symmetry weight(C[v])
/// depends only on the orbit of v, so the representative's equation with
/// Comp terms grouped by orbit determines everything.
struct SymClusterSystem {
  std::vector<Word> representatives;
  std::vector<BigInt> orbit_sizes;
  FixedSystem sys;
};

SymClusterSystem build_sym_cluster_system(const Alphabet& V, const BadSet& B,
                                          GroupKind kind, Marking marking,
                                          VarTable& vars);

/// weight(C) = sum over orbits of |orbit| * weight(C[representative]);
/// equal to the unreduced cluster_weight. Avoid or Uniform marking only
/// (per-word variables and letter weights break the symmetry).
RationalFunction sym_cluster_weight(const Alphabet& V, const BadSet& B,
                                    GroupKind kind, Marking marking,
                                    VarTable& vars);

/// gj_avoid through the orbit-reduced system.
RationalFunction sym_gj_avoid(const Alphabet& V, const BadSet& B,
                              GroupKind kind, VarTable& vars);

/// The soundness lemma behind the reduction: members of one orbit have
/// identical correlation multisets {(u:v) : u in B}. Checked on every
/// invocation in debug builds.
bool correlation_multisets_invariant(
    const BadSet& B, const std::vector<std::vector<Word>>& orbits);

}  // namespace gj
