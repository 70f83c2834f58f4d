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

#include <string>
#include <vector>

#include "gj/cluster_basic.hpp"
#include "gj/linear_solver.hpp"
#include "gj/words.hpp"

namespace gj {

/// A marked item for the generalized engine: a word plus the (marker - 1)
/// factor its insertions contribute. Distinct items may share a word (two
/// wildcard patterns can expand to the same concrete word).
struct ClusterItem {
  Word word;
  Polynomial marker_factor;
};

/// Finite automaton enumerating generalized clusters (marked intervals may
/// nest and need not arrive connected). A state is the window of the last
/// <= L letters (free slots for letters no interval has written yet), a
/// coverage mask over the window's boundaries, and the (length, rank) lock
/// of the last inserted interval, which enforces the canonical insertion
/// order j asc, then i asc, then rank asc. Clusters accept when the window
/// holds no free slot and every boundary is covered.
struct ClusterAutomaton {
  FixedSystem sys;                  // path weights into each state
  std::vector<bool> accepting;      // states that are complete clusters
  std::vector<int> sweep_order;     // lock-descending, for series iteration
  std::size_t state_count() const { return accepting.size(); }
};

ClusterAutomaton build_cluster_automaton(const std::vector<ClusterItem>& items,
                                         const Weighting& wt);

/// The items of a bad set under a marking mode, in token order.
std::vector<ClusterItem> badset_items(const BadSet& B, Marking marking,
                                      VarTable& vars);

/// weight(C) for generalized clusters: the accepting-state total of the
/// automaton's exact solution.
RationalFunction automaton_cluster_weight(const ClusterAutomaton& a);

/// F(s,t) (or per-word variables) counting all occurrences of all bad
/// items, nested ones included; B may be arbitrary.
RationalFunction gjnz_count(const Alphabet& V, const BadSet& B,
                            Marking marking, VarTable& vars);

/// R(s,r) = 1 + r*(G(s,r) - 1) where G marks every two-letter factor ab
/// (a != b) with r and bans every member of B; the coefficient of s^n r^k
/// counts B-avoiding n-letter words with exactly k maximal runs.
RationalFunction runs_gf(const Alphabet& V, const BadSet& B, VarTable& vars);

/// Exact average number of maximal runs among B-avoiding words of each
/// length, plus a clearly non-rigorous estimate of the linear growth
/// coefficient.
struct AvgRuns {
  // values[n] = A(n) as an exact fraction (num, den), n = 0..n_max.
  std::vector<std::pair<BigInt, BigInt>> values;
  double c_estimate = 0.0;           // A(n_max)/n_max
  std::vector<double> trailing_ratios;  // A(n)/n for the last few n
};

AvgRuns avg_runs(const Alphabet& V, const BadSet& B, int n_max);

}  // namespace gj
