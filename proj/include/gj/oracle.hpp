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

#include <cstdint>
#include <map>
#include <vector>

#include "gj/linear_solver.hpp"
#include "gj/words.hpp"

namespace gj {

/// Ground-truth engines. Deliberately simple and auditable: exhaustive
/// enumeration, backtracking counts, and the suffix-state transfer-matrix
/// method. Budgets are explicit; exceeding one raises BudgetExceeded rather
/// than approximating.
namespace oracle {

/// Exact counts of words by length and per-bad-word occurrence vector,
/// found by scanning every word of length <= n_max.
struct OccurrenceTable {
  std::vector<Word> bad;  // sorted; occurrence vectors align with this
  // by_n[n][occurrence vector] = number of words
  std::vector<std::map<std::vector<long>, BigInt>> by_n;

  /// Count of words of length n avoiding every bad word.
  BigInt avoiding(int n) const;
  /// Counts grouped by total number of occurrences.
  std::map<long, BigInt> by_total(int n) const;
};

OccurrenceTable brute_table(const Alphabet& V, const BadSet& B, int n_max,
                            long word_budget = 2'000'000);

/// Exact avoidance counts a(0..n_max) by backtracking; cost proportional to
/// the number of avoiding words.
std::vector<BigInt> dfs_avoid_count(const Alphabet& V, const BadSet& B,
                                    int n_max);

/// Square-free mode: counts words over `dim` letters containing no factor
/// uu with |u| <= memo (memo < 0 means unbounded, i.e. truly square-free).
std::vector<BigInt> dfs_squarefree_count(int dim, int n_max, int memo = -1);

/// The suffix-state transfer-matrix method, specialized to s per letter and
/// a marker per completed bad word. Counts every occurrence (nested ones
/// included), so it matches the generalized cluster engine on any B and the
/// basic one on reduced B.
enum class NaiveMarking { Avoid, Uniform, PerWord };
RationalFunction naive_transfer(const Alphabet& V, const BadSet& B,
                                NaiveMarking marking, VarTable& vars,
                                long state_budget = 4096);

/// The full factor-counting generating function in variables x[w] for every
/// word w of length <= R+1. Tiny instances only.
RationalFunction phi_r(const Alphabet& V, int R, VarTable& vars,
                       long variable_budget = 400);

}  // namespace oracle

}  // namespace gj
