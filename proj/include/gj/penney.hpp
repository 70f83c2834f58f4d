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
#include <utility>
#include <vector>

#include "gj/rational.hpp"
#include "gj/words.hpp"

namespace gj {

/// A Penney-ante game: letters are drawn from a (possibly loaded, possibly
/// symbolic) die until some player's word appears as a factor of the
/// stream; that player wins. No player word may be a factor of another.
struct PenneyInstance {
  std::vector<Letter> letters;
  std::vector<Word> words;                 // player words, in play order
  std::vector<RationalFunction> probs;     // per letter, summing to 1
};

/// Validates the instance invariants; throws DegenerateInstance.
void validate_penney(const PenneyInstance& inst);

/// Exact win probabilities. The stopping system in the unknowns N(z),
/// W_1..W_k is
///   (1)  N - 1 + sum_i W_i = z*N
///   (2)  N * pi(A_j) * z^|A_j| = sum_i W_i * C_ij(z)   for each j,
/// where C_ij(z) sums pi(A_j after position l) * z^(|A_j|-l) over the
/// overlaps l with suffix_l(A_i) = prefix_l(A_j); ties of the full word
/// (l = |A_j|, only on the diagonal) contribute 1. Solved symbolically in
/// z, then evaluated at z = 1. The probabilities sum to 1 exactly.
std::vector<RationalFunction> penney_probabilities(const PenneyInstance& inst,
                                                   VarTable& vars);

/// Exhaustive best counter-move: the candidate word of the given length
/// that maximizes the appended player's win probability against the fixed
/// opponents. Ties break toward the lexicographically earlier word.
/// Numeric probabilities only; throws NoValidCandidate when every
/// candidate degenerates the instance.
std::pair<Word, RationalFunction> best_last_play(
    const std::vector<Letter>& letters, const std::vector<Word>& opponents,
    const std::vector<RationalFunction>& probs, int candidate_length);

/// Seeded match simulation; returns per-player win counts summing to
/// num_games. Deterministic: game g draws letters from a splitmix64 stream
/// seeded with seed + g * 0x9E3779B97F4A7C15, sampling by cumulative
/// probability thresholds over the common denominator with rejection.
/// This seed-to-stream mapping is stable across releases.
std::vector<std::uint64_t> simulate_games(const PenneyInstance& inst,
                                          std::uint64_t num_games,
                                          std::uint64_t seed);

}  // namespace gj
