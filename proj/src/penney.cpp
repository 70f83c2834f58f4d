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

#include "gj/penney.hpp"

#include <algorithm>

#include "gj/error.hpp"
#include "gj/linear_solver.hpp"

namespace gj {

namespace {

RationalFunction word_probability(const PenneyInstance& inst, const Word& w,
                                  std::size_t from = 0) {
  RationalFunction p{Polynomial(BigInt(1))};
  for (std::size_t i = from; i < w.size(); ++i) {
    auto it = std::find(inst.letters.begin(), inst.letters.end(), w[i]);
    if (it == inst.letters.end())
      throw Error("DegenerateInstance",
                  "word letter " + w[i] + " is not a game letter");
    p = p * inst.probs[static_cast<std::size_t>(it - inst.letters.begin())];
  }
  return p;
}

}  // namespace

void validate_penney(const PenneyInstance& inst) {
  if (inst.words.empty())
    throw Error("DegenerateInstance", "need at least one player");
  if (inst.letters.empty() || inst.probs.size() != inst.letters.size())
    throw Error("DegenerateInstance",
                "need one probability per letter");
  for (const Word& w : inst.words)
    if (w.empty())
      throw Error("DegenerateInstance", "player words must be nonempty");
  for (std::size_t i = 0; i < inst.words.size(); ++i)
    for (std::size_t j = 0; j < inst.words.size(); ++j)
      if (i != j && is_factor(inst.words[i], inst.words[j]))
        throw Error("DegenerateInstance",
                    render_word(inst.words[i]) + " is a factor of " +
                        render_word(inst.words[j]));
  RationalFunction sum;
  for (const auto& p : inst.probs) sum = sum + p;
  if (!(sum == RationalFunction(1)))
    throw Error("DegenerateInstance", "probabilities must sum to 1");
}

std::vector<RationalFunction> penney_probabilities(const PenneyInstance& inst,
                                                   VarTable& vars) {
  validate_penney(inst);
  const std::size_t k = inst.words.size();
  VarId z = vars.intern("z");
  for (const auto& p : inst.probs) {
    for (std::int32_t v : p.num().vars_used())
      if (v == z.index)
        throw Error("DegenerateInstance",
                    "probability symbols may not be named z (reserved for "
                    "the stopping variable)");
    for (std::int32_t v : p.den().vars_used())
      if (v == z.index)
        throw Error("DegenerateInstance",
                    "probability symbols may not be named z (reserved for "
                    "the stopping variable)");
  }
  Polynomial zp = Polynomial::variable(z);

  // Unknown order: N, W_1..W_k.
  std::vector<std::vector<RationalFunction>> A(
      k + 1, std::vector<RationalFunction>(k + 1));
  std::vector<RationalFunction> b(k + 1);
  // (1-z)N + sum W_i = 1
  A[0][0] = RationalFunction(Polynomial(BigInt(1)) - zp);
  for (std::size_t i = 1; i <= k; ++i) A[0][i] = RationalFunction(1);
  b[0] = RationalFunction(1);
  for (std::size_t j = 0; j < k; ++j) {
    const Word& aj = inst.words[j];
    // pi(A_j) z^|A_j| N - sum_i C_ij W_i = 0
    A[j + 1][0] =
        word_probability(inst, aj) *
        RationalFunction(Polynomial::term(
            Monomial::var(z, static_cast<int>(aj.size())), BigInt(1)));
    for (std::size_t i = 0; i < k; ++i) {
      const Word& ai = inst.words[i];
      RationalFunction cij;
      for (std::size_t l = 1; l <= std::min(ai.size(), aj.size()); ++l) {
        if (!std::equal(ai.end() - static_cast<long>(l), ai.end(), aj.begin()))
          continue;
        RationalFunction term =
            word_probability(inst, aj, l) *
            RationalFunction(Polynomial::term(
                Monomial::var(z, static_cast<int>(aj.size() - l)), BigInt(1)));
        cij = cij + term;
      }
      A[j + 1][i + 1] = -cij;
    }
    b[j + 1] = RationalFunction();
  }

  // Scale rows to polynomial entries (product of the row's denominators).
  std::vector<std::vector<Polynomial>> Ap(k + 1,
                                          std::vector<Polynomial>(k + 1));
  std::vector<Polynomial> bp(k + 1);
  for (std::size_t r = 0; r <= k; ++r) {
    Polynomial scale(BigInt(1));
    for (std::size_t c = 0; c <= k; ++c) scale = scale * A[r][c].den();
    scale = scale * b[r].den();
    for (std::size_t c = 0; c <= k; ++c)
      Ap[r][c] = (A[r][c].num() * scale).exact_div(A[r][c].den());
    bp[r] = (b[r].num() * scale).exact_div(b[r].den());
  }

  std::vector<RationalFunction> sol = solve_linear(std::move(Ap), std::move(bp));

  // Evaluate each W_i at z = 1.
  std::vector<RationalFunction> out;
  Polynomial one(BigInt(1));
  for (std::size_t i = 1; i <= k; ++i) {
    Polynomial num = sol[i].num().substitute(z, one);
    Polynomial den = sol[i].den().substitute(z, one);
    if (den.is_zero())
      throw Error("SingularSystem", "win probability has a pole at z = 1");
    out.emplace_back(std::move(num), std::move(den));
  }
  return out;
}

std::pair<Word, RationalFunction> best_last_play(
    const std::vector<Letter>& letters, const std::vector<Word>& opponents,
    const std::vector<RationalFunction>& probs, int candidate_length) {
  if (candidate_length < 1)
    throw Error("NoValidCandidate", "candidate length must be positive");
  for (const auto& p : probs)
    if (!p.is_constant())
      throw Error("DegenerateInstance",
                  "the best counter-move needs numeric probabilities");

  // All words of the given length, in letter order.
  std::vector<Word> candidates{Word{}};
  for (int i = 0; i < candidate_length; ++i) {
    std::vector<Word> next;
    for (const Word& w : candidates)
      for (const Letter& l : letters) {
        Word e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    candidates = std::move(next);
  }

  bool have_best = false;
  Word best_word;
  RationalFunction best_prob;
  for (const Word& cand : candidates) {
    PenneyInstance inst{letters, opponents, probs};
    inst.words.push_back(cand);
    try {
      validate_penney(inst);
    } catch (const Error&) {
      continue;  // candidate degenerates the instance
    }
    VarTable scratch;
    std::vector<RationalFunction> w = penney_probabilities(inst, scratch);
    const RationalFunction& mine = w.back();
    if (!have_best) {
      have_best = true;
      best_word = cand;
      best_prob = mine;
      continue;
    }
    // mine > best_prob as exact fractions with positive denominators.
    Polynomial lhs = mine.num() * best_prob.den();
    Polynomial rhs = best_prob.num() * mine.den();
    if ((lhs - rhs).is_zero()) continue;  // tie: keep the earlier word
    BigInt diff = (lhs - rhs).constant_value();
    if (diff.sign() > 0) {
      best_word = cand;
      best_prob = mine;
    }
  }
  if (!have_best)
    throw Error("NoValidCandidate",
                "every candidate shares a factor with an opponent word");
  return {best_word, best_prob};
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<std::uint64_t> simulate_games(const PenneyInstance& inst,
                                          std::uint64_t num_games,
                                          std::uint64_t seed) {
  validate_penney(inst);

  // Cumulative integer thresholds over the probabilities' common
  // denominator D: letter i is drawn when the uniform draw in [0, D) lands
  // below threshold i.
  BigInt D(1);
  for (const auto& p : inst.probs) {
    if (!p.is_constant())
      throw Error("DegenerateInstance",
                  "simulation needs numeric probabilities");
    const BigInt& d = p.den().constant_term();
    D = (D * d).exact_div(BigInt::gcd(D, d));
  }
  if (!D.fits_ulong())
    throw Error("DegenerateInstance",
                "probability denominators too large to sample");
  const std::uint64_t den = D.to_ulong();
  std::vector<std::uint64_t> threshold;
  BigInt acc(0);
  for (const auto& p : inst.probs) {
    acc += p.num().constant_term() * D.exact_div(p.den().constant_term());
    threshold.push_back(acc.to_ulong());
  }

  // Player words as letter indices; the stream only needs its last
  // max-length letters.
  std::size_t maxlen = 0;
  std::vector<std::vector<int>> words;
  for (const Word& w : inst.words) {
    std::vector<int> enc;
    for (const Letter& l : w) {
      auto it = std::find(inst.letters.begin(), inst.letters.end(), l);
      enc.push_back(static_cast<int>(it - inst.letters.begin()));
    }
    maxlen = std::max(maxlen, enc.size());
    words.push_back(std::move(enc));
  }

  const std::uint64_t reject_bound = den == 1 ? ~0ULL : (~0ULL / den) * den;
  std::vector<std::uint64_t> wins(inst.words.size(), 0);
  for (std::uint64_t g = 0; g < num_games; ++g) {
    std::uint64_t state = seed + g * 0x9E3779B97F4A7C15ULL;
    std::vector<int> tail;
    int winner = -1;
    while (winner < 0) {
      std::uint64_t r = splitmix64(state);
      while (r >= reject_bound) r = splitmix64(state);
      std::uint64_t x = r % den;
      int letter = 0;
      while (x >= threshold[static_cast<std::size_t>(letter)]) ++letter;
      tail.push_back(letter);
      if (tail.size() > maxlen) tail.erase(tail.begin());
      for (std::size_t i = 0; i < words.size(); ++i) {
        const auto& w = words[i];
        if (w.size() > tail.size()) continue;
        if (std::equal(w.begin(), w.end(), tail.end() - static_cast<long>(w.size()))) {
          winner = static_cast<int>(i);
          break;
        }
      }
    }
    ++wins[static_cast<std::size_t>(winner)];
  }
  return wins;
}

}  // namespace gj
