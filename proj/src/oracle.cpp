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

#include "gj/oracle.hpp"

#include <algorithm>
#include <string>

#include "gj/error.hpp"

namespace gj::oracle {

namespace {

// Letters as small ints for the enumeration loops.
std::vector<std::vector<int>> encode_badset(const Alphabet& V,
                                            const BadSet& B) {
  std::vector<std::vector<int>> out;
  for (const Word& b : B.words) {
    std::vector<int> eb;
    for (const Letter& l : b) {
      auto it = std::find(V.letters.begin(), V.letters.end(), l);
      if (it == V.letters.end())
        throw Error("BadAlphabet",
                    "bad word letter " + l + " is not in the alphabet");
      eb.push_back(static_cast<int>(it - V.letters.begin()));
    }
    out.push_back(std::move(eb));
  }
  return out;
}

bool suffix_matches(const std::vector<int>& word,
                    const std::vector<int>& pat) {
  if (pat.size() > word.size()) return false;
  return std::equal(pat.begin(), pat.end(), word.end() - static_cast<long>(pat.size()));
}

}  // namespace

BigInt OccurrenceTable::avoiding(int n) const {
  const auto& slice = by_n.at(static_cast<std::size_t>(n));
  std::vector<long> zero(bad.size(), 0);
  auto it = slice.find(zero);
  return it == slice.end() ? BigInt(0) : it->second;
}

std::map<long, BigInt> OccurrenceTable::by_total(int n) const {
  std::map<long, BigInt> out;
  for (const auto& [vec, count] : by_n.at(static_cast<std::size_t>(n))) {
    long total = 0;
    for (long k : vec) total += k;
    out[total] += count;
  }
  return out;
}

OccurrenceTable brute_table(const Alphabet& V, const BadSet& B, int n_max,
                            long word_budget) {
  if (V.symbolic_size)
    throw Error("SymbolicAlphabet", "the oracle needs a concrete alphabet");
  const int d = V.size();
  long total = 0, pw = 1;
  for (int n = 0; n <= n_max; ++n) {
    total += pw;
    if (total > word_budget)
      throw Error("BudgetExceeded",
                  "brute-force enumeration over " + std::to_string(total) +
                      " words exceeds the budget");
    if (n < n_max) pw *= d;
  }

  std::vector<std::vector<int>> bad = encode_badset(V, B);
  OccurrenceTable table;
  table.bad = B.words;
  table.by_n.resize(static_cast<std::size_t>(n_max) + 1);

  std::vector<int> word;
  std::vector<long> occ(bad.size(), 0);
  for (int n = 0; n <= n_max; ++n) {
    word.assign(static_cast<std::size_t>(n), 0);
    while (true) {
      std::fill(occ.begin(), occ.end(), 0);
      for (std::size_t k = 0; k < bad.size(); ++k) {
        const auto& b = bad[k];
        if (b.size() > word.size()) continue;
        for (std::size_t i = 0; i + b.size() <= word.size(); ++i)
          if (std::equal(b.begin(), b.end(), word.begin() + static_cast<long>(i)))
            ++occ[k];
      }
      table.by_n[static_cast<std::size_t>(n)][occ] += BigInt(1);
      // Odometer.
      int pos = n - 1;
      while (pos >= 0 && word[static_cast<std::size_t>(pos)] == d - 1) {
        word[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++word[static_cast<std::size_t>(pos)];
    }
  }
  return table;
}

std::vector<BigInt> dfs_avoid_count(const Alphabet& V, const BadSet& B,
                                    int n_max) {
  if (V.symbolic_size)
    throw Error("SymbolicAlphabet", "the oracle needs a concrete alphabet");
  const int d = V.size();
  std::vector<std::vector<int>> bad = encode_badset(V, B);
  std::vector<BigInt> counts(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  counts[0] = BigInt(1);

  std::vector<int> word;
  // Depth-first over avoiding words only; a prefix of an avoiding word is
  // itself avoiding, so pruning at the first bad suffix is complete.
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int& next = stack.back();
    if (next >= d || static_cast<int>(word.size()) >= n_max) {
      stack.pop_back();
      if (!word.empty()) word.pop_back();
      continue;
    }
    word.push_back(next++);
    bool clean = true;
    for (const auto& b : bad)
      if (suffix_matches(word, b)) {
        clean = false;
        break;
      }
    if (!clean) {
      word.pop_back();
      continue;
    }
    counts[word.size()] += BigInt(1);
    stack.push_back(0);
  }
  return counts;
}

std::vector<BigInt> dfs_squarefree_count(int dim, int n_max, int memo) {
  if (dim < 1) throw Error("BadAlphabet", "need at least one letter");
  std::vector<BigInt> counts(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  counts[0] = BigInt(1);

  std::vector<int> word;
  auto has_square_suffix = [&]() {
    int n = static_cast<int>(word.size());
    int maxl = memo < 0 ? n / 2 : std::min(memo, n / 2);
    for (int l = 1; l <= maxl; ++l) {
      bool eq = true;
      for (int i = 0; i < l; ++i)
        if (word[static_cast<std::size_t>(n - l + i)] !=
            word[static_cast<std::size_t>(n - 2 * l + i)]) {
          eq = false;
          break;
        }
      if (eq) return true;
    }
    return false;
  };

  std::vector<int> stack{0};
  while (!stack.empty()) {
    int& next = stack.back();
    if (next >= dim || static_cast<int>(word.size()) >= n_max) {
      stack.pop_back();
      if (!word.empty()) word.pop_back();
      continue;
    }
    word.push_back(next++);
    if (has_square_suffix()) {
      word.pop_back();
      continue;
    }
    counts[word.size()] += BigInt(1);
    stack.push_back(0);
  }
  return counts;
}

RationalFunction naive_transfer(const Alphabet& V, const BadSet& B,
                                NaiveMarking marking, VarTable& vars,
                                long state_budget) {
  if (V.symbolic_size)
    throw Error("SymbolicAlphabet", "the oracle needs a concrete alphabet");
  const int d = V.size();
  int R = 0;
  for (const Word& b : B.words)
    R = std::max(R, static_cast<int>(b.size()) - 1);
  long nstates = 1;
  for (int i = 0; i < R; ++i) {
    nstates *= d;
    if (nstates > state_budget)
      throw Error("BudgetExceeded",
                  "transfer matrix needs more than " +
                      std::to_string(state_budget) + " states");
  }

  VarId s = vars.intern("s");
  std::vector<VarId> marker(B.words.size(), VarId{-1});
  if (marking == NaiveMarking::Uniform) {
    VarId t = vars.intern("t");
    for (auto& m : marker) m = t;
  } else if (marking == NaiveMarking::PerWord) {
    for (std::size_t i = 0; i < B.words.size(); ++i)
      marker[i] = vars.intern("t" + render_word(B.words[i]));
  }
  std::vector<std::vector<int>> bad = encode_badset(V, B);

  // Occurrence weight: product of markers (or zero under Avoid marking).
  auto occ_weight = [&](const std::vector<long>& occ) -> Polynomial {
    Polynomial w(BigInt(1));
    for (std::size_t k = 0; k < occ.size(); ++k) {
      if (occ[k] == 0) continue;
      if (marking == NaiveMarking::Avoid) return Polynomial();
      w = w * Polynomial::variable(marker[k]).pow(static_cast<unsigned>(occ[k]));
    }
    return w;
  };
  auto count_in = [&](const std::vector<int>& word) {
    std::vector<long> occ(bad.size(), 0);
    for (std::size_t k = 0; k < bad.size(); ++k) {
      const auto& b = bad[k];
      if (b.size() > word.size()) continue;
      for (std::size_t i = 0; i + b.size() <= word.size(); ++i)
        if (std::equal(b.begin(), b.end(), word.begin() + static_cast<long>(i)))
          ++occ[k];
    }
    return occ;
  };

  // States: all words of length R, in odometer order.
  auto state_index = [&](const std::vector<int>& w) {
    long idx = 0;
    for (int l : w) idx = idx * d + l;
    return static_cast<int>(idx);
  };
  std::vector<std::vector<int>> states;
  {
    std::vector<int> w(static_cast<std::size_t>(R), 0);
    while (true) {
      states.push_back(w);
      int pos = R - 1;
      while (pos >= 0 && w[static_cast<std::size_t>(pos)] == d - 1) {
        w[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++w[static_cast<std::size_t>(pos)];
    }
  }

  FixedSystem sys;
  sys.base.resize(states.size());
  sys.in_edges.resize(states.size());
  Polynomial sx = Polynomial::variable(s);
  for (std::size_t u = 0; u < states.size(); ++u) {
    // Base entry: the length-R word itself, with its in-word occurrences.
    sys.base[u] = Polynomial::term(Monomial::var(s, R), BigInt(1)) *
                  occ_weight(count_in(states[u]));
    for (int a = 0; a < d; ++a) {
      std::vector<int> ext = states[u];
      ext.push_back(a);
      std::vector<int> succ(ext.end() - R, ext.end());
      // New occurrences are exactly the bad suffixes of the extended word.
      std::vector<long> occ(bad.size(), 0);
      for (std::size_t k = 0; k < bad.size(); ++k)
        if (suffix_matches(ext, bad[k])) occ[k] = 1;
      Polynomial w = sx * occ_weight(occ);
      if (w.is_zero()) continue;
      int vq = state_index(succ);
      sys.in_edges[static_cast<std::size_t>(vq)].emplace_back(
          static_cast<int>(u), std::move(w));
    }
  }
  std::vector<bool> all(sys.base.size(), true);
  RationalFunction F = solve_fixed_system_sum(sys, all);

  // Words shorter than R contribute directly.
  Polynomial shortsum;
  std::vector<std::vector<int>> shorts{{}};
  for (int n = 0; n < R; ++n) {
    std::vector<std::vector<int>> next;
    for (const auto& w : shorts) {
      shortsum += Polynomial::term(Monomial::var(s, n), BigInt(1)) *
                  occ_weight(count_in(w));
      for (int a = 0; a < d; ++a) {
        auto e = w;
        e.push_back(a);
        next.push_back(std::move(e));
      }
    }
    shorts = std::move(next);
  }
  return F + RationalFunction(shortsum);
}

RationalFunction phi_r(const Alphabet& V, int R, VarTable& vars,
                       long variable_budget) {
  if (V.symbolic_size)
    throw Error("SymbolicAlphabet", "Phi_R needs a concrete alphabet");
  if (R < 0) throw Error("BudgetExceeded", "R must be non-negative");
  const int d = V.size();
  long varcount = 0, pw = 1;
  for (int r = 1; r <= R + 1; ++r) {
    pw *= d;
    varcount += pw;
    if (varcount > variable_budget)
      throw Error("BudgetExceeded",
                  "Phi_R would need " + std::to_string(varcount) +
                      " variables, over the budget");
  }

  // x[w] for every word of length <= R+1, registered in odometer order.
  std::map<std::vector<int>, VarId> xvar;
  std::vector<std::vector<int>> layer{{}};
  for (int r = 1; r <= R + 1; ++r) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int a = 0; a < d; ++a) {
        auto e = w;
        e.push_back(a);
        next.push_back(e);
      }
    layer = std::move(next);
    for (const auto& w : layer) {
      std::string name = "x[";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) name += ",";
        name += V.letters[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])];
      }
      name += "]";
      xvar.emplace(w, vars.intern(name));
    }
  }

  // Full weight: product of x[f] over every factor f of w.
  auto full_weight = [&](const std::vector<int>& w) {
    Polynomial p(BigInt(1));
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i; j < w.size() && j - i <= static_cast<std::size_t>(R);
           ++j) {
        std::vector<int> f(w.begin() + static_cast<long>(i),
                           w.begin() + static_cast<long>(j) + 1);
        p = p * Polynomial::variable(xvar.at(f));
      }
    return p;
  };

  // States: words of length R (a single empty state when R = 0).
  std::vector<std::vector<int>> states{{}};
  for (int r = 0; r < R; ++r) {
    std::vector<std::vector<int>> next;
    for (const auto& w : states)
      for (int a = 0; a < d; ++a) {
        auto e = w;
        e.push_back(a);
        next.push_back(std::move(e));
      }
    states = std::move(next);
  }
  std::map<std::vector<int>, int> state_of;
  for (std::size_t i = 0; i < states.size(); ++i)
    state_of.emplace(states[i], static_cast<int>(i));

  FixedSystem sys;
  sys.base.resize(states.size());
  sys.in_edges.resize(states.size());
  for (std::size_t q = 0; q < states.size(); ++q) {
    const auto& v = states[q];
    sys.base[q] = full_weight(v);
    // Appending the last letter of v to a predecessor state creates the
    // suffix factors of lengths 1..R plus one length-R+1 factor.
    Polynomial suffix_factors(BigInt(1));
    for (int r = 1; r <= R; ++r) {
      std::vector<int> f(v.end() - r, v.end());
      suffix_factors = suffix_factors * Polynomial::variable(xvar.at(f));
    }
    for (int a = 0; a < d; ++a) {
      std::vector<int> pred(v.begin(), v.end());
      if (!pred.empty()) pred.pop_back();
      if (R > 0) pred.insert(pred.begin(), a);
      std::vector<int> longf(v.begin(), v.end());
      longf.insert(longf.begin(), a);
      Polynomial w = suffix_factors * Polynomial::variable(xvar.at(longf));
      sys.in_edges[q].emplace_back(state_of.at(pred), std::move(w));
    }
  }
  std::vector<bool> all(sys.base.size(), true);
  RationalFunction phi = solve_fixed_system_sum(sys, all);

  Polynomial shortsum;
  std::vector<std::vector<int>> shorts{{}};
  for (int n = 0; n < R; ++n) {
    for (const auto& w : shorts) shortsum += full_weight(w);
    std::vector<std::vector<int>> next;
    for (const auto& w : shorts)
      for (int a = 0; a < d; ++a) {
        auto e = w;
        e.push_back(a);
        next.push_back(std::move(e));
      }
    shorts = std::move(next);
  }
  return phi + RationalFunction(shortsum);
}

}  // namespace gj::oracle
