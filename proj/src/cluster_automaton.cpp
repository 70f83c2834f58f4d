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

#include "gj/cluster_automaton.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <unordered_map>

#include "gj/error.hpp"

namespace gj {

namespace {

constexpr int kFree = -1;  // window slot no interval has written yet

// Window slots + coverage mask + lock. Window length < L means the window
// is the whole underlying word so far.
struct State {
  std::vector<int> win;
  std::uint64_t covered = 0;  // bit b: boundary between slot b and b+1
  int lock_len = 0;
  int lock_rank = 0;

  std::string key() const {
    std::string k;
    k.reserve(win.size() * 2 + 24);
    for (int c : win) {
      k += static_cast<char>((c + 2) & 0xff);
      k += static_cast<char>(((c + 2) >> 8) & 0xff);
    }
    k += '|';
    for (int i = 0; i < 8; ++i)
      k += static_cast<char>((covered >> (8 * i)) & 0xff);
    k += static_cast<char>(lock_len);
    k += static_cast<char>(lock_rank & 0xff);
    k += static_cast<char>((lock_rank >> 8) & 0xff);
    return k;
  }
};

struct Builder {
  const std::vector<ClusterItem>& items;
  const Weighting& wt;
  int L;
  std::vector<std::vector<int>> coded;  // item words as letter ids
  std::vector<Letter> letter_of;        // id -> token
  std::map<Letter, int> id_of;

  std::unordered_map<std::string, int> index;
  std::vector<State> states;
  std::vector<Polynomial> base;
  std::vector<std::vector<std::pair<int, Polynomial>>> in_edges;
  std::deque<int> queue;

  explicit Builder(const std::vector<ClusterItem>& its, const Weighting& w)
      : items(its), wt(w), L(0) {
    for (const auto& it : items) {
      if (it.word.empty())
        throw Error("BadWordLiteral", "empty bad item");
      if (it.word.size() > 48)
        throw Error("BudgetExceeded", "bad item longer than 48 letters");
      L = std::max(L, static_cast<int>(it.word.size()));
      std::vector<int> c;
      for (const Letter& l : it.word) {
        auto [pos, fresh] = id_of.emplace(l, static_cast<int>(letter_of.size()));
        if (fresh) letter_of.push_back(l);
        c.push_back(pos->second);
      }
      coded.push_back(std::move(c));
    }
  }

  int intern(State&& st) {
    std::string k = st.key();
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(states.size());
    index.emplace(std::move(k), id);
    states.push_back(std::move(st));
    base.emplace_back();
    in_edges.emplace_back();
    queue.push_back(id);
    return id;
  }

  Polynomial fix_weight(const std::vector<int>& fixed) const {
    Polynomial p(BigInt(1));
    for (int id : fixed)
      p = p * wt.letter_weight(letter_of[static_cast<std::size_t>(id)]);
    return p;
  }

  // Match item letters against window slots win[from..from+m), fixing free
  // slots. Returns false on a mismatch with a committed letter.
  static bool match_into(std::vector<int>& win, int from,
                         const std::vector<int>& v, int count,
                         std::vector<int>* fixed) {
    for (int i = 0; i < count; ++i) {
      int& slot = win[static_cast<std::size_t>(from + i)];
      int want = v[static_cast<std::size_t>(i)];
      if (slot == kFree) {
        slot = want;
        if (fixed) fixed->push_back(want);
      } else if (slot != want) {
        return false;
      }
    }
    return true;
  }

  // Slide the window down to length <= L. Returns false (prune) when a free
  // slot or an uncovered boundary would leave the window.
  static bool slide(State& st, int L) {
    int W = static_cast<int>(st.win.size());
    if (W <= L) return true;
    int cut = W - L;
    for (int i = 0; i < cut; ++i) {
      if (st.win[static_cast<std::size_t>(i)] == kFree) return false;
      if (!(st.covered >> i & 1ULL)) return false;
    }
    st.win.erase(st.win.begin(), st.win.begin() + cut);
    st.covered >>= cut;
    return true;
  }

  static void cover_range(State& st, int from, int to) {
    for (int b = from; b <= to; ++b) st.covered |= 1ULL << b;
  }

  void add_base(int item) {
    const auto& v = coded[static_cast<std::size_t>(item)];
    int m = static_cast<int>(v.size());
    for (int g = 0; g + m <= L; ++g) {
      State st;
      st.win.assign(static_cast<std::size_t>(g), kFree);
      st.win.insert(st.win.end(), v.begin(), v.end());
      cover_range(st, g, g + m - 2);
      st.lock_len = m;
      st.lock_rank = item;
      Polynomial weight =
          items[static_cast<std::size_t>(item)].marker_factor *
          wt.word_weight(items[static_cast<std::size_t>(item)].word);
      int id = intern(std::move(st));
      base[static_cast<std::size_t>(id)] += weight;
    }
  }

  void expand(int q) {
    // Work from copies: states vector may reallocate during interning.
    const State src = states[static_cast<std::size_t>(q)];
    const int W = static_cast<int>(src.win.size());
    for (std::size_t k = 0; k < items.size(); ++k) {
      const auto& v = coded[k];
      const int m = static_cast<int>(v.size());
      const Polynomial& mk = items[k].marker_factor;

      // Nested insertion at the frontier: canonical order demands a
      // strictly shorter interval, or the same span with a larger rank.
      bool nest_ok = m < src.lock_len ||
                     (m == src.lock_len &&
                      static_cast<int>(k) > src.lock_rank);
      if (nest_ok && m <= W) {
        State st = src;
        std::vector<int> fixed;
        if (match_into(st.win, W - m, v, m, &fixed)) {
          cover_range(st, W - m, W - 2);
          st.lock_len = m;
          st.lock_rank = static_cast<int>(k);
          Polynomial weight = mk * fix_weight(fixed);
          int id = intern(std::move(st));
          in_edges[static_cast<std::size_t>(id)].emplace_back(q, weight);
        }
      }

      // Frontier-extending insertion overlapping the last o letters.
      for (int o = 1; o <= std::min(m - 1, W); ++o) {
        State st = src;
        std::vector<int> fixed;
        if (!match_into(st.win, W - o, v, o, &fixed)) continue;
        st.win.insert(st.win.end(), v.begin() + o, v.end());
        cover_range(st, W - o, W + (m - o) - 2);
        if (!slide(st, L)) continue;
        st.lock_len = m;
        st.lock_rank = static_cast<int>(k);
        Word beta(items[k].word.begin() + o, items[k].word.end());
        Polynomial weight = mk * wt.word_weight(beta) * fix_weight(fixed);
        int id = intern(std::move(st));
        in_edges[static_cast<std::size_t>(id)].emplace_back(q, weight);
      }

      // Insertion beyond the frontier after g letters nothing has written
      // yet; those become free slots a later interval must cover.
      for (int g = 0; g + m <= L; ++g) {
        State st = src;
        st.win.insert(st.win.end(), static_cast<std::size_t>(g), kFree);
        st.win.insert(st.win.end(), v.begin(), v.end());
        cover_range(st, W + g, W + g + m - 2);
        if (!slide(st, L)) continue;
        st.lock_len = m;
        st.lock_rank = static_cast<int>(k);
        Polynomial weight =
            mk * wt.word_weight(items[k].word);
        int id = intern(std::move(st));
        in_edges[static_cast<std::size_t>(id)].emplace_back(q, weight);
      }
    }
  }

  bool is_accepting(const State& st) const {
    for (int c : st.win)
      if (c == kFree) return false;
    int W = static_cast<int>(st.win.size());
    for (int b = 0; b + 1 < W; ++b)
      if (!(st.covered >> b & 1ULL)) return false;
    return true;
  }
};

}  // namespace

ClusterAutomaton build_cluster_automaton(const std::vector<ClusterItem>& items,
                                         const Weighting& wt) {
  ClusterAutomaton out;
  if (items.empty()) return out;

  Builder b(items, wt);
  for (std::size_t k = 0; k < items.size(); ++k)
    b.add_base(static_cast<int>(k));
  while (!b.queue.empty()) {
    int q = b.queue.front();
    b.queue.pop_front();
    b.expand(q);
  }

  const int n = static_cast<int>(b.states.size());
  std::vector<bool> accepting(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q)
    accepting[static_cast<std::size_t>(q)] =
        b.is_accepting(b.states[static_cast<std::size_t>(q)]);

  // Keep only states from which an accepting state is reachable; the rest
  // are dead weight for the solver.
  std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q)
    for (const auto& [r, w] : b.in_edges[static_cast<std::size_t>(q)])
      rev[static_cast<std::size_t>(q)].push_back(r);
  std::vector<bool> live = accepting;
  std::deque<int> work;
  for (int q = 0; q < n; ++q)
    if (live[static_cast<std::size_t>(q)]) work.push_back(q);
  while (!work.empty()) {
    int q = work.front();
    work.pop_front();
    for (int r : rev[static_cast<std::size_t>(q)])
      if (!live[static_cast<std::size_t>(r)]) {
        live[static_cast<std::size_t>(r)] = true;
        work.push_back(r);
      }
  }

  std::vector<int> remap(static_cast<std::size_t>(n), -1);
  int kept = 0;
  for (int q = 0; q < n; ++q)
    if (live[static_cast<std::size_t>(q)]) remap[static_cast<std::size_t>(q)] = kept++;

  out.sys.base.resize(static_cast<std::size_t>(kept));
  out.sys.in_edges.resize(static_cast<std::size_t>(kept));
  out.accepting.assign(static_cast<std::size_t>(kept), false);
  std::vector<std::pair<std::pair<int, int>, int>> order_key;
  for (int q = 0; q < n; ++q) {
    int nq = remap[static_cast<std::size_t>(q)];
    if (nq < 0) continue;
    out.sys.base[static_cast<std::size_t>(nq)] =
        b.base[static_cast<std::size_t>(q)];
    out.accepting[static_cast<std::size_t>(nq)] =
        accepting[static_cast<std::size_t>(q)];
    for (const auto& [r, w] : b.in_edges[static_cast<std::size_t>(q)]) {
      int nr = remap[static_cast<std::size_t>(r)];
      if (nr >= 0)
        out.sys.in_edges[static_cast<std::size_t>(nq)].emplace_back(nr, w);
    }
    const State& st = b.states[static_cast<std::size_t>(q)];
    order_key.push_back({{-st.lock_len, st.lock_rank}, nq});
  }
  // Lock-descending sweep order: nested-at-frontier chains settle within a
  // single series pass.
  std::sort(order_key.begin(), order_key.end());
  for (const auto& [key, nq] : order_key) out.sweep_order.push_back(nq);
  return out;
}

RationalFunction automaton_cluster_weight(const ClusterAutomaton& a) {
  if (a.state_count() == 0) return RationalFunction();
  return solve_fixed_system_sum(a.sys, a.accepting);
}

std::vector<ClusterItem> badset_items(const BadSet& B, Marking marking,
                                      VarTable& vars) {
  std::vector<ClusterItem> items;
  for (const Word& b : B.words) {
    Polynomial mk;
    switch (marking) {
      case Marking::Avoid:
        mk = Polynomial(BigInt(-1));
        break;
      case Marking::Uniform:
        mk = Polynomial::variable(vars.intern("t")) - Polynomial(BigInt(1));
        break;
      case Marking::PerWord:
        mk = Polynomial::variable(vars.intern("t" + render_word(b))) -
             Polynomial(BigInt(1));
        break;
    }
    items.push_back(ClusterItem{b, mk});
  }
  return items;
}

RationalFunction gjnz_count(const Alphabet& V, const BadSet& B,
                            Marking marking, VarTable& vars) {
  Weighting wt = Weighting::length(vars);
  std::vector<ClusterItem> items = badset_items(B, marking, vars);
  ClusterAutomaton a = build_cluster_automaton(items, wt);
  RationalFunction wC = automaton_cluster_weight(a);
  return assemble_gf(V, wC, MarkingSpec{marking, false}, vars);
}

RationalFunction runs_gf(const Alphabet& V, const BadSet& B, VarTable& vars) {
  if (V.symbolic_size)
    throw Error("SymbolicAlphabet", "run counting needs a concrete alphabet");
  Weighting wt = Weighting::length(vars);
  Polynomial rminus1 =
      Polynomial::variable(vars.intern("r")) - Polynomial(BigInt(1));
  std::vector<ClusterItem> items;
  // A new maximal run starts at every two-letter factor ab with a != b.
  for (const Letter& a : V.letters)
    for (const Letter& c : V.letters)
      if (a != c) items.push_back(ClusterItem{Word{a, c}, rminus1});
  for (const Word& b : B.words)
    items.push_back(ClusterItem{b, Polynomial(BigInt(-1))});

  ClusterAutomaton aut = build_cluster_automaton(items, wt);
  RationalFunction wC = automaton_cluster_weight(aut);
  RationalFunction G =
      assemble_gf(V, wC, MarkingSpec{Marking::Avoid, false}, vars);
  RationalFunction r{Polynomial::variable(vars.intern("r"))};
  return RationalFunction(1) + r * (G - RationalFunction(1));
}

AvgRuns avg_runs(const Alphabet& V, const BadSet& B, int n_max) {
  VarTable vars;
  RationalFunction R = runs_gf(V, B, vars);
  VarId s = *vars.find("s");
  VarId r = *vars.find("r");

  // Expand in s first; each coefficient is a polynomial in r, so the count
  // is its value at 1 and the run-weighted count its derivative there.
  Series g = Series::from_rational(R, s, n_max);
  Polynomial one(BigInt(1));

  AvgRuns out;
  for (int n = 0; n <= n_max; ++n) {
    const Polynomial& cn = g.coeff(n);
    BigInt c = cn.substitute(r, one).constant_value();
    BigInt weighted = cn.derivative(r).substitute(r, one).constant_value();
    if (c.is_zero()) {
      if (n == 0) {
        out.values.emplace_back(BigInt(0), BigInt(1));
        continue;
      }
      throw Error("ZeroCount",
                  "no words of length " + std::to_string(n) + " avoid B");
    }
    RationalFunction frac{Polynomial(weighted), Polynomial(c)};
    out.values.emplace_back(frac.num().constant_term(),
                            frac.den().constant_term());
  }
  if (n_max >= 1) {
    auto ratio = [&](int n) {
      const auto& [num, den] = out.values[static_cast<std::size_t>(n)];
      return num.to_double() / den.to_double() / n;
    };
    out.c_estimate = ratio(n_max);
    for (int n = std::max(1, n_max - 3); n <= n_max; ++n)
      out.trailing_ratios.push_back(ratio(n));
  }
  return out;
}

}  // namespace gj
