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

#include "gj/series_engine.hpp"

#include <algorithm>
#include <string>

#include "gj/cluster_basic.hpp"
#include "gj/error.hpp"

namespace gj {

namespace {

// Series of 1 - d*s minus the cluster-weight series, reciprocated.
Series assemble_gf_series(const Alphabet& V, const Series& wC, VarId svar,
                          VarTable& vars) {
  int N = wC.order();
  Series denom(svar, N);
  denom.coeff(0) = Polynomial(BigInt(1));
  if (N >= 1) {
    denom.coeff(1) = V.symbolic_size
                         ? -Polynomial::variable(vars.intern("d"))
                         : Polynomial(BigInt(-static_cast<long>(V.size())));
  }
  return (denom - wC).reciprocal();
}

Series sum_series(const std::vector<Series>& xs, const std::vector<bool>& sel,
                  VarId svar, int N) {
  Series total(svar, N);
  for (std::size_t q = 0; q < xs.size(); ++q)
    if (sel.empty() || sel[q]) total = total + xs[q];
  return total;
}

}  // namespace

Series gj_series(const SeriesJob& job, VarTable& vars) {
  if (job.order < 0)
    throw Error("BudgetExceeded", "series order must be non-negative");
  Weighting wt = Weighting::length(vars);
  VarId s = wt.length_var();
  if (job.bad.reduced) {
    MarkingSpec spec{job.marking, false};
    ClusterSystem cs = build_cluster_system(job.bad, spec, wt, vars);
    std::vector<Series> xs =
        iterate_fixed_system(cs.sys, s, job.order);
    Series wC = sum_series(xs, {}, s, job.order);
    return assemble_gf_series(job.alphabet, wC, s, vars);
  }
  std::vector<ClusterItem> items = badset_items(job.bad, job.marking, vars);
  ClusterAutomaton a = build_cluster_automaton(items, wt);
  std::vector<Series> xs =
      iterate_fixed_system(a.sys, s, job.order, a.sweep_order);
  Series wC = sum_series(xs, a.accepting, s, job.order);
  return assemble_gf_series(job.alphabet, wC, s, vars);
}

Series gj_series_items(const Alphabet& V, const std::vector<ClusterItem>& items,
                       int order, VarTable& vars) {
  Weighting wt = Weighting::length(vars);
  VarId s = wt.length_var();
  ClusterAutomaton a = build_cluster_automaton(items, wt);
  std::vector<Series> xs = iterate_fixed_system(a.sys, s, order, a.sweep_order);
  Series wC = sum_series(xs, a.accepting, s, order);
  return assemble_gf_series(V, wC, s, vars);
}

Alphabet squarefree_alphabet(int dim) {
  if (dim < 1) throw Error("BadAlphabet", "need at least one letter");
  std::vector<Letter> ls;
  for (int i = 1; i <= dim; ++i) ls.push_back(std::to_string(i));
  return Alphabet::concrete(std::move(ls));
}

namespace {

// Does uu (u doubled) contain a square vv as a proper factor? u itself is
// square-free, so only factors crossing the copy junction can be squares.
bool doubled_has_inner_square(const std::vector<int>& u) {
  const int m = static_cast<int>(u.size());
  std::vector<int> w(u);
  w.insert(w.end(), u.begin(), u.end());
  for (int l = 1; l < m; ++l) {
    // vv occupies [p, p+2l-1] (0-based) and must cross position m-1|m.
    int lo = std::max(0, m - 2 * l + 1);
    int hi = std::min(m - 1, 2 * m - 2 * l);
    for (int p = lo; p <= hi; ++p) {
      bool eq = true;
      for (int i = 0; i < l; ++i)
        if (w[static_cast<std::size_t>(p + i)] !=
            w[static_cast<std::size_t>(p + l + i)]) {
          eq = false;
          break;
        }
      if (eq) return true;
    }
  }
  return false;
}

}  // namespace

BadSet squarefree_badset(int memo, int dim) {
  if (memo < 1) throw Error("BudgetExceeded", "memo must be at least 1");
  if (dim < 2) throw Error("BadAlphabet", "square-free counting needs dim >= 2");
  Alphabet V = squarefree_alphabet(dim);
  std::vector<Word> words;
  // Depth-first over square-free roots u; uu survives the reduction exactly
  // when it contains no shorter square.
  std::vector<int> u;
  std::vector<int> stack{0};
  auto square_suffix = [&]() {
    int n = static_cast<int>(u.size());
    for (int l = 1; 2 * l <= n; ++l) {
      bool eq = true;
      for (int i = 0; i < l; ++i)
        if (u[static_cast<std::size_t>(n - l + i)] !=
            u[static_cast<std::size_t>(n - 2 * l + i)]) {
          eq = false;
          break;
        }
      if (eq) return true;
    }
    return false;
  };
  while (!stack.empty()) {
    int& next = stack.back();
    if (next >= dim || static_cast<int>(u.size()) >= memo) {
      stack.pop_back();
      if (!u.empty()) u.pop_back();
      continue;
    }
    u.push_back(next++);
    if (square_suffix()) {
      u.pop_back();
      continue;
    }
    if (!doubled_has_inner_square(u)) {
      Word uu;
      for (int rep = 0; rep < 2; ++rep)
        for (int l : u)
          uu.push_back(V.letters[static_cast<std::size_t>(l)]);
      words.push_back(std::move(uu));
    }
    stack.push_back(0);
  }
  BadSet b = make_badset(std::move(words));
  if (!b.reduced)
    throw Error("Internal", "square-free bad set failed to reduce");
  return b;
}

std::vector<BigInt> squarefree_series(int memo, int dim, int nuterms) {
  Alphabet V = squarefree_alphabet(dim);
  BadSet B = squarefree_badset(memo, dim);
  VarTable vars;
  Weighting wt = Weighting::length(vars);
  VarId s = wt.length_var();
  Series wC(s, nuterms);
  if (dim >= 3) {
    SymClusterSystem sc =
        build_sym_cluster_system(V, B, GroupKind::Symmetric, Marking::Avoid, vars);
    std::vector<Series> xs = iterate_fixed_system(sc.sys, s, nuterms);
    for (std::size_t o = 0; o < xs.size(); ++o) {
      Series scaled(s, nuterms);
      for (int i = 0; i <= nuterms; ++i)
        scaled.coeff(i) = xs[o].coeff(i).mul_int(sc.orbit_sizes[o]);
      wC = wC + scaled;
    }
  } else {
    ClusterSystem cs = build_cluster_system(
        B, MarkingSpec{Marking::Avoid, false}, wt, vars);
    std::vector<Series> xs = iterate_fixed_system(cs.sys, s, nuterms);
    wC = sum_series(xs, {}, s, nuterms);
  }
  Series f = assemble_gf_series(V, wC, s, vars);
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(nuterms) + 1);
  for (int n = 0; n <= nuterms; ++n)
    out.push_back(f.coeff(n).constant_value());
  return out;
}

namespace {

// Sign of a univariate polynomial at the rational point num/den (den > 0),
// by exact evaluation of den^deg * p(num/den).
int sign_at(const Polynomial& p, VarId s, const BigInt& num,
            const BigInt& den) {
  std::vector<Polynomial> c = p.coeffs_in(s);
  int deg = static_cast<int>(c.size()) - 1;
  BigInt acc(0);
  for (int i = 0; i <= deg; ++i)
    acc += c[static_cast<std::size_t>(i)].constant_value() *
           BigInt::pow(num, static_cast<unsigned>(i)) *
           BigInt::pow(den, static_cast<unsigned>(deg - i));
  return acc.sign();
}

}  // namespace

GrowthBounds growth_bounds(int memo, int dim, int nuterms, double eps) {
  GrowthBounds out;

  std::vector<BigInt> counts = squarefree_series(memo, dim, nuterms);
  for (int n = 0; n + 1 <= nuterms; ++n) {
    double a = counts[static_cast<std::size_t>(n)].to_double();
    double b = counts[static_cast<std::size_t>(n) + 1].to_double();
    if (a > 0) out.ratios.push_back(b / a);
  }
  if (!out.ratios.empty()) out.upper_bound = out.ratios.back();

  // Closed form: feasible at desk scale for memo <= 8 or so; beyond that
  // the caller still gets the ratio table.
  if (memo > 8) return out;

  Alphabet V = squarefree_alphabet(dim);
  BadSet B = squarefree_badset(memo, dim);
  VarTable vars;
  RationalFunction f = dim >= 3
                           ? sym_gj_avoid(V, B, GroupKind::Symmetric, vars)
                           : gj_avoid(V, B, vars);
  VarId s = *vars.find("s");
  const Polynomial& den = f.den();

  // Smallest real root of the denominator in (0,1): grid scan for the first
  // sign change, then bisection to the requested width. The dominant
  // singularity of a positive-coefficient series is a simple real pole, so
  // a sign change exists at this grid resolution for these inputs.
  const long grid = 1024;
  int s0 = sign_at(den, s, BigInt(0), BigInt(1));
  // Bracket [lo, hi] over the shared denominator D; D doubles per step.
  BigInt lo(0), hi(0), D(grid);
  bool found = false, exact = false;
  for (long k = 1; k <= grid; ++k) {
    int sk = sign_at(den, s, BigInt(k), BigInt(grid));
    if (sk == 0) {
      lo = hi = BigInt(k);
      found = exact = true;
      break;
    }
    if (sk != s0) {
      lo = BigInt(k - 1);
      hi = BigInt(k);
      found = true;
      break;
    }
  }
  if (!found)
    throw Error("NoRootInUnitInterval",
                "denominator has no sign change in (0, 1)");

  while (!exact &&
         (hi.to_double() - lo.to_double()) / D.to_double() > eps) {
    BigInt mid = lo + hi;  // midpoint over the doubled denominator
    lo = lo + lo;
    hi = hi + hi;
    D = D + D;
    int sm = sign_at(den, s, mid, D);
    if (sm == 0) {
      lo = hi = mid;
      break;
    }
    if (sm == s0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.rational_route = true;
  out.root_lo = lo.to_string() + "/" + D.to_string();
  out.root_hi = hi.to_string() + "/" + D.to_string();
  double root = (lo.to_double() + hi.to_double()) / (2.0 * D.to_double());
  out.upper_bound = 1.0 / root;
  return out;
}

}  // namespace gj
