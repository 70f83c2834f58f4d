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

#include "gj/cluster_automaton.hpp"
#include "gj/series.hpp"
#include "gj/symmetry.hpp"
#include "gj/words.hpp"

namespace gj {

/// A series-expansion request: when the cluster system is too large to
/// solve in closed form, the same equations are iterated order by order in
/// exact truncated-series arithmetic.
struct SeriesJob {
  Alphabet alphabet;
  BadSet bad;
  Marking marking = Marking::Avoid;
  int order = 10;
};

/// First order+1 coefficients of the generating function. Reduced bad sets
/// run through the basic cluster equations, others through the generalized
/// automaton; either way the result equals series_from_rational of the
/// closed form whenever that is computable.
Series gj_series(const SeriesJob& job, VarTable& vars);

/// Same, for explicit marked items (the wildcard-pattern route).
Series gj_series_items(const Alphabet& V, const std::vector<ClusterItem>& items,
                       int order, VarTable& vars);

/// The square-free alphabet {1..dim} and the reduced bad set
/// { uu : 1 <= |u| <= memo } over it.
Alphabet squarefree_alphabet(int dim);
BadSet squarefree_badset(int memo, int dim);

/// Counts of words avoiding every square uu with |u| <= memo, through
/// nuterms. The first 2(memo+1) terms agree with the true square-free
/// counts. Uses the symmetric-group reduction when dim >= 3.
std::vector<BigInt> squarefree_series(int memo, int dim, int nuterms);

/// Growth-constant bounds for the memory-limited square-free language. Its
/// language contains every square-free word, so the reciprocal of the
/// smallest real denominator root in (0,1) upper-bounds the square-free
/// growth constant. The root is bracketed by exact-arithmetic bisection;
/// the ratio table is a floating estimate, not a bound.
struct GrowthBounds {
  bool rational_route = false;
  double upper_bound = 0.0;        // 1/root (rational route) or last ratio
  std::string root_lo, root_hi;    // exact rational bracket of the root
  std::vector<double> ratios;      // a(n+1)/a(n), non-rigorous
};

GrowthBounds growth_bounds(int memo, int dim, int nuterms = 24,
                           double eps = 1e-9);

}  // namespace gj
