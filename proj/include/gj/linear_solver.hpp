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

#include <utility>
#include <vector>

#include "gj/rational.hpp"
#include "gj/series.hpp"

namespace gj {

/// Exact solution of A*x = b over the rational-function field by
/// fraction-free (Bareiss) elimination with Markowitz pivoting: the sparsest
/// pivot among nonzero candidates wins, ties broken by lowest index.
/// Intermediate entries stay polynomial via exact divisions.
/// Throws SingularSystem when A is singular.
std::vector<RationalFunction> solve_linear(
    std::vector<std::vector<Polynomial>> A, std::vector<Polynomial> b);

/// Same, with a rational right-hand side (each row is scaled by its
/// denominator before elimination).
std::vector<RationalFunction> solve_linear(
    const std::vector<std::vector<Polynomial>>& A,
    const std::vector<RationalFunction>& b);

/// Residual check: A*x - b, as rational functions.
bool residual_is_zero(const std::vector<std::vector<Polynomial>>& A,
                      const std::vector<RationalFunction>& x,
                      const std::vector<Polynomial>& b);

/// X = base + T*X with sparse T, the common shape of every cluster system.
/// in_edges[q] lists (r, w) meaning X_q += w * X_r.
struct FixedSystem {
  std::vector<Polynomial> base;
  std::vector<std::vector<std::pair<int, Polynomial>>> in_edges;

  int size() const { return static_cast<int>(base.size()); }
};

/// Exact solution of a FixedSystem via solve_linear on (I - T) x = base.
std::vector<RationalFunction> solve_fixed_system(const FixedSystem& sys);

/// Sum of the selected unknowns, formed over the solver's single common
/// denominator before any normalization. Much cheaper than adding the
/// normalized solutions pairwise when the system is large.
RationalFunction solve_fixed_system_sum(const FixedSystem& sys,
                                        const std::vector<bool>& select);

/// Integer-weighted variant of the common-denominator sum.
RationalFunction solve_fixed_system_sum(const FixedSystem& sys,
                                        const std::vector<BigInt>& weights);

/// Truncated-series solution of a FixedSystem by fixed-point iteration
/// (Gauss-Seidel sweeps until a full pass changes nothing). Requires every
/// dependency cycle to have positive valuation in `var`; `sweep_order`, when
/// given, orders the within-pass updates so zero-valuation chains settle
/// fast.
std::vector<Series> iterate_fixed_system(const FixedSystem& sys, VarId var,
                                         int order,
                                         const std::vector<int>& sweep_order = {});

}  // namespace gj
