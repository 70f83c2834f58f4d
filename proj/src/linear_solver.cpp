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

#include "gj/linear_solver.hpp"

#include <algorithm>
#include <numeric>

#include "gj/error.hpp"

namespace gj {

namespace {

// Bareiss forward elimination + fraction-free back substitution. Every
// solution is returned over the single common denominator det (the last
// pivot, permutation sign included); x_i * det is a Cramer determinant, so
// all divisions are exact.
struct RawSolution {
  std::vector<Polynomial> num;  // in original unknown order
  Polynomial den;
};

RawSolution solve_raw(std::vector<std::vector<Polynomial>> A,
                      std::vector<Polynomial> b) {
  const int n = static_cast<int>(A.size());
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != n)
      throw Error("SingularSystem", "matrix is not square");
  if (static_cast<int>(b.size()) != n)
    throw Error("SingularSystem", "right-hand side size mismatch");
  if (n == 0) return {{}, Polynomial(BigInt(1))};

  // Augmented matrix; col_of[j] tracks column swaps so the solution can be
  // mapped back to the original unknown order.
  std::vector<std::vector<Polynomial>>& M = A;
  for (int i = 0; i < n; ++i) M[i].push_back(std::move(b[i]));
  std::vector<int> col_of(static_cast<std::size_t>(n));
  std::iota(col_of.begin(), col_of.end(), 0);

  Polynomial prev(BigInt(1));
  for (int k = 0; k < n; ++k) {
    // Markowitz: cheapest fill-in estimate among nonzero pivots, ties to
    // the lowest (row, column) pair.
    int pr = -1, pc = -1;
    long best = -1;
    std::vector<int> row_nnz(static_cast<std::size_t>(n), 0);
    std::vector<int> col_nnz(static_cast<std::size_t>(n), 0);
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j)
        if (!M[i][j].is_zero()) {
          ++row_nnz[static_cast<std::size_t>(i)];
          ++col_nnz[static_cast<std::size_t>(j)];
        }
    for (int i = k; i < n; ++i) {
      for (int j = k; j < n; ++j) {
        if (M[i][j].is_zero()) continue;
        long cost = static_cast<long>(row_nnz[static_cast<std::size_t>(i)] - 1) *
                    (col_nnz[static_cast<std::size_t>(j)] - 1);
        if (best < 0 || cost < best) {
          best = cost;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) throw Error("SingularSystem", "no nonzero pivot available");
    std::swap(M[k], M[pr]);
    if (pc != k) {
      for (int i = 0; i < n; ++i) std::swap(M[i][k], M[i][pc]);
      std::swap(col_of[static_cast<std::size_t>(k)],
                col_of[static_cast<std::size_t>(pc)]);
    }

    const Polynomial pivot = M[k][k];
    const bool trivial = pivot.is_one() && prev.is_one();
    for (int i = k + 1; i < n; ++i) {
      if (M[i][k].is_zero()) {
        if (trivial) continue;
        // Rescale so the Bareiss invariant holds for later steps.
        for (int j = k + 1; j <= n; ++j)
          if (!M[i][j].is_zero())
            M[i][j] = (M[i][j] * pivot).exact_div(prev);
        continue;
      }
      for (int j = k + 1; j <= n; ++j) {
        Polynomial t = M[i][j] * pivot - M[i][k] * M[k][j];
        M[i][j] = trivial ? std::move(t) : t.exact_div(prev);
      }
      M[i][k] = Polynomial();
    }
    prev = pivot;
  }

  const Polynomial det = M[n - 1][n - 1];
  std::vector<Polynomial> N(static_cast<std::size_t>(n));
  N[static_cast<std::size_t>(n - 1)] = M[n - 1][n];
  for (int i = n - 2; i >= 0; --i) {
    Polynomial acc = M[i][n] * det;
    for (int j = i + 1; j < n; ++j)
      acc -= M[i][j] * N[static_cast<std::size_t>(j)];
    N[static_cast<std::size_t>(i)] = acc.exact_div(M[i][i]);
  }

  RawSolution out;
  out.den = det;
  out.num.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    out.num[static_cast<std::size_t>(col_of[static_cast<std::size_t>(k)])] =
        std::move(N[static_cast<std::size_t>(k)]);
  return out;
}

// (I - T) x = base for a FixedSystem.
void to_matrix(const FixedSystem& sys, std::vector<std::vector<Polynomial>>& A,
               std::vector<Polynomial>& b) {
  const int n = sys.size();
  A.assign(static_cast<std::size_t>(n),
           std::vector<Polynomial>(static_cast<std::size_t>(n)));
  b = sys.base;
  for (int q = 0; q < n; ++q) {
    A[static_cast<std::size_t>(q)][static_cast<std::size_t>(q)] =
        Polynomial(BigInt(1));
    for (const auto& [r, w] : sys.in_edges[static_cast<std::size_t>(q)])
      A[static_cast<std::size_t>(q)][static_cast<std::size_t>(r)] -= w;
  }
}

}  // namespace

std::vector<RationalFunction> solve_linear(
    std::vector<std::vector<Polynomial>> A, std::vector<Polynomial> b) {
  RawSolution raw = solve_raw(std::move(A), std::move(b));
  std::vector<RationalFunction> x;
  x.reserve(raw.num.size());
  for (auto& ni : raw.num)
    x.emplace_back(std::move(ni), raw.den);
  return x;
}

std::vector<RationalFunction> solve_linear(
    const std::vector<std::vector<Polynomial>>& A,
    const std::vector<RationalFunction>& b) {
  std::vector<std::vector<Polynomial>> As(A.size());
  std::vector<Polynomial> bs(b.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    As[i] = A[i];
    for (auto& entry : As[i]) entry = entry * b[i].den();
    bs[i] = b[i].num();
  }
  return solve_linear(std::move(As), std::move(bs));
}

bool residual_is_zero(const std::vector<std::vector<Polynomial>>& A,
                      const std::vector<RationalFunction>& x,
                      const std::vector<Polynomial>& b) {
  for (std::size_t i = 0; i < A.size(); ++i) {
    RationalFunction acc = -RationalFunction(b[i]);
    for (std::size_t j = 0; j < x.size(); ++j)
      acc = acc + RationalFunction(A[i][j]) * x[j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::vector<RationalFunction> solve_fixed_system(const FixedSystem& sys) {
  std::vector<std::vector<Polynomial>> A;
  std::vector<Polynomial> b;
  to_matrix(sys, A, b);
  return solve_linear(std::move(A), std::move(b));
}

RationalFunction solve_fixed_system_sum(const FixedSystem& sys,
                                        const std::vector<bool>& select) {
  if (sys.size() == 0) return RationalFunction();
  std::vector<std::vector<Polynomial>> A;
  std::vector<Polynomial> b;
  to_matrix(sys, A, b);
  RawSolution raw = solve_raw(std::move(A), std::move(b));
  Polynomial total;
  for (std::size_t q = 0; q < raw.num.size(); ++q)
    if (select[q]) total += raw.num[q];
  return RationalFunction(std::move(total), std::move(raw.den));
}

RationalFunction solve_fixed_system_sum(const FixedSystem& sys,
                                        const std::vector<BigInt>& weights) {
  if (sys.size() == 0) return RationalFunction();
  std::vector<std::vector<Polynomial>> A;
  std::vector<Polynomial> b;
  to_matrix(sys, A, b);
  RawSolution raw = solve_raw(std::move(A), std::move(b));
  Polynomial total;
  for (std::size_t q = 0; q < raw.num.size(); ++q)
    total += raw.num[q].mul_int(weights[q]);
  return RationalFunction(std::move(total), std::move(raw.den));
}

std::vector<Series> iterate_fixed_system(const FixedSystem& sys, VarId var,
                                         int order,
                                         const std::vector<int>& sweep_order) {
  const int n = sys.size();
  std::vector<Series> x(static_cast<std::size_t>(n), Series(var, order));
  std::vector<Series> base;
  base.reserve(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q)
    base.push_back(Series::from_rational(
        RationalFunction(sys.base[static_cast<std::size_t>(q)]), var, order));
  std::vector<std::vector<std::pair<int, Series>>> edges(
      static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q)
    for (const auto& [r, w] : sys.in_edges[static_cast<std::size_t>(q)])
      if (!w.is_zero())
        edges[static_cast<std::size_t>(q)].emplace_back(
            r, Series::from_rational(RationalFunction(w), var, order));

  std::vector<int> ord = sweep_order;
  if (ord.empty()) {
    ord.resize(static_cast<std::size_t>(n));
    std::iota(ord.begin(), ord.end(), 0);
  }

  // Every cycle gains at least one power of var per lap, so at most
  // order+2 sweeps are needed; zero-valuation chains are acyclic and settle
  // within a sweep given a good order. The guard catches misuse.
  int guard = 2 * (order + 2) * (n + 1);
  for (int pass = 0; pass < guard; ++pass) {
    bool changed = false;
    for (int q : ord) {
      Series acc = base[static_cast<std::size_t>(q)];
      for (const auto& [r, w] : edges[static_cast<std::size_t>(q)])
        acc = acc + w * x[static_cast<std::size_t>(r)];
      if (!(acc == x[static_cast<std::size_t>(q)])) {
        x[static_cast<std::size_t>(q)] = std::move(acc);
        changed = true;
      }
    }
    if (!changed) return x;
  }
  throw Error("SingularSystem",
              "fixed-point series iteration failed to stabilize");
}

}  // namespace gj
