// Copyright 2026 The riordan-toolkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "riordan/power_series.hpp"
#include "riordan/riordan_matrix.hpp"

namespace riordan {

// Outcome of a structural verification. When ok is false, detail describes
// the first identity that failed.
struct CheckReport {
  bool ok = true;
  std::string detail;
};

// The subdiagonal series of T(f|g): Delta_n(x) = sum_k d(n+k, k) x^k. The
// family satisfies the recurrence
//
//   Delta_n = (f_n - sum_{l=1..n} g_l * Delta_{n-l}) / (g0 - x)
//
// which is how it is computed here; comparing the coefficients against
// matrix entries is therefore a genuine two-route consistency check.
struct DiagonalFamily {
  std::vector<PowerSeries> series;  // series[n] is Delta_n with len coefficients
};

// count diagonals with len coefficients each. Needs f and g known to order
// count; len is unconstrained because the denominator g0 - x is exact.
DiagonalFamily diagonal_family(const RiordanMatrix& m, std::size_t count, std::size_t len);

// Rectangular grid of coefficients extracted from a bivariate expansion.
struct CoeffGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Rational>> data;  // data[n][k]

  const Rational& at(std::size_t n, std::size_t k) const;
};

// c[n][k] = [z^n x^k] of f(z)/(g(z) - x). Row n of the grid lists the
// coefficients of Delta_n, which identifies the bivariate function as the
// generating function of the whole diagonal family.
CoeffGrid bivariate_gf(const RiordanMatrix& m, std::size_t rows, std::size_t cols);

// c[n][k] = [z^n x^k] of f(z)/(g(z) - x*z), which recovers the matrix
// entries themselves: c[n][k] = entry(n, k).
CoeffGrid sprugnoli_bgf(const RiordanMatrix& m, std::size_t rows, std::size_t cols);

// For g = 1 + g_{k-1} x^{k-1} + ... (a unit with k-2 vanishing inner
// coefficients, k >= 2), the matrix T(g|g) has early subdiagonals of a fixed
// shape: d(j+m, j) is 1 for m = 0, zero for 1 <= m <= k-2, and -j*g_m for
// k-1 <= m <= 2k-3. Verifies all of them for j <= max_j, along with the
// equivalent form d(j+m, j) = j*h_{m+1} where h = x/g.
CheckReport gk_diagonal_check(const PowerSeries& g, std::size_t k, std::size_t max_j);

// The diagonals of T(f*g|g) are those of T(f|g) pushed one step into the
// matrix: Delta*_n = f_n + x * Delta_n. Verified for n < count with len
// coefficients.
CheckReport tfgg_relation_check(const PowerSeries& f, const PowerSeries& g,
                                std::size_t count, std::size_t len);

// Face-count pair of the iterated q-weighted cones over m points:
//   F    = T((m + (q-m)x) / (q*(1-x)) | (1-x)/q)
//   Fbar = T(f*g|g) for the same pair, with f*g = (m + (q-m)x)/q^2.
// Row n of F lists the face numbers of the n-fold cone.
std::pair<RiordanMatrix, RiordanMatrix> qcone_matrices(long long m, long long q,
                                                       std::size_t rows);

// Closed forms for the diagonal series of both cone matrices, with
// u = 1/(1-qx):
//   Delta_0 = m*u,            Delta_n = Delta_0*u^n + q*(u + ... + u^n)
//   Delta*_0 = (m/q)*u,       Delta*_n = 1 + x*Delta_0*u^n + q*x*(u + ... + u^n)
// Verified against the recurrence-computed families for n < count.
CheckReport qcone_diagonal_check(long long m, long long q, std::size_t count,
                                 std::size_t len);

}  // namespace riordan
