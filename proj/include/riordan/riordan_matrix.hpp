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
#include <vector>

#include "riordan/power_series.hpp"
#include "riordan/rational.hpp"

namespace riordan {

// Infinite lower-triangular matrix T(f|g) determined by a pair of series
// with nonzero constant terms: column j has generating function
// x^j * f / g^(j+1). Equivalently the matrix is the classical pair
// (d, h) = (f/g, x/g).
//
// A value stores an explicit rows() x rows() prefix, filled by the entry
// recurrences
//
//   d(0,0) = f0/g0
//   d(i,0) = (f_i - sum_{l=1..i} g_l d(i-l,0)) / g0
//   d(i,j) = (d(i-1,j-1) - sum_{l=1..i-j} g_l d(i-l,j)) / g0    (j >= 1)
//
// and the budget is capped by the truncation orders of f and g. Reading an
// entry past the stored prefix throws; entries are never recomputed behind
// the caller's back. prefix_direct() recomputes the same prefix from the
// column generating functions so the two derivations can be checked against
// each other (tests do this explicitly and debug builds assert it).
class RiordanMatrix {
 public:
  // Budget defaults to min(f.order(), g.order()).
  static RiordanMatrix from_T(PowerSeries f, PowerSeries g);
  static RiordanMatrix from_T(PowerSeries f, PowerSeries g, std::size_t rows);

  // The (d, h) description: d = f/g, h = x/g with h(0) = 0, h'(0) != 0.
  static RiordanMatrix from_dh(const PowerSeries& d, const PowerSeries& h);
  static RiordanMatrix from_dh(const PowerSeries& d, const PowerSeries& h, std::size_t rows);

  static RiordanMatrix identity(std::size_t rows);

  const PowerSeries& f() const { return f_; }
  const PowerSeries& g() const { return g_; }
  PowerSeries d() const;
  // x/g, carrying rows()+1 coefficients: shifting by x costs nothing.
  PowerSeries h() const;

  std::size_t rows() const { return prefix_.size(); }

  // Zero above the diagonal; throws BudgetError for i >= rows().
  const Rational& entry(std::size_t i, std::size_t j) const;

  // Lower-triangular prefix; row i holds entries for columns 0..i.
  const std::vector<std::vector<Rational>>& prefix() const { return prefix_; }

  // Same prefix, recomputed from column generating functions.
  std::vector<std::vector<Rational>> prefix_direct() const;

 private:
  RiordanMatrix(PowerSeries f, PowerSeries g, std::size_t rows);

  PowerSeries f_;
  PowerSeries g_;
  std::vector<std::vector<Rational>> prefix_;
};

// True when the two matrices agree on their common rows() prefix.
bool prefix_equal(const RiordanMatrix& a, const RiordanMatrix& b);

// Group product: T(f1|g1) * T(f2|g2) = T(f1 * f2(x/g1) | g1 * g2(x/g1)).
RiordanMatrix product(const RiordanMatrix& a, const RiordanMatrix& b);

// Group inverse, via the compositional inverse of h = x/g.
RiordanMatrix inverse(const RiordanMatrix& m);

// A-sequence: the unique series with d(i,j) = sum_k A_k d(i-1,j-1+k) for all
// i, j >= 1; computed as x / (compositional inverse of h).
PowerSeries a_sequence(const RiordanMatrix& m, std::size_t len);

// Fundamental theorem: the matrix acting on a column vector of series
// coefficients. Returns (f/g) * gamma(x/g).
PowerSeries apply(const RiordanMatrix& m, const PowerSeries& gamma);

// Row n read as a polynomial: coeffs[k] = entry(n, k).
struct RowPolynomial {
  std::vector<Rational> coeffs;
  std::size_t degree() const { return coeffs.size() - 1; }
};

// Computed by the row recurrence
//   p_n = ((x - g1)/g0) p_{n-1} - sum_{l=2..n} (g_l/g0) p_{n-l} + f_n/g0
// rather than by reading entries, so it can serve as a second derivation.
RowPolynomial row_polynomial(const RiordanMatrix& m, std::size_t n);

// Generating function of column j, x^j * f / g^(j+1), truncated to rows().
PowerSeries column_gf(const RiordanMatrix& m, std::size_t j);

}  // namespace riordan
