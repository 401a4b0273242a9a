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
#include <optional>
#include <utility>
#include <vector>

#include "riordan/riordan_matrix.hpp"

namespace riordan {

// A matrix is palindromic when every row reads the same in both directions:
// entry(n, k) == entry(n, n-k). The palindromic T(f|g) form a three-parameter
// family: fixing f0, g0 and f1 (all with f0, g0 != 0) forces
//
//   f = f0^2 / (f0 - f1 x),   g = f0 (g0 - x) / (f0 - f1 x),
//
// equivalently f_n = f1^n / f0^(n-1) and g_n = g1 (f1/f0)^(n-1) with
// g1 = (f1 g0 - f0)/f0.
struct PalindromicParams {
  Rational f0;
  Rational g0;
  Rational f1;

  Rational g1() const { return (f1 * g0 - f0) / f0; }

  friend bool operator==(const PalindromicParams& a, const PalindromicParams& b) {
    return a.f0 == b.f0 && a.g0 == b.g0 && a.f1 == b.f1;
  }
};

// Builds the unique palindromic matrix with the given parameters.
RiordanMatrix palindromic_matrix(const PalindromicParams& p, std::size_t rows);

struct PalindromeCheck {
  bool palindromic = true;
  // First (row, column) with entry(n, k) != entry(n, n-k), scanning rows
  // outward from the edges.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

// Definition-level scan of the stored prefix.
PalindromeCheck is_palindromic(const RiordanMatrix& m);

// Equivalent criterion: column n equals x^n times diagonal series n, i.e.
// the columns and the subdiagonals carry the same numbers. Columns come from
// generating functions and diagonals from their recurrence, so this is an
// independent route.
bool palindromic_columns_match_diagonals(const RiordanMatrix& m);

// Equivalent criterion: the coefficient grid of f(z)/(g(z) - x) is symmetric
// in (z, x). The grid window is sized so every checked entry lies inside the
// stored prefix region.
bool palindromic_bivariate_symmetric(const RiordanMatrix& m);

// Closed form for entries of the parametrized family:
//   entry(n, k) = f0/g0^(n+1) * sum_j C(k,j) C(n-j,k) (-f1 g0/f0)^j
// with j up to min(k, n-k). Indices k > n return zero.
Rational palindromic_entry(const PalindromicParams& p, std::size_t n, std::size_t k);

// Row polynomials via the dedicated three-term recurrence
//   g0 p_n = (1 + x) p_{n-1} - (f1/f0) x p_{n-2},
//   p_0 = f0/g0, p_1 = f0/g0^2 (1 + x).
std::vector<RowPolynomial> palindromic_row_polynomials(const PalindromicParams& p,
                                                       std::size_t count);

// The same family in the (d, h) normal form d = d0/(1 - h1 x),
// h = h1 x + h2 x^2/(1 - h1 x) used in the pseudo-involution literature.
struct KimForm {
  Rational d0;
  Rational h1;
  Rational h2;

  friend bool operator==(const KimForm& a, const KimForm& b) {
    return a.d0 == b.d0 && a.h1 == b.h1 && a.h2 == b.h2;
  }
};

KimForm to_kim(const PalindromicParams& p);
PalindromicParams from_kim(const KimForm& k);

// Completeness direction: when the stored prefix is palindromic AND the
// stored f, g coincide with the parametrized closed forms, returns the
// parameters; nullopt otherwise. Needs at least two known coefficients.
std::optional<PalindromicParams> recover_params(const RiordanMatrix& m);

// m * m equals the identity on the common prefix.
bool is_involution(const RiordanMatrix& m);

// (m * M)^2 equals the identity, where M = diag(1, -1, 1, -1, ...).
bool is_pseudo_involution(const RiordanMatrix& m);

enum class InvolutionKind { None, Involution, PseudoInvolution };

InvolutionKind classify_involution(const PalindromicParams& p, std::size_t rows);

}  // namespace riordan
