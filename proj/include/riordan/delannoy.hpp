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
#include <vector>

#include "riordan/ab_poly.hpp"
#include "riordan/diagonals.hpp"
#include "riordan/riordan_matrix.hpp"

namespace riordan {

// Lattice paths from (0, 0) to (n, m) over the step alphabet
//   H = (1, 0), V = (0, 1), D = (1, 1),
// written as words over {H, V, D}. Two words are considered equivalent when
// one can be rewritten into the other by swapping adjacent H and V steps;
// the diagonal steps act as walls that swaps cannot cross. The canonical
// representative of a class lists, between consecutive D steps, all V steps
// before all H steps: V^v0 H^h0 D V^v1 H^h1 D ... D V^vk H^hk.

// All paths to (n, m) in lexicographic order (D < H < V). Path-level
// routines are capped at n, m <= 8 and throw BudgetError beyond that.
std::vector<std::string> delannoy_paths(std::size_t n, std::size_t m);

// Canonical representative of the class containing the given word.
// Throws Error on letters outside {H, V, D}.
std::string canonical_form(const std::string& path);

struct DelannoyClass {
  std::string canonical;
  std::size_t size = 0;             // number of paths in the class
  std::vector<std::string> paths;   // filled only by the exhaustive route
};

// The classes for the (n, m) rectangle, sorted by canonical word. Counted
// without enumerating paths: a class is a weak composition of the leftover
// H and V steps around its diagonals, and its size is the product of the
// per-segment shuffle counts. There are C(n,k) * C(m,k) classes with k
// diagonal steps.
std::vector<DelannoyClass> delannoy_classes(std::size_t n, std::size_t m);

// Same classes obtained the long way: enumerate every path, canonicalize,
// and group. Members are listed in lexicographic order.
std::vector<DelannoyClass> delannoy_classes_exhaustive(std::size_t n, std::size_t m);

// Weight of the (n, m) rectangle: every class counted once with monomial
// a^(#H + #V) b^(#D) of its representative, summed in closed form
//   w(n, m) = sum_k C(n,k) C(m,k) a^(n+m-2k) b^k.
Rational delannoy_weight(const Rational& a, const Rational& b, std::size_t n, std::size_t m);

// grid[n][m] = w(n, m), filled by the recursion
//   w(n, m) = a w(n-1, m) + a w(n, m-1) + (b - a^2) w(n-1, m-1)
// with w(0, 0) = 1; an independent route to the same numbers.
std::vector<std::vector<Rational>> delannoy_weight_grid(const Rational& a, const Rational& b,
                                                        std::size_t rows, std::size_t cols);

// Third route, from the class list itself (budget-capped like the list).
Rational delannoy_weight_by_classes(const Rational& a, const Rational& b, std::size_t n,
                                    std::size_t m);

// The weight with a and b left symbolic, by the closed sum and by the
// recursion.
AbPoly delannoy_weight_poly(std::size_t n, std::size_t m);
AbPoly delannoy_weight_poly_recursive(std::size_t n, std::size_t m);

// Generating function of row n of the weight grid:
//   W_n(z) = sum_m w(n, m) z^m = (a + (b - a^2) z)^n / (1 - a z)^(n+1).
PowerSeries wn_generating_function(const Rational& a, const Rational& b, std::size_t n,
                                   std::size_t order);

// The square weight matrix factors through the binomial triangle:
//   [w(n, m)] = P D P^t with P(n, k) = C(n,k) a^(n-k) and D = diag(b^k).
// Multiplies the right side out and compares against the closed sum.
CheckReport pascal_factorization_check(const Rational& a, const Rational& b, std::size_t size);

// Lower-triangular matrix with entry (n, k) = w(n-k, k); as a Riordan
// matrix this is (1/(1-az), az + bz^2/(1-az)). Needs a != 0.
RiordanMatrix delannoy_q_matrix(const Rational& a, const Rational& b, std::size_t rows);

// The same triangle with symbolic entries; zero polynomials above the
// diagonal.
std::vector<std::vector<AbPoly>> delannoy_q_symbolic(std::size_t rows);

}  // namespace riordan
