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
#include <iosfwd>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

// Truncated formal power series over the rationals. A value carries exactly
// order() known coefficients, for x^0 through x^{order()-1}. Operations
// follow two rules without exception:
//
//   * a binary operation truncates to the smaller operand order and never
//     extrapolates coefficients it cannot know;
//   * reading coeff(i) for i >= order() throws instead of returning zero.
//
// Because of the first rule, equality between two series is only meaningful
// on their common prefix, and operator== compares exactly that.
class PowerSeries {
 public:
  // order() becomes coeffs.size(), which must be at least 1.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries zero(std::size_t order);
  static PowerSeries constant(const Rational& c, std::size_t order);
  // The series x.
  static PowerSeries variable(std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const Rational& coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Drops coefficients; new_order must not exceed order().
  PowerSeries truncated(std::size_t new_order) const;

  bool is_zero() const;

  // Index of the first nonzero coefficient, or order() when every known
  // coefficient vanishes.
  std::size_t valuation() const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b);
  friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const Rational& c, const PowerSeries& s);

// Multiplicative inverse; the constant term must be nonzero.
PowerSeries invert(const PowerSeries& s);

// a * invert(b). Use shift_div first when b has a zero constant term.
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

// s(t) for t with zero constant term.
PowerSeries compose(const PowerSeries& s, const PowerSeries& t);

// Compositional inverse of h = h1*x + h2*x^2 + ... with h1 != 0. The result
// r satisfies compose(h, r) == compose(r, h) == x on the common prefix.
PowerSeries comp_inverse(const PowerSeries& h);

// Square root with nonnegative leading coefficient. Exists when the
// valuation is even and the first nonzero coefficient is a rational square;
// a shifted root loses valuation/2 coefficients of precision.
PowerSeries sqrt(const PowerSeries& s);

PowerSeries pow(const PowerSeries& s, std::size_t e);

// Multiplication by x^k. The product's coefficients are all determined by
// the input, so the order grows to order()+k.
PowerSeries shift_mul(const PowerSeries& s, std::size_t k);

// Division by x^k; the first k coefficients must be zero and the order
// drops by k.
PowerSeries shift_div(const PowerSeries& s, std::size_t k);

std::ostream& operator<<(std::ostream& os, const PowerSeries& s);

}  // namespace riordan
