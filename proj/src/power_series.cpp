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

#include "riordan/power_series.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

namespace riordan {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw ConstructionError("a series needs at least one known coefficient");
  }
}

PowerSeries PowerSeries::zero(std::size_t order) {
  return PowerSeries(std::vector<Rational>(order == 0 ? 1 : order));
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order == 0 ? 1 : order);
  v[0] = c;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::variable(std::size_t order) {
  std::vector<Rational> v(std::max<std::size_t>(order, 2));
  v[1] = Rational(1);
  return PowerSeries(std::move(v));
}

const Rational& PowerSeries::coeff(std::size_t i) const {
  if (i >= coeffs_.size()) {
    throw OutOfRangeError("coefficient " + std::to_string(i) +
                          " requested from a series truncated at order " +
                          std::to_string(coeffs_.size()));
  }
  return coeffs_[i];
}

PowerSeries PowerSeries::truncated(std::size_t new_order) const {
  if (new_order == 0 || new_order > coeffs_.size()) {
    throw OutOfRangeError("cannot truncate a series of order " +
                          std::to_string(coeffs_.size()) + " to order " +
                          std::to_string(new_order));
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order));
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

std::size_t PowerSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return i;
  }
  return coeffs_.size();
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  }
  return true;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a.coeff(i) + b.coeff(i);
  return PowerSeries(std::move(v));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a.coeff(i) - b.coeff(i);
  return PowerSeries(std::move(v));
}

PowerSeries operator-(const PowerSeries& a) {
  std::vector<Rational> v(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) v[i] = -a.coeff(i);
  return PowerSeries(std::move(v));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc;
    for (std::size_t j = 0; j <= i; ++j) {
      acc += a.coeff(j) * b.coeff(i - j);
    }
    v[i] = acc;
  }
  return PowerSeries(std::move(v));
}

PowerSeries operator*(const Rational& c, const PowerSeries& s) {
  std::vector<Rational> v(s.order());
  for (std::size_t i = 0; i < s.order(); ++i) v[i] = c * s.coeff(i);
  return PowerSeries(std::move(v));
}

PowerSeries invert(const PowerSeries& s) {
  const Rational& a0 = s.coeff(0);
  if (a0.is_zero()) {
    throw NotInvertibleError("cannot invert a series with zero constant term");
  }
  std::size_t n = s.order();
  std::vector<Rational> b(n);
  b[0] = Rational(1) / a0;
  for (std::size_t i = 1; i < n; ++i) {
    Rational acc;
    for (std::size_t j = 1; j <= i; ++j) {
      acc += s.coeff(j) * b[i - j];
    }
    b[i] = -acc / a0;
  }
  return PowerSeries(std::move(b));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * invert(b); }

PowerSeries compose(const PowerSeries& s, const PowerSeries& t) {
  if (!t.coeff(0).is_zero()) {
    throw CompositionError("substitution requires a series with zero constant term");
  }
  std::size_t n = std::min(s.order(), t.order());
  PowerSeries tt = t.truncated(n);
  // Horner evaluation: ((s_{n-1} * t + s_{n-2}) * t + ...) + s_0.
  PowerSeries acc = PowerSeries::constant(s.coeff(n - 1), n);
  for (std::size_t i = n - 1; i-- > 0;) {
    acc = acc * tt + PowerSeries::constant(s.coeff(i), n);
  }
  return acc;
}

PowerSeries comp_inverse(const PowerSeries& h) {
  if (h.order() < 2) {
    throw BudgetError("compositional inverse needs at least two known coefficients");
  }
  if (!h.coeff(0).is_zero()) {
    throw CompositionError("compositional inverse requires a zero constant term");
  }
  const Rational& h1 = h.coeff(1);
  if (h1.is_zero()) {
    throw NotInvertibleError("compositional inverse requires a nonzero linear term");
  }
  std::size_t n = h.order();
  std::vector<Rational> b(n);
  b[1] = Rational(1) / h1;
  // Fill coefficient by coefficient: once b_1..b_{k-1} are right, the
  // coefficient of x^k in h(b) is off from [k == 1] by exactly h1 * (error
  // in b_k), which pins b_k down.
  for (std::size_t k = 2; k < n; ++k) {
    PowerSeries partial{std::vector<Rational>(b)};
    Rational residue = compose(h, partial).coeff(k);
    b[k] = -residue / h1;
  }
  return PowerSeries(std::move(b));
}

PowerSeries sqrt(const PowerSeries& s) {
  if (s.is_zero()) {
    return PowerSeries::zero(s.order());
  }
  std::size_t w = s.valuation();
  if (w % 2 != 0) {
    throw SqrtDomainError("series has odd valuation, no square root exists");
  }
  if (w > 0) {
    return shift_mul(sqrt(shift_div(s, w)), w / 2);
  }
  auto r0 = Rational::exact_sqrt(s.coeff(0));
  if (!r0) {
    throw SqrtDomainError("leading coefficient " + s.coeff(0).str() +
                          " is not the square of a rational");
  }
  std::size_t n = s.order();
  std::vector<Rational> r(n);
  r[0] = *r0;
  Rational two_r0 = Rational(2) * *r0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = s.coeff(k);
    for (std::size_t j = 1; j < k; ++j) {
      acc -= r[j] * r[k - j];
    }
    r[k] = acc / two_r0;
  }
  return PowerSeries(std::move(r));
}

PowerSeries pow(const PowerSeries& s, std::size_t e) {
  PowerSeries result = PowerSeries::constant(Rational(1), s.order());
  for (std::size_t i = 0; i < e; ++i) result = result * s;
  return result;
}

PowerSeries shift_mul(const PowerSeries& s, std::size_t k) {
  std::vector<Rational> v(s.order() + k);
  for (std::size_t i = 0; i < s.order(); ++i) v[i + k] = s.coeff(i);
  return PowerSeries(std::move(v));
}

PowerSeries shift_div(const PowerSeries& s, std::size_t k) {
  if (k == 0) return s;
  if (s.order() <= k) {
    throw BudgetError("dividing by x^" + std::to_string(k) + " leaves a series of order " +
                      std::to_string(s.order()) + " with no known coefficients");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!s.coeff(i).is_zero()) {
      throw NotInvertibleError("cannot divide by x^" + std::to_string(k) +
                               ": coefficient of x^" + std::to_string(i) + " is " +
                               s.coeff(i).str());
    }
  }
  return PowerSeries(std::vector<Rational>(s.coeffs().begin() + k, s.coeffs().end()));
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& s) {
  os << "[";
  for (std::size_t i = 0; i < s.order(); ++i) {
    if (i > 0) os << ", ";
    os << s.coeff(i).str();
  }
  return os << "]";
}

}  // namespace riordan
