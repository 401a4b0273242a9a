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

#include "riordan/riordan_matrix.hpp"

#include <cassert>
#include <string>
#include <utility>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

void check_unit(const PowerSeries& s, const char* name) {
  if (s.coeff(0).is_zero()) {
    throw ConstructionError(std::string(name) + " must have a nonzero constant term");
  }
}

}  // namespace

RiordanMatrix::RiordanMatrix(PowerSeries f, PowerSeries g, std::size_t rows)
    : f_(std::move(f)), g_(std::move(g)) {
  check_unit(f_, "f");
  check_unit(g_, "g");
  if (rows == 0) {
    throw ConstructionError("a matrix needs at least one row");
  }
  if (rows > f_.order() || rows > g_.order()) {
    throw BudgetError("cannot fill " + std::to_string(rows) + " rows from series with " +
                      std::to_string(f_.order()) + " and " + std::to_string(g_.order()) +
                      " known coefficients");
  }

  const Rational& g0 = g_.coeff(0);
  prefix_.resize(rows);
  prefix_[0] = {f_.coeff(0) / g0};
  for (std::size_t i = 1; i < rows; ++i) {
    prefix_[i].resize(i + 1);
    Rational head = f_.coeff(i);
    for (std::size_t l = 1; l <= i; ++l) {
      head -= g_.coeff(l) * prefix_[i - l][0];
    }
    prefix_[i][0] = head / g0;
    for (std::size_t j = 1; j <= i; ++j) {
      Rational acc = prefix_[i - 1][j - 1];
      for (std::size_t l = 1; l <= i - j; ++l) {
        acc -= g_.coeff(l) * prefix_[i - l][j];
      }
      prefix_[i][j] = acc / g0;
    }
  }

#ifndef NDEBUG
  assert(prefix_ == prefix_direct());
#endif
}

RiordanMatrix RiordanMatrix::from_T(PowerSeries f, PowerSeries g) {
  std::size_t rows = std::min(f.order(), g.order());
  return RiordanMatrix(std::move(f), std::move(g), rows);
}

RiordanMatrix RiordanMatrix::from_T(PowerSeries f, PowerSeries g, std::size_t rows) {
  return RiordanMatrix(std::move(f), std::move(g), rows);
}

RiordanMatrix RiordanMatrix::from_dh(const PowerSeries& d, const PowerSeries& h) {
  if (h.order() < 2 || !h.coeff(0).is_zero() || h.coeff(1).is_zero()) {
    throw ConstructionError("h must be of the form h1*x + h2*x^2 + ... with h1 != 0");
  }
  PowerSeries g = invert(shift_div(h, 1));
  PowerSeries f = d * g;
  return from_T(std::move(f), std::move(g));
}

RiordanMatrix RiordanMatrix::from_dh(const PowerSeries& d, const PowerSeries& h,
                                     std::size_t rows) {
  RiordanMatrix full = from_dh(d, h);
  return RiordanMatrix(full.f(), full.g(), rows);
}

RiordanMatrix RiordanMatrix::identity(std::size_t rows) {
  PowerSeries one = PowerSeries::constant(Rational(1), rows);
  return RiordanMatrix(one, one, rows);
}

PowerSeries RiordanMatrix::d() const { return (f_ / g_).truncated(rows()); }

PowerSeries RiordanMatrix::h() const {
  return shift_mul(invert(g_), 1).truncated(rows() + 1);
}

const Rational& RiordanMatrix::entry(std::size_t i, std::size_t j) const {
  static const Rational zero;
  if (i >= rows()) {
    throw BudgetError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") lies beyond the stored prefix of " + std::to_string(rows()) +
                      " rows");
  }
  if (j > i) return zero;
  return prefix_[i][j];
}

std::vector<std::vector<Rational>> RiordanMatrix::prefix_direct() const {
  std::size_t n = rows();
  std::vector<std::vector<Rational>> result(n);
  for (std::size_t i = 0; i < n; ++i) result[i].resize(i + 1);

  PowerSeries ginv = invert(g_.truncated(n));
  PowerSeries cur = f_.truncated(n) * ginv;  // f/g, column 0 shifted by x^0
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      result[i][j] = cur.coeff(i - j);
    }
    if (j + 1 < n) cur = cur * ginv;
  }
  return result;
}

bool prefix_equal(const RiordanMatrix& a, const RiordanMatrix& b) {
  std::size_t n = std::min(a.rows(), b.rows());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (a.entry(i, j) != b.entry(i, j)) return false;
    }
  }
  return true;
}

RiordanMatrix product(const RiordanMatrix& a, const RiordanMatrix& b) {
  PowerSeries h = a.h();
  PowerSeries f = a.f() * compose(b.f(), h);
  PowerSeries g = a.g() * compose(b.g(), h);
  return RiordanMatrix::from_T(std::move(f), std::move(g));
}

RiordanMatrix inverse(const RiordanMatrix& m) {
  PowerSeries hbar = comp_inverse(m.h());
  PowerSeries g_inv = invert(shift_div(hbar, 1));  // x / hbar
  PowerSeries f_inv = invert(compose(m.f(), hbar));
  return RiordanMatrix::from_T(std::move(f_inv), std::move(g_inv));
}

PowerSeries a_sequence(const RiordanMatrix& m, std::size_t len) {
  PowerSeries hbar = comp_inverse(m.h());
  PowerSeries a = invert(shift_div(hbar, 1));
  if (len > a.order()) {
    throw BudgetError("A-sequence of length " + std::to_string(len) +
                      " exceeds the stored budget of " + std::to_string(a.order()));
  }
  return a.truncated(len);
}

PowerSeries apply(const RiordanMatrix& m, const PowerSeries& gamma) {
  return (m.f() / m.g()).truncated(m.rows()) * compose(gamma, m.h());
}

RowPolynomial row_polynomial(const RiordanMatrix& m, std::size_t n) {
  if (n >= m.rows()) {
    throw BudgetError("row polynomial " + std::to_string(n) +
                      " lies beyond the stored prefix of " + std::to_string(m.rows()) +
                      " rows");
  }
  const PowerSeries& f = m.f();
  const PowerSeries& g = m.g();
  const Rational& g0 = g.coeff(0);

  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {f.coeff(0) / g0};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Rational> cur(i + 1);
    // (x - g1) * p_{i-1}
    for (std::size_t k = 0; k < i; ++k) {
      cur[k + 1] += p[i - 1][k];
      cur[k] -= g.coeff(1) * p[i - 1][k];
    }
    for (std::size_t l = 2; l <= i; ++l) {
      for (std::size_t k = 0; k < p[i - l].size(); ++k) {
        cur[k] -= g.coeff(l) * p[i - l][k];
      }
    }
    cur[0] += f.coeff(i);
    for (auto& c : cur) c /= g0;
    p[i] = std::move(cur);
  }
  return RowPolynomial{std::move(p[n])};
}

PowerSeries column_gf(const RiordanMatrix& m, std::size_t j) {
  PowerSeries ginv = invert(m.g());
  PowerSeries cur = m.f() * ginv;
  for (std::size_t i = 0; i < j; ++i) cur = cur * ginv;
  return shift_mul(cur, j).truncated(m.rows());
}

}  // namespace riordan
