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

#include "riordan/diagonals.hpp"

#include <algorithm>
#include <string>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

// g0 - x with len known coefficients.
PowerSeries linear_denominator(const Rational& g0, std::size_t len) {
  std::vector<Rational> v(len);
  v[0] = g0;
  if (len > 1) v[1] = Rational(-1);
  return PowerSeries(std::move(v));
}

}  // namespace

DiagonalFamily diagonal_family(const RiordanMatrix& m, std::size_t count, std::size_t len) {
  if (count == 0 || len == 0) {
    throw ConstructionError("diagonal family needs count >= 1 and len >= 1");
  }
  if (count > m.f().order() || count > m.g().order()) {
    throw BudgetError("diagonal family of " + std::to_string(count) +
                      " series needs f and g known to that order, have " +
                      std::to_string(m.f().order()) + " and " +
                      std::to_string(m.g().order()));
  }
  PowerSeries dinv = invert(linear_denominator(m.g().coeff(0), len));

  DiagonalFamily fam;
  fam.series.reserve(count);
  fam.series.push_back(m.f().coeff(0) * dinv);
  for (std::size_t n = 1; n < count; ++n) {
    PowerSeries acc = PowerSeries::constant(m.f().coeff(n), len);
    for (std::size_t l = 1; l <= n; ++l) {
      acc = acc - m.g().coeff(l) * fam.series[n - l];
    }
    fam.series.push_back(acc * dinv);
  }
  return fam;
}

const Rational& CoeffGrid::at(std::size_t n, std::size_t k) const {
  if (n >= rows || k >= cols) {
    throw OutOfRangeError("grid index (" + std::to_string(n) + ", " + std::to_string(k) +
                          ") outside " + std::to_string(rows) + " x " + std::to_string(cols));
  }
  return data[n][k];
}

CoeffGrid bivariate_gf(const RiordanMatrix& m, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw ConstructionError("bivariate grid needs at least one row and column");
  }
  if (rows > m.f().order() || rows > m.g().order()) {
    throw BudgetError("bivariate expansion to z^" + std::to_string(rows - 1) +
                      " needs f and g known to order " + std::to_string(rows));
  }
  // f/(g - x) = sum_k x^k * f / g^(k+1): column k of the grid is the
  // z-expansion of f/g^(k+1).
  CoeffGrid grid;
  grid.rows = rows;
  grid.cols = cols;
  grid.data.assign(rows, std::vector<Rational>(cols));
  PowerSeries ginv = invert(m.g().truncated(rows));
  PowerSeries cur = m.f().truncated(rows) * ginv;
  for (std::size_t k = 0; k < cols; ++k) {
    for (std::size_t n = 0; n < rows; ++n) {
      grid.data[n][k] = cur.coeff(n);
    }
    if (k + 1 < cols) cur = cur * ginv;
  }
  return grid;
}

CoeffGrid sprugnoli_bgf(const RiordanMatrix& m, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw ConstructionError("bivariate grid needs at least one row and column");
  }
  if (rows > m.f().order() || rows > m.g().order()) {
    throw BudgetError("bivariate expansion to z^" + std::to_string(rows - 1) +
                      " needs f and g known to order " + std::to_string(rows));
  }
  // f/(g - x*z) = sum_k x^k * z^k * f / g^(k+1): the extra z^k offsets each
  // column, which is exactly the triangular layout of the matrix.
  CoeffGrid grid;
  grid.rows = rows;
  grid.cols = cols;
  grid.data.assign(rows, std::vector<Rational>(cols));
  PowerSeries ginv = invert(m.g().truncated(rows));
  PowerSeries cur = m.f().truncated(rows) * ginv;
  for (std::size_t k = 0; k < cols; ++k) {
    for (std::size_t n = 0; n < rows; ++n) {
      grid.data[n][k] = n >= k ? cur.coeff(n - k) : Rational(0);
    }
    if (k + 1 < cols) cur = cur * ginv;
  }
  return grid;
}

CheckReport gk_diagonal_check(const PowerSeries& g, std::size_t k, std::size_t max_j) {
  if (k < 2) {
    throw ConstructionError("the stabilizer subgroup parameter k must be at least 2");
  }
  std::size_t rows = max_j + 2 * k - 2;
  if (g.order() < rows) {
    throw BudgetError("checking j <= " + std::to_string(max_j) + " for k = " +
                      std::to_string(k) + " needs g known to order " + std::to_string(rows) +
                      ", have " + std::to_string(g.order()));
  }
  if (!g.coeff(0).is_one()) {
    throw ConstructionError("g must have constant term 1, found " + g.coeff(0).str());
  }
  for (std::size_t m = 1; m + 1 < k; ++m) {
    if (!g.coeff(m).is_zero()) {
      throw ConstructionError("g lies outside the subgroup: coefficient of x^" +
                              std::to_string(m) + " is " + g.coeff(m).str());
    }
  }

  RiordanMatrix d = RiordanMatrix::from_T(g, g, rows);
  PowerSeries h = d.h();
  CheckReport report;
  auto fail = [&](std::size_t i, std::size_t j, const Rational& got, const Rational& want) {
    report.ok = false;
    report.detail = "entry " + entry_name(i, j) + " is " + got.str() + ", expected " +
                    want.str();
  };
  for (std::size_t j = 0; j <= max_j && report.ok; ++j) {
    if (d.entry(j, j) != Rational(1)) {
      fail(j, j, d.entry(j, j), Rational(1));
      break;
    }
    for (std::size_t m = 1; m + 1 < k && report.ok; ++m) {
      if (!d.entry(j + m, j).is_zero()) {
        fail(j + m, j, d.entry(j + m, j), Rational(0));
      }
    }
    for (std::size_t m = k - 1; m <= 2 * k - 3 && report.ok; ++m) {
      Rational expected = Rational(-static_cast<long long>(j)) * g.coeff(m);
      if (d.entry(j + m, j) != expected) {
        fail(j + m, j, d.entry(j + m, j), expected);
        break;
      }
      // Same law phrased through h = x/g.
      Rational via_h = Rational(static_cast<long long>(j)) * h.coeff(m + 1);
      if (d.entry(j + m, j) != via_h) {
        fail(j + m, j, d.entry(j + m, j), via_h);
      }
    }
  }
  return report;
}

CheckReport tfgg_relation_check(const PowerSeries& f, const PowerSeries& g,
                                std::size_t count, std::size_t len) {
  RiordanMatrix a = RiordanMatrix::from_T(f, g);
  RiordanMatrix b = RiordanMatrix::from_T(f * g, g);
  DiagonalFamily fam_a = diagonal_family(a, count, len);
  DiagonalFamily fam_b = diagonal_family(b, count, len);

  CheckReport report;
  for (std::size_t n = 0; n < count; ++n) {
    PowerSeries expect =
        PowerSeries::constant(f.coeff(n), len) + shift_mul(fam_a.series[n], 1);
    if (fam_b.series[n] != expect) {
      report.ok = false;
      report.detail = "diagonal " + std::to_string(n) +
                      " of T(fg|g) does not equal f_n + x * diagonal of T(f|g)";
      break;
    }
  }
  return report;
}

std::pair<RiordanMatrix, RiordanMatrix> qcone_matrices(long long m, long long q,
                                                       std::size_t rows) {
  if (m < 1 || q < 1) {
    throw ConstructionError("cone parameters need m >= 1 and q >= 1");
  }
  if (rows == 0) {
    throw ConstructionError("cone matrices need at least one row");
  }
  std::size_t order = std::max<std::size_t>(rows, 2);
  Rational rm(m);
  Rational rq(q);

  std::vector<Rational> num_coeffs(order);
  num_coeffs[0] = rm;
  num_coeffs[1] = rq - rm;
  PowerSeries numerator(std::move(num_coeffs));

  std::vector<Rational> omx(order);
  omx[0] = Rational(1);
  omx[1] = Rational(-1);
  PowerSeries one_minus_x(std::move(omx));

  PowerSeries f = numerator * invert(rq * one_minus_x);
  PowerSeries g = (Rational(1) / rq) * one_minus_x;
  PowerSeries fbar = (Rational(1) / (rq * rq)) * numerator;

  return {RiordanMatrix::from_T(f, g, rows), RiordanMatrix::from_T(fbar, g, rows)};
}

CheckReport qcone_diagonal_check(long long m, long long q, std::size_t count,
                                 std::size_t len) {
  auto [cone, companion] = qcone_matrices(m, q, std::max<std::size_t>(count, 1));
  DiagonalFamily fam = diagonal_family(cone, count, len);
  DiagonalFamily fam_bar = diagonal_family(companion, count, len);

  Rational rm(m);
  Rational rq(q);
  std::vector<Rational> den(len);
  den[0] = Rational(1);
  if (len > 1) den[1] = -rq;
  PowerSeries u = invert(PowerSeries(std::move(den)));  // 1/(1-qx)
  PowerSeries delta0 = rm * u;
  PowerSeries x = PowerSeries::variable(len).truncated(len);

  CheckReport report;
  auto fail = [&](const std::string& what, std::size_t n) {
    report.ok = false;
    report.detail = what + " series " + std::to_string(n) + " does not match its closed form";
  };

  if (fam.series[0] != delta0) fail("cone diagonal", 0);
  if (report.ok && fam_bar.series[0] != (rm / rq) * u) fail("companion diagonal", 0);

  PowerSeries upow = PowerSeries::constant(Rational(1), len);
  PowerSeries usum = PowerSeries::zero(len);
  for (std::size_t n = 1; n < count && report.ok; ++n) {
    upow = upow * u;
    usum = usum + upow;
    PowerSeries expect = delta0 * upow + rq * usum;
    if (fam.series[n] != expect) {
      fail("cone diagonal", n);
      break;
    }
    PowerSeries expect_bar =
        PowerSeries::constant(Rational(1), len) + x * delta0 * upow + rq * (x * usum);
    if (fam_bar.series[n] != expect_bar) {
      fail("companion diagonal", n);
    }
  }
  return report;
}

}  // namespace riordan
