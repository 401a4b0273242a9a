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

#include "riordan/palindromic.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "riordan/diagonals.hpp"
#include "riordan/errors.hpp"

namespace riordan {

namespace {

void require_admissible(const PalindromicParams& p) {
  if (p.f0.is_zero() || p.g0.is_zero()) {
    throw ConstructionError("palindromic parameters need nonzero f0 and g0");
  }
}

PowerSeries linear_series(const Rational& c0, const Rational& c1, std::size_t order) {
  std::vector<Rational> c(order);
  c[0] = c0;
  if (order > 1) {
    c[1] = c1;
  }
  return PowerSeries(std::move(c));
}

}  // namespace

RiordanMatrix palindromic_matrix(const PalindromicParams& p, std::size_t rows) {
  require_admissible(p);
  if (rows == 0) {
    throw ConstructionError("a matrix needs at least one row");
  }
  PowerSeries unit = invert(linear_series(p.f0, -p.f1, rows));
  PowerSeries f = (p.f0 * p.f0) * unit;
  PowerSeries g = linear_series(p.f0 * p.g0, -p.f0, rows) * unit;
  return RiordanMatrix::from_T(f, g, rows);
}

PalindromeCheck is_palindromic(const RiordanMatrix& m) {
  for (std::size_t n = 0; n < m.rows(); ++n) {
    for (std::size_t k = 0; 2 * k < n; ++k) {
      if (m.entry(n, k) != m.entry(n, n - k)) {
        return PalindromeCheck{false, std::make_pair(n, k)};
      }
    }
  }
  return PalindromeCheck{};
}

bool palindromic_columns_match_diagonals(const RiordanMatrix& m) {
  const std::size_t n_rows = m.rows();
  DiagonalFamily fam = diagonal_family(m, n_rows, n_rows);
  for (std::size_t n = 0; n < n_rows; ++n) {
    PowerSeries column = column_gf(m, n);
    if (n > 0) {
      column = shift_div(column, n);
    }
    if (!(column == fam.series[n])) {
      return false;
    }
  }
  return true;
}

bool palindromic_bivariate_symmetric(const RiordanMatrix& m) {
  // Entry (n, k) of the grid is matrix entry (n + k, k), so a window of side
  // w touches rows up to 2w - 2; this choice keeps it within the prefix.
  const std::size_t window = (m.rows() + 1) / 2;
  CoeffGrid grid = bivariate_gf(m, window, window);
  for (std::size_t n = 0; n < window; ++n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (grid.at(n, k) != grid.at(k, n)) {
        return false;
      }
    }
  }
  return true;
}

Rational palindromic_entry(const PalindromicParams& p, std::size_t n, std::size_t k) {
  require_admissible(p);
  if (k > n) {
    return Rational(0);
  }
  const Rational t = -(p.f1 * p.g0) / p.f0;
  const std::size_t j_max = std::min(k, n - k);
  Rational sum(0);
  for (std::size_t j = 0; j <= j_max; ++j) {
    sum += Rational(binomial(k, j)) * Rational(binomial(n - j, k)) *
           pow(t, static_cast<long long>(j));
  }
  return sum * p.f0 / pow(p.g0, static_cast<long long>(n) + 1);
}

std::vector<RowPolynomial> palindromic_row_polynomials(const PalindromicParams& p,
                                                       std::size_t count) {
  require_admissible(p);
  std::vector<RowPolynomial> out;
  out.reserve(count);
  if (count == 0) {
    return out;
  }
  out.push_back(RowPolynomial{{p.f0 / p.g0}});
  if (count == 1) {
    return out;
  }
  const Rational p1_coeff = p.f0 / (p.g0 * p.g0);
  out.push_back(RowPolynomial{{p1_coeff, p1_coeff}});
  const Rational ratio = p.f1 / p.f0;
  for (std::size_t n = 2; n < count; ++n) {
    const std::vector<Rational>& prev = out[n - 1].coeffs;
    const std::vector<Rational>& prev2 = out[n - 2].coeffs;
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      c[i] += prev[i];
      c[i + 1] += prev[i];
    }
    for (std::size_t i = 0; i < prev2.size(); ++i) {
      c[i + 1] -= ratio * prev2[i];
    }
    for (Rational& value : c) {
      value /= p.g0;
    }
    out.push_back(RowPolynomial{std::move(c)});
  }
  return out;
}

KimForm to_kim(const PalindromicParams& p) {
  require_admissible(p);
  return KimForm{p.f0 / p.g0, Rational(1) / p.g0, -p.g1() / (p.g0 * p.g0)};
}

PalindromicParams from_kim(const KimForm& k) {
  if (k.h1.is_zero()) {
    throw ConstructionError("h1 must be nonzero to describe a matrix");
  }
  if (k.d0.is_zero()) {
    throw ConstructionError("d0 must be nonzero to describe a matrix");
  }
  const Rational g0 = Rational(1) / k.h1;
  const Rational g1 = -k.h2 / (k.h1 * k.h1);
  const Rational f0 = k.d0 / k.h1;
  const Rational f1 = f0 * (g1 + Rational(1)) / g0;
  return PalindromicParams{f0, g0, f1};
}

std::optional<PalindromicParams> recover_params(const RiordanMatrix& m) {
  if (m.f().order() < 2 || m.g().order() < 2) {
    return std::nullopt;
  }
  if (!is_palindromic(m).palindromic) {
    return std::nullopt;
  }
  PalindromicParams p{m.f().coeff(0), m.g().coeff(0), m.f().coeff(1)};
  if (p.f0.is_zero() || p.g0.is_zero()) {
    return std::nullopt;
  }
  // The prefix alone cannot pin down the matrix, so insist that the stored
  // series equal the parametrized closed forms through their full orders.
  const Rational ratio = p.f1 / p.f0;
  Rational fn = p.f0;
  for (std::size_t n = 1; n < m.f().order(); ++n) {
    fn *= ratio;
    if (m.f().coeff(n) != fn) {
      return std::nullopt;
    }
  }
  Rational gn = p.g1();
  for (std::size_t n = 1; n < m.g().order(); ++n) {
    if (m.g().coeff(n) != gn) {
      return std::nullopt;
    }
    gn *= ratio;
  }
  return p;
}

bool is_involution(const RiordanMatrix& m) {
  RiordanMatrix square = product(m, m);
  return prefix_equal(square, RiordanMatrix::identity(square.rows()));
}

bool is_pseudo_involution(const RiordanMatrix& m) {
  // M = diag(1, -1, 1, ...) is itself Riordan: T(-1|-1).
  RiordanMatrix sign = RiordanMatrix::from_T(PowerSeries::constant(Rational(-1), m.rows()),
                                             PowerSeries::constant(Rational(-1), m.rows()),
                                             m.rows());
  return is_involution(product(m, sign));
}

InvolutionKind classify_involution(const PalindromicParams& p, std::size_t rows) {
  RiordanMatrix m = palindromic_matrix(p, rows);
  if (is_involution(m)) {
    return InvolutionKind::Involution;
  }
  if (is_pseudo_involution(m)) {
    return InvolutionKind::PseudoInvolution;
  }
  return InvolutionKind::None;
}

}  // namespace riordan
