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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstddef>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/riordan_matrix.hpp"
#include "riordan/series_expr.hpp"
#include "support.hpp"

using riordan::PowerSeries;
using riordan::Rational;
using riordan::RiordanMatrix;
using testsupport::Gen;
using testsupport::ps;

namespace {

PowerSeries eval(const char* text, std::size_t order) {
  return riordan::evaluate(*riordan::parse_series_expr(text), order);
}

RiordanMatrix from_exprs(const char* f, const char* g, std::size_t rows) {
  return RiordanMatrix::from_T(eval(f, rows), eval(g, rows), rows);
}

// Additive Pascal triangle, the oracle for binomial-flavored entries.
std::vector<std::vector<Rational>> pascal_oracle(std::size_t rows) {
  std::vector<std::vector<Rational>> t(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    t[i].resize(i + 1);
    t[i][0] = t[i][i] = Rational(1);
    for (std::size_t j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t;
}

// Plain lower-triangular prefix multiplication, the oracle for the group
// product.
std::vector<std::vector<Rational>> prefix_mul(const RiordanMatrix& a, const RiordanMatrix& b) {
  std::size_t n = std::min(a.rows(), b.rows());
  std::vector<std::vector<Rational>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].resize(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      Rational acc;
      for (std::size_t k = j; k <= i; ++k) acc += a.entry(i, k) * b.entry(k, j);
      out[i][j] = acc;
    }
  }
  return out;
}

bool matches_rows(const RiordanMatrix& m,
                  const std::vector<std::vector<long long>>& expected) {
  if (m.rows() < expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    for (std::size_t j = 0; j < expected[i].size(); ++j) {
      if (m.entry(i, j) != Rational(expected[i][j])) return false;
    }
  }
  return true;
}

RiordanMatrix random_matrix(Gen& gen, std::size_t rows) {
  return RiordanMatrix::from_T(gen.unit_series(rows), gen.unit_series(rows), rows);
}

}  // namespace

TEST_CASE("Pascal triangle") {
  RiordanMatrix p = from_exprs("1", "1-x", 8);
  auto oracle = pascal_oracle(8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      CHECK(p.entry(i, j) == oracle[i][j]);
    }
  }
  CHECK(p.entry(4, 2) == Rational(6));
}

TEST_CASE("entry access rules") {
  RiordanMatrix p = from_exprs("1", "1-x", 5);
  CHECK(p.entry(2, 4).is_zero());
  CHECK_THROWS_AS(p.entry(5, 0), riordan::BudgetError);
  CHECK_THROWS_AS(RiordanMatrix::from_T(eval("1", 4), eval("1-x", 4), 6),
                  riordan::BudgetError);
  CHECK_THROWS_AS(RiordanMatrix::from_T(eval("x", 4), eval("1-x", 4)),
                  riordan::ConstructionError);
  CHECK_THROWS_AS(RiordanMatrix::from_T(eval("1", 4), eval("x-x^2", 4)),
                  riordan::ConstructionError);
}

TEST_CASE("aerated Catalan style array") {
  RiordanMatrix c = from_exprs("1", "(1+sqrt(1-4*x))/2", 5);
  CHECK(matches_rows(c, {{1}, {1, 1}, {2, 2, 1}, {5, 5, 3, 1}, {14, 14, 9, 4, 1}}));
  CHECK(c.entry(4, 2) == Rational(9));
}

TEST_CASE("dense example with negative entries") {
  RiordanMatrix d = from_exprs("1/(1-x)^2", "2*x-1", 6);
  CHECK(matches_rows(d, {{-1},
                         {-4, 1},
                         {-11, 6, -1},
                         {-26, 23, -8, 1},
                         {-57, 72, -39, 10, -1},
                         {-120, 201, -150, 59, -12, 1}}));
  CHECK(d.entry(5, 1) == Rational(201));

  RiordanMatrix dt = from_exprs("(2*x-1)/(1-x)^2", "2*x-1", 7);
  CHECK(matches_rows(dt, {{1},
                          {2, -1},
                          {3, -4, 1},
                          {4, -11, 6, -1},
                          {5, -26, 23, -8, 1},
                          {6, -57, 72, -39, 10, -1},
                          {7, -120, 201, -150, 59, -12, 1}}));
}

TEST_CASE("symmetric weighted-path array") {
  RiordanMatrix de = from_exprs("1/(1+x)", "(1-x)/(1+x)", 7);
  CHECK(matches_rows(de, {{1},
                          {1, 1},
                          {1, 3, 1},
                          {1, 5, 5, 1},
                          {1, 7, 13, 7, 1},
                          {1, 9, 25, 25, 9, 1},
                          {1, 11, 41, 63, 41, 11, 1}}));
}

TEST_CASE("recurrence prefix equals the generating-function prefix") {
  Gen gen(0x5eed0201);
  for (int trial = 0; trial < 25; ++trial) {
    RiordanMatrix m = random_matrix(gen, 10);
    CHECK(m.prefix() == m.prefix_direct());
  }
}

TEST_CASE("diagonal entries follow f0 and g0") {
  Gen gen(0x5eed0202);
  for (int trial = 0; trial < 25; ++trial) {
    RiordanMatrix m = random_matrix(gen, 8);
    Rational f0 = m.f().coeff(0);
    Rational g0 = m.g().coeff(0);
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(m.entry(i, i) == f0 / riordan::pow(g0, static_cast<long long>(i) + 1));
    }
  }
}

TEST_CASE("conversion between the pair descriptions") {
  RiordanMatrix p1 = from_exprs("1", "1-x", 8);
  RiordanMatrix p2 = RiordanMatrix::from_dh(eval("1/(1-x)", 8), eval("x/(1-x)", 8));
  CHECK(prefix_equal(p1, p2));

  CHECK_THROWS_AS(RiordanMatrix::from_dh(eval("1", 4), eval("1+x", 4)),
                  riordan::ConstructionError);
  CHECK_THROWS_AS(RiordanMatrix::from_dh(eval("1", 4), eval("x^2", 4)),
                  riordan::ConstructionError);

  Gen gen(0x5eed0203);
  for (int trial = 0; trial < 25; ++trial) {
    RiordanMatrix m = random_matrix(gen, 8);
    RiordanMatrix back = RiordanMatrix::from_dh(m.d(), m.h());
    CHECK(back.rows() == 8);
    CHECK(prefix_equal(m, back));
    CHECK(m.f() == back.f());
    CHECK(m.g() == back.g());
  }
}

TEST_CASE("product matches numeric prefix multiplication") {
  RiordanMatrix p = from_exprs("1", "1-x", 8);
  RiordanMatrix pp = riordan::product(p, p);
  // Squaring the binomial matrix doubles the falling powers: entries are
  // binomial(i,j) * 2^(i-j).
  auto oracle = pascal_oracle(8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Rational expect = oracle[i][j] * riordan::pow(Rational(2), static_cast<long long>(i - j));
      CHECK(pp.entry(i, j) == expect);
    }
  }
  CHECK(pp.g() == eval("1-2*x", 8));

  Gen gen(0x5eed0204);
  for (int trial = 0; trial < 25; ++trial) {
    RiordanMatrix a = random_matrix(gen, 8);
    RiordanMatrix b = random_matrix(gen, 8);
    CHECK(riordan::product(a, b).prefix() == prefix_mul(a, b));
  }
}

TEST_CASE("identity and associativity of the product") {
  Gen gen(0x5eed0205);
  RiordanMatrix id = RiordanMatrix::identity(8);
  for (int trial = 0; trial < 10; ++trial) {
    RiordanMatrix a = random_matrix(gen, 8);
    RiordanMatrix b = random_matrix(gen, 8);
    RiordanMatrix c = random_matrix(gen, 8);
    CHECK(prefix_equal(riordan::product(a, id), a));
    CHECK(prefix_equal(riordan::product(id, a), a));
    CHECK(prefix_equal(riordan::product(riordan::product(a, b), c),
                       riordan::product(a, riordan::product(b, c))));
  }
}

TEST_CASE("inverse") {
  RiordanMatrix p = from_exprs("1", "1-x", 8);
  RiordanMatrix pinv = riordan::inverse(p);
  // The inverse of the binomial matrix carries alternating signs.
  auto oracle = pascal_oracle(8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Rational expect = (i - j) % 2 == 0 ? oracle[i][j] : -oracle[i][j];
      CHECK(pinv.entry(i, j) == expect);
    }
  }

  Gen gen(0x5eed0206);
  RiordanMatrix id = RiordanMatrix::identity(8);
  for (int trial = 0; trial < 25; ++trial) {
    RiordanMatrix m = random_matrix(gen, 8);
    RiordanMatrix minv = riordan::inverse(m);
    CHECK(minv.rows() == 8);
    CHECK(prefix_equal(riordan::product(m, minv), id));
    CHECK(prefix_equal(riordan::product(minv, m), id));
    CHECK(prefix_equal(riordan::inverse(minv), m));
  }
}

TEST_CASE("A-sequence") {
  RiordanMatrix p = from_exprs("1", "1-x", 8);
  CHECK(riordan::a_sequence(p, 8) == ps({1, 1, 0, 0, 0, 0, 0, 0}));

  RiordanMatrix c = from_exprs("1", "(1+sqrt(1-4*x))/2", 8);
  CHECK(riordan::a_sequence(c, 8) == ps({1, 1, 1, 1, 1, 1, 1, 1}));

  Gen gen(0x5eed0207);
  for (int trial = 0; trial < 25; ++trial) {
    RiordanMatrix m = random_matrix(gen, 10);
    PowerSeries a = riordan::a_sequence(m, 9);

    // Defining recurrence across consecutive rows.
    for (std::size_t i = 1; i < 10; ++i) {
      for (std::size_t j = 1; j <= i; ++j) {
        Rational acc;
        for (std::size_t k = 0; k <= i - j; ++k) {
          acc += a.coeff(k) * m.entry(i - 1, j - 1 + k);
        }
        CHECK(m.entry(i, j) == acc);
      }
    }

    // Two equivalent formulas: x/hbar and (h/x) composed with hbar.
    PowerSeries h = m.h();
    PowerSeries hbar = riordan::comp_inverse(h);
    CHECK(a == riordan::compose(riordan::shift_div(h, 1), hbar));
    // And the defining functional equation h = x * A(h).
    CHECK(riordan::compose(a, h) == riordan::shift_div(h, 1));
  }

  CHECK_THROWS_AS(riordan::a_sequence(p, 20), riordan::BudgetError);
}

TEST_CASE("fundamental theorem") {
  RiordanMatrix p = from_exprs("1", "1-x", 8);
  PowerSeries geom = eval("1/(1-x)", 8);
  CHECK(riordan::apply(p, geom) == ps({1, 2, 4, 8, 16, 32, 64, 128}));

  Gen gen(0x5eed0208);
  for (int trial = 0; trial < 25; ++trial) {
    RiordanMatrix m = random_matrix(gen, 8);
    PowerSeries gamma = gen.series(8);
    PowerSeries got = riordan::apply(m, gamma);
    REQUIRE(got.order() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
      Rational acc;
      for (std::size_t j = 0; j <= i; ++j) acc += m.entry(i, j) * gamma.coeff(j);
      CHECK(got.coeff(i) == acc);
    }
  }
}

TEST_CASE("row polynomials") {
  RiordanMatrix p = from_exprs("1", "1-x", 8);
  CHECK(riordan::row_polynomial(p, 3).coeffs ==
        std::vector<Rational>{Rational(1), Rational(3), Rational(3), Rational(1)});

  RiordanMatrix de = from_exprs("1/(1+x)", "(1-x)/(1+x)", 8);
  CHECK(riordan::row_polynomial(de, 4).coeffs ==
        std::vector<Rational>{Rational(1), Rational(7), Rational(13), Rational(7), Rational(1)});

  Gen gen(0x5eed0209);
  for (int trial = 0; trial < 25; ++trial) {
    RiordanMatrix m = random_matrix(gen, 8);
    for (std::size_t n = 0; n < 8; ++n) {
      CHECK(riordan::row_polynomial(m, n).coeffs == m.prefix()[n]);
    }
  }
  CHECK_THROWS_AS(riordan::row_polynomial(p, 8), riordan::BudgetError);
}

TEST_CASE("column generating functions") {
  Gen gen(0x5eed020a);
  for (int trial = 0; trial < 10; ++trial) {
    RiordanMatrix m = random_matrix(gen, 8);
    for (std::size_t j = 0; j < 8; ++j) {
      PowerSeries col = riordan::column_gf(m, j);
      REQUIRE(col.order() == 8);
      for (std::size_t i = 0; i < 8; ++i) {
        CHECK(col.coeff(i) == m.entry(i, j));
      }
    }
  }
}
