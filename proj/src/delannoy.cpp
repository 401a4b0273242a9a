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

#include "riordan/delannoy.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

constexpr std::size_t kPathBudget = 8;

void require_path_budget(std::size_t n, std::size_t m) {
  if (n > kPathBudget || m > kPathBudget) {
    throw BudgetError("path level computations are capped at n, m <= 8");
  }
}

void walk(std::size_t n, std::size_t m, std::string& word, std::vector<std::string>& out) {
  if (n == 0 && m == 0) {
    out.push_back(word);
    return;
  }
  if (n > 0 && m > 0) {
    word.push_back('D');
    walk(n - 1, m - 1, word, out);
    word.pop_back();
  }
  if (n > 0) {
    word.push_back('H');
    walk(n - 1, m, word, out);
    word.pop_back();
  }
  if (m > 0) {
    word.push_back('V');
    walk(n, m - 1, word, out);
    word.pop_back();
  }
}

// All ways to write total as an ordered sum of `parts` nonnegative integers.
std::vector<std::vector<std::size_t>> weak_compositions(std::size_t total, std::size_t parts) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  current.reserve(parts);
  auto recurse = [&](auto&& self, std::size_t remaining, std::size_t slots) -> void {
    if (slots == 1) {
      current.push_back(remaining);
      out.push_back(current);
      current.pop_back();
      return;
    }
    for (std::size_t take = 0; take <= remaining; ++take) {
      current.push_back(take);
      self(self, remaining - take, slots - 1);
      current.pop_back();
    }
  };
  recurse(recurse, total, parts);
  return out;
}

std::string class_word(const std::vector<std::size_t>& v_counts,
                       const std::vector<std::size_t>& h_counts) {
  std::string word;
  for (std::size_t i = 0; i < v_counts.size(); ++i) {
    if (i > 0) {
      word += 'D';
    }
    word.append(v_counts[i], 'V');
    word.append(h_counts[i], 'H');
  }
  return word;
}

std::size_t class_size(const std::vector<std::size_t>& v_counts,
                       const std::vector<std::size_t>& h_counts) {
  Integer size(1);
  for (std::size_t i = 0; i < v_counts.size(); ++i) {
    size *= binomial(v_counts[i] + h_counts[i], v_counts[i]);
  }
  return size.convert_to<std::size_t>();
}

Rational word_weight(const Rational& a, const Rational& b, const std::string& word) {
  long long plain = 0;
  long long diagonal = 0;
  for (char step : word) {
    if (step == 'D') {
      ++diagonal;
    } else {
      ++plain;
    }
  }
  return pow(a, plain) * pow(b, diagonal);
}

}  // namespace

std::vector<std::string> delannoy_paths(std::size_t n, std::size_t m) {
  require_path_budget(n, m);
  std::vector<std::string> out;
  std::string word;
  walk(n, m, word, out);
  return out;
}

std::string canonical_form(const std::string& path) {
  std::string word;
  word.reserve(path.size());
  std::size_t v_count = 0;
  std::size_t h_count = 0;
  auto flush_segment = [&] {
    word.append(v_count, 'V');
    word.append(h_count, 'H');
    v_count = 0;
    h_count = 0;
  };
  for (char step : path) {
    switch (step) {
      case 'V':
        ++v_count;
        break;
      case 'H':
        ++h_count;
        break;
      case 'D':
        flush_segment();
        word += 'D';
        break;
      default:
        throw Error(std::string("unknown step '") + step + "'; the steps are H, V and D");
    }
  }
  flush_segment();
  return word;
}

std::vector<DelannoyClass> delannoy_classes(std::size_t n, std::size_t m) {
  require_path_budget(n, m);
  std::vector<DelannoyClass> out;
  for (std::size_t k = 0; k <= std::min(n, m); ++k) {
    std::vector<std::vector<std::size_t>> h_parts = weak_compositions(n - k, k + 1);
    std::vector<std::vector<std::size_t>> v_parts = weak_compositions(m - k, k + 1);
    for (const std::vector<std::size_t>& v : v_parts) {
      for (const std::vector<std::size_t>& h : h_parts) {
        out.push_back(DelannoyClass{class_word(v, h), class_size(v, h), {}});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const DelannoyClass& x, const DelannoyClass& y) {
    return x.canonical < y.canonical;
  });
  return out;
}

std::vector<DelannoyClass> delannoy_classes_exhaustive(std::size_t n, std::size_t m) {
  std::map<std::string, std::vector<std::string>> groups;
  for (std::string& path : delannoy_paths(n, m)) {
    groups[canonical_form(path)].push_back(std::move(path));
  }
  std::vector<DelannoyClass> out;
  out.reserve(groups.size());
  for (auto& [word, members] : groups) {
    out.push_back(DelannoyClass{word, members.size(), std::move(members)});
  }
  return out;
}

Rational delannoy_weight(const Rational& a, const Rational& b, std::size_t n, std::size_t m) {
  Rational sum(0);
  for (std::size_t k = 0; k <= std::min(n, m); ++k) {
    sum += Rational(binomial(n, k) * binomial(m, k)) *
           pow(a, static_cast<long long>(n + m - 2 * k)) * pow(b, static_cast<long long>(k));
  }
  return sum;
}

std::vector<std::vector<Rational>> delannoy_weight_grid(const Rational& a, const Rational& b,
                                                        std::size_t rows, std::size_t cols) {
  std::vector<std::vector<Rational>> grid(rows, std::vector<Rational>(cols));
  if (rows == 0 || cols == 0) {
    return grid;
  }
  const Rational corner = b - a * a;
  grid[0][0] = Rational(1);
  for (std::size_t m = 1; m < cols; ++m) {
    grid[0][m] = a * grid[0][m - 1];
  }
  for (std::size_t n = 1; n < rows; ++n) {
    grid[n][0] = a * grid[n - 1][0];
    for (std::size_t m = 1; m < cols; ++m) {
      grid[n][m] = a * (grid[n - 1][m] + grid[n][m - 1]) + corner * grid[n - 1][m - 1];
    }
  }
  return grid;
}

Rational delannoy_weight_by_classes(const Rational& a, const Rational& b, std::size_t n,
                                    std::size_t m) {
  Rational sum(0);
  for (const DelannoyClass& cls : delannoy_classes(n, m)) {
    sum += word_weight(a, b, cls.canonical);
  }
  return sum;
}

AbPoly delannoy_weight_poly(std::size_t n, std::size_t m) {
  AbPoly sum;
  for (std::size_t k = 0; k <= std::min(n, m); ++k) {
    sum += AbPoly::monomial(binomial(n, k) * binomial(m, k),
                            static_cast<unsigned>(n + m - 2 * k), static_cast<unsigned>(k));
  }
  return sum;
}

AbPoly delannoy_weight_poly_recursive(std::size_t n, std::size_t m) {
  const AbPoly a = AbPoly::var_a();
  const AbPoly corner = AbPoly::var_b() - a * a;
  std::vector<std::vector<AbPoly>> grid(n + 1, std::vector<AbPoly>(m + 1));
  grid[0][0] = AbPoly(Integer(1));
  for (std::size_t j = 1; j <= m; ++j) {
    grid[0][j] = a * grid[0][j - 1];
  }
  for (std::size_t i = 1; i <= n; ++i) {
    grid[i][0] = a * grid[i - 1][0];
    for (std::size_t j = 1; j <= m; ++j) {
      grid[i][j] = a * (grid[i - 1][j] + grid[i][j - 1]) + corner * grid[i - 1][j - 1];
    }
  }
  return grid[n][m];
}

PowerSeries wn_generating_function(const Rational& a, const Rational& b, std::size_t n,
                                   std::size_t order) {
  std::vector<Rational> base(order);
  base[0] = a;
  if (order > 1) {
    base[1] = b - a * a;
  }
  std::vector<Rational> unit(order);
  unit[0] = Rational(1);
  if (order > 1) {
    unit[1] = -a;
  }
  PowerSeries numerator = pow(PowerSeries(std::move(base)), n);
  PowerSeries denominator = pow(PowerSeries(std::move(unit)), n + 1);
  return numerator / denominator;
}

CheckReport pascal_factorization_check(const Rational& a, const Rational& b, std::size_t size) {
  std::vector<std::vector<Rational>> pascal(size, std::vector<Rational>(size));
  for (std::size_t n = 0; n < size; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      pascal[n][k] = Rational(binomial(n, k)) * pow(a, static_cast<long long>(n - k));
    }
  }
  for (std::size_t n = 0; n < size; ++n) {
    for (std::size_t m = 0; m < size; ++m) {
      Rational lhs(0);
      for (std::size_t k = 0; k <= std::min(n, m); ++k) {
        lhs += pascal[n][k] * pow(b, static_cast<long long>(k)) * pascal[m][k];
      }
      Rational rhs = delannoy_weight(a, b, n, m);
      if (lhs != rhs) {
        CheckReport report;
        report.ok = false;
        report.detail = "entry (" + std::to_string(n) + ", " + std::to_string(m) +
                        "): factorization gives " + lhs.str() + ", weight sum gives " +
                        rhs.str();
        return report;
      }
    }
  }
  return CheckReport{};
}

RiordanMatrix delannoy_q_matrix(const Rational& a, const Rational& b, std::size_t rows) {
  if (a.is_zero()) {
    throw ConstructionError("the weight triangle needs a nonzero a");
  }
  const std::size_t order = rows + 2;
  std::vector<Rational> lin(order);
  lin[0] = Rational(1);
  lin[1] = -a;
  PowerSeries u = invert(PowerSeries(std::move(lin)));
  PowerSeries inner = PowerSeries::constant(a, order) + b * shift_mul(u, 1);
  return RiordanMatrix::from_dh(u, shift_mul(inner, 1), rows);
}

std::vector<std::vector<AbPoly>> delannoy_q_symbolic(std::size_t rows) {
  std::vector<std::vector<AbPoly>> out(rows, std::vector<AbPoly>(rows));
  for (std::size_t n = 0; n < rows; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      out[n][k] = delannoy_weight_poly(n - k, k);
    }
  }
  return out;
}

}  // namespace riordan
