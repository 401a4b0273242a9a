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

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "riordan/power_series.hpp"
#include "riordan/rational.hpp"

namespace testsupport {

inline riordan::PowerSeries ps(std::initializer_list<long long> coeffs) {
  std::vector<riordan::Rational> v;
  v.reserve(coeffs.size());
  for (long long c : coeffs) v.emplace_back(c);
  return riordan::PowerSeries(std::move(v));
}

inline riordan::PowerSeries ps_rat(std::vector<riordan::Rational> coeffs) {
  return riordan::PowerSeries(std::move(coeffs));
}

// Deterministic source of small random rationals and series. Every test that
// draws random data constructs one of these with an explicit seed, so runs
// are reproducible bit for bit.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  long long int_in(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(eng_);
  }

  riordan::Rational rational() {
    return riordan::Rational(int_in(-9, 9), int_in(1, 9));
  }

  riordan::Rational nonzero_rational() {
    while (true) {
      riordan::Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }

  riordan::PowerSeries series(std::size_t order) {
    std::vector<riordan::Rational> v(order);
    for (auto& c : v) c = rational();
    return riordan::PowerSeries(std::move(v));
  }

  // Random series with a nonzero constant term (a unit of the series ring).
  riordan::PowerSeries unit_series(std::size_t order) {
    std::vector<riordan::Rational> v(order);
    v[0] = nonzero_rational();
    for (std::size_t i = 1; i < order; ++i) v[i] = rational();
    return riordan::PowerSeries(std::move(v));
  }

  // Random series of the shape h1*x + h2*x^2 + ... with h1 != 0, the kind
  // that can be substituted and compositionally inverted.
  riordan::PowerSeries substitutable_series(std::size_t order) {
    std::vector<riordan::Rational> v(order);
    v[1] = nonzero_rational();
    for (std::size_t i = 2; i < order; ++i) v[i] = rational();
    return riordan::PowerSeries(std::move(v));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace testsupport
