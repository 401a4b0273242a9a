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

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "riordan/rational.hpp"

namespace riordan {

// Polynomial in two commuting symbols a and b with integer coefficients.
// Just enough algebra for weight bookkeeping: add, subtract, multiply,
// evaluate, print. Terms are kept with the a-degree descending so printing
// follows the usual convention, e.g. "a^4 + 4*a^2*b + b^2".
class AbPoly {
 public:
  // (a-degree, b-degree)
  using Key = std::pair<unsigned, unsigned>;

  struct TermOrder {
    bool operator()(const Key& x, const Key& y) const noexcept {
      if (x.first != y.first) {
        return x.first > y.first;
      }
      return x.second > y.second;
    }
  };

  using TermMap = std::map<Key, Integer, TermOrder>;

  AbPoly() = default;  // zero
  explicit AbPoly(Integer constant);

  static AbPoly monomial(Integer coefficient, unsigned a_degree, unsigned b_degree);
  static AbPoly var_a();
  static AbPoly var_b();

  bool is_zero() const { return terms_.empty(); }
  Integer coeff(unsigned a_degree, unsigned b_degree) const;
  const TermMap& terms() const { return terms_; }

  Rational at(const Rational& a, const Rational& b) const;
  std::string str() const;

  AbPoly& operator+=(const AbPoly& o);
  AbPoly& operator-=(const AbPoly& o);
  AbPoly& operator*=(const AbPoly& o);

  friend AbPoly operator+(AbPoly lhs, const AbPoly& rhs) { return lhs += rhs; }
  friend AbPoly operator-(AbPoly lhs, const AbPoly& rhs) { return lhs -= rhs; }
  friend AbPoly operator*(AbPoly lhs, const AbPoly& rhs) { return lhs *= rhs; }
  AbPoly operator-() const;

  friend bool operator==(const AbPoly& x, const AbPoly& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const AbPoly& x, const AbPoly& y) { return !(x == y); }

 private:
  void add_term(const Key& key, const Integer& coefficient);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const AbPoly& p);

}  // namespace riordan
