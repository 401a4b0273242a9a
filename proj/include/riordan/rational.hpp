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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "riordan/errors.hpp"

namespace riordan {

using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational number, always in lowest terms with a
// positive denominator. Everything in this library computes with these;
// there is no floating point anywhere in the core.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : value_(n) {}
  Rational(const Integer& n) : value_(n) {}
  Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}
  Rational(const Integer& num, const Integer& den);

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  // Renders "p" for integers and "p/q" otherwise; parse() accepts exactly
  // the same two shapes (with an optional leading minus).
  std::string str() const;
  static std::optional<Rational> parse(std::string_view text);

  // Exact square root when the value is a square of a rational; nullopt for
  // negatives and non-squares. The result is the nonnegative root.
  static std::optional<Rational> exact_sqrt(const Rational& r);

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

 private:
  boost::multiprecision::cpp_rational value_;
};

// base^exponent with negative exponents allowed for nonzero base.
Rational pow(const Rational& base, long long exponent);

Rational abs(const Rational& r);

Integer binomial(std::size_t n, std::size_t k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace riordan
