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

#include "riordan/rational.hpp"

#include <ostream>

namespace riordan {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) {
    throw Error("rational with zero denominator");
  }
  value_ = boost::multiprecision::cpp_rational(num, den);
}

std::string Rational::str() const {
  Integer den = denominator();
  if (den == 1) {
    return numerator().str();
  }
  return numerator().str() + "/" + den.str();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::optional<Integer> {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
      negative = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) return std::nullopt;
    Integer v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      v = v * 10 + (s[i] - '0');
    }
    return negative ? Integer(-v) : v;
  };

  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (!num || !den || den->is_zero()) return std::nullopt;
  return Rational(*num, *den);
}

std::optional<Rational> Rational::exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  Integer num = r.numerator();
  Integer den = r.denominator();
  Integer sn = boost::multiprecision::sqrt(num);
  if (sn * sn != num) return std::nullopt;
  Integer sd = boost::multiprecision::sqrt(den);
  if (sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw Error("division by zero");
  }
  value_ /= o.value_;
  return *this;
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r = a;
  r += b;
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  Rational r = a;
  r -= b;
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  Rational r = a;
  r *= b;
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  Rational r = a;
  r /= b;
  return r;
}

Rational pow(const Rational& base, long long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) {
      throw Error("zero raised to a negative power");
    }
    return Rational(1) / pow(base, -exponent);
  }
  Rational result(1);
  Rational acc = base;
  unsigned long long e = static_cast<unsigned long long>(exponent);
  while (e > 0) {
    if (e & 1) result *= acc;
    e >>= 1;
    if (e > 0) acc *= acc;
  }
  return result;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result *= Integer(n - k + i);
    result /= Integer(i);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace riordan
