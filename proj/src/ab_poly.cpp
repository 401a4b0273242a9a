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

#include "riordan/ab_poly.hpp"

#include <string>
#include <utility>

namespace riordan {

AbPoly::AbPoly(Integer constant) {
  add_term({0, 0}, constant);
}

AbPoly AbPoly::monomial(Integer coefficient, unsigned a_degree, unsigned b_degree) {
  AbPoly p;
  p.add_term({a_degree, b_degree}, coefficient);
  return p;
}

AbPoly AbPoly::var_a() {
  return monomial(Integer(1), 1, 0);
}

AbPoly AbPoly::var_b() {
  return monomial(Integer(1), 0, 1);
}

Integer AbPoly::coeff(unsigned a_degree, unsigned b_degree) const {
  auto it = terms_.find({a_degree, b_degree});
  return it == terms_.end() ? Integer(0) : it->second;
}

Rational AbPoly::at(const Rational& a, const Rational& b) const {
  Rational total(0);
  for (const auto& [key, c] : terms_) {
    total += Rational(c) * pow(a, key.first) * pow(b, key.second);
  }
  return total;
}

void AbPoly::add_term(const Key& key, const Integer& coefficient) {
  if (coefficient == 0) {
    return;
  }
  auto [it, inserted] = terms_.emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

AbPoly& AbPoly::operator+=(const AbPoly& o) {
  for (const auto& [key, c] : o.terms_) {
    add_term(key, c);
  }
  return *this;
}

AbPoly& AbPoly::operator-=(const AbPoly& o) {
  for (const auto& [key, c] : o.terms_) {
    add_term(key, -c);
  }
  return *this;
}

AbPoly& AbPoly::operator*=(const AbPoly& o) {
  AbPoly result;
  for (const auto& [lk, lc] : terms_) {
    for (const auto& [rk, rc] : o.terms_) {
      result.add_term({lk.first + rk.first, lk.second + rk.second}, lc * rc);
    }
  }
  terms_ = std::move(result.terms_);
  return *this;
}

AbPoly AbPoly::operator-() const {
  AbPoly result;
  for (const auto& [key, c] : terms_) {
    result.terms_.emplace(key, -c);
  }
  return result;
}

std::string AbPoly::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Integer magnitude = c;
    const bool negative = c < 0;
    if (negative) {
      magnitude = -magnitude;
    }
    if (first) {
      if (negative) {
        out += "-";
      }
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    auto append_var = [&vars](char name, unsigned degree) {
      if (degree == 0) {
        return;
      }
      if (!vars.empty()) {
        vars += "*";
      }
      vars += name;
      if (degree > 1) {
        vars += "^";
        vars += std::to_string(degree);
      }
    };
    append_var('a', key.first);
    append_var('b', key.second);
    if (vars.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) {
        out += magnitude.str();
        out += "*";
      }
      out += vars;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const AbPoly& p) {
  return os << p.str();
}

}  // namespace riordan
