// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace sheaflat {

/// Integer polynomial, coefficients indexed by power (low degree first).
/// Trailing zeros are trimmed so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(std::size_t power, std::int64_t coeff = 1) {
    std::vector<std::int64_t> c(power + 1, 0);
    c[power] = coeff;
    return Polynomial(std::move(c));
  }

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coefficient(std::size_t power) const { return power < c_.size() ? c_[power] : 0; }

  std::int64_t eval(std::int64_t t) const {
    std::int64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    std::vector<std::int64_t> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(static_cast<std::int64_t>(i) * c_[i]);
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return Polynomial();
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// e.g. "t^4 - 6t^3 + 11t^2 - 6t".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const std::int64_t v = c_[i];
      if (v == 0) continue;
      const std::int64_t mag = v < 0 ? -v : v;
      if (s.empty()) {
        s += v < 0 ? "-" : "";
      } else {
        s += v < 0 ? " - " : " + ";
      }
      if (mag != 1 || i == 0) s += std::to_string(mag);
      if (i >= 1) s += "t";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<std::int64_t> c_;
};

}  // namespace sheaflat
