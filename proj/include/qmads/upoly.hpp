/*
   Copyright 2026 The qmads Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace qmads {

/// Dense univariate polynomial over Q in the deformation parameter q.
/// Coefficients are stored from the constant term upward; no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(long c) { if (c != 0) c_.emplace_back(c); }  // NOLINT(google-explicit-constructor)
  UPoly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(const Rational& c, int deg) {
    UPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(deg) + 1, Rational(0));
    p.c_.back() = c;
    return p;
  }
  static UPoly q() { return monomial(Rational(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest power of q carrying a nonzero coefficient (0 for the zero polynomial).
  int order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return 0;
  }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0);
  }
  bool is_monomial() const { return !c_.empty() && order() == degree(); }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const Rational& s) const {
    if (s.is_zero()) return {};
    UPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }
  UPoly shifted(int k) const {  // multiply by q^k, k >= 0
    if (is_zero() || k == 0) return *this;
    UPoly r;
    r.c_.assign(static_cast<std::size_t>(k), Rational(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }
  /// Divides by q^k; requires order() >= k.
  UPoly unshifted(int k) const {
    if (is_zero() || k == 0) return *this;
    return UPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on division by the zero polynomial.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw PoleError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
    Rational inv_lead = b.lead().inverse();
    for (int i = a.degree(); i >= b.degree(); --i) {
      Rational f = rem[static_cast<std::size_t>(i)] * inv_lead;
      if (f.is_zero()) continue;
      int shift = i - b.degree();
      quo[static_cast<std::size_t>(shift)] = f;
      for (int j = 0; j <= b.degree(); ++j)
        rem[static_cast<std::size_t>(shift + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }
  /// Exact quotient a / b; the caller guarantees divisibility.
  static UPoly exact_div(const UPoly& a, const UPoly& b) {
    if (b.is_one()) return a;
    if (b.is_monomial() && b.lead().is_one()) return a.unshifted(b.degree());
    return divmod(a, b).first;
  }

  UPoly monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return scaled(lead().inverse());
  }

  /// Monic greatest common divisor (0 only when both inputs vanish).
  static UPoly gcd(UPoly a, UPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return UPoly(1);
    if (a.is_monomial()) return UPoly::monomial(Rational(1), std::min(a.degree(), b.order()));
    if (b.is_monomial()) return UPoly::monomial(Rational(1), std::min(b.degree(), a.order()));
    int common = std::min(a.order(), b.order());
    a = a.unshifted(a.order());
    b = b.unshifted(b.order());
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic().shifted(common);
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace qmads
