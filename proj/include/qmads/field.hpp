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

#include <concepts>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <type_traits>

#include "scalar.hpp"

namespace qmads {

/// Prime field F_p with p = 2^61 - 1, used for seeded random specializations.
class Fp {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

  Fp() = default;
  Fp(long v) {  // NOLINT(google-explicit-constructor)
    long r = v % static_cast<long>(kModulus);
    v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(kModulus) : r);
  }
  static Fp from_raw(std::uint64_t v) {
    Fp f;
    f.v_ = v % kModulus;
    return f;
  }
  static Fp from_rational(const Rational& r) {
    Fp n = from_mpz(r.numerator());
    Fp d = from_mpz(r.denominator());
    if (d.is_zero()) throw PoleError("rational " + r.str() + " has a denominator divisible by p");
    return n / d;
  }
  static Fp from_mpz(const mpz_class& z) {
    mpz_class m = z % mpz_class(std::to_string(kModulus));
    if (m < 0) m += mpz_class(std::to_string(kModulus));
    return from_raw(std::stoull(m.get_str()));
  }

  std::uint64_t raw() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return from_raw(v_ == 0 ? 0 : kModulus - v_); }
  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= kModulus) s -= kModulus;
    Fp r;
    r.v_ = s;
    return r;
  }
  friend Fp operator-(Fp a, Fp b) { return a + (-b); }
  friend Fp operator*(Fp a, Fp b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a.v_) * b.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kModulus);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kModulus) s -= kModulus;
    Fp r;
    r.v_ = s;
    return r;
  }
  Fp inverse() const {
    if (is_zero()) throw PoleError("inverse of zero in F_p");
    return pow(kModulus - 2);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  Fp pow(std::uint64_t e) const {
    Fp r(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  std::string str() const { return std::to_string(v_); }

 private:
  std::uint64_t v_ = 0;
};

inline std::string to_string(const Fp& x) { return x.str(); }

/// The coefficient fields the pipeline is instantiated over.
template <class K>
concept CoefficientField = requires(K a, K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  K(1);
};

template <CoefficientField K>
K power(const K& base, int k) {
  if (k < 0) return power(K(1) / base, -k);
  K r(1), b = base;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

/// k_q evaluated at a given q (q = 1 gives the integer k).
template <CoefficientField K>
K q_number(int k, const K& q) {
  K acc(0);
  for (int i = 0; i < k; ++i) acc = acc + power(q, k - 1 - 2 * i);
  return acc;
}

/// Embeds a rational number into the field.
template <CoefficientField K>
K from_rational(const Rational& r) {
  if constexpr (std::is_same_v<K, Fp>) {
    return Fp::from_rational(r);
  } else {
    return K(r);
  }
}

/// Evaluates exact scalars in F_p at a fixed q (and optional parameter values).
class FpSpecializer {
 public:
  explicit FpSpecializer(Fp q, std::map<std::string, Fp> params = {}) : q_(q), params_(std::move(params)) {}

  Fp q() const { return q_; }

  Fp operator()(const Scalar& x) const {
    if (x.is_zero()) return Fp(0);
    Fp den = eval(x.denominator());
    if (den.is_zero()) throw PoleError("denominator of " + x.str() + " vanishes at the specialized q");
    Fp acc(0);
    for (const auto& [m, p] : x.numerator()) {
      Fp term = eval(p);
      for (const auto& [name, e] : m) {
        auto it = params_.find(name);
        if (it == params_.end())
          throw DomainError("parameter '" + name + "' has no value in the F_p specialization");
        term *= it->second.pow(static_cast<std::uint64_t>(e));
      }
      acc += term;
    }
    return acc / den;
  }

 private:
  Fp eval(const UPoly& p) const {
    Fp acc(0);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q_ + Fp::from_rational(*it);
    return acc;
  }

  Fp q_;
  std::map<std::string, Fp> params_;
};

/// Draws a seeded random rational q = a/b with 2 <= a, b <= 10^6, a != b, and reduces it
/// into F_p. Values where q^(2k) = 1 in F_p for k <= guard are rejected and redrawn.
struct RandomQ {
  Rational rational;
  Fp value;
};

inline RandomQ draw_random_q(std::uint64_t seed, int guard) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> dist(2, 1000000);
  for (;;) {
    long a = dist(gen), b = dist(gen);
    if (a == b) continue;
    Rational r(a, b);
    Fp v = Fp::from_rational(r);
    bool ok = !v.is_zero();
    Fp q2 = v * v, acc(1);
    for (int k = 1; ok && k <= guard; ++k) {
      acc *= q2;
      if (acc == Fp(1)) ok = false;
    }
    if (ok) return {r, v};
  }
}

}  // namespace qmads
