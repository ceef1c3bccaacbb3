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

#include <string>
#include <vector>

#include <gmpxx.h>

#include "algebras.hpp"

namespace qmads {

/// sum_{i=0}^{D} c[i] u^{-i}: formal series in u^{-1} truncated after order D.
/// V is a free-algebra element or a matrix of them.
template <class V>
struct TruncatedSeries {
  std::vector<V> c;

  TruncatedSeries() = default;
  TruncatedSeries(int order, const V& zero) : c(static_cast<std::size_t>(order) + 1, zero) {}

  int order() const { return static_cast<int>(c.size()) - 1; }
  const V& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  V& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

 private:
  void check(const TruncatedSeries& o) const {
    if (o.c.size() != c.size()) throw InsufficientTruncation("series truncated at different orders");
  }
};

template <CoefficientField K>
using TruncatedMatrixSeries = TruncatedSeries<OpMatrix<K>>;
template <CoefficientField K>
using ElementSeries = TruncatedSeries<FreeElement<K>>;

namespace detail {

template <CoefficientField K>
OpMatrix<K> scale_value(const K& s, const OpMatrix<K>& x) { return scale(s, x); }
template <CoefficientField K>
FreeElement<K> scale_value(const K& s, const FreeElement<K>& x) { return s * x; }

template <class T>
TensorOperator<T> zero_like(const TensorOperator<T>& x) { return TensorOperator<T>(x.n(), x.arity()); }
template <CoefficientField K>
FreeElement<K> zero_like(const FreeElement<K>&) { return {}; }

template <CoefficientField K>
K binomial(long n, long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return from_rational<K>(Rational(mpq_class(b)));
}

}  // namespace detail

/// Truncated Cauchy product with a caller-supplied coefficient product.
template <class A, class B, class Mul>
auto series_product(const TruncatedSeries<A>& a, const TruncatedSeries<B>& b, Mul&& mul) {
  using C = std::decay_t<decltype(mul(a[0], b[0]))>;
  if (a.order() != b.order()) throw InsufficientTruncation("series truncated at different orders");
  C first = mul(a[0], b[0]);
  TruncatedSeries<C> out(a.order(), detail::zero_like(first));
  out[0] = std::move(first);
  for (int k = 1; k <= a.order(); ++k)
    for (int i = 0; i <= k; ++i) out[k] += mul(a[i], b[k - i]);
  return out;
}

template <CoefficientField K>
TruncatedMatrixSeries<K> operator*(const TruncatedMatrixSeries<K>& a, const TruncatedMatrixSeries<K>& b) {
  return series_product(a, b, [](const OpMatrix<K>& x, const OpMatrix<K>& y) { return x * y; });
}

/// Matrix series times element series, elements multiplied on the right.
template <CoefficientField K>
TruncatedMatrixSeries<K> operator*(const TruncatedMatrixSeries<K>& a, const ElementSeries<K>& b) {
  return series_product(a, b, [](const OpMatrix<K>& x, const FreeElement<K>& y) { return scale_right(x, y); });
}

template <CoefficientField K, class V>
TruncatedSeries<V> scale_series(const K& s, TruncatedSeries<V> x) {
  for (auto& v : x.c) v = detail::scale_value(s, v);
  return x;
}

/// How a shift acts on the spectral parameter.
///  additive c:        u -> u - c, re-expanded with (u - c)^{-i} = sum_t binom(i-1+t, t) c^t u^{-i-t};
///  multiplicative l:  u -> l u, so the u^{-i} coefficient is multiplied by l^{-i}.
enum class ShiftKind { additive, multiplicative };

template <CoefficientField K>
struct Shift {
  ShiftKind kind = ShiftKind::additive;
  long c = 0;     // additive amount
  K lambda{1};    // multiplicative factor

  static Shift additive(long c) { return {ShiftKind::additive, c, K(1)}; }
  static Shift multiplicative(const K& l) { return {ShiftKind::multiplicative, 0, l}; }
};

template <CoefficientField K, class V>
TruncatedSeries<V> shift_series(const TruncatedSeries<V>& s, const Shift<K>& sh) {
  const int D = s.order();
  if (sh.kind == ShiftKind::multiplicative) {
    TruncatedSeries<V> out = s;
    K inv = K(1) / sh.lambda, f(1);
    for (int i = 1; i <= D; ++i) {
      f = f * inv;
      out[i] = detail::scale_value(f, s[i]);
    }
    return out;
  }
  if (sh.c == 0) return s;
  const K c = from_rational<K>(Rational(sh.c));
  TruncatedSeries<V> out(D, detail::zero_like(s[0]));
  out[0] = s[0];
  for (int i = 1; i <= D; ++i) {
    K cp(1);
    for (int t = 0; i + t <= D; ++t) {
      out[i + t] += detail::scale_value(detail::binomial<K>(i - 1 + t, t) * cp, s[i]);
      cp = cp * c;
    }
  }
  return out;
}

enum class ConjugateKind { additive_exp, multiplicative_q };

/// Moves a series through e^{d/du} (giving f(u+1)) or through q^{2u d/du} (giving f(q^2 u)).
template <CoefficientField K, class V>
TruncatedSeries<V> shift_operator_conjugate(const TruncatedSeries<V>& f, ConjugateKind kind, const K& q) {
  if (kind == ConjugateKind::additive_exp) return shift_series(f, Shift<K>::additive(-1));
  return shift_series(f, Shift<K>::multiplicative(q * q));
}

}  // namespace qmads
