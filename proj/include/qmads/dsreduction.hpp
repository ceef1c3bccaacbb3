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

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "charpoly.hpp"
#include "yangian.hpp"

namespace qmads {

/// The vector v of the Krylov-type matrices: symbolic (central parameters v1..vN) or explicit.
struct VectorSpec {
  bool symbolic = true;
  std::vector<Rational> values;

  static VectorSpec symbolic_vector() { return {}; }
  static VectorSpec explicit_vector(std::vector<Rational> v) { return {false, std::move(v)}; }
  std::string str() const {
    if (symbolic) return "symbolic";
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + values[i].str();
    return s + ")";
  }
};

/// Concrete instances of v over K. Over Q(q) a symbolic v is one vector of central parameters. Over
/// other fields the identities, being linear in v, are checked on each basis vector instead.
template <CoefficientField K>
std::vector<std::pair<std::string, std::vector<K>>> vector_instances(int n, const VectorSpec& spec) {
  std::vector<std::pair<std::string, std::vector<K>>> out;
  if (!spec.symbolic) {
    if (static_cast<int>(spec.values.size()) != n)
      throw DomainError("v needs " + std::to_string(n) + " entries, got " + std::to_string(spec.values.size()));
    bool zero = true;
    std::vector<K> v;
    for (const auto& x : spec.values) {
      zero = zero && x.is_zero();
      v.push_back(from_rational<K>(x));
    }
    if (zero) throw ZeroVector("v must be nonzero");
    out.emplace_back("", std::move(v));
    return out;
  }
  if constexpr (std::is_same_v<K, Scalar>) {
    std::vector<K> v;
    for (int i = 1; i <= n; ++i) v.push_back(Scalar::param("v" + std::to_string(i)));
    out.emplace_back("", std::move(v));
  } else {
    for (int i = 0; i < n; ++i) {
      std::vector<K> v(static_cast<std::size_t>(n), K(0));
      v[static_cast<std::size_t>(i)] = K(1);
      out.emplace_back("v=e" + std::to_string(i + 1) + " ", std::move(v));
    }
  }
  return out;
}

enum class CanonicalVariant { constant_row, series_column };

/// Companion matrices. constant_row: ones on the superdiagonal, last row (a_m, ..., a_1).
/// series_column: ones on the subdiagonal, last column (a_m(u), ..., a_1(u)) from top to bottom.
/// Matrices are N x N; when m < N the extra rows and columns are zero.
template <CoefficientField K>
struct CanonicalForm {
  CanonicalVariant variant = CanonicalVariant::constant_row;
  int m = 0;
  std::vector<FreeElement<K>> a;   // a[k] = a_k, k = 1..m (a[0] unused), constant case
  std::vector<ElementSeries<K>> a_series;  // same indexing, series case

  OpMatrix<K> matrix(int n) const {
    OpMatrix<K> M(n, 1);
    for (int i = 0; i + 1 < m; ++i) M.set(static_cast<Index>(i), static_cast<Index>(i + 1), FreeElement<K>(1));
    for (int j = 0; j < m; ++j) M.set(static_cast<Index>(m - 1), static_cast<Index>(j), a[static_cast<std::size_t>(m - j)]);
    return M;
  }
  TruncatedMatrixSeries<K> series(int n, int D) const {
    TruncatedMatrixSeries<K> M(D, OpMatrix<K>(n, 1));
    for (int i = 0; i + 1 < m; ++i) M[0].set(static_cast<Index>(i + 1), static_cast<Index>(i), FreeElement<K>(1));
    for (int i = 0; i < m; ++i)
      for (int t = 0; t <= D; ++t)
        M[t].add_to(static_cast<Index>(i), static_cast<Index>(m - 1), a_series[static_cast<std::size_t>(m - i)][t]);
    return M;
  }
};

/// a_k = -(-q)^k e_k for RE algebras, a_k = -b_k for the monic polynomial t^m + b_1 t^{m-1} + ... otherwise.
template <CoefficientField K>
CanonicalForm<K> canonical_form(const AlgebraPresentation<K>& a) {
  auto cp = characteristic_polynomial(a);
  CanonicalForm<K> f;
  f.variant = CanonicalVariant::constant_row;
  f.m = cp.degree();
  f.a.assign(static_cast<std::size_t>(f.m) + 1, FreeElement<K>());
  for (int k = 1; k <= f.m; ++k) f.a[static_cast<std::size_t>(k)] = -cp.coefficients[static_cast<std::size_t>(f.m - k)];
  return f;
}

/// a_k(u) = (-1)^{k+1} e_k(u + m - 1) (rational) or -(-q)^k e_k(q^{2(m-1)} u) (Hecke).
template <CoefficientField K>
CanonicalForm<K> canonical_form(const CurrentPresentation<K>& p, int D) {
  CanonicalForm<K> f;
  f.variant = CanonicalVariant::series_column;
  f.m = p.m();
  f.a_series.assign(static_cast<std::size_t>(f.m) + 1, ElementSeries<K>(D, FreeElement<K>()));
  const K s = p.current.g_kind == CurrentKind::rational ? K(-1) : -p.current.base.q;
  for (int k = 1; k <= f.m; ++k)
    f.a_series[static_cast<std::size_t>(k)] =
        scale_series(-power(s, k), shift_series(elementary_symmetric_series(p, k, D), p.step(-(f.m - 1))));
  return f;
}

/// Rows v, vX, ..., vX^{m-1} (v a row vector), padded with zero rows up to N x N.
template <CoefficientField K>
OpMatrix<K> krylov_matrix(const AlgebraPresentation<K>& a, const std::vector<K>& v) {
  const int n = a.n, m = a.m();
  OpMatrix<K> C(n, 1);
  OpMatrix<K> P = identity_matrix<K>(n);
  for (int r = 0; r < m; ++r) {
    if (r > 0) P = P * a.generator_matrix;
    for (int j = 0; j < n; ++j) {
      FreeElement<K> x;
      for (int i = 0; i < n; ++i) x += v[static_cast<std::size_t>(i)] * P.get(static_cast<Index>(i), static_cast<Index>(j));
      C.set(static_cast<Index>(r), static_cast<Index>(j), x);
    }
  }
  return C;
}

/// Columns v, L(u)v, L^[2](step -1)v, ..., L^[m-1](step -(m-2))v, padded with zero columns.
template <CoefficientField K>
TruncatedMatrixSeries<K> krylov_matrix(const CurrentPresentation<K>& p, const std::vector<K>& v, int D) {
  const int n = p.n, m = p.m();
  TruncatedMatrixSeries<K> C(D, OpMatrix<K>(n, 1));
  for (int j = 0; j < m; ++j) {
    auto P = shift_series(quantum_power_series(p, j, D), p.step(-(j - 1)));
    for (int t = 0; t <= D; ++t)
      for (int i = 0; i < n; ++i) {
        FreeElement<K> x;
        for (int l = 0; l < n; ++l) x += P[t].get(static_cast<Index>(i), static_cast<Index>(l)) * v[static_cast<std::size_t>(l)];
        C[t].set(static_cast<Index>(i), static_cast<Index>(j), x);
      }
  }
  return C;
}

/// C X - X_can C: rows 1..m-1 must vanish identically, row m must lie in the ideal (PBW normal form 0 for
/// U(gl(N))).
template <CoefficientField K>
VerificationReport verify_similarity_constant(const AlgebraPresentation<K>& a, const VectorSpec& vs) {
  VerificationReport r;
  r.braiding = a.braiding.name;
  r.algebra = to_string(a.kind);
  r.identity = "companion-form similarity C X = X_can C";
  r.anchor = "Krylov rows v X^k intertwine X with its second canonical form";
  auto can = canonical_form(a).matrix(a.n);
  const int m = a.m();
  for (const auto& [label, v] : vector_instances<K>(a.n, vs)) {
    auto C = krylov_matrix(a, v);
    auto res = C * a.generator_matrix - can * C;
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < a.n; ++j) {
        auto x = res.get(static_cast<Index>(i), static_cast<Index>(j));
        std::string id = label + entry_id(i + 1, j + 1);
        if (i + 1 < m)
          r.items.push_back(check_zero(x, id, a.alphabet()));
        else if (a.kind == AlgebraKind::UglN)
          r.items.push_back(check_pbw(pbw_rewriter(a), x, id, a.alphabet()));
        else
          r.items.push_back(check_membership(*a.ideal, x, id));
      }
  }
  return r;
}

/// L(u) C(u+1) - C(u) L_can(u) (rational) or L(u) C(q^2 u) - C(u) L_can(u) (Hecke). Columns 1..m-1 must
/// vanish identically at every order <= D; last-column coefficients up to check_order must lie in the ideal.
template <CoefficientField K>
TruncatedMatrixSeries<K> similarity_residual_yangian(const CurrentPresentation<K>& p, const std::vector<K>& v, int D) {
  auto C = krylov_matrix(p, v, D);
  auto can = canonical_form(p, D).series(p.n, D);
  return p.generating_series(D) * shift_series(C, p.step(-1)) - C * can;
}

template <CoefficientField K>
VerificationReport verify_similarity_yangian(const CurrentPresentation<K>& p, const VectorSpec& vs, int check_order,
                                             int D) {
  if (check_order > D)
    throw InsufficientTruncation("order " + std::to_string(check_order) + " is outside the exactness window of truncation " +
                                 std::to_string(D));
  VerificationReport r;
  r.braiding = p.braiding().name + ", " + p.current.g_formula();
  r.algebra = to_string(p.type);
  r.identity = "Yangian companion-form similarity";
  r.anchor = p.current.g_kind == CurrentKind::rational ? "L(u) C(u+1) = C(u) L_can(u)" : "L(u) C(q^2 u) = C(u) L_can(u)";
  const int m = p.m();
  for (const auto& [label, v] : vector_instances<K>(p.n, vs)) {
    auto res = similarity_residual_yangian(p, v, D);
    for (int j = 0; j < p.n; ++j)
      for (int i = 0; i < p.n; ++i) {
        std::string id = label + entry_id(i + 1, j + 1);
        if (j + 1 < m) {
          // Exact series identity at every retained order.
          FreeElement<K> witness;
          int at = -1;
          for (int t = 0; t <= D && at < 0; ++t) {
            auto x = res[t].get(static_cast<Index>(i), static_cast<Index>(j));
            if (!x.is_zero()) {
              witness = x;
              at = t;
            }
          }
          auto it = check_zero(witness, id + " all orders", p.alphabet());
          if (at >= 0) it.detail = "u^-" + std::to_string(at) + ": " + it.detail;
          r.items.push_back(it);
        } else {
          for (int t = 0; t <= check_order; ++t)
            r.items.push_back(check_membership(*p.ideal, res[t].get(static_cast<Index>(i), static_cast<Index>(j)),
                                               id + " u^-" + std::to_string(t)));
        }
      }
  }
  return r;
}

}  // namespace qmads
