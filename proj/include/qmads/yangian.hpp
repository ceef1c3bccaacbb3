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

#include <memory>
#include <string>
#include <vector>

#include "charpoly.hpp"
#include "series.hpp"

namespace qmads {

enum class YangianType { rtt, braided };

inline const char* to_string(YangianType t) { return t == YangianType::rtt ? "RTT-type Yangian" : "braided Yangian"; }

/// Yangian-type algebra with generating series L(u) = L[0] + sum_{k>=1} l[k] u^{-k}, L[0] = I by default.
/// Generators l[k]_i^j have weight k; relations are the coefficients of u^a v^b of the defining equation
/// multiplied through by (u - v).
template <CoefficientField K>
struct CurrentPresentation {
  CurrentRMatrix<K> current;
  YangianType type = YangianType::braided;
  int n = 0;
  int levels = 0;
  std::vector<std::vector<Generator>> generators;  // generators[k - 1] for level k
  std::vector<OpMatrix<K>> level_matrix;           // level_matrix[0] = L[0], level_matrix[k] = l[k]
  std::shared_ptr<IdealHandle<K>> ideal;

  const Braiding<K>& braiding() const { return current.base; }
  const Alphabet& alphabet() const { return ideal->alphabet(); }
  int m() const { return current.base.birank_m; }

  /// L(u) truncated after order D (D <= levels).
  TruncatedMatrixSeries<K> generating_series(int D) const {
    if (D > levels)
      throw InsufficientTruncation("truncation " + std::to_string(D) + " exceeds the generated levels " +
                                   std::to_string(levels));
    TruncatedMatrixSeries<K> L(D, OpMatrix<K>(n, 1));
    for (int k = 0; k <= D; ++k) L[k] = level_matrix[static_cast<std::size_t>(k)];
    return L;
  }

  /// u -> u - j (rational) or u -> q^{-2j} u (Hecke): the step used by quantum powers.
  Shift<K> step(long j) const {
    if (current.g_kind == CurrentKind::rational) return Shift<K>::additive(j);
    return Shift<K>::multiplicative(power(current.base.q, static_cast<int>(-2 * j)));
  }
};

namespace detail {

template <CoefficientField K>
OpMatrix<K> level_copy(const CurrentPresentation<K>& p, int k, int position) {
  if (k < 0 || k > p.levels) return OpMatrix<K>(p.n, 2);  // only ever paired with a vanishing partner above the top level
  return embed(p.level_matrix[static_cast<std::size_t>(k)], 2, position);
}

/// Coefficient of u^alpha v^beta in the (u - v)-cleared defining equation, left side minus right side.
template <CoefficientField K>
OpMatrix<K> current_relation_coefficient(const CurrentPresentation<K>& p, int alpha, int beta) {
  const auto& R = p.braiding().R;
  const K c = p.current.g_coeff();
  const int e = p.current.g_u_power();
  auto X = [&](int k) { return level_copy(p, k, 1); };
  auto Y = [&](int k) { return level_copy(p, k, 2); };
  OpMatrix<K> lhs(p.n, 2), rhs(p.n, 2);
  if (p.type == YangianType::braided) {
    // ((u-v)R - c u^e) L1(u) R L1(v) = L1(v) R L1(u) ((u-v)R - c u^e)
    lhs += R * X(1 - alpha) * R * X(-beta);
    lhs -= R * X(-alpha) * R * X(1 - beta);
    lhs -= scale(c, X(e - alpha) * R * X(-beta));
    rhs += X(-beta) * R * X(1 - alpha) * R;
    rhs -= X(1 - beta) * R * X(-alpha) * R;
    rhs -= scale(c, X(-beta) * R * X(e - alpha));
  } else {
    // ((u-v)R - c u^e) T1(u) T2(v) = T1(v) T2(u) ((u-v)R - c u^e)
    lhs += R * X(1 - alpha) * Y(-beta);
    lhs -= R * X(-alpha) * Y(1 - beta);
    lhs -= scale(c, X(e - alpha) * Y(-beta));
    rhs += X(-beta) * Y(1 - alpha) * R;
    rhs -= X(1 - beta) * Y(-alpha) * R;
    rhs -= scale(c, X(-beta) * Y(e - alpha));
  }
  return lhs - rhs;
}

}  // namespace detail

/// Builds generators l[k]_i^j for k <= levels and all relation coefficients of level <= levels.
/// The level of the coefficient of u^alpha v^beta is 1 - alpha - beta.
template <CoefficientField K>
CurrentPresentation<K> current_relations(const CurrentRMatrix<K>& c, YangianType type, int levels,
                                         std::size_t level_cap = 12) {
  if (levels < 1) throw DomainError("at least one level of generators is needed");
  if (static_cast<std::size_t>(levels) > level_cap)
    throw ResourceError("relation level " + std::to_string(levels) + " exceeds the cap " + std::to_string(level_cap));
  CurrentPresentation<K> p;
  p.current = c;
  p.type = type;
  p.n = c.base.n;
  p.levels = levels;
  RelationSet<K> rs;
  rs.grading = Grading::graded_by_level;
  const char* sym = type == YangianType::rtt ? "t" : "l";
  p.level_matrix.push_back(identity_matrix<K>(p.n));
  for (int k = 1; k <= levels; ++k) {
    p.generators.push_back(rs.alphabet.add_matrix(sym, p.n, k));
    p.level_matrix.push_back(detail::generator_matrix<K>(p.n, p.generators.back()));
  }
  for (int s = 1; s <= levels; ++s)
    for (int alpha = -s; alpha <= 1; ++alpha) {
      int beta = 1 - s - alpha;
      if (beta > 1) continue;
      auto rel = detail::current_relation_coefficient(p, alpha, beta);
      rel.for_each([&](Index, Index, const FreeElement<K>& x) { rs.relations.push_back(x); });
    }
  p.ideal = std::make_shared<IdealHandle<K>>(std::move(rs));
  return p;
}

/// L^[k](u) = L(step k-1) ... L(step 1) L(u), with steps u - j (rational) or q^{-2j} u (Hecke).
template <CoefficientField K>
TruncatedMatrixSeries<K> quantum_power_series(const CurrentPresentation<K>& p, int k, int D) {
  if (k < 0) throw DomainError("negative quantum power");
  auto L = p.generating_series(D);
  TruncatedMatrixSeries<K> out(D, OpMatrix<K>(p.n, 1));
  out[0] = identity_matrix<K>(p.n);
  for (int j = 0; j < k; ++j) out = shift_series(L, p.step(j)) * out;
  return out;
}

/// e_k(u) = Tr_R(A^(k) L_1bar(u) L_2bar(step 1) ... L_kbar(step k-1)).
template <CoefficientField K>
ElementSeries<K> elementary_symmetric_series(const CurrentPresentation<K>& p, int k, int D) {
  if (k < 0) throw DomainError("negative index");
  ElementSeries<K> out(D, FreeElement<K>());
  if (k == 0) {
    out[0] = FreeElement<K>(1);
    return out;
  }
  const auto& b = p.braiding();
  auto A = skew_symmetrizer(b, k);
  if (A.is_zero()) return out;
  auto L = p.generating_series(D);
  TruncatedMatrixSeries<K> prod(D, OpMatrix<K>(p.n, k));
  prod[0] = A.map([](const K& x) { return FreeElement<K>(x); });
  for (int j = 1; j <= k; ++j) {
    auto Lj = shift_series(L, p.step(j - 1));
    TruncatedMatrixSeries<K> bar(D, OpMatrix<K>(p.n, k));
    for (int t = 0; t <= D; ++t) bar[t] = overlined(Lj[t], b, j, k);
    prod = prod * bar;
  }
  for (int t = 0; t <= D; ++t) out[t] = full_r_trace(prod[t], b.D);
  return out;
}

/// sum_{k=0}^m s_k L^[m-k](step k) e_k(u) with s_k = (-1)^k (rational) or (-q)^k (Hecke).
template <CoefficientField K>
TruncatedMatrixSeries<K> ch_series(const CurrentPresentation<K>& p, int D) {
  const int m = p.m();
  const K s = p.current.g_kind == CurrentKind::rational ? K(-1) : -p.current.base.q;
  TruncatedMatrixSeries<K> out(D, OpMatrix<K>(p.n, 1));
  for (int k = 0; k <= m; ++k) {
    auto P = shift_series(quantum_power_series(p, m - k, D), p.step(k));
    out += scale_series(power(s, k), P * elementary_symmetric_series(p, k, D));
  }
  return out;
}

/// Checks every entry coefficient of the Yangian CH series at orders 0..check_order.
template <CoefficientField K>
VerificationReport verify_ch_yangian(const CurrentPresentation<K>& p, int check_order, int D) {
  if (check_order > D)
    throw InsufficientTruncation("order " + std::to_string(check_order) + " is outside the exactness window of truncation " +
                                 std::to_string(D));
  VerificationReport r;
  r.braiding = p.braiding().name + ", " + p.current.g_formula();
  r.algebra = to_string(p.type);
  r.identity = "Yangian characteristic identity";
  r.anchor = p.current.g_kind == CurrentKind::rational ? "sum_k (-1)^k L^[m-k](u-k) e_k(u) = 0"
                                                       : "sum_k (-q)^k L^[m-k](q^-2k u) e_k(u) = 0";
  auto S = ch_series(p, D);
  for (int i = 1; i <= p.n; ++i)
    for (int j = 1; j <= p.n; ++j)
      for (int t = 0; t <= check_order; ++t)
        r.items.push_back(check_membership(*p.ideal, S[t].get(static_cast<Index>(i - 1), static_cast<Index>(j - 1)),
                                           entry_id(i, j) + " u^-" + std::to_string(t)));
  return r;
}

}  // namespace qmads
