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

#include <set>
#include <string>
#include <vector>

#include "algebras.hpp"
#include "skewsym.hpp"
#include "verify.hpp"

namespace qmads {

enum class SymmetricKind { elementary, power_sum };

template <CoefficientField K>
struct SymmetricElement {
  SymmetricKind kind = SymmetricKind::elementary;
  int k = 0;
  FreeElement<K> value;
  AlgebraKind algebra = AlgebraKind::RE;
};

enum class CharPolyVariant { RE_Q, mRE_Qhat, Ugl_Qcal };

/// Coefficients indexed by the power of t.
template <CoefficientField K>
struct CharacteristicPolynomial {
  std::vector<FreeElement<K>> coefficients;
  bool monic = true;
  CharPolyVariant variant = CharPolyVariant::RE_Q;
  K leading_scalar{1};  // leading coefficient before normalization

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

namespace detail {

/// X_1 X_2 ... X_k with the copies appropriate to the algebra (plain for RTT, overlined otherwise).
template <CoefficientField K>
OpMatrix<K> copies_product(const AlgebraPresentation<K>& a, int k) {
  OpMatrix<K> P = a.copy(1, k);
  for (int j = 2; j <= k; ++j) P = P * a.copy(j, k);
  return P;
}

/// R_{k-1} R_{k-2} ... R_1 on V^{(x)k}.
template <CoefficientField K>
TensorOperator<K> descending_braid(const AlgebraPresentation<K>& a, int k) {
  auto B = TensorOperator<K>::identity(a.n, k);
  for (int j = k - 1; j >= 1; --j) B = B * embed_adjacent(a.braiding.R, k, j);
  return B;
}

template <CoefficientField K>
FreeElement<K> scalar_element(const K& c) {
  return c.is_zero() ? FreeElement<K>() : FreeElement<K>(c);
}

}  // namespace detail

/// e_k = Tr_{R(1..k)}(A^(k) X_1bar ... X_kbar); e_0 = 1.
template <CoefficientField K>
SymmetricElement<K> elementary_symmetric(const AlgebraPresentation<K>& a, int k) {
  if (k < 0) throw DomainError("elementary symmetric index must be nonnegative");
  SymmetricElement<K> e{SymmetricKind::elementary, k, FreeElement<K>(1), a.kind};
  if (k == 0) return e;
  auto A = skew_symmetrizer(a.braiding, k);
  if (A.is_zero()) {
    e.value = FreeElement<K>();
    return e;
  }
  e.value = full_r_trace(A * detail::copies_product(a, k), a.braiding.D);
  return e;
}

/// p_k = Tr_{R(1..k)}(R_{k-1} ... R_1 X_1bar ... X_kbar).
template <CoefficientField K>
SymmetricElement<K> power_sum(const AlgebraPresentation<K>& a, int k) {
  if (k < 1) throw DomainError("power sums start at k = 1");
  SymmetricElement<K> p{SymmetricKind::power_sum, k, {}, a.kind};
  p.value = full_r_trace(detail::descending_braid(a, k) * detail::copies_product(a, k), a.braiding.D);
  return p;
}

/// Plain matrix power of the generating matrix.
template <CoefficientField K>
OpMatrix<K> matrix_power(const AlgebraPresentation<K>& a, int k) {
  if (k < 0) throw DomainError("negative matrix power");
  OpMatrix<K> P = identity_matrix<K>(a.n);
  for (int j = 0; j < k; ++j) P = P * a.generator_matrix;
  return P;
}

/// Tr_R X^k, the simplified power sum of reflection-equation algebras.
template <CoefficientField K>
FreeElement<K> power_sum_trace(const AlgebraPresentation<K>& a, int k) {
  return full_r_trace(matrix_power(a, k), a.braiding.D);
}

/// X^[k] = Tr_{R(2..k)}(R_{k-1} ... R_1 X_1bar ... X_kbar); X^[0] = I.
template <CoefficientField K>
OpMatrix<K> quantum_power(const AlgebraPresentation<K>& a, int k) {
  if (k < 0) throw DomainError("negative quantum power");
  if (k <= 1) return matrix_power(a, k);
  std::set<int> traced;
  for (int j = 2; j <= k; ++j) traced.insert(j);
  return partial_r_trace(detail::descending_braid(a, k) * detail::copies_product(a, k), traced, a.braiding.D);
}

/// RE:  Q(t)  = sum_k (-q)^k e_k t^{m-k}.
/// mRE: Qhat(t) = Tr_R(A^(m) prod_{j<m} ((q^{2j} t - q^j j_q) I - Lhat_{(j+1)bar})), normalized to be monic.
/// U(gl(N)): the same product at q = 1 with the classical A^(N) and the ordinary trace.
template <CoefficientField K>
CharacteristicPolynomial<K> characteristic_polynomial(const AlgebraPresentation<K>& a) {
  const int m = a.m();
  const K q = a.braiding.recursion_q();
  CharacteristicPolynomial<K> cp;
  cp.coefficients.assign(static_cast<std::size_t>(m) + 1, FreeElement<K>());
  switch (a.kind) {
    case AlgebraKind::RTT:
      throw DomainError("no characteristic polynomial is defined for RTT algebras");
    case AlgebraKind::RE: {
      cp.variant = CharPolyVariant::RE_Q;
      for (int k = 0; k <= m; ++k)
        cp.coefficients[static_cast<std::size_t>(m - k)] =
            power(-q, k) * elementary_symmetric(a, k).value;
      return cp;
    }
    case AlgebraKind::ModifiedRE:
    case AlgebraKind::UglN: break;
  }
  cp.variant = a.kind == AlgebraKind::UglN ? CharPolyVariant::Ugl_Qcal : CharPolyVariant::mRE_Qhat;
  // poly[s] is the operator coefficient of t^s of the partial product.
  std::vector<OpMatrix<K>> poly{skew_symmetrizer(a.braiding, m).map([](const K& c) {
    return detail::scalar_element(c);
  })};
  auto I = TensorOperator<K>::identity(a.n, m);
  for (int j = 0; j < m; ++j) {
    K alpha = power(q, 2 * j);
    K beta = power(q, j) * q_number(j, q);
    auto X = a.copy(j + 1, m);
    std::vector<OpMatrix<K>> next(poly.size() + 1, OpMatrix<K>(a.n, m));
    for (std::size_t s = 0; s < poly.size(); ++s) {
      next[s + 1] += scale_right(poly[s], alpha);
      next[s] -= scale_right(poly[s], beta);
      next[s] -= poly[s] * X;
    }
    poly = std::move(next);
  }
  for (int s = 0; s <= m; ++s) cp.coefficients[static_cast<std::size_t>(s)] = full_r_trace(poly[static_cast<std::size_t>(s)], a.braiding.D);
  const auto& lead = cp.coefficients[static_cast<std::size_t>(m)];
  if (lead.is_zero()) throw NormalizationError("the leading coefficient of the characteristic polynomial vanishes");
  if (lead.size() != 1 || lead.degree() != 0)
    throw NormalizationError("the leading coefficient is not a scalar: " + lead.str(a.alphabet()));
  cp.leading_scalar = lead.coeff(Word{});
  K inv = K(1) / cp.leading_scalar;
  for (auto& c : cp.coefficients) c = inv * c;
  cp.monic = true;
  return cp;
}

/// P(X) = sum_s X^s c_s with coefficients multiplied on the right of the powers.
template <CoefficientField K>
OpMatrix<K> evaluate_at_generating_matrix(const AlgebraPresentation<K>& a, const CharacteristicPolynomial<K>& cp) {
  OpMatrix<K> out(a.n, 1);
  OpMatrix<K> P = matrix_power(a, 0);
  for (int s = 0; s <= cp.degree(); ++s) {
    if (s > 0) P = P * a.generator_matrix;
    out += scale_right(P, cp.coefficients[static_cast<std::size_t>(s)]);
  }
  return out;
}

inline std::string entry_id(int i, int j) { return "entry (" + std::to_string(i) + "," + std::to_string(j) + ")"; }

inline std::string identity_anchor(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::RE: return "quantum Cayley-Hamilton identity Q(L) = 0";
    case AlgebraKind::ModifiedRE: return "quantum Cayley-Hamilton identity for the modified RE algebra";
    case AlgebraKind::UglN: return "Cayley-Hamilton identity for U(gl(N)) with shifted factors";
    case AlgebraKind::RTT: return "-";
  }
  return "-";
}

/// Substitutes the generating matrix into its monic characteristic polynomial and checks every entry
/// (ideal membership; PBW normal forms for U(gl(N))).
template <CoefficientField K>
VerificationReport verify_ch(const AlgebraPresentation<K>& a) {
  VerificationReport r;
  r.braiding = a.braiding.name;
  r.algebra = to_string(a.kind);
  r.identity = "characteristic identity";
  r.anchor = identity_anchor(a.kind);
  auto cp = characteristic_polynomial(a);
  auto Q = evaluate_at_generating_matrix(a, cp);
  for (int i = 1; i <= a.n; ++i)
    for (int j = 1; j <= a.n; ++j) {
      auto x = Q.get(static_cast<Index>(i - 1), static_cast<Index>(j - 1));
      if (a.kind == AlgebraKind::UglN)
        r.items.push_back(check_pbw(pbw_rewriter(a), x, entry_id(i, j), a.alphabet()));
      else
        r.items.push_back(check_membership(*a.ideal, x, entry_id(i, j)));
    }
  return r;
}

/// [e_k, x_i^j] for every generator, reflection-equation algebras.
template <CoefficientField K>
VerificationReport verify_centrality(const AlgebraPresentation<K>& a, int k) {
  if (a.kind != AlgebraKind::RE) throw DomainError("centrality is checked for RE algebras");
  VerificationReport r;
  r.braiding = a.braiding.name;
  r.algebra = to_string(a.kind);
  r.identity = "centrality of e_" + std::to_string(k);
  r.anchor = "coefficients of Q(t) are central";
  auto e = elementary_symmetric(a, k).value;
  for (int i = 1; i <= a.n; ++i)
    for (int j = 1; j <= a.n; ++j)
      r.items.push_back(check_membership(*a.ideal, commutator(e, a.gen(i, j)),
                                         "[e_" + std::to_string(k) + ", " + a.alphabet().name(a.generators[static_cast<std::size_t>((i - 1) * a.n + j - 1)]) + "]"));
  return r;
}

/// [p_j, p_k] for 1 <= j < k <= kmax.
template <CoefficientField K>
VerificationReport verify_powersum_commutativity(const AlgebraPresentation<K>& a, int kmax) {
  if (a.kind != AlgebraKind::RE && a.kind != AlgebraKind::RTT)
    throw DomainError("power-sum commutativity is checked for RE and RTT algebras");
  VerificationReport r;
  r.braiding = a.braiding.name;
  r.algebra = to_string(a.kind);
  r.identity = "power sums commute";
  r.anchor = "commutative family generated by p_k";
  std::vector<FreeElement<K>> p;
  for (int k = 1; k <= kmax; ++k) p.push_back(power_sum(a, k).value);
  for (int j = 1; j <= kmax; ++j)
    for (int k = j + 1; k <= kmax; ++k)
      r.items.push_back(check_membership(*a.ideal, commutator(p[static_cast<std::size_t>(j - 1)], p[static_cast<std::size_t>(k - 1)]),
                                         "[p_" + std::to_string(j) + ", p_" + std::to_string(k) + "]"));
  return r;
}

/// For RE algebras: p_k = Tr_R L^k identically in the free algebra, and L^[k] = L^k entrywise modulo the
/// relations (zero entries are reported as such). For RTT algebras both differences must be nonzero in
/// the free algebra; those items pass with verdict Distinct.
template <CoefficientField K>
VerificationReport verify_simplifications(const AlgebraPresentation<K>& a, int kmax) {
  VerificationReport r;
  r.braiding = a.braiding.name;
  r.algebra = to_string(a.kind);
  r.anchor = "p_k = Tr_R X^k and X^[k] = X^k";
  const auto& al = a.alphabet();
  const std::string x = detail::generator_symbol(a.kind) == std::string("t") ? "T" : "L";
  if (a.kind == AlgebraKind::RTT) {
    r.identity = "power sums and quantum powers do not reduce to ordinary ones";
    auto distinct = [](ReportItem it) {
      if (it.verdict == Verdict::NonZero) {
        it.verdict = Verdict::Distinct;
        it.detail.clear();
      } else {
        it.verdict = Verdict::NonZero;
        it.detail = "difference vanishes identically";
      }
      return it;
    };
    for (int k = 2; k <= kmax; ++k) {
      auto ks = std::to_string(k);
      r.items.push_back(distinct(check_zero(power_sum(a, k).value - power_sum_trace(a, k), "p_" + ks + " - Tr_R " + x + "^" + ks, al)));
      auto D = quantum_power(a, k) - matrix_power(a, k);
      FreeElement<K> witness;
      D.for_each([&](Index, Index, const FreeElement<K>& v) {
        if (witness.is_zero()) witness = v;
      });
      r.items.push_back(distinct(check_zero(witness, x + "^[" + ks + "] - " + x + "^" + ks, al)));
    }
    return r;
  }
  if (a.kind != AlgebraKind::RE) throw DomainError("simplification identities are stated for RE and RTT algebras");
  r.identity = "power sums and quantum powers reduce to ordinary ones";
  for (int k = 1; k <= kmax; ++k) {
    auto ks = std::to_string(k);
    r.items.push_back(check_zero(power_sum(a, k).value - power_sum_trace(a, k), "p_" + ks + " - Tr_R " + x + "^" + ks, al));
    auto D = quantum_power(a, k) - matrix_power(a, k);
    for (int i = 1; i <= a.n; ++i)
      for (int j = 1; j <= a.n; ++j)
        r.items.push_back(check_membership(*a.ideal, D.get(static_cast<Index>(i - 1), static_cast<Index>(j - 1)),
                                           x + "^[" + ks + "] - " + x + "^" + ks + " " + entry_id(i, j)));
  }
  return r;
}

}  // namespace qmads
