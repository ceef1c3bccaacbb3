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
#include <optional>
#include <string>
#include <vector>

#include "braiding.hpp"
#include "freealg.hpp"
#include "ideal.hpp"
#include "pbw.hpp"
#include "tensor.hpp"

namespace qmads {

/// Operator on V^{(x)k} with free-algebra entries (generating matrices and their copies).
template <CoefficientField K>
using OpMatrix = TensorOperator<FreeElement<K>>;

enum class AlgebraKind { RTT, RE, ModifiedRE, UglN };

inline const char* to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::RTT: return "RTT";
    case AlgebraKind::RE: return "RE";
    case AlgebraKind::ModifiedRE: return "modified RE";
    case AlgebraKind::UglN: return "U(gl(N))";
  }
  return "?";
}

template <CoefficientField K>
OpMatrix<K> identity_matrix(int n, int arity = 1) {
  return TensorOperator<K>::identity(n, arity).map([](const K& x) { return FreeElement<K>(x); });
}

/// The k-th overlined copy on V^{(x)arity} of an N x N matrix X (arity 1).
template <CoefficientField K>
OpMatrix<K> overlined(const OpMatrix<K>& X, const Braiding<K>& b, int k, int arity) {
  if (k < 1 || k > arity) throw PositionError("overlined copy index out of range");
  OpMatrix<K> Y = embed(X, arity, 1);
  if (k == 1) return Y;
  auto Rinv = b.R_inverse();
  for (int j = 2; j <= k; ++j) Y = embed_adjacent(b.R, arity, j - 1) * Y * embed_adjacent(Rinv, arity, j - 1);
  return Y;
}

/// Constant-R quantum matrix algebra: generators, relations and ideal.
template <CoefficientField K>
struct AlgebraPresentation {
  AlgebraKind kind = AlgebraKind::RE;
  /// For U(gl(N)) this is the flip on C^N (classical skew-symmetrizers, unweighted trace).
  Braiding<K> braiding;
  int n = 0;
  std::vector<Generator> generators;        // row-major symbol_i^j
  OpMatrix<K> generator_matrix;             // arity 1
  std::vector<FreeElement<K>> components;   // all n^4 relation components, zeros included
  std::shared_ptr<IdealHandle<K>> ideal;

  const Alphabet& alphabet() const { return ideal->alphabet(); }
  int m() const { return kind == AlgebraKind::UglN ? n : braiding.birank_m; }
  /// Generator symbol_i^j (1-based indices).
  FreeElement<K> gen(int i, int j) const {
    return generator_matrix.get(static_cast<Index>(i - 1), static_cast<Index>(j - 1));
  }

  /// The k-th plain copy X_k = I (x) .. (x) X (x) .. (x) I of the generating matrix on V^{(x)arity}.
  OpMatrix<K> position_copy(int k, int arity) const { return embed(generator_matrix, arity, k); }

  /// Overlined copies X_1bar = X_1, X_kbar = R_{k-1} X_{(k-1)bar} R_{k-1}^{-1}.
  OpMatrix<K> overlined_copy(int k, int arity) const { return overlined(generator_matrix, braiding, k, arity); }

  /// Copy used inside symmetric functions: plain copies for RTT, overlined otherwise.
  OpMatrix<K> copy(int k, int arity) const {
    return kind == AlgebraKind::RTT ? position_copy(k, arity) : overlined_copy(k, arity);
  }

  /// Relation matrix evaluated on the generating matrix (zero entries are identities of the free algebra).
  OpMatrix<K> relation_matrix() const {
    OpMatrix<K> rel(n, 2);
    for (Index c = 0; c < components.size(); ++c)
      rel.set(c / static_cast<Index>(n * n), c % static_cast<Index>(n * n), components[c]);
    return rel;
  }
};

namespace detail {

template <CoefficientField K>
OpMatrix<K> generator_matrix(int n, const std::vector<Generator>& ids) {
  OpMatrix<K> G(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      G.set(static_cast<Index>(i), static_cast<Index>(j),
            FreeElement<K>::generator(ids[static_cast<std::size_t>(i * n + j)]));
  return G;
}

inline const char* generator_symbol(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::RTT: return "t";
    case AlgebraKind::RE: return "l";
    case AlgebraKind::ModifiedRE: return "lh";
    case AlgebraKind::UglN: return "m";
  }
  return "x";
}

template <CoefficientField K>
Braiding<K> flip_braiding(int n) {
  Braiding<K> b;
  b.n = n;
  b.R = flip<K>(n);
  b.kind = SymmetryKind::Involutive;
  b.q = K(1);
  b.psi = b.R;
  b.D = TensorOperator<K>::identity(n, 1);
  b.birank_m = n;
  b.name = "flip " + std::to_string(n);
  return b;
}

}  // namespace detail

/// Builds the n^4 relation components of
///   RTT:         R T1 T2 - T1 T2 R
///   RE:          R L1 R L1 - L1 R L1 R
///   modified RE: R L1 R L1 - L1 R L1 R - (R L1 - L1 R)
///   U(gl(N)):    P M1 P M1 - M1 P M1 P - (P M1 - M1 P)
template <CoefficientField K>
AlgebraPresentation<K> present(AlgebraKind kind, const Braiding<K>& b) {
  AlgebraPresentation<K> a;
  a.kind = kind;
  a.braiding = kind == AlgebraKind::UglN ? detail::flip_braiding<K>(b.n) : b;
  a.n = b.n;
  RelationSet<K> rs;
  a.generators = rs.alphabet.add_matrix(detail::generator_symbol(kind), a.n);
  a.generator_matrix = detail::generator_matrix<K>(a.n, a.generators);
  const auto& R = a.braiding.R;
  auto X1 = embed(a.generator_matrix, 2, 1);
  OpMatrix<K> rel;
  switch (kind) {
    case AlgebraKind::RTT: {
      auto X2 = embed(a.generator_matrix, 2, 2);
      rel = R * X1 * X2 - X1 * X2 * R;
      rs.grading = Grading::homogeneous_quadratic;
      break;
    }
    case AlgebraKind::RE:
      rel = R * X1 * R * X1 - X1 * R * X1 * R;
      rs.grading = Grading::homogeneous_quadratic;
      break;
    case AlgebraKind::ModifiedRE:
    case AlgebraKind::UglN:
      rel = R * X1 * R * X1 - X1 * R * X1 * R - (R * X1 - X1 * R);
      rs.grading = Grading::quadratic_linear;
      break;
  }
  const Index d2 = ipow(a.n, 2);
  for (Index r = 0; r < d2; ++r)
    for (Index c = 0; c < d2; ++c) {
      a.components.push_back(rel.get(r, c));
      if (!rel.get(r, c).is_zero()) rs.relations.push_back(rel.get(r, c));
    }
  a.ideal = std::make_shared<IdealHandle<K>>(std::move(rs));
  return a;
}

/// U(gl(n)) without a braiding argument.
template <CoefficientField K>
AlgebraPresentation<K> present_ugl(int n) {
  return present(AlgebraKind::UglN, detail::flip_braiding<K>(n));
}

/// PBW rewriter matching a U(gl(N)) presentation.
template <CoefficientField K>
PbwRewriter<K> pbw_rewriter(const AlgebraPresentation<K>& a) {
  if (a.kind != AlgebraKind::UglN) throw DomainError("PBW normal forms are defined for U(gl(N)) only");
  return gl_pbw_rewriter<K>(a.n, a.generators);
}

template <CoefficientField K>
FreeElement<K> pbw_normal_form(const AlgebraPresentation<K>& a, const FreeElement<K>& x) {
  return pbw_rewriter(a).normal_form(x);
}

}  // namespace qmads
