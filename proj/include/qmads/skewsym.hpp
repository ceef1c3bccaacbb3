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

#include <vector>

#include "echelon.hpp"
#include "field.hpp"
#include "tensor.hpp"

namespace qmads {

enum class SymmetryKind { Involutive, Hecke };

inline const char* to_string(SymmetryKind k) { return k == SymmetryKind::Involutive ? "involutive" : "hecke"; }

/// One step of the skew-symmetrizer recursion:
///   A(k) = A(k-1) (q^{k-1} I - (k-1)_q R_{k-1}) A(k-1) / k_q
/// with A(k-1) acting on the first k-1 factors. Involutive symmetries use q = 1.
template <CoefficientField K>
TensorOperator<K> skew_symmetrizer_step(const TensorOperator<K>& prev, const TensorOperator<K>& R, const K& q) {
  const int k = prev.arity() + 1;
  const int n = R.n();
  auto lifted = embed(prev, k, 1);
  auto middle = scale(power(q, k - 1), TensorOperator<K>::identity(n, k)) -
                scale(q_number(k - 1, q), embed_adjacent(R, k, k - 1));
  auto out = lifted * middle * lifted;
  return scale(K(1) / q_number(k, q), out);
}

/// A(k) for the symmetry R; q must be 1 for involutive R.
template <CoefficientField K>
TensorOperator<K> skew_symmetrizer(const TensorOperator<K>& R, const K& q, int k) {
  if (k < 1) throw DomainError("skew-symmetrizer index must be >= 1");
  auto A = TensorOperator<K>::identity(R.n(), 1);
  for (int j = 2; j <= k; ++j) A = skew_symmetrizer_step(A, R, q);
  return A;
}

/// The tower A(1), ..., A(k_max) with exact ranks.
template <CoefficientField K>
struct SkewSymmetrizerTower {
  std::vector<TensorOperator<K>> ops;  // ops[k-1] = A(k)
  std::vector<std::size_t> ranks;

  const TensorOperator<K>& at(int k) const {
    if (k < 1 || k > static_cast<int>(ops.size())) throw DomainError("skew-symmetrizer level not computed");
    return ops[static_cast<std::size_t>(k - 1)];
  }
  int levels() const { return static_cast<int>(ops.size()); }
};

template <CoefficientField K>
SkewSymmetrizerTower<K> skew_symmetrizer_tower(const TensorOperator<K>& R, const K& q, int k_max) {
  SkewSymmetrizerTower<K> t;
  auto A = TensorOperator<K>::identity(R.n(), 1);
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) A = skew_symmetrizer_step(A, R, q);
    t.ranks.push_back(rank(A));
    t.ops.push_back(A);
  }
  return t;
}

}  // namespace qmads
