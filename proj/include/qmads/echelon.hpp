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

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tensor.hpp"

namespace qmads {

/// Incremental sparse Gauss-Jordan elimination over a field K.
///
/// Vectors are maps Key -> K ordered by Cmp; the pivot of a row is its first key in that
/// order. The stored basis is kept in reduced row-echelon form: every row is monic at its
/// pivot and contains no other pivot key.
template <class K, class Key, class Cmp = std::less<Key>>
class SparseEliminator {
 public:
  using Vec = std::map<Key, K, Cmp>;

  /// Reduces v against the basis; the result contains no pivot keys.
  Vec reduce(Vec v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto piv = rows_.find(it->first);
      if (piv == rows_.end()) {
        ++it;
        continue;
      }
      Key key = it->first;
      K c = it->second;
      axpy(v, -c, piv->second);
      it = v.upper_bound(key);
    }
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Adds v to the spanned space; returns true iff the rank grew.
  bool insert(Vec v) {
    Vec r = reduce(std::move(v));
    if (r.empty()) return false;
    K inv = K(1) / r.begin()->second;
    for (auto& [k, c] : r) c = c * inv;
    Key pivot = r.begin()->first;
    for (auto& [p, row] : rows_) {
      auto hit = row.find(pivot);
      if (hit == row.end()) continue;
      K c = hit->second;
      axpy(row, -c, r);
    }
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::map<Key, Vec, Cmp>& rows() const { return rows_; }
  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }

 private:
  static void axpy(Vec& y, const K& a, const Vec& x) {
    for (const auto& [k, c] : x) {
      K d = a * c;
      auto [it, fresh] = y.try_emplace(k, d);
      if (!fresh) {
        it->second += d;
        if (it->second.is_zero()) y.erase(it);
      }
    }
  }

  std::map<Key, Vec, Cmp> rows_;
};

/// Exact rank of an operator over its coefficient field.
template <class K>
std::size_t rank(const TensorOperator<K>& op) {
  SparseEliminator<K, Index> e;
  for (Index r = 0; r < op.dim(); ++r) {
    if (op.row(r).empty()) continue;
    typename SparseEliminator<K, Index>::Vec v(op.row(r).begin(), op.row(r).end());
    e.insert(std::move(v));
  }
  return e.rank();
}

/// Solves M X = B for square M of full rank; std::nullopt when M is singular.
/// M and B act on the same space; X has B's shape.
template <class K>
std::optional<TensorOperator<K>> solve(const TensorOperator<K>& M, const TensorOperator<K>& B) {
  M.same_shape(B);
  const Index d = M.dim();
  SparseEliminator<K, Index> e;
  for (Index r = 0; r < d; ++r) {
    typename SparseEliminator<K, Index>::Vec v(M.row(r).begin(), M.row(r).end());
    for (const auto& [c, x] : B.row(r)) v.emplace(d + c, x);
    if (v.empty()) return std::nullopt;
    e.insert(std::move(v));
  }
  if (e.rank() != d) return std::nullopt;
  TensorOperator<K> X(M.n(), M.arity());
  for (const auto& [pivot, row] : e.rows()) {
    if (pivot >= d) return std::nullopt;
    for (const auto& [c, x] : row) {
      if (c < d) {
        if (c != pivot) return std::nullopt;
        continue;
      }
      X.set(pivot, c - d, x);
    }
  }
  return X;
}

template <class K>
std::optional<TensorOperator<K>> inverse(const TensorOperator<K>& M) {
  return solve(M, TensorOperator<K>::identity(M.n(), M.arity()));
}

}  // namespace qmads
