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

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qmads {

/// Multi-indices (i_1, ..., i_k), 0-based, are packed base n with i_1 most significant.
using Index = std::uint32_t;

inline Index ipow(int n, int k) {
  Index r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<Index>(n);
  return r;
}

inline std::vector<int> unpack_index(Index idx, int n, int arity) {
  std::vector<int> out(static_cast<std::size_t>(arity));
  for (int p = arity - 1; p >= 0; --p) {
    out[static_cast<std::size_t>(p)] = static_cast<int>(idx % static_cast<Index>(n));
    idx /= static_cast<Index>(n);
  }
  return out;
}

inline Index pack_index(const std::vector<int>& digits, int n) {
  Index r = 0;
  for (int d : digits) r = r * static_cast<Index>(n) + static_cast<Index>(d);
  return r;
}

/// Sparse operator on V^{(x)arity}, dim V = n. Absent entries are zero.
/// T is a coefficient field or a free-algebra element type.
template <class T>
class TensorOperator {
 public:
  using Row = std::map<Index, T>;

  TensorOperator() = default;
  TensorOperator(int n, int arity) : n_(n), arity_(arity), dim_(ipow(n, arity)), rows_(dim_) {
    if (n < 1 || arity < 0) throw ArityError("invalid operator shape");
  }

  static TensorOperator identity(int n, int arity) {
    TensorOperator op(n, arity);
    for (Index i = 0; i < op.dim_; ++i) op.rows_[i].emplace(i, T(1));
    return op;
  }

  int n() const { return n_; }
  int arity() const { return arity_; }
  Index dim() const { return dim_; }
  const Row& row(Index i) const { return rows_[i]; }

  T get(Index r, Index c) const {
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? T() : it->second;
  }
  void set(Index r, Index c, T v) {
    check(r, c);
    if (v.is_zero()) rows_[r].erase(c);
    else rows_[r][c] = std::move(v);
  }
  void add_to(Index r, Index c, const T& v) {
    check(r, c);
    if (v.is_zero()) return;
    auto [it, fresh] = rows_[r].try_emplace(c, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) rows_[r].erase(it);
    }
  }

  bool is_zero() const {
    for (const auto& r : rows_)
      if (!r.empty()) return false;
    return true;
  }
  std::size_t nnz() const {
    std::size_t s = 0;
    for (const auto& r : rows_) s += r.size();
    return s;
  }

  template <class F>
  void for_each(F&& f) const {
    for (Index r = 0; r < dim_; ++r)
      for (const auto& [c, v] : rows_[r]) f(r, c, v);
  }

  /// Entrywise conversion, e.g. specialization of exact scalars.
  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    TensorOperator<U> out(n_, arity_);
    for_each([&](Index r, Index c, const T& v) { out.set(r, c, f(v)); });
    return out;
  }

  TensorOperator operator-() const {
    TensorOperator out = *this;
    for (auto& r : out.rows_)
      for (auto& [c, v] : r) v = -v;
    return out;
  }
  TensorOperator& operator+=(const TensorOperator& o) {
    same_shape(o);
    o.for_each([&](Index r, Index c, const T& v) { add_to(r, c, v); });
    return *this;
  }
  TensorOperator& operator-=(const TensorOperator& o) {
    same_shape(o);
    o.for_each([&](Index r, Index c, const T& v) { add_to(r, c, -v); });
    return *this;
  }
  friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
  friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
  friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
    return a.n_ == b.n_ && a.arity_ == b.arity_ && a.rows_ == b.rows_;
  }

  void same_shape(const TensorOperator& o) const {
    if (o.n_ != n_ || o.arity_ != arity_) throw ArityError("operator shapes differ");
  }

 private:
  void check(Index r, Index c) const {
    if (r >= dim_ || c >= dim_) throw PositionError("operator index out of range");
  }

  int n_ = 1;
  int arity_ = 0;
  Index dim_ = 1;
  std::vector<Row> rows_ = std::vector<Row>(1);
};

template <class A, class B>
using ProductType = std::decay_t<decltype(std::declval<const A&>() * std::declval<const B&>())>;

template <class A, class B>
TensorOperator<ProductType<A, B>> operator*(const TensorOperator<A>& a, const TensorOperator<B>& b) {
  if (a.n() != b.n() || a.arity() != b.arity()) throw ArityError("operator product shape mismatch");
  using C = ProductType<A, B>;
  TensorOperator<C> out(a.n(), a.arity());
  for (Index r = 0; r < a.dim(); ++r) {
    std::map<Index, C> acc;
    for (const auto& [k, av] : a.row(r))
      for (const auto& [c, bv] : b.row(k)) {
        C p = av * bv;
        if (p.is_zero()) continue;
        auto [it, fresh] = acc.try_emplace(c, std::move(p));
        if (!fresh) it->second += p;
      }
    for (auto& [c, v] : acc)
      if (!v.is_zero()) out.set(r, c, std::move(v));
  }
  return out;
}

/// Left scaling of every entry.
template <class S, class T>
auto scale(const S& s, const TensorOperator<T>& op) {
  using C = ProductType<S, T>;
  TensorOperator<C> out(op.n(), op.arity());
  op.for_each([&](Index r, Index c, const T& v) { out.set(r, c, s * v); });
  return out;
}

/// Right scaling of every entry.
template <class T, class S>
auto scale_right(const TensorOperator<T>& op, const S& s) {
  using C = ProductType<T, S>;
  TensorOperator<C> out(op.n(), op.arity());
  op.for_each([&](Index r, Index c, const T& v) { out.set(r, c, v * s); });
  return out;
}

/// Places op (arity r) at tensor factors position .. position + r - 1 (1-based) of
/// V^{(x)total_arity}, identity elsewhere.
template <class T>
TensorOperator<T> embed(const TensorOperator<T>& op, int total_arity, int position) {
  int r = op.arity();
  if (position < 1 || position + r - 1 > total_arity)
    throw ArityError("embedding position " + std::to_string(position) + " out of range for arity " +
                     std::to_string(total_arity));
  int n = op.n();
  Index left = ipow(n, position - 1);
  Index right = ipow(n, total_arity - position - r + 1);
  Index mid = op.dim();
  TensorOperator<T> out(n, total_arity);
  for (Index a = 0; a < left; ++a)
    for (Index b = 0; b < right; ++b)
      op.for_each([&](Index rr, Index cc, const T& v) {
        out.set((a * mid + rr) * right + b, (a * mid + cc) * right + b, v);
      });
  return out;
}

/// op acting on factors (i, i+1) of V^{(x)total_arity}; op must have arity 2.
template <class T>
TensorOperator<T> embed_adjacent(const TensorOperator<T>& op, int total_arity, int i) {
  if (op.arity() != 2) throw ArityError("embed_adjacent needs an arity-2 operator");
  if (i < 1 || i > total_arity - 1) throw ArityError("embed_adjacent position out of range");
  return embed(op, total_arity, i);
}

template <class A, class B>
TensorOperator<ProductType<A, B>> tensor_product(const TensorOperator<A>& a, const TensorOperator<B>& b) {
  if (a.n() != b.n()) throw ArityError("tensor product of different dimensions");
  TensorOperator<ProductType<A, B>> out(a.n(), a.arity() + b.arity());
  Index db = b.dim();
  a.for_each([&](Index ra, Index ca, const A& va) {
    b.for_each([&](Index rb, Index cb, const B& vb) { out.set(ra * db + rb, ca * db + cb, va * vb); });
  });
  return out;
}

/// Traces the given factors (1-based) with weight D: on a traced factor, X |-> sum_ab D[a][b] X[b][a].
/// D has arity 1 and coefficient type K; the result keeps the untraced factors in order.
template <class T, class K>
TensorOperator<ProductType<K, T>> partial_r_trace(const TensorOperator<T>& op, const std::set<int>& positions,
                                                  const TensorOperator<K>& D) {
  using C = ProductType<K, T>;
  int n = op.n(), k = op.arity();
  if (D.arity() != 1 || D.n() != n) throw ArityError("trace weight must be an n x n matrix");
  for (int p : positions)
    if (p < 1 || p > k) throw PositionError("trace position " + std::to_string(p) + " out of range");
  std::vector<int> kept;
  for (int p = 1; p <= k; ++p)
    if (!positions.count(p)) kept.push_back(p);
  TensorOperator<C> out(n, static_cast<int>(kept.size()));
  op.for_each([&](Index r, Index c, const T& v) {
    auto rd = unpack_index(r, n, k);
    auto cd = unpack_index(c, n, k);
    K w(1);
    for (int p : positions) {
      w = w * D.get(static_cast<Index>(cd[p - 1]), static_cast<Index>(rd[p - 1]));
      if (w.is_zero()) return;
    }
    std::vector<int> rk, ck;
    for (int p : kept) {
      rk.push_back(rd[p - 1]);
      ck.push_back(cd[p - 1]);
    }
    out.add_to(pack_index(rk, n), pack_index(ck, n), w * v);
  });
  return out;
}

/// Weighted trace over every factor; an arity-0 result read out as a single value.
template <class T, class K>
ProductType<K, T> full_r_trace(const TensorOperator<T>& op, const TensorOperator<K>& D) {
  std::set<int> all;
  for (int p = 1; p <= op.arity(); ++p) all.insert(p);
  return partial_r_trace(op, all, D).get(0, 0);
}

/// The flip P on V (x) V.
template <class T>
TensorOperator<T> flip(int n) {
  TensorOperator<T> P(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      P.set(static_cast<Index>(i * n + j), static_cast<Index>(j * n + i), T(1));
  return P;
}

/// Permutation operator e_{i_1} (x) ... (x) e_{i_k} |-> e_{i_{s(1)}} (x) ... , i.e. output factor p
/// carries input factor perm[p] (0-based).
template <class T>
TensorOperator<T> permutation_operator(int n, const std::vector<int>& perm) {
  int k = static_cast<int>(perm.size());
  TensorOperator<T> out(n, k);
  for (Index c = 0; c < ipow(n, k); ++c) {
    auto cd = unpack_index(c, n, k);
    std::vector<int> rd(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) rd[static_cast<std::size_t>(p)] = cd[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])];
    out.set(pack_index(rd, n), c, T(1));
  }
  return out;
}

}  // namespace qmads
