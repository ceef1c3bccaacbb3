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
#include <sstream>
#include <string>
#include <type_traits>

#include "echelon.hpp"
#include "field.hpp"
#include "scalar.hpp"
#include "skewsym.hpp"
#include "tensor.hpp"

namespace qmads {

/// A validated constant R-matrix together with the data derived from it.
template <CoefficientField K>
struct Braiding {
  int n = 0;
  TensorOperator<K> R;
  SymmetryKind kind = SymmetryKind::Involutive;
  K q{1};                     // deformation parameter; 1 for involutive symmetries
  TensorOperator<K> psi;      // skew-inverse
  TensorOperator<K> D;        // R-trace weight, D = Tr_(2) psi
  int birank_m = 0;
  std::string name;           // descriptor used in reports

  /// R^{-1}: R for involutive symmetries, R - (q - q^{-1}) I for Hecke symmetries.
  TensorOperator<K> R_inverse() const {
    if (kind == SymmetryKind::Involutive) return R;
    return R - scale(q - K(1) / q, TensorOperator<K>::identity(n, 2));
  }
  /// Scalar in front of the skew-symmetrizer recursion (1 for involutive symmetries).
  K recursion_q() const { return kind == SymmetryKind::Involutive ? K(1) : q; }
};

namespace detail {

template <CoefficientField K>
std::string residual_witness(const TensorOperator<K>& res, std::size_t max_entries = 4) {
  std::ostringstream os;
  std::size_t shown = 0;
  res.for_each([&](Index r, Index c, const K& v) {
    if (shown++ >= max_entries) return;
    auto rd = unpack_index(r, res.n(), res.arity());
    auto cd = unpack_index(c, res.n(), res.arity());
    os << " (";
    for (int d : rd) os << d + 1;
    os << ",";
    for (int d : cd) os << d + 1;
    os << ")=" << to_string(v);
  });
  if (res.nnz() > max_entries) os << " ... (" << res.nnz() << " nonzero entries)";
  return os.str();
}

}  // namespace detail

/// R12 R23 R12 - R23 R12 R23 on V^{(x)3}.
template <CoefficientField K>
TensorOperator<K> qybe_residual(const TensorOperator<K>& R) {
  auto R1 = embed_adjacent(R, 3, 1);
  auto R2 = embed_adjacent(R, 3, 2);
  return R1 * R2 * R1 - R2 * R1 * R2;
}

/// (q I - R)(q^{-1} I + R) on V^{(x)2}.
template <CoefficientField K>
TensorOperator<K> hecke_residual(const TensorOperator<K>& R, const K& q) {
  auto I = TensorOperator<K>::identity(R.n(), 2);
  return (scale(q, I) - R) * (scale(K(1) / q, I) + R);
}

/// Solves Tr_(2)(R12 psi23) = P13 for psi.
///
/// Written out, sum_{a,b} R[(i1 b),(j1 a)] psi[(a i3),(b j3)] = delta(i1,j3) delta(i3,j1), which for
/// each fixed (i3, j3) is an n^2 x n^2 system with the same matrix M[(i1 j1),(a b)] = R[(i1 b),(j1 a)].
template <CoefficientField K>
TensorOperator<K> skew_inverse(const TensorOperator<K>& R) {
  if (R.arity() != 2) throw ArityError("skew_inverse needs an arity-2 operator");
  const int n = R.n();
  TensorOperator<K> M(n, 2), B(n, 2);
  R.for_each([&](Index r, Index c, const K& v) {
    auto rd = unpack_index(r, n, 2);  // (i1, b)
    auto cd = unpack_index(c, n, 2);  // (j1, a)
    M.set(pack_index({rd[0], cd[0]}, n), pack_index({cd[1], rd[1]}, n), v);
  });
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      B.set(pack_index({i1, j1}, n), pack_index({j1, i1}, n), K(1));  // column (i3, j3) = (j1, i1)
  auto X = solve(M, B);
  if (!X) throw NotSkewInvertible("the skew-inverse linear system is singular");
  TensorOperator<K> psi(n, 2);
  X->for_each([&](Index r, Index c, const K& v) {
    auto ab = unpack_index(r, n, 2);
    auto ij = unpack_index(c, n, 2);  // (i3, j3)
    psi.set(pack_index({ab[0], ij[0]}, n), pack_index({ab[1], ij[1]}, n), v);
  });
  return psi;
}

/// D = Tr_(2) psi, acting on the remaining factor.
template <CoefficientField K>
TensorOperator<K> trace_matrix(const TensorOperator<K>& psi) {
  return partial_r_trace(psi, {2}, TensorOperator<K>::identity(psi.n(), 1));
}

/// Bi-rank (m|0) probe: the first m with A(m+1) = 0, requiring rank A(m) = 1 and m <= n.
template <CoefficientField K>
int birank_probe(const TensorOperator<K>& R, const K& recursion_q) {
  const int n = R.n();
  auto A = TensorOperator<K>::identity(n, 1);
  for (int k = 1; k <= n; ++k) {
    auto next = skew_symmetrizer_step(A, R, recursion_q);
    if (next.is_zero()) {
      std::size_t rk = rank(A);
      if (rk != 1)
        throw BirankError("A(" + std::to_string(k) + ") is the last nonzero skew-symmetrizer but has rank " +
                          std::to_string(rk));
      return k;
    }
    A = std::move(next);
  }
  throw BirankError("skew-symmetrizers do not vanish up to level " + std::to_string(n + 1));
}

/// Checks the braid relation, classifies the symmetry, and derives psi, D and the bi-rank.
/// claimed_q selects the Hecke parameter; without it the symbolic q is tried for
/// non-involutive input (exact scalars only; other fields must pass it explicitly).
template <CoefficientField K>
Braiding<K> validate(const TensorOperator<K>& R, std::optional<std::type_identity_t<K>> claimed_q = std::nullopt,
                     std::string name = "") {
  if (R.arity() != 2) throw ArityError("an R-matrix has arity 2");
  auto res = qybe_residual(R);
  if (!res.is_zero()) throw NotYangBaxter("nonzero residual" + detail::residual_witness(res));
  Braiding<K> b;
  b.n = R.n();
  b.R = R;
  b.name = std::move(name);
  auto I = TensorOperator<K>::identity(R.n(), 2);
  auto inv_res = R * R - I;
  if (inv_res.is_zero()) {
    b.kind = SymmetryKind::Involutive;
    b.q = K(1);
  } else {
    K q;
    if (claimed_q) {
      q = *claimed_q;
    } else if constexpr (std::is_same_v<K, Scalar>) {
      q = Scalar::q();
    } else {
      throw NotSymmetry("R is not involutive and no Hecke parameter was given");
    }
    if (q.is_zero() || (q * q - K(1)).is_zero()) throw GenericityError("Hecke parameter must satisfy q^2 != 1");
    auto hres = hecke_residual(R, q);
    if (!hres.is_zero())
      throw NotSymmetry("neither R^2 = I nor the Hecke condition holds;" + detail::residual_witness(hres));
    b.kind = SymmetryKind::Hecke;
    b.q = q;
  }
  b.psi = skew_inverse(R);
  b.D = trace_matrix(b.psi);
  b.birank_m = birank_probe(R, b.recursion_q());
  return b;
}

/// Maps a braiding to another coefficient field (e.g. an F_p specialization).
template <CoefficientField K, class F>
Braiding<K> specialize_braiding(const Braiding<Scalar>& b, F&& f) {
  Braiding<K> out;
  out.n = b.n;
  out.R = b.R.map(f);
  out.kind = b.kind;
  out.q = f(b.q);
  out.psi = b.psi.map(f);
  out.D = b.D.map(f);
  out.birank_m = b.birank_m;
  out.name = b.name;
  return out;
}

template <CoefficientField K>
TensorOperator<K> skew_symmetrizer(const Braiding<K>& b, int k) {
  return skew_symmetrizer(b.R, b.recursion_q(), k);
}

/// The standard Drinfeld-Jimbo type Hecke symmetry on C^n: R(e_i (x) e_i) = q e_i (x) e_i and, for i < j,
/// R(e_i (x) e_j) = e_j (x) e_i + (q - q^{-1}) e_i (x) e_j, R(e_j (x) e_i) = e_i (x) e_j.
inline TensorOperator<Scalar> standard_hecke_rmatrix(int n) {
  TensorOperator<Scalar> R(n, 2);
  Scalar q = Scalar::q();
  Scalar lambda = q - Scalar::q_power(-1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Index ij = pack_index({i, j}, n), ji = pack_index({j, i}, n);
      if (i == j) {
        R.set(ij, ij, q);
      } else {
        R.set(ij, ji, Scalar(1));
        if (i < j) R.set(ij, ij, lambda);
      }
    }
  return R;
}

inline Braiding<Scalar> builtin_braiding(const std::string& name, int n) {
  if (n < 1) throw DomainError("dimension must be positive");
  if (name == "flip") return validate(flip<Scalar>(n), std::nullopt, "flip " + std::to_string(n));
  if (name == "uq-gl" || name == "hecke") {
    if (n < 2 || n > 4) throw DomainError("the built-in standard Hecke symmetry is provided for n = 2, 3, 4");
    return validate(standard_hecke_rmatrix(n), std::nullopt, "uq-gl " + std::to_string(n));
  }
  throw DomainError("unknown built-in braiding '" + name + "' (expected flip or uq-gl)");
}

/// Baxterized current R-matrix R(u,v) = R - g(u,v) I with g = 1/(u-v) (involutive base) or
/// g = (q - q^{-1}) u/(u-v) (Hecke base).
enum class CurrentKind { rational, hecke };

inline const char* to_string(CurrentKind k) { return k == CurrentKind::rational ? "rational" : "hecke"; }

template <CoefficientField K>
struct CurrentRMatrix {
  Braiding<K> base;
  CurrentKind g_kind = CurrentKind::rational;

  /// g(u,v) = g_coeff * u^{g_u_power} / (u - v).
  K g_coeff() const { return g_kind == CurrentKind::rational ? K(1) : base.q - K(1) / base.q; }
  int g_u_power() const { return g_kind == CurrentKind::rational ? 0 : 1; }

  std::string g_formula() const {
    return g_kind == CurrentKind::rational ? "g(u,v) = 1/(u-v)" : "g(u,v) = (q-q^-1)u/(u-v)";
  }

  /// (u - v) R(u, v) at given values of u and v.
  TensorOperator<K> cleared(const K& u, const K& v) const {
    auto I = TensorOperator<K>::identity(base.n, 2);
    K c = g_coeff() * (g_u_power() ? u : K(1));
    return scale(u - v, base.R) - scale(c, I);
  }
};

template <CoefficientField K>
CurrentRMatrix<K> baxterize(const Braiding<K>& b) {
  return {b, b.kind == SymmetryKind::Involutive ? CurrentKind::rational : CurrentKind::hecke};
}

}  // namespace qmads
