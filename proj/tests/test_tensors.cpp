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

#include <gtest/gtest.h>

#include <vector>

#include "qmads/braiding.hpp"
#include "qmads/scalar.hpp"
#include "qmads/tensor.hpp"

using namespace qmads;

namespace {

using Dense = std::vector<std::vector<Scalar>>;

// Kronecker product of two dense matrices, written out independently of embed().
Dense kron(const Dense& a, const Dense& b) {
  std::size_t na = a.size(), nb = b.size();
  Dense out(na * nb, std::vector<Scalar>(na * nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return out;
}

Dense mul(const Dense& a, const Dense& b) {
  std::size_t n = a.size();
  Dense out(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!a[i][k].is_zero())
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Dense dense(const TensorOperator<Scalar>& op) {
  Dense out(op.dim(), std::vector<Scalar>(op.dim()));
  op.for_each([&](Index r, Index c, const Scalar& v) { out[r][c] = v; });
  return out;
}

Dense eye(std::size_t n) {
  Dense out(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = Scalar(1);
  return out;
}

// The standard 4x4 Hecke R-matrix on C^2, typed in by hand in the basis 11, 12, 21, 22.
Dense hand_R() {
  Scalar q = Scalar::q(), z(0), one(1), lam = q - Scalar::q_power(-1);
  return {{q, z, z, z}, {z, lam, one, z}, {z, one, z, z}, {z, z, z, q}};
}

}  // namespace

TEST(Tensors, IndexPackingPutsFirstFactorFirst) {
  EXPECT_EQ(pack_index({1, 0}, 2), 2u);
  EXPECT_EQ(pack_index({0, 2, 1}, 3), 7u);
  EXPECT_EQ(unpack_index(7, 3, 3), (std::vector<int>{0, 2, 1}));
}

TEST(Tensors, EmbedAdjacentAtFullArityIsIdentityMap) {
  auto P = flip<Scalar>(2);
  EXPECT_EQ(embed_adjacent(P, 2, 1), P);
}

TEST(Tensors, FlipOnSecondPairSwapsLastFactors) {
  auto P23 = embed_adjacent(flip<Scalar>(3), 3, 2);
  // e1 (x) e2 (x) e3 -> e1 (x) e3 (x) e2
  Index from = pack_index({0, 1, 2}, 3), to = pack_index({0, 2, 1}, 3);
  EXPECT_EQ(P23.get(to, from), Scalar(1));
  EXPECT_EQ(P23.row(to).size(), 1u);
}

TEST(Tensors, HandTypedRMatrixMatchesBuiltin) {
  EXPECT_EQ(dense(standard_hecke_rmatrix(2)), hand_R());
}

TEST(Tensors, BraidRelationAgainstDenseKronecker) {
  Dense R = hand_R(), I2 = eye(2);
  Dense R12 = kron(R, I2), R23 = kron(I2, R);
  Dense lhs = mul(mul(R12, R23), R12), rhs = mul(mul(R23, R12), R23);
  EXPECT_EQ(lhs, rhs);

  auto Rs = standard_hecke_rmatrix(2);
  EXPECT_EQ(dense(embed_adjacent(Rs, 3, 1)), R12);
  EXPECT_EQ(dense(embed_adjacent(Rs, 3, 2)), R23);
  EXPECT_TRUE(qybe_residual(Rs).is_zero());
}

TEST(Tensors, DisjointEmbeddingsCommute) {
  TensorOperator<Scalar> X(2, 1), Y(2, 1);
  X.set(0, 1, Scalar::q());
  X.set(1, 1, Scalar(3));
  Y.set(1, 0, Scalar(2));
  Y.set(0, 0, Scalar::q_power(-2));
  auto X1 = embed(X, 3, 1), Y3 = embed(Y, 3, 3);
  EXPECT_EQ(X1 * Y3, Y3 * X1);
  EXPECT_EQ(X1 * Y3, tensor_product(tensor_product(X, TensorOperator<Scalar>::identity(2, 1)), Y));
}

TEST(Tensors, EmbedRejectsBadPositions) {
  auto P = flip<Scalar>(2);
  EXPECT_THROW(embed_adjacent(P, 3, 3), ArityError);
  EXPECT_THROW(embed(P, 2, 2), ArityError);
  EXPECT_THROW(partial_r_trace(P, {3}, TensorOperator<Scalar>::identity(2, 1)), PositionError);
}

TEST(Tensors, PlainTraces) {
  auto I = TensorOperator<Scalar>::identity(2, 1);
  EXPECT_EQ(full_r_trace(I, I), Scalar(2));
  // Tr_(2) P = I, and the full trace of P is n.
  auto P = flip<Scalar>(3);
  auto I3 = TensorOperator<Scalar>::identity(3, 1);
  EXPECT_EQ(partial_r_trace(P, {2}, I3), I3);
  EXPECT_EQ(full_r_trace(P, I3), Scalar(3));
}

TEST(Tensors, RTraceOfIdentityWithHeckeWeight) {
  auto b = builtin_braiding("uq-gl", 2);
  auto I = TensorOperator<Scalar>::identity(2, 1);
  EXPECT_EQ(full_r_trace(I, b.D), Scalar::q_power(-3) + Scalar::q_power(-1));
}

TEST(Tensors, ClassicalAntisymmetrizerHasTraceOne) {
  auto I = TensorOperator<Scalar>::identity(2, 2);
  auto A2 = scale(Scalar(Rational(1, 2)), I - flip<Scalar>(2));
  EXPECT_EQ(full_r_trace(A2, TensorOperator<Scalar>::identity(2, 1)), Scalar(1));
}

TEST(Tensors, TranspositionIsTheFlip) {
  EXPECT_EQ(permutation_operator<Scalar>(3, {1, 0}), flip<Scalar>(3));
  auto cyc = permutation_operator<Scalar>(2, {1, 2, 0});
  EXPECT_EQ(cyc * cyc * cyc, (TensorOperator<Scalar>::identity(2, 3)));
}
