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

#include <algorithm>
#include <numeric>

#include "qmads/braiding.hpp"
#include "qmads/echelon.hpp"
#include "qmads/skewsym.hpp"

using namespace qmads;

namespace {

// (1/k!) sum_s sgn(s) P_s, built from permutation operators.
TensorOperator<Scalar> classical_antisymmetrizer(int n, int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  TensorOperator<Scalar> acc(n, k);
  long fact = 0;
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) inv += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    auto P = permutation_operator<Scalar>(n, perm);
    acc += inv % 2 ? -P : P;
    ++fact;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return scale(Scalar(Rational(1, fact)), acc);
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(SkewSym, FlipLevelTwo) {
  auto P = flip<Scalar>(2);
  auto A2 = skew_symmetrizer(P, Scalar(1), 2);
  EXPECT_EQ(A2, scale(Scalar(Rational(1, 2)), TensorOperator<Scalar>::identity(2, 2) - P));
}

TEST(SkewSym, HeckeLevelTwo) {
  auto R = standard_hecke_rmatrix(2);
  Scalar q = Scalar::q();
  auto A2 = skew_symmetrizer(R, q, 2);
  auto expect = scale(Scalar(1) / (q + Scalar::q_power(-1)), scale(q, TensorOperator<Scalar>::identity(2, 2)) - R);
  EXPECT_EQ(A2, expect);
  EXPECT_EQ(rank(A2), 1u);
}

TEST(SkewSym, TopLevelVanishesForHeckeTwo) {
  auto R = standard_hecke_rmatrix(2);
  EXPECT_TRUE(skew_symmetrizer(R, Scalar::q(), 3).is_zero());
}

TEST(SkewSym, IdempotentAndStable) {
  for (int n = 2; n <= 3; ++n) {
    auto R = standard_hecke_rmatrix(n);
    Scalar q = Scalar::q();
    auto t = skew_symmetrizer_tower(R, q, n + 1);
    for (int k = 1; k <= n + 1; ++k) {
      const auto& A = t.at(k);
      EXPECT_EQ(A * A, A) << "n=" << n << " k=" << k;
      if (k > 1) {
        auto prev = embed(t.at(k - 1), k, 1);
        EXPECT_EQ(A * prev, A);
        EXPECT_EQ(prev * A, A);
      }
      EXPECT_EQ(t.ranks[static_cast<std::size_t>(k - 1)], static_cast<std::size_t>(binom(n, k)));
      for (int i = 1; i < k; ++i) {
        // R_i A(k) = -q^{-1} A(k): A(k) projects onto the q-antisymmetric part.
        auto Ri = embed_adjacent(R, k, i);
        EXPECT_EQ(Ri * A, scale(-Scalar::q_power(-1), A)) << "n=" << n << " k=" << k << " i=" << i;
      }
    }
    EXPECT_TRUE(t.at(n + 1).is_zero());
  }
}

TEST(SkewSym, InvolutiveMatchesClassicalAntisymmetrizer) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      EXPECT_EQ(skew_symmetrizer(flip<Scalar>(n), Scalar(1), k), classical_antisymmetrizer(n, k))
          << "n=" << n << " k=" << k;
}

TEST(SkewSym, RanksAtSpecializations) {
  // The generic rank survives specialization at several admissible q.
  auto R = standard_hecke_rmatrix(3);
  auto A2 = skew_symmetrizer(R, Scalar::q(), 2);
  for (long v : {2L, 3L, 7L}) {
    auto spec = A2.map([&](const Scalar& x) { return specialize(x, {{"q", Rational(v)}}); });
    EXPECT_EQ(rank(spec), 3u) << v;
    auto fp = A2.map(FpSpecializer(Fp(v)));
    EXPECT_EQ(rank(fp), 3u) << v;
  }
}

TEST(SkewSym, TowerRejectsLevelZero) {
  EXPECT_THROW(skew_symmetrizer(flip<Scalar>(2), Scalar(1), 0), DomainError);
}
