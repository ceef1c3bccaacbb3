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

#include <random>

#include "qmads/dsreduction.hpp"

using namespace qmads;

namespace {

using FE = FreeElement<Scalar>;

Scalar vp(int i) { return Scalar::param("v" + std::to_string(i)); }

std::vector<Scalar> symbolic_v(int n) { return vector_instances<Scalar>(n, VectorSpec::symbolic_vector()).front().second; }

}  // namespace

TEST(Krylov, ConstantRows) {
  auto a = present(AlgebraKind::RE, builtin_braiding("uq-gl", 2));
  auto C = krylov_matrix(a, symbolic_v(2));
  EXPECT_EQ(C.get(0, 0), FE(vp(1)));
  EXPECT_EQ(C.get(0, 1), FE(vp(2)));
  EXPECT_EQ(C.get(1, 0), vp(1) * a.gen(1, 1) + vp(2) * a.gen(2, 1));
  EXPECT_EQ(C.get(1, 1), vp(1) * a.gen(1, 2) + vp(2) * a.gen(2, 2));
}

TEST(Krylov, SeriesColumns) {
  auto p = current_relations(baxterize(builtin_braiding("flip", 2)), YangianType::braided, 2);
  auto v = symbolic_v(2);
  auto C = krylov_matrix(p, v, 2);
  EXPECT_EQ(C[0].get(0, 0), FE(vp(1)));
  EXPECT_EQ(C[0].get(1, 0), FE(vp(2)));
  EXPECT_TRUE(C[1].get(0, 0).is_zero());
  // Second column is L(u) v.
  auto L = p.generating_series(2);
  for (int t = 0; t <= 2; ++t)
    EXPECT_EQ(C[t].get(0, 1), L[t].get(0, 0) * vp(1) + L[t].get(0, 1) * vp(2));
}

TEST(Krylov, VectorValidation) {
  EXPECT_THROW(vector_instances<Scalar>(2, VectorSpec::explicit_vector({Rational(0), Rational(0)})), ZeroVector);
  EXPECT_THROW(vector_instances<Scalar>(2, VectorSpec::explicit_vector({Rational(1)})), DomainError);
  auto basis = vector_instances<Fp>(3, VectorSpec::symbolic_vector());
  ASSERT_EQ(basis.size(), 3u);
  EXPECT_EQ(basis[1].first, "v=e2 ");
  EXPECT_EQ(basis[1].second, (std::vector<Fp>{Fp(0), Fp(1), Fp(0)}));
}

TEST(Canonical, ConstantRow) {
  auto a = present(AlgebraKind::RE, builtin_braiding("uq-gl", 2));
  auto can = canonical_form(a).matrix(2);
  Scalar q = Scalar::q();
  EXPECT_EQ(can.get(0, 0), FE());
  EXPECT_EQ(can.get(0, 1), FE(1));
  EXPECT_EQ(can.get(1, 0), -(q * q) * elementary_symmetric(a, 2).value);
  EXPECT_EQ(can.get(1, 1), q * elementary_symmetric(a, 1).value);
}

TEST(Canonical, SeriesColumn) {
  const int D = 2;
  auto r = current_relations(baxterize(builtin_braiding("flip", 2)), YangianType::braided, D);
  auto fr = canonical_form(r, D);
  auto plus1 = Shift<Scalar>::additive(-1);  // u -> u + 1
  EXPECT_EQ(fr.a_series[1].c, shift_series(elementary_symmetric_series(r, 1, D), plus1).c);
  EXPECT_EQ(fr.a_series[2].c, scale_series(Scalar(-1), shift_series(elementary_symmetric_series(r, 2, D), plus1)).c);
  auto M = fr.series(2, D);
  EXPECT_EQ(M[0].get(1, 0), FE(1));
  EXPECT_EQ(M[0].get(0, 1), fr.a_series[2][0]);

  auto h = current_relations(baxterize(builtin_braiding("uq-gl", 2)), YangianType::braided, D);
  auto fh = canonical_form(h, D);
  Scalar q = Scalar::q();
  auto q2u = Shift<Scalar>::multiplicative(q * q);
  EXPECT_EQ(fh.a_series[1].c, scale_series(q, shift_series(elementary_symmetric_series(h, 1, D), q2u)).c);
  EXPECT_EQ(fh.a_series[2].c, scale_series(-(q * q), shift_series(elementary_symmetric_series(h, 2, D), q2u)).c);
}

TEST(Similarity, ConstantCases) {
  auto b = builtin_braiding("uq-gl", 2);
  for (auto kind : {AlgebraKind::RE, AlgebraKind::ModifiedRE, AlgebraKind::UglN}) {
    auto rep = verify_similarity_constant(present(kind, b), VectorSpec::symbolic_vector());
    EXPECT_TRUE(rep.passed()) << to_string(kind) << "\n" << rep.to_text();
    EXPECT_EQ(rep.items.size(), 4u);
  }
  auto flip = verify_similarity_constant(present(AlgebraKind::RE, builtin_braiding("flip", 2)),
                                         VectorSpec::explicit_vector({Rational(1), Rational(0)}));
  EXPECT_TRUE(flip.passed());
}

TEST(Similarity, FirstRowsVanishInFreeAlgebra) {
  auto a = present(AlgebraKind::RE, builtin_braiding("uq-gl", 2));
  auto v = symbolic_v(2);
  auto C = krylov_matrix(a, v);
  auto res = C * a.generator_matrix - canonical_form(a).matrix(2) * C;
  EXPECT_TRUE(res.get(0, 0).is_zero());
  EXPECT_TRUE(res.get(0, 1).is_zero());
  EXPECT_FALSE(res.get(1, 0).is_zero());
  // The last row is v Q(L) up to moving the central coefficients across.
  auto Q = evaluate_at_generating_matrix(a, characteristic_polynomial(a));
  for (Index j = 0; j < 2; ++j) {
    FE vq = v[0] * Q.get(0, j) + v[1] * Q.get(1, j);
    EXPECT_TRUE(a.ideal->membership(res.get(1, j) - vq).in_ideal);
  }
}

TEST(Similarity, RandomExplicitVectors) {
  auto a = present(AlgebraKind::RE, builtin_braiding("uq-gl", 2));
  std::mt19937_64 g(314);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int t = 0; t < 3; ++t) {
    std::vector<Rational> v{Rational(d(g)), Rational(d(g), 7)};
    if (v[0].is_zero() && v[1].is_zero()) v[0] = Rational(1);
    EXPECT_TRUE(verify_similarity_constant(a, VectorSpec::explicit_vector(v)).passed());
  }
}

TEST(Similarity, YangianLastColumnIsContractedIdentity) {
  const int D = 3;
  for (const char* name : {"flip", "uq-gl"}) {
    auto p = current_relations(baxterize(builtin_braiding(name, 2)), YangianType::braided, D);
    auto v = symbolic_v(2);
    auto res = similarity_residual_yangian(p, v, D);
    auto S = shift_series(ch_series(p, D), p.step(-(p.m() - 1)));
    for (int t = 0; t <= D; ++t)
      for (Index i = 0; i < 2; ++i) {
        EXPECT_TRUE(res[t].get(i, 0).is_zero()) << name << " t=" << t;
        EXPECT_EQ(res[t].get(i, 1), S[t].get(i, 0) * v[0] + S[t].get(i, 1) * v[1]) << name << " t=" << t;
      }
  }
}

TEST(Similarity, YangianReports) {
  auto r = current_relations(baxterize(builtin_braiding("flip", 2)), YangianType::braided, 3);
  EXPECT_TRUE(verify_similarity_yangian(r, VectorSpec::symbolic_vector(), 3, 3).passed());
  auto h = current_relations(baxterize(builtin_braiding("uq-gl", 2)), YangianType::braided, 2);
  EXPECT_TRUE(verify_similarity_yangian(h, VectorSpec::explicit_vector({Rational(1), Rational(2)}), 2, 2).passed());
}

TEST(Similarity, PrimeFieldUsesBasisVectors) {
  auto b = builtin_braiding("uq-gl", 2);
  Strategy s{StrategyKind::random, 2, 1};
  auto rep = run_strategy(b, s, [](const auto& bb) {
    return verify_similarity_constant(present(AlgebraKind::RE, bb), VectorSpec::symbolic_vector());
  });
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.items.size(), 8u);
  EXPECT_EQ(rep.items.front().id.rfind("v=e1 ", 0), 0u);
}
