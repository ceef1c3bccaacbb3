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

#include "qmads/charpoly.hpp"

using namespace qmads;

namespace {

using FE = FreeElement<Scalar>;

Scalar qp(int k) { return Scalar::q_power(k); }

AlgebraPresentation<Scalar> re(const std::string& name, int n) { return present(AlgebraKind::RE, builtin_braiding(name, n)); }

bool all_in_ideal(AlgebraPresentation<Scalar>& a, const OpMatrix<Scalar>& M) {
  bool ok = true;
  M.for_each([&](Index, Index, const FE& x) { ok = ok && a.ideal->membership(x).in_ideal; });
  return ok;
}

}  // namespace

TEST(Symmetric, FirstElementaryIsWeightedTrace) {
  auto a = re("uq-gl", 2);
  EXPECT_EQ(elementary_symmetric(a, 0).value, FE(1));
  EXPECT_EQ(elementary_symmetric(a, 1).value, qp(-3) * a.gen(1, 1) + qp(-1) * a.gen(2, 2));
  EXPECT_TRUE(elementary_symmetric(a, 3).value.is_zero());
  EXPECT_EQ(elementary_symmetric(a, 2).value.degree(), 2);
}

TEST(Symmetric, FlipSecondElementaryByHand) {
  // A^(2) = (I - P)/2 and D = I give (1/2) sum_ab (l_a^a l_b^b - l_b^a l_a^b).
  auto a = re("flip", 2);
  FE expect;
  for (int x = 1; x <= 2; ++x)
    for (int y = 1; y <= 2; ++y) expect += Scalar(Rational(1, 2)) * (a.gen(x, x) * a.gen(y, y) - a.gen(y, x) * a.gen(x, y));
  EXPECT_EQ(elementary_symmetric(a, 2).value, expect);
  EXPECT_EQ(elementary_symmetric(a, 1).value, a.gen(1, 1) + a.gen(2, 2));
}

TEST(Symmetric, PowerSums) {
  auto a = re("uq-gl", 2);
  EXPECT_EQ(power_sum(a, 1).value, elementary_symmetric(a, 1).value);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(power_sum(a, k).value, power_sum_trace(a, k)) << k;
  EXPECT_THROW(power_sum(a, 0), DomainError);
}

TEST(Symmetric, RttPowersStayDistinct) {
  auto t = present(AlgebraKind::RTT, builtin_braiding("uq-gl", 2));
  EXPECT_NE(power_sum(t, 2).value, power_sum_trace(t, 2));
  EXPECT_NE(quantum_power(t, 2), matrix_power(t, 2));
  EXPECT_EQ(quantum_power(t, 1), t.generator_matrix);
}

TEST(Symmetric, QuantumPowersAgreeModuloRelations) {
  auto a = re("uq-gl", 2);
  EXPECT_EQ(quantum_power(a, 1), a.generator_matrix);
  EXPECT_EQ(quantum_power(a, 0), identity_matrix<Scalar>(2));
  for (int k = 2; k <= 3; ++k) {
    auto diff = quantum_power(a, k) - matrix_power(a, k);
    EXPECT_FALSE(diff.is_zero()) << k;  // not a free-algebra identity
    EXPECT_TRUE(all_in_ideal(a, diff)) << k;
  }
}

TEST(CharPoly, ReflectionDegreeTwo) {
  auto a = re("uq-gl", 2);
  auto cp = characteristic_polynomial(a);
  ASSERT_EQ(cp.degree(), 2);
  Scalar q = Scalar::q();
  EXPECT_EQ(cp.coefficients[2], FE(1));
  EXPECT_EQ(cp.coefficients[1], -q * elementary_symmetric(a, 1).value);
  EXPECT_EQ(cp.coefficients[0], q * q * elementary_symmetric(a, 2).value);
  EXPECT_EQ(cp.variant, CharPolyVariant::RE_Q);
}

TEST(CharPoly, EnvelopingRankOne) {
  auto a = present_ugl<Scalar>(1);
  auto cp = characteristic_polynomial(a);
  ASSERT_EQ(cp.degree(), 1);
  EXPECT_EQ(cp.coefficients[1], FE(1));
  EXPECT_EQ(cp.coefficients[0], -a.gen(1, 1));
}

TEST(CharPoly, ModifiedLeadingScalar) {
  auto b = builtin_braiding("uq-gl", 2);
  auto a = present(AlgebraKind::ModifiedRE, b);
  auto cp = characteristic_polynomial(a);
  Scalar q = Scalar::q();
  Scalar trA = full_r_trace(skew_symmetrizer(b, 2), b.D);
  EXPECT_EQ(trA, qp(-4));
  EXPECT_EQ(cp.leading_scalar, q * q * trA);
  EXPECT_EQ(cp.coefficients[2], FE(1));
  EXPECT_EQ(cp.variant, CharPolyVariant::mRE_Qhat);
}

TEST(CharPoly, NoPolynomialForRtt) {
  auto t = present(AlgebraKind::RTT, builtin_braiding("uq-gl", 2));
  EXPECT_THROW(characteristic_polynomial(t), DomainError);
}

TEST(CharPoly, IdentityHoldsForEveryVariant) {
  auto b = builtin_braiding("uq-gl", 2);
  for (auto kind : {AlgebraKind::RE, AlgebraKind::ModifiedRE, AlgebraKind::UglN}) {
    auto rep = verify_ch(present(kind, b));
    EXPECT_TRUE(rep.passed()) << to_string(kind) << "\n" << rep.to_text();
    EXPECT_EQ(rep.items.size(), 4u);
  }
  EXPECT_TRUE(verify_ch(re("flip", 2)).passed());
  EXPECT_TRUE(verify_ch(present_ugl<Scalar>(3)).passed());
}

TEST(CharPoly, WrongSignIsRejected) {
  auto a = re("uq-gl", 2);
  auto cp = characteristic_polynomial(a);
  cp.coefficients[1] = -cp.coefficients[1];
  EXPECT_FALSE(all_in_ideal(a, evaluate_at_generating_matrix(a, cp)));

  auto u = present_ugl<Scalar>(2);
  auto cu = characteristic_polynomial(u);
  cu.coefficients[0] = cu.coefficients[0] + FE(1);
  auto Q = evaluate_at_generating_matrix(u, cu);
  EXPECT_FALSE(pbw_normal_form(u, Q.get(0, 0)).is_zero());
}

TEST(CharPoly, RandomSpecializationAgrees) {
  auto b = builtin_braiding("uq-gl", 2);
  Strategy s{StrategyKind::random, 9, 3};
  auto rep = run_strategy(b, s, [](const auto& bb) { return verify_ch(present(AlgebraKind::RE, bb)); });
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.items.size(), 12u);
  EXPECT_EQ(rep.items.front().seed, std::optional<std::uint64_t>(9));
}

TEST(Centrality, ElementarySymmetricAreCentral) {
  for (int k = 1; k <= 2; ++k) {
    EXPECT_TRUE(verify_centrality(re("uq-gl", 2), k).passed()) << k;
    EXPECT_TRUE(verify_centrality(re("flip", 2), k).passed()) << k;
  }
  EXPECT_THROW(verify_centrality(present(AlgebraKind::RTT, builtin_braiding("flip", 2)), 1), DomainError);
}

TEST(Centrality, PowerSumsCommute) {
  EXPECT_TRUE(verify_powersum_commutativity(re("uq-gl", 2), 2).passed());
  EXPECT_TRUE(verify_powersum_commutativity(present(AlgebraKind::RTT, builtin_braiding("uq-gl", 2)), 2).passed());
  auto flip = verify_powersum_commutativity(re("flip", 2), 3);
  EXPECT_TRUE(flip.passed());
}

TEST(Simplifications, ReportShapes) {
  auto rep = verify_simplifications(re("uq-gl", 2), 3);
  EXPECT_TRUE(rep.passed()) << rep.to_text();
  EXPECT_EQ(rep.items.size(), 15u);
  auto rtt = verify_simplifications(present(AlgebraKind::RTT, builtin_braiding("uq-gl", 2)), 2);
  EXPECT_TRUE(rtt.passed());
  for (const auto& it : rtt.items) EXPECT_EQ(it.verdict, Verdict::Distinct);
}
