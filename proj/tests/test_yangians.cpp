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

#include <map>
#include <utility>

#include "qmads/yangian.hpp"

using namespace qmads;

namespace {

using FE = FreeElement<Scalar>;
using Mat = OpMatrix<Scalar>;
using Series = TruncatedMatrixSeries<Scalar>;

CurrentPresentation<Scalar> yangian(const std::string& name, YangianType type, int levels) {
  return current_relations(baxterize(builtin_braiding(name, 2)), type, levels);
}

Mat lift(const TensorOperator<Scalar>& op) { return op.map([](const Scalar& c) { return FE(c); }); }

// Laurent polynomials in (u, v) with matrix coefficients, multiplied by plain convolution.
using Bi = std::map<std::pair<int, int>, Mat>;

Bi bimul(const Bi& a, const Bi& b) {
  Bi out;
  for (const auto& [ea, ma] : a)
    for (const auto& [eb, mb] : b) {
      std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
      auto it = out.find(e);
      if (it == out.end()) out.emplace(e, ma * mb);
      else it->second += ma * mb;
    }
  return out;
}

void biadd(Bi& a, const Bi& b, int sign) {
  for (const auto& [e, m] : b) {
    auto it = a.find(e);
    Mat v = sign > 0 ? m : -m;
    if (it == a.end()) a.emplace(e, v);
    else it->second += v;
  }
}

}  // namespace

TEST(Series, ShiftExamples) {
  auto p = yangian("flip", YangianType::braided, 1);
  Series s(3, Mat(2, 1));
  s[0] = identity_matrix<Scalar>(2);
  s[1] = p.level_matrix[1];
  EXPECT_EQ(shift_series(s, Shift<Scalar>::additive(0)).c, s.c);
  auto a = shift_series(s, Shift<Scalar>::additive(1));
  EXPECT_EQ(a[1], s[1]);
  EXPECT_EQ(a[2], s[1]);
  EXPECT_EQ(a[3], s[1]);
  auto m = shift_series(s, Shift<Scalar>::multiplicative(Scalar::q_power(-2)));
  EXPECT_EQ(m[1], scale(Scalar::q_power(2), s[1]));
  EXPECT_EQ(m[0], s[0]);
  // (u - 2)^-2 = u^-2 + 4 u^-3 + ...
  Series t(3, Mat(2, 1));
  t[2] = s[1];
  auto t2 = shift_series(t, Shift<Scalar>::additive(2));
  EXPECT_EQ(t2[3], scale(Scalar(4), s[1]));
}

TEST(Series, ConjugationRules) {
  ElementSeries<Scalar> f(3, FE());
  f[1] = FE(1);
  auto add = shift_operator_conjugate(f, ConjugateKind::additive_exp, Scalar::q());
  EXPECT_EQ(add[1], FE(1));
  EXPECT_EQ(add[2], FE(-1));
  EXPECT_EQ(add[3], FE(1));
  auto mul = shift_operator_conjugate(f, ConjugateKind::multiplicative_q, Scalar::q());
  EXPECT_EQ(mul[1], FE(Scalar::q_power(-2)));
  ElementSeries<Scalar> c(3, FE());
  c[0] = FE(Scalar(5));
  EXPECT_EQ(shift_operator_conjugate(c, ConjugateKind::additive_exp, Scalar::q()).c, c.c);
  EXPECT_EQ(shift_operator_conjugate(c, ConjugateKind::multiplicative_q, Scalar::q()).c, c.c);
  // Undoing the additive rule recovers the series.
  EXPECT_EQ(shift_series(add, Shift<Scalar>::additive(1)).c, f.c);
}

TEST(Yangian, AlphabetAndLevels) {
  auto p = yangian("uq-gl", YangianType::braided, 2);
  EXPECT_EQ(p.alphabet().size(), 8u);
  EXPECT_EQ(p.alphabet().weight(p.generators[1][0]), 2);
  EXPECT_EQ(p.level_matrix[0], identity_matrix<Scalar>(2));
  EXPECT_THROW(p.generating_series(3), InsufficientTruncation);
  EXPECT_THROW(current_relations(baxterize(builtin_braiding("flip", 2)), YangianType::braided, 13), ResourceError);
}

TEST(Yangian, IdentitySeriesSatisfiesRelations) {
  for (auto type : {YangianType::braided, YangianType::rtt})
    for (const char* name : {"flip", "uq-gl"}) {
      auto p = yangian(name, type, 2);
      for (const auto& r : p.ideal->relation_set().relations) EXPECT_TRUE(r.coeff(Word{}).is_zero());
    }
}

TEST(Yangian, RelationsMatchDirectExpansion) {
  for (auto type : {YangianType::braided, YangianType::rtt})
    for (const char* name : {"flip", "uq-gl"}) {
      auto p = yangian(name, type, 2);
      Mat R = lift(p.braiding().R), I = identity_matrix<Scalar>(2, 2);
      Bi F{{{1, 0}, R}, {{0, 1}, -R}};
      biadd(F, Bi{{{p.current.g_u_power(), 0}, scale(p.current.g_coeff(), I)}}, -1);
      Bi Lu1, Lv1, Lu2, Lv2, Rb{{{0, 0}, R}};
      for (int k = 0; k <= p.levels; ++k) {
        Lu1[{-k, 0}] = embed(p.level_matrix[static_cast<std::size_t>(k)], 2, 1);
        Lv1[{0, -k}] = embed(p.level_matrix[static_cast<std::size_t>(k)], 2, 1);
        Lv2[{0, -k}] = embed(p.level_matrix[static_cast<std::size_t>(k)], 2, 2);
        Lu2[{-k, 0}] = embed(p.level_matrix[static_cast<std::size_t>(k)], 2, 2);
      }
      Bi diff;
      if (type == YangianType::braided) {
        diff = bimul(bimul(bimul(F, Lu1), Rb), Lv1);
        biadd(diff, bimul(bimul(bimul(Lv1, Rb), Lu1), F), -1);
      } else {
        diff = bimul(bimul(F, Lu1), Lv2);
        biadd(diff, bimul(bimul(Lv1, Lu2), F), -1);
      }
      for (const auto& [e, m] : diff) {
        if (1 - e.first - e.second > p.levels || 1 - e.first - e.second < 1) continue;
        EXPECT_EQ(detail::current_relation_coefficient(p, e.first, e.second), m)
            << name << " " << to_string(type) << " u^" << e.first << " v^" << e.second;
      }
    }
}

TEST(Yangian, QuantumPowerFirstCoefficient) {
  auto r = yangian("flip", YangianType::braided, 2);
  auto Lr = quantum_power_series(r, 2, 2);
  EXPECT_EQ(Lr[1], scale(Scalar(2), r.level_matrix[1]));
  EXPECT_EQ(quantum_power_series(r, 1, 2).c, r.generating_series(2).c);
  auto h = yangian("uq-gl", YangianType::braided, 2);
  auto Lh = quantum_power_series(h, 2, 2);
  EXPECT_EQ(Lh[1], scale(Scalar::q_power(2) + Scalar(1), h.level_matrix[1]));
  EXPECT_EQ(quantum_power_series(h, 0, 2)[0], identity_matrix<Scalar>(2));
}

TEST(Yangian, ElementarySeriesConstantTerms) {
  auto r = yangian("flip", YangianType::braided, 2);
  EXPECT_EQ(elementary_symmetric_series(r, 1, 2)[0], FE(2));
  EXPECT_EQ(elementary_symmetric_series(r, 0, 2)[0], FE(1));
  EXPECT_TRUE(elementary_symmetric_series(r, 3, 2)[1].is_zero());
  auto h = yangian("uq-gl", YangianType::braided, 2);
  auto e1 = elementary_symmetric_series(h, 1, 2);
  EXPECT_EQ(e1[0], FE(Scalar::q_power(-3) + Scalar::q_power(-1)));
  EXPECT_EQ(e1[1], full_r_trace(h.level_matrix[1], h.braiding().D));
}

TEST(Yangian, FlipSecondElementaryFirstOrder) {
  // e_2(u) = Tr(A^(2) L1(u) L2(u-1)) with A^(2) = (I - P)/2: the u^-1 term is
  // Tr(A^(2) (l[1] (x) I + I (x) l[1])) = Tr l[1], since Tr A^(2) (X (x) I) = (n-1)/2 Tr X for n = 2.
  auto r = yangian("flip", YangianType::braided, 2);
  auto e2 = elementary_symmetric_series(r, 2, 2);
  EXPECT_EQ(e2[0], FE(1));
  EXPECT_EQ(e2[1], full_r_trace(r.level_matrix[1], r.braiding().D));
}

TEST(Yangian, CharacteristicIdentity) {
  auto r = yangian("flip", YangianType::braided, 3);
  auto rep = verify_ch_yangian(r, 3, 3);
  EXPECT_TRUE(rep.passed()) << rep.to_text();
  EXPECT_EQ(rep.items.size(), 16u);
  // Constant term vanishes identically.
  auto S = ch_series(r, 3);
  EXPECT_TRUE(S[0].is_zero());
  auto h = yangian("uq-gl", YangianType::braided, 2);
  EXPECT_TRUE(verify_ch_yangian(h, 2, 2).passed());
  EXPECT_THROW(verify_ch_yangian(h, 3, 2), InsufficientTruncation);
}

TEST(Yangian, WrongSignIsRejected) {
  auto r = yangian("flip", YangianType::braided, 2);
  const int D = 2;
  Series wrong(D, Mat(2, 1));
  for (int k = 0; k <= 2; ++k) {
    auto P = shift_series(quantum_power_series(r, 2 - k, D), r.step(k));
    wrong += P * elementary_symmetric_series(r, k, D);  // all signs +
  }
  bool any_out = false;
  for (int t = 0; t <= D; ++t)
    wrong[t].for_each([&](Index, Index, const FE& x) { any_out = any_out || !r.ideal->membership(x).in_ideal; });
  EXPECT_TRUE(any_out);
}

TEST(Yangian, RandomSpecializationForHecke) {
  auto b = builtin_braiding("uq-gl", 2);
  Strategy s{StrategyKind::random, 4, 2};
  auto rep = run_strategy(b, s, [](const auto& bb) {
    return verify_ch_yangian(current_relations(baxterize(bb), YangianType::braided, 3), 3, 3);
  });
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.items.size(), 32u);
}
