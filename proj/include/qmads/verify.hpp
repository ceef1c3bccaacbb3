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
#include <functional>
#include <string>
#include <vector>

#include "braiding.hpp"
#include "field.hpp"
#include "freealg.hpp"
#include "ideal.hpp"
#include "pbw.hpp"
#include "report.hpp"

namespace qmads {

enum class StrategyKind { exact, random };

inline const char* to_string(StrategyKind s) { return s == StrategyKind::exact ? "exact" : "random"; }

struct Strategy {
  StrategyKind kind = StrategyKind::exact;
  std::uint64_t seed = 1;
  int trials = 1;
};

namespace detail {

inline std::string clip(std::string s, std::size_t max = 240) {
  if (s.size() > max) s = s.substr(0, max) + " ...";
  return s;
}

}  // namespace detail

/// Zero / NonZero verdict for an identity that must hold in the free algebra itself.
template <CoefficientField K>
ReportItem check_zero(const FreeElement<K>& x, std::string id, const Alphabet& a) {
  Stopwatch sw;
  ReportItem it;
  it.id = std::move(id);
  it.degree = x.is_zero() ? 0 : x.max_weight(a);
  it.verdict = x.is_zero() ? Verdict::Zero : Verdict::NonZero;
  if (!x.is_zero()) it.detail = detail::clip(x.str(a));
  it.elapsed_ms = sw.ms();
  return it;
}

/// Ideal-membership verdict; identically zero input is reported as Zero.
template <CoefficientField K>
ReportItem check_membership(IdealHandle<K>& ideal, const FreeElement<K>& x, std::string id) {
  Stopwatch sw;
  ReportItem it;
  it.id = std::move(id);
  if (x.is_zero()) {
    it.verdict = Verdict::Zero;
  } else {
    auto m = ideal.membership(x);
    it.degree = m.degree;
    it.verdict = m.in_ideal ? Verdict::InIdeal : Verdict::NotInIdeal;
    if (!m.in_ideal) it.detail = "remainder " + detail::clip(m.remainder.str(ideal.alphabet()));
  }
  it.elapsed_ms = sw.ms();
  return it;
}

/// Membership decided by PBW rewriting (normal form zero).
template <CoefficientField K>
ReportItem check_pbw(const PbwRewriter<K>& pbw, const FreeElement<K>& x, std::string id, const Alphabet& a) {
  Stopwatch sw;
  ReportItem it;
  it.id = std::move(id);
  it.degree = x.is_zero() ? 0 : x.max_weight(a);
  if (x.is_zero()) {
    it.verdict = Verdict::Zero;
  } else {
    auto nf = pbw.normal_form(x);
    it.verdict = nf.is_zero() ? Verdict::InIdeal : Verdict::NotInIdeal;
    if (!nf.is_zero()) it.detail = "normal form " + detail::clip(nf.str(a));
  }
  it.elapsed_ms = sw.ms();
  return it;
}

/// Runs body over the requested coefficient fields: once over Q(q) for the exact strategy, or once per
/// trial over F_p at a seeded random q. body is called as body(braiding_over_K) and returns a report whose
/// items receive the strategy label, seed and a trial prefix.
template <class Body>
VerificationReport run_strategy(const Braiding<Scalar>& b, const Strategy& s, Body&& body) {
  VerificationReport out;
  if (s.kind == StrategyKind::exact) {
    out = body(b);
    for (auto& it : out.items) it.strategy = "exact";
    return out;
  }
  if (s.trials < 1) throw DomainError("the random strategy needs at least one trial");
  for (int t = 0; t < s.trials; ++t) {
    std::uint64_t seed = s.seed + static_cast<std::uint64_t>(t);
    Fp q(1);
    if (b.kind == SymmetryKind::Hecke) q = draw_random_q(seed, 2 * b.n + 6).value;
    FpSpecializer f(q);
    auto bf = specialize_braiding<Fp>(b, f);
    VerificationReport r = body(bf);
    for (auto& it : r.items) {
      it.strategy = "random";
      it.seed = seed;
      if (s.trials > 1) it.id = "trial " + std::to_string(t + 1) + " " + it.id;
    }
    if (t == 0) {
      out = r;
    } else {
      out.append(r);
    }
  }
  return out;
}

}  // namespace qmads
