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
#include <vector>

#include "freealg.hpp"

namespace qmads {

/// Normal forms in an enveloping algebra presented by commutation rules
/// x y - y x = [x, y] for generators x > y (generator ids give the total order).
///
/// Each rewrite sorts one adjacent inversion, leaving a sorted-by-one word of the same
/// length plus terms of smaller length, so the length-then-inversion-count measure
/// decreases and rewriting terminates.
template <CoefficientField K>
class PbwRewriter {
 public:
  using Bracket = std::function<FreeElement<K>(Generator, Generator)>;

  explicit PbwRewriter(Bracket bracket) : bracket_(std::move(bracket)) {}

  FreeElement<K> normal_form(const FreeElement<K>& x) const {
    // Work through longer words first so that shorter contributions merge before use.
    std::map<Word, K> work(x.terms().begin(), x.terms().end());
    FreeElement<K> out;
    while (!work.empty()) {
      auto it = std::prev(work.end());
      Word w = it->first;
      K c = it->second;
      work.erase(it);
      int p = first_inversion(w);
      if (p < 0) {
        out.add_term(w, c);
        continue;
      }
      Word head = w.sub(0, p), tail = w.sub(p + 2, w.size() - p - 2);
      Word swapped = head * Word(w[p + 1]) * Word(w[p]) * tail;
      accumulate(work, swapped, c);
      auto br = bracket_(w[p], w[p + 1]);
      for (const auto& [bw, bc] : br.terms()) accumulate(work, head * bw * tail, c * bc);
    }
    return out;
  }

  bool is_sorted(const Word& w) const { return first_inversion(w) < 0; }

 private:
  static int first_inversion(const Word& w) {
    for (int i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) return i;
    return -1;
  }
  static void accumulate(std::map<Word, K>& work, const Word& w, const K& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = work.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  }

  Bracket bracket_;
};

/// U(gl(n)) with generators m_i^j registered row-major: [m_i^j, m_k^l] = m_i^l d_kj - m_k^j d_il.
template <CoefficientField K>
PbwRewriter<K> gl_pbw_rewriter(int n, std::vector<Generator> ids) {
  return PbwRewriter<K>([n, ids](Generator x, Generator y) {
    auto pos = [&](Generator g) {
      for (std::size_t t = 0; t < ids.size(); ++t)
        if (ids[t] == g) return static_cast<int>(t);
      throw DomainError("generator outside the gl(n) alphabet");
    };
    int px = pos(x), py = pos(y);
    int i = px / n, j = px % n, k = py / n, l = py % n;
    FreeElement<K> r;
    if (k == j) r += FreeElement<K>::generator(ids[static_cast<std::size_t>(i * n + l)]);
    if (i == l) r -= FreeElement<K>::generator(ids[static_cast<std::size_t>(k * n + j)]);
    return r;
  });
}

}  // namespace qmads
