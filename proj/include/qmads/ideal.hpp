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
#include <memory>
#include <string>
#include <vector>

#include "echelon.hpp"
#include "freealg.hpp"

namespace qmads {

/// How the ideal is filtered when slicing it into finite-dimensional components.
///  - homogeneous_quadratic: relations are homogeneous; the degree-d component is used.
///  - quadratic_linear / graded_by_level: the weight-<= d filtration piece, spanned by
///    w1 * r * w2 with weight(w1) + weight(w2) + top_weight(r) <= d.
enum class Grading { homogeneous_quadratic, quadratic_linear, graded_by_level };

inline const char* to_string(Grading g) {
  switch (g) {
    case Grading::homogeneous_quadratic: return "homogeneous-quadratic";
    case Grading::quadratic_linear: return "quadratic-linear";
    case Grading::graded_by_level: return "graded-by-level";
  }
  return "?";
}

template <CoefficientField K>
struct RelationSet {
  Alphabet alphabet;
  std::vector<FreeElement<K>> relations;
  Grading grading = Grading::homogeneous_quadratic;
};

template <CoefficientField K>
struct MembershipResult {
  bool in_ideal = false;
  FreeElement<K> remainder;  // normal form modulo the ideal component; zero iff in_ideal
  int degree = 0;            // slice (degree or weight bound) that decided the answer
};

/// Degree-sliced two-sided ideal with cached reduced echelon bases of its components.
///
/// Not thread-safe while components are being built; once built, reduce/membership are
/// read-only on the cache.
template <CoefficientField K>
class IdealHandle {
 public:
  using Eliminator = SparseEliminator<K, Word, std::greater<Word>>;

  static constexpr std::size_t kDefaultCap = 200000;

  explicit IdealHandle(RelationSet<K> rels, std::size_t cap = kDefaultCap) : rels_(std::move(rels)), cap_(cap) {
    std::erase_if(rels_.relations, [](const auto& r) { return r.is_zero(); });
    for (const auto& r : rels_.relations) {
      int w = r.max_weight(rels_.alphabet);
      min_weight_ = min_weight_ < 0 ? w : std::min(min_weight_, w);
    }
  }

  const RelationSet<K>& relation_set() const { return rels_; }
  const Alphabet& alphabet() const { return rels_.alphabet; }
  Grading grading() const { return rels_.grading; }
  int min_relation_weight() const { return min_weight_; }
  bool homogeneous() const { return rels_.grading == Grading::homogeneous_quadratic; }

  /// Number of words spanning the degree-d slice (exact degree for homogeneous ideals,
  /// weight <= d otherwise).
  std::size_t slice_dimension(int d) const {
    auto counts = word_counts(d);
    if (homogeneous()) return counts[static_cast<std::size_t>(d)];
    std::size_t s = 0;
    for (auto c : counts) s += c;
    return s;
  }

  /// Row-reduced basis of the degree-d component (built on first use).
  const Eliminator& component(int d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    std::size_t dim = slice_dimension(d);
    if (dim > cap_)
      throw ResourceError("slice dimension " + std::to_string(dim) + " at degree " + std::to_string(d) +
                          " exceeds the cap " + std::to_string(cap_));
    Eliminator e;
    const Alphabet& a = rels_.alphabet;
    std::vector<std::vector<Word>> by_weight(static_cast<std::size_t>(d) + 1);
    for (const auto& w : words_up_to(d)) by_weight[static_cast<std::size_t>(a.weight(w))].push_back(w);
    for (const auto& r : rels_.relations) {
      int budget = d - r.max_weight(a);
      for (int b1 = 0; b1 <= budget; ++b1) {
        int lo = homogeneous() ? budget - b1 : 0;
        for (int b2 = lo; b2 <= budget - b1; ++b2)
          for (const auto& w1 : by_weight[static_cast<std::size_t>(b1)])
            for (const auto& w2 : by_weight[static_cast<std::size_t>(b2)]) {
              typename Eliminator::Vec v;
              for (const auto& [w, c] : r.terms()) v.emplace(w1 * w * w2, c);
              e.insert(std::move(v));
            }
      }
    }
    return cache_.emplace(d, std::move(e)).first->second;
  }

  std::size_t component_rank(int d) { return component(d).rank(); }
  std::size_t quotient_dimension(int d) { return slice_dimension(d) - component_rank(d); }

  /// Exact reduction of x modulo the ideal slices that contain it.
  MembershipResult<K> membership(const FreeElement<K>& x) {
    MembershipResult<K> res;
    if (x.is_zero()) {
      res.in_ideal = true;
      return res;
    }
    const Alphabet& a = rels_.alphabet;
    if (homogeneous()) {
      std::map<int, FreeElement<K>> parts;
      for (const auto& [w, c] : x.terms()) parts[a.weight(w)].add_term(w, c);
      for (const auto& [deg, part] : parts) {
        res.degree = std::max(res.degree, deg);
        if (min_weight_ < 0 || deg < min_weight_) {
          res.remainder += part;
          continue;
        }
        res.remainder += reduce_in(component(deg), part);
      }
    } else {
      int d = x.max_weight(a);
      res.degree = d;
      res.remainder = (min_weight_ < 0 || d < min_weight_) ? x : reduce_in(component(d), x);
    }
    res.in_ideal = res.remainder.is_zero();
    return res;
  }

 private:
  static FreeElement<K> reduce_in(const Eliminator& e, const FreeElement<K>& x) {
    typename Eliminator::Vec v(x.terms().begin(), x.terms().end());
    auto r = e.reduce(std::move(v));
    FreeElement<K> out;
    for (const auto& [w, c] : r) out.add_term(w, c);
    return out;
  }

  // counts[w] = number of words of weight exactly w, for w <= d.
  std::vector<std::size_t> word_counts(int d) const {
    std::vector<std::size_t> c(static_cast<std::size_t>(d) + 1, 0);
    c[0] = 1;
    for (int w = 1; w <= d; ++w)
      for (std::size_t g = 0; g < rels_.alphabet.size(); ++g) {
        int gw = rels_.alphabet.weight(static_cast<Generator>(g));
        if (gw <= w) c[static_cast<std::size_t>(w)] += c[static_cast<std::size_t>(w - gw)];
      }
    return c;
  }

  std::vector<Word> words_up_to(int d) const {
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
      int w = rels_.alphabet.weight(out[i]);
      for (std::size_t g = 0; g < rels_.alphabet.size(); ++g) {
        int gw = rels_.alphabet.weight(static_cast<Generator>(g));
        if (w + gw <= d) {
          Word nw = out[i];
          nw.push_back(static_cast<Generator>(g));
          out.push_back(nw);
        }
      }
    }
    return out;
  }

  RelationSet<K> rels_;
  std::size_t cap_;
  int min_weight_ = -1;
  std::map<int, Eliminator> cache_;
};

}  // namespace qmads
