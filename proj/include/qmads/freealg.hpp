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

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace qmads {

using Generator = std::uint8_t;

/// A finite word over the generator alphabet. Ordered degree-lexicographically:
/// shorter words first, equal lengths compared letter by letter.
class Word {
 public:
  static constexpr int kMaxLength = 15;

  Word() = default;
  explicit Word(Generator g) : len_(1) { g_[0] = g; }
  Word(std::initializer_list<Generator> gs) {
    for (Generator g : gs) push_back(g);
  }

  int size() const { return len_; }
  bool empty() const { return len_ == 0; }
  Generator operator[](int i) const { return g_[static_cast<std::size_t>(i)]; }
  void push_back(Generator g) {
    if (len_ >= kMaxLength) throw ResourceError("word length exceeds " + std::to_string(kMaxLength));
    g_[len_++] = g;
  }
  Word sub(int start, int count) const {
    Word w;
    for (int i = 0; i < count; ++i) w.push_back(g_[static_cast<std::size_t>(start + i)]);
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) {
    if (a.len_ + b.len_ > kMaxLength) throw ResourceError("word length exceeds " + std::to_string(kMaxLength));
    Word w = a;
    for (int i = 0; i < b.len_; ++i) w.g_[w.len_++] = b.g_[static_cast<std::size_t>(i)];
    return w;
  }
  friend bool operator==(const Word& a, const Word& b) {
    return a.len_ == b.len_ && std::equal(a.g_.begin(), a.g_.begin() + a.len_, b.g_.begin());
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.len_ != b.len_) return a.len_ <=> b.len_;
    for (int i = 0; i < a.len_; ++i)
      if (a.g_[static_cast<std::size_t>(i)] != b.g_[static_cast<std::size_t>(i)])
        return a.g_[static_cast<std::size_t>(i)] <=> b.g_[static_cast<std::size_t>(i)];
    return std::strong_ordering::equal;
  }

 private:
  std::uint8_t len_ = 0;
  std::array<Generator, kMaxLength> g_{};
};

/// Generator names and weights. Matrix alphabets register symbols s_i^j (and graded
/// symbols s[k]_i^j of weight k) in (level, i, j) order, which fixes the word order.
class Alphabet {
 public:
  Generator add(std::string name, int weight = 1) {
    if (names_.size() >= 255) throw ResourceError("alphabet exceeds 255 generators");
    names_.push_back(std::move(name));
    weights_.push_back(weight);
    return static_cast<Generator>(names_.size() - 1);
  }
  /// Registers the n x n matrix of symbols symbol_i^j; returns ids in row-major order.
  std::vector<Generator> add_matrix(const std::string& symbol, int n, int level = 0) {
    std::vector<Generator> ids;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        std::string nm = symbol + (level > 0 ? "[" + std::to_string(level) + "]" : "") + "_" +
                         std::to_string(i) + "^" + std::to_string(j);
        ids.push_back(add(nm, level > 0 ? level : 1));
      }
    return ids;
  }
  std::size_t size() const { return names_.size(); }
  const std::string& name(Generator g) const { return names_.at(g); }
  int weight(Generator g) const { return weights_.at(g); }
  int weight(const Word& w) const {
    int s = 0;
    for (int i = 0; i < w.size(); ++i) s += weights_.at(w[i]);
    return s;
  }
  std::string str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (int i = 0; i < w.size(); ++i) {
      if (i) s += "*";
      s += names_.at(w[i]);
    }
    return s;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

/// Noncommutative polynomial: a finite linear combination of words with coefficients in K.
template <CoefficientField K>
class FreeElement {
 public:
  using Terms = std::map<Word, K>;

  FreeElement() = default;
  explicit FreeElement(long c) : FreeElement(K(c)) {}
  explicit FreeElement(const K& c) {
    if (!c.is_zero()) t_.emplace(Word{}, c);
  }
  static FreeElement generator(Generator g, const K& c = K(1)) {
    FreeElement x;
    if (!c.is_zero()) x.t_.emplace(Word(g), c);
    return x;
  }
  static FreeElement word(const Word& w, const K& c = K(1)) {
    FreeElement x;
    if (!c.is_zero()) x.t_.emplace(w, c);
    return x;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  int degree() const { return t_.empty() ? -1 : t_.rbegin()->first.size(); }
  int min_degree() const { return t_.empty() ? -1 : t_.begin()->first.size(); }
  K coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? K(0) : it->second;
  }
  void add_term(const Word& w, const K& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  FreeElement operator-() const {
    FreeElement r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
  }
  FreeElement& operator+=(const FreeElement& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
  }
  FreeElement& operator-=(const FreeElement& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
  }
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    FreeElement r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [wa, ca] : a.t_)
      for (const auto& [wb, cb] : b.t_) r.add_term(wa * wb, ca * cb);
    return r;
  }
  friend FreeElement operator*(const K& s, const FreeElement& x) {
    FreeElement r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : x.t_) {
      K p = s * c;
      if (!p.is_zero()) r.t_.emplace_hint(r.t_.end(), w, std::move(p));
    }
    return r;
  }
  friend FreeElement operator*(const FreeElement& x, const K& s) {
    FreeElement r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : x.t_) {
      K p = c * s;
      if (!p.is_zero()) r.t_.emplace_hint(r.t_.end(), w, std::move(p));
    }
    return r;
  }
  FreeElement& operator*=(const FreeElement& o) { return *this = *this * o; }
  friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.t_ == b.t_; }

  /// Entrywise map of coefficients into another field.
  template <class F>
  auto map_coeffs(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const K&>()))>;
    FreeElement<U> out;
    for (const auto& [w, c] : t_) out.add_term(w, f(c));
    return out;
  }

  /// Terms whose weight (under alphabet weights) equals w.
  FreeElement weight_part(const Alphabet& a, int w) const {
    FreeElement r;
    for (const auto& [word, c] : t_)
      if (a.weight(word) == w) r.t_.emplace(word, c);
    return r;
  }
  int max_weight(const Alphabet& a) const {
    int m = -1;
    for (const auto& [word, c] : t_) m = std::max(m, a.weight(word));
    return m;
  }

  std::string str(const Alphabet& a) const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      std::string c = to_string(it->second);
      if (!first) s += " + ";
      first = false;
      if (it->first.empty()) s += "(" + c + ")";
      else if (c == "1") s += a.str(it->first);
      else s += "(" + c + ")*" + a.str(it->first);
    }
    return s;
  }

 private:
  Terms t_;
};

template <CoefficientField K>
FreeElement<K> commutator(const FreeElement<K>& a, const FreeElement<K>& b) {
  return a * b - b * a;
}

}  // namespace qmads
