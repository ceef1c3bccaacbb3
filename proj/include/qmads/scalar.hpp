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
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "upoly.hpp"

namespace qmads {

/// Monomial in the central parameters, e.g. v1^2*t. Sorted by name, positive exponents.
using ParamMono = std::vector<std::pair<std::string, int>>;

inline ParamMono mono_mul(const ParamMono& a, const ParamMono& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  ParamMono r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

/// An element of Q(q)[p_1, ..., p_r]: a polynomial in named central parameters whose
/// coefficients lie in the rational-function field Q(q).
///
/// Stored as numerator / denominator where the numerator is a polynomial in q and the
/// parameters and the denominator is a monic polynomial in q alone. The pair is kept
/// reduced (the denominator shares no factor with every numerator coefficient), so two
/// scalars are equal iff their representations are equal.
///
/// Division is supported by parameter-free divisors only. Every denominator met by the
/// library lives in Q(q), so Q(q)[params] is closed under all operations used.
class Scalar {
 public:
  using Terms = std::vector<std::pair<ParamMono, UPoly>>;

  Scalar() = default;
  Scalar(long c) : Scalar(UPoly(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c) : Scalar(UPoly(c)) {}  // NOLINT
  explicit Scalar(const UPoly& p) {
    if (!p.is_zero()) num_.emplace_back(ParamMono{}, p);
  }
  Scalar(Terms num, UPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

  static Scalar q() { return Scalar(UPoly::q()); }
  static Scalar param(const std::string& name) {
    if (name == "q") return q();
    Scalar s;
    s.num_.emplace_back(ParamMono{{name, 1}}, UPoly(1));
    return s;
  }
  /// q^k for any integer k.
  static Scalar q_power(int k) {
    if (k >= 0) return Scalar(UPoly::monomial(Rational(1), k));
    return Scalar(Terms{{ParamMono{}, UPoly(1)}}, UPoly::monomial(Rational(1), -k));
  }

  const Terms& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool has_params() const { return !num_.empty() && !(num_.size() == 1 && num_[0].first.empty()); }
  bool is_constant() const {
    return is_zero() || (!has_params() && num_[0].second.is_constant() && den_.is_one());
  }
  /// Value of a constant scalar; throws DomainError otherwise.
  Rational constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw DomainError("scalar is not a rational constant: " + str());
    return num_[0].second.lead();
  }
  /// Param-free part numerator (the scalar must be param-free).
  UPoly q_numerator() const {
    if (has_params()) throw DomainError("scalar depends on central parameters: " + str());
    return is_zero() ? UPoly() : num_[0].second;
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& [m, p] : r.num_) p = -p;
    return r;
  }
  friend Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b, false); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return add(a, b, true); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // With both operands reduced, gcd(na*nb, da*db) = gcd(na, db) * gcd(nb, da).
    UPoly ga = a.den_.is_one() ? UPoly(1) : UPoly::gcd(a.den_, b.content());
    UPoly gb = b.den_.is_one() ? UPoly(1) : UPoly::gcd(b.den_, a.content());
    Scalar r;
    if (!a.has_params() && !b.has_params()) {
      UPoly na = UPoly::exact_div(a.num_[0].second, gb), nb = UPoly::exact_div(b.num_[0].second, ga);
      r.num_.emplace_back(ParamMono{}, na * nb);
    } else {
      std::map<ParamMono, UPoly> acc;
      for (const auto& [ma, pa] : a.num_)
        for (const auto& [mb, pb] : b.num_)
          acc[mono_mul(ma, mb)] += UPoly::exact_div(pa, gb) * UPoly::exact_div(pb, ga);
      for (auto& [m, p] : acc)
        if (!p.is_zero()) r.num_.emplace_back(m, std::move(p));
      if (r.num_.empty()) return {};
    }
    r.den_ = UPoly::exact_div(a.den_, ga) * UPoly::exact_div(b.den_, gb);
    r.normalize_lead();
    return r;
  }
  Scalar inverse() const {
    if (is_zero()) throw PoleError("inverse of zero scalar");
    if (has_params()) throw DomainError("cannot invert a scalar depending on central parameters: " + str());
    const UPoly& n = num_[0].second;
    Rational l = n.lead();
    Scalar r;
    r.num_.emplace_back(ParamMono{}, den_.scaled(l.inverse()));
    r.den_ = n.scaled(l.inverse());
    return r;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  Scalar pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar r(1), b = *this;
    while (k > 0) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  /// Groups the scalar by parameter monomial: x = sum_m m * coeff(m), coeff(m) in Q(q).
  std::vector<std::pair<ParamMono, Scalar>> split_by_params() const {
    std::vector<std::pair<ParamMono, Scalar>> out;
    for (const auto& [m, p] : num_) out.emplace_back(m, Scalar(Terms{{ParamMono{}, p}}, den_));
    return out;
  }

  std::string str() const;

 private:
  static Scalar add(const Scalar& a, const Scalar& b, bool negate_b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return negate_b ? -b : b;
    UPoly fa(1), fb(1), den, g(1);
    if (a.den_ == b.den_) {
      den = a.den_;
      g = den;
    } else {
      g = UPoly::gcd(a.den_, b.den_);
      fa = UPoly::exact_div(b.den_, g);
      fb = UPoly::exact_div(a.den_, g);
      den = a.den_ * fa;
    }
    Scalar r;
    if (!a.has_params() && !b.has_params()) {
      UPoly pa = fa.is_one() ? a.num_[0].second : a.num_[0].second * fa;
      UPoly pb = fb.is_one() ? b.num_[0].second : b.num_[0].second * fb;
      UPoly s = negate_b ? pa - pb : pa + pb;
      if (s.is_zero()) return {};
      r.num_.emplace_back(ParamMono{}, std::move(s));
    } else {
      std::map<ParamMono, UPoly> acc;
      for (const auto& [m, p] : a.num_) acc[m] += fa.is_one() ? p : p * fa;
      for (const auto& [m, p] : b.num_) {
        UPoly t = fb.is_one() ? p : p * fb;
        if (negate_b) acc[m] -= t; else acc[m] += t;
      }
      for (auto& [m, p] : acc)
        if (!p.is_zero()) r.num_.emplace_back(m, std::move(p));
      if (r.num_.empty()) return {};
    }
    r.den_ = std::move(den);
    // Only factors of gcd(da, db) can cancel against the new numerator.
    if (!g.is_constant()) {
      UPoly c = UPoly::gcd(g, r.content());
      if (!c.is_one()) {
        for (auto& [m, p] : r.num_) p = UPoly::exact_div(p, c);
        r.den_ = UPoly::exact_div(r.den_, c);
      }
    }
    r.normalize_lead();
    return r;
  }

  /// gcd of all numerator coefficient polynomials (the numerator itself when param-free).
  UPoly content() const {
    if (num_.size() == 1) return num_[0].second;
    UPoly g;
    for (const auto& [m, p] : num_) {
      g = UPoly::gcd(g, p);
      if (g.is_one()) break;
    }
    return g;
  }

  void normalize_lead() {
    if (!den_.lead().is_one()) {
      Rational inv = den_.lead().inverse();
      for (auto& [m, p] : num_) p = p.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  void canonicalize() {
    std::erase_if(num_, [](const auto& t) { return t.second.is_zero(); });
    if (num_.empty()) {
      den_ = UPoly(1);
      return;
    }
    if (den_.is_zero()) throw PoleError("zero denominator");
    if (!den_.is_constant()) {
      UPoly g = den_;
      for (const auto& [m, p] : num_) {
        g = UPoly::gcd(g, p);
        if (g.is_one()) break;
      }
      if (!g.is_one()) {
        for (auto& [m, p] : num_) p = UPoly::exact_div(p, g);
        den_ = UPoly::exact_div(den_, g);
      }
    }
    if (!den_.lead().is_one()) {
      Rational inv = den_.lead().inverse();
      for (auto& [m, p] : num_) p = p.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Terms num_;
  UPoly den_{1};
};

namespace detail {

inline std::string rational_coeff_str(const Rational& c) { return c.str(); }

inline std::string mono_str(const ParamMono& m) {
  std::string s;
  for (const auto& [name, e] : m) {
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// Prints sum_m m * p_m(q) with descending powers of q within each parameter monomial.
inline std::string terms_str(const Scalar::Terms& terms, int* count) {
  std::string out;
  *count = 0;
  for (const auto& [m, p] : terms) {
    for (int d = p.degree(); d >= 0; --d) {
      Rational c = p.coeff(d);
      if (c.is_zero()) continue;
      std::string atom;
      if (d > 0) atom = d == 1 ? "q" : "q^" + std::to_string(d);
      std::string ms = mono_str(m);
      if (!ms.empty()) atom = atom.empty() ? ms : atom + "*" + ms;
      bool neg = c.sign() < 0;
      Rational a = neg ? -c : c;
      std::string body;
      if (atom.empty()) body = a.str();
      else if (a.is_one()) body = atom;
      else body = a.str() + "*" + atom;
      if (*count == 0) out += neg ? "-" + body : body;
      else out += neg ? " - " + body : " + " + body;
      ++*count;
    }
  }
  return out;
}

inline std::string upoly_str(const UPoly& p, int* count) {
  return terms_str(Scalar::Terms{{ParamMono{}, p}}, count);
}

}  // namespace detail

inline std::string Scalar::str() const {
  if (is_zero()) return "0";
  int nterms = 0;
  std::string n = detail::terms_str(num_, &nterms);
  if (den_.is_one()) return n;
  int dterms = 0;
  std::string d = detail::upoly_str(den_, &dterms);
  bool n_atomic = nterms == 1 && n.find('*') == std::string::npos && n.find('/') == std::string::npos &&
                  n[0] != '-';
  bool d_atomic = dterms == 1 && d.find('*') == std::string::npos;
  return (n_atomic ? n : "(" + n + ")") + "/" + (d_atomic ? d : "(" + d + ")");
}

inline std::string to_string(const Scalar& s) { return s.str(); }
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

/// k_q = (q^k - q^-k)/(q - q^-1) in hecke mode, the integer k in classical mode.
enum class QNumberMode { hecke, classical };

inline Scalar q_number(int k, QNumberMode mode) {
  if (k < 0) throw DomainError("q_number requires k >= 0");
  if (mode == QNumberMode::classical) return Scalar(static_cast<long>(k));
  Scalar acc(0);
  for (int i = 0; i < k; ++i) acc += Scalar::q_power(k - 1 - 2 * i);
  return acc;
}

/// Substitutes rational values for q and/or named parameters.
///
/// Assigning q a value in {0, 1, -1} raises GenericityError unless allow_nongeneric is set
/// (used for explicit classical-limit computations). A vanishing denominator raises PoleError.
inline Scalar specialize(const Scalar& x, const std::map<std::string, Rational>& assignment,
                         bool allow_nongeneric = false) {
  auto qit = assignment.find("q");
  if (qit != assignment.end() && !allow_nongeneric) {
    const Rational& v = qit->second;
    if (v.is_zero() || v == Rational(1) || v == Rational(-1))
      throw GenericityError("q must avoid 0, 1 and -1; got " + v.str());
  }
  if (x.is_zero()) return x;
  UPoly den = x.denominator();
  Rational den_val(1);
  if (qit != assignment.end()) {
    den_val = den.eval(qit->second);
    if (den_val.is_zero())
      throw PoleError("denominator " + Scalar(den).str() + " vanishes at q = " + qit->second.str());
  }
  Scalar acc(0);
  for (const auto& [m, p] : x.numerator()) {
    Scalar coeff = qit != assignment.end() ? Scalar(p.eval(qit->second)) : Scalar(p);
    ParamMono rest;
    for (const auto& [name, e] : m) {
      auto it = assignment.find(name);
      if (it == assignment.end()) {
        rest.emplace_back(name, e);
      } else {
        Rational v(1);
        for (int i = 0; i < e; ++i) v *= it->second;
        coeff = coeff * Scalar(v);
      }
    }
    Scalar mono(1);
    for (const auto& [name, e] : rest) mono = mono * Scalar::param(name).pow(e);
    acc += coeff * mono;
  }
  if (qit != assignment.end()) return acc * Scalar(den_val.inverse());
  return acc / Scalar(den);
}

/// Parses the plain-text scalar grammar: integers, a/b, q, parameter names,
/// + - * / ^ and parentheses. Exponents are (optionally negative) integers.
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : s_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar base = atom();
    if (eat('^')) {
      bool paren = eat('(');
      bool neg = eat('-');
      skip_ws();
      long e = integer_literal();
      if (paren && !eat(')')) fail("expected ')'");
      int k = static_cast<int>(neg ? -e : e);
      if (k < 0 && base.is_zero()) fail("negative power of zero");
      return base.pow(k);
    }
    return base;
  }
  long integer_literal() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 9) fail("exponent too large");
    return std::stol(digits);
  }
  Scalar atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(Rational(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return Scalar::param(std::string(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace qmads
