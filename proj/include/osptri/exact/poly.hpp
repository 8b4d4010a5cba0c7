#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "osptri/exact/bigrat.hpp"
#include "osptri/exact/monomial.hpp"

namespace osptri {

namespace coef {
inline bool is_zero(const BigRat& c) { return c.is_zero(); }
inline bool is_zero(const mpz_class& c) { return sgn(c) == 0; }
inline int sign(const BigRat& c) { return c.sign(); }
inline int sign(const mpz_class& c) { return sgn(c); }
inline std::string str(const BigRat& c) { return c.str(); }
inline std::string str(const mpz_class& c) { return c.get_str(); }
}  // namespace coef

/// Sparse multivariate polynomial over the variable universe. Terms are kept
/// sorted by descending packed key (graded-lex) with no zero coefficients.
template <class C>
class Poly {
 public:
  struct Term {
    Key key;
    C coef;
  };

  Poly() = default;
  Poly(const C& c) {  // NOLINT(google-explicit-constructor)
    if (!coef::is_zero(c)) terms_.push_back({Key{0}, c});
  }
  Poly(long c) : Poly(C(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly var(Var v, unsigned e = 1) {
    Poly p;
    p.terms_.push_back({keys::single(v, e), C(1)});
    return p;
  }

  static Poly monomial(Key k, const C& c) {
    Poly p;
    if (!coef::is_zero(c)) p.terms_.push_back({k, c});
    return p;
  }

  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Poly from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
    Poly p;
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().key == t.key) {
        p.terms_.back().coef += t.coef;
      } else {
        if (!p.terms_.empty() && coef::is_zero(p.terms_.back().coef)) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && coef::is_zero(p.terms_.back().coef)) p.terms_.pop_back();
    return p;
  }

  /// Adopts terms already sorted descending with no duplicates or zeros.
  static Poly from_sorted(std::vector<Term> ts) {
    Poly p;
    p.terms_ = std::move(ts);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
  C constant_value() const { return terms_.empty() || terms_.back().key != 0 ? C(0) : terms_.back().coef; }
  const Term& leading() const { return terms_.front(); }
  const C& leading_coef() const { return terms_.front().coef; }

  unsigned degree(Var v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, keys::exponent(t.key, v));
    return d;
  }
  unsigned total_degree() const { return terms_.empty() ? 0 : keys::total(terms_.front().key); }
  bool has_var(Var v) const {
    for (const auto& t : terms_)
      if (keys::exponent(t.key, v) != 0) return true;
    return false;
  }
  /// Bitmask of variables that occur.
  unsigned var_mask() const {
    unsigned mask = 0;
    for (const auto& t : terms_)
      for (Var v : kAllVars)
        if (keys::exponent(t.key, v) != 0) mask |= 1u << static_cast<int>(v);
    return mask;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  Poly& operator+=(const Poly& b) { return *this = merge(*this, b, false); }
  Poly& operator-=(const Poly& b) { return *this = merge(*this, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
  Poly& operator*=(const Poly& b) { return *this = multiply(*this, b); }

  Poly scaled(const C& c) const {
    if (coef::is_zero(c)) return Poly();
    Poly p = *this;
    for (auto& t : p.terms_) t.coef *= c;
    return p;
  }

  /// Multiplies by a monomial and a coefficient; order is preserved.
  Poly shifted(Key k, const C& c) const {
    if (coef::is_zero(c)) return Poly();
    Poly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({keys::mul(t.key, k), t.coef * c});
    return p;
  }

  Poly pow(unsigned e) const {
    Poly result(C(1)), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }

  /// Coefficients with respect to v: result[i] multiplies v^i.
  std::vector<Poly> coeffs_in(Var v) const {
    std::vector<std::vector<Term>> buckets(degree(v) + 1);
    for (const auto& t : terms_) {
      unsigned e = keys::exponent(t.key, v);
      buckets[e].push_back({keys::drop(t.key, v), t.coef});
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    // dropping a variable from sorted keys can break the ordering
    for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
    return out;
  }

  /// Inverse of coeffs_in.
  static Poly from_coeffs(Var v, const std::vector<Poly>& cs) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      Key k = keys::single(v, static_cast<unsigned>(i));
      for (const auto& t : cs[i].terms_) ts.push_back({keys::mul(t.key, k), t.coef});
    }
    return from_terms(std::move(ts));
  }

  /// Substitutes a constant for v.
  Poly eval_var(Var v, const C& value) const {
    auto cs = coeffs_in(v);
    Poly acc;
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc.scaled(value) + cs[i];
    return acc;
  }

  /// Leading coefficient (as a polynomial) with respect to v.
  Poly lead_in(Var v) const {
    unsigned d = degree(v);
    std::vector<Term> ts;
    for (const auto& t : terms_)
      if (keys::exponent(t.key, v) == d) ts.push_back({keys::drop(t.key, v), t.coef});
    return from_terms(std::move(ts));
  }

  /// Canonical text: graded-lex descending, explicit '*' and '^'.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      C c = t.coef;
      bool neg = coef::sign(c) < 0;
      if (neg) c = -c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono = keys::to_string(t.key);
      std::string cs = coef::str(c);
      if (mono.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += mono;
      } else {
        out += cs + "*" + mono;
      }
    }
    return out;
  }

 private:
  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].key > b.terms_[j].key)) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].key > a.terms_[i].key) {
        out.terms_.push_back(b.terms_[j]);
        if (subtract) out.terms_.back().coef = -out.terms_.back().coef;
        ++j;
      } else {
        C c = subtract ? C(a.terms_[i].coef - b.terms_[j].coef) : C(a.terms_[i].coef + b.terms_[j].coef);
        if (!coef::is_zero(c)) out.terms_.push_back({a.terms_[i].key, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  static Poly multiply(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.terms_.size() == 1) return b.shifted(a.terms_[0].key, a.terms_[0].coef);
    if (b.terms_.size() == 1) return a.shifted(b.terms_[0].key, b.terms_[0].coef);
    std::unordered_map<Key, C, keys::Hash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    C tmp;
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) {
        tmp = x.coef * y.coef;
        acc[keys::mul(x.key, y.key)] += tmp;
      }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [k, c] : acc)
      if (!coef::is_zero(c)) ts.push_back({k, std::move(c)});
    std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) { return x.key > y.key; });
    return from_sorted(std::move(ts));
  }

  std::vector<Term> terms_;
};

/// Polynomials over the rationals: the public polynomial type.
using MultiPoly = Poly<BigRat>;
/// Polynomials over the integers: used internally for gcd and resultants.
using ZPoly = Poly<mpz_class>;

/// The packed exponent vector doubles as the monomial type.
using Monomial = Key;

}  // namespace osptri
