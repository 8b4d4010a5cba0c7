#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "osptri/exact/gcd.hpp"

namespace osptri {

/// Canonical quotient of integer polynomials: gcd(num, den) = 1, the joint
/// integer content is 1 and den has a positive leading coefficient, so
/// structural equality decides equality of rational functions.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : RatFunc(BigRat(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const BigRat& c) : num_(c.num()), den_(c.den()) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const MultiPoly& p) : RatFunc(normalize(p, MultiPoly(1))) {}  // NOLINT(google-explicit-constructor)

  static RatFunc var(Var v) { return from_canonical(ZPoly::var(v), ZPoly(1)); }

  /// The canonical form of num/den; throws ZeroDenominator if den == 0.
  static RatFunc normalize(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    auto [cn, zn] = to_integer_form(num);
    auto [cd, zd] = to_integer_form(den);
    if (zn.is_zero()) return RatFunc();
    BigRat ratio = cn / cd;
    return normalize(zn.scaled(ratio.num()), zd.scaled(ratio.den()));
  }

  static RatFunc normalize(ZPoly num, ZPoly den) {
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num.is_zero()) return RatFunc();
    ZPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = divide_or_throw(num, g);
      den = divide_or_throw(den, g);
    }
    return finish(std::move(num), std::move(den));
  }

  MultiPoly num() const { return to_rational(num_); }
  MultiPoly den() const { return to_rational(den_); }
  const ZPoly& znum() const { return num_; }
  const ZPoly& zden() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function; throws DomainError otherwise.
  BigRat constant_value() const {
    if (!is_constant()) throw DomainError("rational function is not constant: " + str());
    return BigRat(num_.constant_value(), den_.constant_value());
  }
  unsigned var_mask() const { return num_.var_mask() | den_.var_mask(); }
  bool has_var(Var v) const { return num_.has_var(v) || den_.has_var(v); }

  RatFunc operator-() const { return from_canonical(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    ZPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    ZPoly n1 = g1.is_constant() ? a.num_ : divide_or_throw(a.num_, g1);
    ZPoly d2 = g1.is_constant() ? b.den_ : divide_or_throw(b.den_, g1);
    ZPoly n2 = g2.is_constant() ? b.num_ : divide_or_throw(b.num_, g2);
    ZPoly d1 = g2.is_constant() ? a.den_ : divide_or_throw(a.den_, g2);
    return finish(n1 * n2, d1 * d2);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  RatFunc inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero");
    return finish(den_, num_);
  }

  RatFunc pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return from_canonical(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// "num" when the denominator is 1, "p/q" for constants, otherwise
  /// "(num)/(den)".
  std::string str() const {
    if (den_ == ZPoly(1)) return num_.str();
    if (is_constant()) return constant_value().str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

  /// Adopts a pair already known to be canonical.
  static RatFunc from_canonical(ZPoly num, ZPoly den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

 private:
  /// Divides out the joint integer content and fixes the sign of den.
  static RatFunc finish(ZPoly num, ZPoly den) {
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num.is_zero()) return RatFunc();
    mpz_class c = integer_content(num), d = integer_content(den);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    if (sgn(den.leading_coef()) < 0) c = -c;
    if (c != 1) {
      num = divide_integer(num, c);
      den = divide_integer(den, c);
    }
    return from_canonical(std::move(num), std::move(den));
  }

  static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    if (a.den_ == b.den_) {
      ZPoly n = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      return normalize(std::move(n), a.den_);
    }
    ZPoly g = gcd(a.den_, b.den_);
    ZPoly ad = g.is_constant() ? a.den_ : divide_or_throw(a.den_, g);
    ZPoly bd = g.is_constant() ? b.den_ : divide_or_throw(b.den_, g);
    ZPoly n = subtract ? a.num_ * bd - b.num_ * ad : a.num_ * bd + b.num_ * ad;
    ZPoly d = ad * b.den_;
    if (n.is_zero()) return RatFunc();
    if (!g.is_constant()) {
      // only factors of g can be shared by n and d
      ZPoly h = gcd(n, g);
      if (!h.is_constant()) {
        n = divide_or_throw(n, h);
        d = divide_or_throw(d, h);
      }
    }
    return finish(std::move(n), std::move(d));
  }

  ZPoly num_;
  ZPoly den_;
};

namespace detail {

/// Homogenized simultaneous substitution into an integer polynomial:
/// returns N with p(v_i -> P_i/Q_i) = N / prod Q_i^deg_i(p).
inline ZPoly substitute_homogeneous(const ZPoly& p, const std::vector<std::pair<Var, RatFunc>>& subs,
                                    std::vector<unsigned>& degs) {
  degs.assign(subs.size(), 0);
  for (std::size_t i = 0; i < subs.size(); ++i) degs[i] = p.degree(subs[i].first);
  std::vector<std::vector<ZPoly>> ppow(subs.size()), qpow(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    ppow[i].push_back(ZPoly(1));
    qpow[i].push_back(ZPoly(1));
    for (unsigned e = 1; e <= degs[i]; ++e) {
      ppow[i].push_back(ppow[i].back() * subs[i].second.znum());
      qpow[i].push_back(qpow[i].back() * subs[i].second.zden());
    }
  }
  // group terms by the exponents of the substituted variables
  std::map<std::vector<unsigned>, std::vector<ZPoly::Term>> groups;
  for (const auto& t : p.terms()) {
    std::vector<unsigned> e(subs.size());
    Key rest = t.key;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      e[i] = keys::exponent(t.key, subs[i].first);
      rest = keys::drop(rest, subs[i].first);
    }
    groups[e].push_back({rest, t.coef});
  }
  ZPoly acc;
  for (auto& [e, ts] : groups) {
    ZPoly term = ZPoly::from_terms(std::move(ts));
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (e[i] > 0) term *= ppow[i][e[i]];
      if (degs[i] > e[i]) term *= qpow[i][degs[i] - e[i]];
    }
    acc += term;
  }
  return acc;
}

}  // namespace detail

/// Simultaneous substitution v_i -> g_i, re-normalized. Throws
/// ZeroDenominator when the composed denominator vanishes identically.
inline RatFunc substitute(const RatFunc& f, const std::vector<std::pair<Var, RatFunc>>& subs) {
  std::vector<std::pair<Var, RatFunc>> active;
  for (const auto& s : subs)
    if (f.has_var(s.first)) active.push_back(s);
  if (active.empty()) return f;
  std::vector<unsigned> dn, dd;
  ZPoly n = detail::substitute_homogeneous(f.znum(), active, dn);
  ZPoly d = detail::substitute_homogeneous(f.zden(), active, dd);
  for (std::size_t i = 0; i < active.size(); ++i) {
    const ZPoly& q = active[i].second.zden();
    if (dn[i] > dd[i]) d *= q.pow(dn[i] - dd[i]);
    if (dd[i] > dn[i]) n *= q.pow(dd[i] - dn[i]);
  }
  if (d.is_zero()) throw ZeroDenominator("substitution makes the denominator vanish identically");
  return RatFunc::normalize(std::move(n), std::move(d));
}

inline RatFunc substitute(const RatFunc& f, Var v, const RatFunc& g) { return substitute(f, {{v, g}}); }

/// Exact value at a full assignment. Throws MissingVariable if a variable of
/// f is unassigned and PoleError if the denominator vanishes there.
inline BigRat eval(const RatFunc& f, const std::map<Var, BigRat>& assignment) {
  unsigned mask = f.var_mask();
  for (Var v : kAllVars)
    if ((mask & (1u << static_cast<int>(v))) && !assignment.count(v))
      throw MissingVariable("no value for variable " + std::string(var_name(v)));
  auto value = [&](const ZPoly& p) {
    BigRat acc(0);
    for (const auto& t : p.terms()) {
      BigRat term{BigRat(t.coef)};
      for (Var v : kAllVars) {
        unsigned e = keys::exponent(t.key, v);
        if (e) term *= assignment.at(v).pow(e);
      }
      acc += term;
    }
    return acc;
  };
  BigRat d = value(f.zden());
  if (d.is_zero()) throw PoleError("pole: denominator vanishes at the given point");
  return value(f.znum()) / d;
}

/// Partial evaluation: substitutes the assigned variables by constants.
inline RatFunc specialize(const RatFunc& f, const std::map<Var, BigRat>& assignment) {
  std::vector<std::pair<Var, RatFunc>> subs;
  for (const auto& [v, c] : assignment) subs.emplace_back(v, RatFunc(c));
  return substitute(f, subs);
}

}  // namespace osptri
