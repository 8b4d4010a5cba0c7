#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "osptri/exact/gcd.hpp"

namespace osptri {

/// Dense univariate polynomial over the rationals in a designated variable.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(Var v, std::vector<BigRat> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

  /// Requires p to involve no variable other than v.
  static UniPoly from_multi(const MultiPoly& p, Var v) {
    if ((p.var_mask() & ~(1u << static_cast<int>(v))) != 0)
      throw DomainError("polynomial is not univariate in " + std::string(var_name(v)) + ": " + p.str());
    std::vector<BigRat> c(p.degree(v) + 1);
    for (const auto& t : p.terms()) c[keys::exponent(t.key, v)] = t.coef;
    return UniPoly(v, std::move(c));
  }

  MultiPoly to_multi() const {
    std::vector<MultiPoly::Term> ts;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) ts.push_back({keys::single(var_, static_cast<unsigned>(i)), c_[i]});
    return MultiPoly::from_terms(std::move(ts));
  }

  Var var() const { return var_; }
  const std::vector<BigRat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigRat& leading_coef() const { return c_.back(); }

  BigRat operator()(const BigRat& x) const {
    BigRat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.var_ == b.var_ && a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Var var_ = Var::psi;
  std::vector<BigRat> c_;
};

namespace detail {

using ModPoly = std::vector<std::uint64_t>;

inline void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1u) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
    b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
    e >>= 1u;
  }
  return r;
}

/// Gcd over F_p (p prime) of two dense polynomials.
inline ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  mod_trim(a);
  mod_trim(b);
  while (!b.empty()) {
    std::uint64_t inv = mod_pow(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      std::uint64_t f = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.back()) * inv % p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - static_cast<std::uint64_t>(static_cast<unsigned __int128>(f) * b[i] % p)) % p;
      mod_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

/// Rational roots of a squarefree primitive integer polynomial with nonzero
/// constant term, by p-adic lifting of the simple roots modulo a good prime.
/// Every candidate satisfies the rational-root theorem bound and is checked
/// by exact evaluation.
inline std::vector<BigRat> lifted_rational_roots(const std::vector<mpz_class>& f) {
  const std::size_t deg = f.size() - 1;
  std::vector<BigRat> roots;
  if (deg == 0) return roots;
  const mpz_class& lc = f.back();
  mpz_class bound = abs(lc);
  mpz_class mx = 0;
  for (const auto& c : f)
    if (mpz_cmpabs(c.get_mpz_t(), mx.get_mpz_t()) > 0) mx = abs(c);
  bound += mx;  // |lc * root| <= |lc| + max |a_i| (Cauchy)
  std::vector<mpz_class> df(deg);
  for (std::size_t i = 1; i <= deg; ++i) df[i - 1] = f[i] * static_cast<unsigned long>(i);

  mpz_class prime = 2;
  while (true) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    if (prime < 3 * static_cast<long>(deg) + 11) continue;
    if (mpz_divisible_p(lc.get_mpz_t(), prime.get_mpz_t())) continue;
    std::uint64_t p = prime.get_ui();
    ModPoly fm(deg + 1), dm(deg);
    for (std::size_t i = 0; i <= deg; ++i) fm[i] = mpz_class(f[i] % prime + prime).get_ui() % p;
    for (std::size_t i = 0; i < deg; ++i) dm[i] = mpz_class(df[i] % prime + prime).get_ui() % p;
    if (mod_gcd(fm, dm, p).size() != 1) continue;  // not squarefree mod p
    std::vector<std::uint64_t> small;
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t acc = 0;
      for (std::size_t i = fm.size(); i-- > 0;)
        acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * x + fm[i]) % p);
      if (acc == 0) small.push_back(x);
    }
    for (std::uint64_t r0 : small) {
      mpz_class r = r0, mod = prime;
      while (mod <= 2 * bound) {
        mod *= mod;
        mpz_class fv = 0, dv = 0;
        for (std::size_t i = f.size(); i-- > 0;) fv = (fv * r + f[i]) % mod;
        for (std::size_t i = df.size(); i-- > 0;) dv = (dv * r + df[i]) % mod;
        mpz_class inv;
        if (!mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), mod.get_mpz_t())) break;
        r = (r - fv * inv) % mod;
        if (r < 0) r += mod;
      }
      mpz_class z = (lc * r) % mod;
      if (z < 0) z += mod;
      if (z > mod / 2) z -= mod;
      BigRat cand(z, lc);
      BigRat acc(0);
      for (std::size_t i = f.size(); i-- > 0;) acc = acc * cand + BigRat(f[i]);
      if (acc.is_zero()) roots.push_back(cand);
    }
    return roots;
  }
}

}  // namespace detail

/// All rational roots, ascending and without repetition.
inline std::vector<BigRat> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  auto [content, z] = to_integer_form(p.to_multi());
  (void)content;
  Var v = p.var();
  std::vector<BigRat> roots;
  // strip the factor v^k
  auto cs = z.coeffs_in(v);
  std::size_t low = 0;
  while (low < cs.size() && cs[low].is_zero()) ++low;
  if (low > 0) roots.push_back(BigRat(0));
  std::vector<ZPoly> shifted(cs.begin() + static_cast<std::ptrdiff_t>(low), cs.end());
  ZPoly q = ZPoly::from_coeffs(v, shifted);
  if (q.degree(v) > 0) {
    ZPoly dq = ZPoly::from_coeffs(v, [&] {
      auto c = q.coeffs_in(v);
      std::vector<ZPoly> d;
      for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i].scaled(mpz_class(static_cast<unsigned long>(i))));
      return d;
    }());
    ZPoly g = gcd(q, dq);
    ZPoly sqf = g.is_constant() ? q : divide_or_throw(q, g);
    std::vector<mpz_class> dense(sqf.degree(v) + 1);
    for (const auto& t : sqf.terms()) dense[keys::exponent(t.key, v)] = t.coef;
    auto more = detail::lifted_rational_roots(dense);
    roots.insert(roots.end(), more.begin(), more.end());
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace osptri
