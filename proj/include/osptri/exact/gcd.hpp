#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "osptri/exact/poly.hpp"

namespace osptri {

/// Gcd of all integer coefficients (0 for the zero polynomial).
inline mpz_class integer_content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline ZPoly divide_integer(const ZPoly& p, const mpz_class& d) {
  std::vector<ZPoly::Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), t.coef.get_mpz_t(), d.get_mpz_t());
    ts.push_back({t.key, std::move(q)});
  }
  return ZPoly::from_sorted(std::move(ts));
}

/// Removes the integer content and makes the leading coefficient positive.
inline ZPoly primitive(const ZPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = integer_content(p);
  if (sgn(p.leading_coef()) < 0) g = -g;
  return g == 1 ? p : divide_integer(p, g);
}

/// Writes p = content * z with z an integer polynomial of content 1 and
/// positive leading coefficient.
inline std::pair<BigRat, ZPoly> to_integer_form(const MultiPoly& p) {
  if (p.is_zero()) return {BigRat(0), ZPoly()};
  mpz_class l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.value().get_den_mpz_t());
  std::vector<ZPoly::Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), l.get_mpz_t(), t.coef.value().get_den_mpz_t());
    c *= t.coef.value().get_num();
    ts.push_back({t.key, std::move(c)});
  }
  ZPoly z = ZPoly::from_sorted(std::move(ts));
  mpz_class g = integer_content(z);
  if (sgn(z.leading_coef()) < 0) g = -g;
  return {BigRat(g, l), divide_integer(z, g)};
}

inline MultiPoly to_rational(const ZPoly& z) {
  std::vector<MultiPoly::Term> ts;
  ts.reserve(z.size());
  for (const auto& t : z.terms()) ts.push_back({t.key, BigRat(t.coef)});
  return MultiPoly::from_sorted(std::move(ts));
}

/// Exact division in Z[vars]; nullopt when b does not divide a.
inline std::optional<ZPoly> exact_divide(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  if (a.is_zero()) return ZPoly();
  for (Var v : kAllVars)
    if (b.degree(v) > a.degree(v)) return std::nullopt;
  const auto& lt = b.leading();
  if (b.size() == 1) {
    std::vector<ZPoly::Term> ts;
    ts.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!keys::divides(lt.key, t.key) || !mpz_divisible_p(t.coef.get_mpz_t(), lt.coef.get_mpz_t()))
        return std::nullopt;
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), t.coef.get_mpz_t(), lt.coef.get_mpz_t());
      ts.push_back({keys::quotient(t.key, lt.key), std::move(q)});
    }
    return ZPoly::from_sorted(std::move(ts));
  }
  std::map<Key, mpz_class, std::greater<Key>> rem;
  for (const auto& t : a.terms()) rem.emplace_hint(rem.end(), t.key, t.coef);
  std::vector<ZPoly::Term> quot;
  mpz_class tmp;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (sgn(it->second) == 0) {
      rem.erase(it);
      continue;
    }
    if (!keys::divides(lt.key, it->first) || !mpz_divisible_p(it->second.get_mpz_t(), lt.coef.get_mpz_t()))
      return std::nullopt;
    Key qk = keys::quotient(it->first, lt.key);
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lt.coef.get_mpz_t());
    rem.erase(it);
    for (std::size_t i = 1; i < b.size(); ++i) {
      const auto& bt = b.terms()[i];
      tmp = bt.coef * qc;
      auto [pos, inserted] = rem.try_emplace(keys::mul(bt.key, qk));
      pos->second -= tmp;
      if (sgn(pos->second) == 0) rem.erase(pos);
    }
    quot.push_back({qk, std::move(qc)});
  }
  return ZPoly::from_sorted(std::move(quot));
}

inline ZPoly divide_or_throw(const ZPoly& a, const ZPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw Error("internal: inexact polynomial division");
  return *q;
}

namespace detail {

inline std::optional<Var> first_var(unsigned mask) {
  for (Var v : kAllVars)
    if (mask & (1u << static_cast<int>(v))) return v;
  return std::nullopt;
}

inline mpz_class max_norm(const ZPoly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms())
    if (mpz_cmpabs(t.coef.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coef);
  return m;
}

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b in the main variable,
/// with coefficients given as vectors indexed by power.
inline std::vector<ZPoly> prem(std::vector<ZPoly> a, const std::vector<ZPoly>& b) {
  auto trim = [](std::vector<ZPoly>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return a;
  const std::size_t delta = a.size() - b.size();
  const ZPoly& lb = b.back();
  std::size_t steps = 0;
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t da = a.size() - 1;
    ZPoly la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    a.pop_back();
    trim(a);
    ++steps;
  }
  if (steps < delta + 1) {
    ZPoly f = lb.pow(static_cast<unsigned>(delta + 1 - steps));
    for (auto& c : a) c *= f;
  }
  return a;
}

inline ZPoly gcd_prs(const ZPoly& f, const ZPoly& g);

/// Gcd of the coefficients of p viewed as a polynomial in v.
inline ZPoly content_in(const ZPoly& p, Var v) {
  ZPoly c;
  for (const auto& k : p.coeffs_in(v)) {
    if (k.is_zero()) continue;
    c = c.is_zero() ? primitive(k) : gcd_prs(c, k);
    if (c.is_constant()) break;
  }
  return c;
}

/// Recursive primitive-PRS gcd; slow but unconditional.
inline ZPoly gcd_prs(const ZPoly& f, const ZPoly& g) {
  if (f.is_zero()) return primitive(g);
  if (g.is_zero()) return primitive(f);
  auto v = first_var(f.var_mask() | g.var_mask());
  if (!v) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), f.constant_value().get_mpz_t(), g.constant_value().get_mpz_t());
    return ZPoly(r);
  }
  if (!f.has_var(*v)) return gcd_prs(f, content_in(g, *v));
  if (!g.has_var(*v)) return gcd_prs(content_in(f, *v), g);
  ZPoly cf = content_in(f, *v), cg = content_in(g, *v);
  ZPoly c = gcd_prs(cf, cg);
  std::vector<ZPoly> a = divide_or_throw(f, cf).coeffs_in(*v);
  std::vector<ZPoly> b = divide_or_throw(g, cg).coeffs_in(*v);
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    auto r = prem(a, b);
    if (r.empty()) break;
    if (r.size() == 1) {
      b = {ZPoly(1)};
      break;
    }
    ZPoly rp = ZPoly::from_coeffs(*v, r);
    rp = divide_or_throw(rp, content_in(rp, *v));
    a = std::move(b);
    b = rp.coeffs_in(*v);
  }
  ZPoly h = ZPoly::from_coeffs(*v, b);
  h = divide_or_throw(h, content_in(h, *v));
  return primitive(h * c);
}

struct HeuristicFailure {};

/// Symmetric residue of every coefficient modulo x, then (h - g) / x.
inline ZPoly interpolate(ZPoly h, const mpz_class& x, Var v) {
  std::vector<ZPoly::Term> out;
  mpz_class half = x / 2;
  unsigned power = 0;
  while (!h.is_zero()) {
    std::vector<ZPoly::Term> g;
    g.reserve(h.size());
    for (const auto& t : h.terms()) {
      mpz_class c;
      mpz_fdiv_r(c.get_mpz_t(), t.coef.get_mpz_t(), x.get_mpz_t());
      if (c > half) c -= x;
      if (sgn(c) != 0) g.push_back({t.key, c});
    }
    ZPoly gp = ZPoly::from_sorted(g);
    Key shift = keys::single(v, power);
    for (auto& t : g) out.push_back({keys::mul(t.key, shift), t.coef});
    h = h - gp;
    std::vector<ZPoly::Term> next;
    next.reserve(h.size());
    for (const auto& t : h.terms()) {
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), t.coef.get_mpz_t(), x.get_mpz_t());
      next.push_back({t.key, std::move(q)});
    }
    h = ZPoly::from_sorted(std::move(next));
    ++power;
  }
  return ZPoly::from_terms(std::move(out));
}

/// Heuristic gcd by evaluation at large integers and x-adic reconstruction,
/// with every candidate confirmed by exact division.
inline ZPoly gcd_heuristic(const ZPoly& f0, const ZPoly& g0, int depth = 0) {
  if (f0.is_zero()) return primitive(g0);
  if (g0.is_zero()) return primitive(f0);
  auto v = first_var(f0.var_mask() | g0.var_mask());
  mpz_class cf = integer_content(f0), cg = integer_content(g0), ci;
  mpz_gcd(ci.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  if (!v) return ZPoly(ci);
  ZPoly f = divide_integer(f0, ci), g = divide_integer(g0, ci);
  mpz_class nf = max_norm(f), ng = max_norm(g);
  mpz_class b = 2 * (nf < ng ? nf : ng) + 29;
  mpz_class x = sqrt(b) * 99;
  if (b < x) x = b;
  mpz_class lf = abs(f.leading_coef()), lg = abs(g.leading_coef());
  mpz_class alt = nf / lf;
  mpz_class alt2 = ng / lg;
  if (alt2 < alt) alt = alt2;
  alt = 2 * alt + 2;
  if (x < alt) x = alt;
  for (int attempt = 0; attempt < 6; ++attempt) {
    ZPoly ff = f.eval_var(*v, x), gg = g.eval_var(*v, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      ZPoly h = gcd_heuristic(ff, gg, depth + 1);
      h = primitive(interpolate(h, x, *v));
      if (!h.is_zero() && exact_divide(f, h) && exact_divide(g, h)) return h.scaled(ci);
    }
    mpz_class r = sqrt(sqrt(x));
    x = 73794 * x * r / 27011;
  }
  throw HeuristicFailure{};
}

}  // namespace detail

/// Greatest common divisor in Z[vars], primitive with positive leading
/// coefficient (gcd(0, 0) = 0).
inline ZPoly gcd(const ZPoly& f, const ZPoly& g) {
  if (f.is_zero() && g.is_zero()) return ZPoly();
  if (f.is_zero()) return primitive(g);
  if (g.is_zero()) return primitive(f);
  if (f.is_constant() || g.is_constant()) {
    mpz_class r = integer_content(f);
    mpz_class s = integer_content(g);
    mpz_gcd(r.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
    return ZPoly(r);
  }
  try {
    ZPoly h = detail::gcd_heuristic(f, g);
    return sgn(h.leading_coef()) < 0 ? -h : h;
  } catch (const detail::HeuristicFailure&) {
    return detail::gcd_prs(f, g);
  }
}

}  // namespace osptri
