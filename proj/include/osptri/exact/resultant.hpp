#pragma once

#include <string>
#include <utility>
#include <vector>

#include "osptri/exact/gcd.hpp"

namespace osptri {

namespace detail {

/// Subresultant PRS resultant of integer polynomials given by their
/// coefficient vectors in the eliminated variable (both of positive degree).
inline ZPoly subresultant(std::vector<ZPoly> a, std::vector<ZPoly> b) {
  auto deg = [](const std::vector<ZPoly>& p) { return static_cast<long>(p.size()) - 1; };
  int sign = 1;
  if (deg(a) < deg(b)) {
    if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) sign = -sign;
    std::swap(a, b);
  }
  ZPoly g(1), h(1);
  while (true) {
    long da = deg(a), db = deg(b);
    long delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) sign = -sign;
    std::vector<ZPoly> r = prem(a, b);
    if (r.empty()) return ZPoly();
    a = std::move(b);
    ZPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = divide_or_throw(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_throw(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (deg(b) <= 0) break;
  }
  long da = deg(a);
  const ZPoly& lb = b.back();
  if (da == 1) {
    h = lb;
  } else {
    h = divide_or_throw(lb.pow(static_cast<unsigned>(da)), h.pow(static_cast<unsigned>(da - 1)));
  }
  return sign < 0 ? -h : h;
}

}  // namespace detail

/// Resultant with respect to v, by the fraction-free subresultant PRS over
/// the integer-primitive forms. Both inputs need positive degree in v.
inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
  unsigned dp = p.degree(v), dq = q.degree(v);
  if (p.is_zero() || q.is_zero() || dp == 0 || dq == 0)
    throw DomainError("resultant needs positive degree in " + std::string(var_name(v)));
  auto [cp, zp] = to_integer_form(p);
  auto [cq, zq] = to_integer_form(q);
  ZPoly r = detail::subresultant(zp.coeffs_in(v), zq.coeffs_in(v));
  BigRat scale = cp.pow(dq) * cq.pow(dp);
  return to_rational(r).scaled(scale);
}

}  // namespace osptri
