#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osptri/liedata.hpp"

namespace osptri {

/// Rational parametrization psi -> (c(psi), lambda(psi)) of a truncation
/// curve. Coefficients may still involve n, m, r.
struct TruncationCurve {
  RatFunc c;
  RatFunc lambda;

  friend bool operator==(const TruncationCurve&, const TruncationCurve&) = default;
};

struct CurvePoint {
  RatFunc c;
  RatFunc lambda;
};

namespace detail {

// Numerator factors of the 2B curve.
inline const char* const kCurveF =
    "-19*m + 80*m^3 - 16*m^5 + 19*n - 240*m^2*n + 80*m^4*n + 240*m*n^2 - 160*m^3*n^2 - 80*n^3"
    " + 160*m^2*n^3 - 80*m*n^4 + 16*n^5 + 49*psi + 114*m*psi - 364*m^2*psi - 640*m^3*psi"
    " + 160*m^5*psi - 76*n*psi + 728*m*n*psi + 1440*m^2*n*psi - 640*m^4*n*psi - 364*n^2*psi"
    " - 960*m*n^2*psi + 960*m^3*n^2*psi + 160*n^3*psi - 640*m^2*n^3*psi + 160*m*n^4*psi - 196*psi^2"
    " - 380*m*psi^2 + 2184*m^2*psi^2 + 2240*m^3*psi^2 - 640*m^5*psi^2 + 228*n*psi^2 - 2912*m*n*psi^2"
    " - 3840*m^2*n*psi^2 + 1920*m^4*n*psi^2 + 728*n^2*psi^2 + 1920*m*n^2*psi^2 - 1920*m^3*n^2*psi^2"
    " - 320*n^3*psi^2 + 640*m^2*n^3*psi^2 + 392*psi^3 + 760*m*psi^3 - 4368*m^2*psi^3 - 4480*m^3*psi^3"
    " + 1280*m^5*psi^3 - 304*n*psi^3 + 2912*m*n*psi^3 + 5760*m^2*n*psi^3 - 2560*m^4*n*psi^3"
    " - 1920*m*n^2*psi^3 + 1280*m^3*n^2*psi^3 - 392*psi^4 - 912*m*psi^4 + 2912*m^2*psi^4"
    " + 5120*m^3*psi^4 - 1280*m^5*psi^4 + 304*n*psi^4 - 3840*m^2*n*psi^4 + 1280*m^4*n*psi^4"
    " + 608*m*psi^5 - 2560*m^3*psi^5 + 512*m^5*psi^5";
inline const char* const kCurveG = "-7 + 4*m^2 - 8*m*n + 4*n^2 + 14*psi - 16*m^2*psi + 16*m*n*psi - 28*psi^2 + 16*m^2*psi^2";
inline const char* const kCurveH =
    "5*m - 20*m^3 - 5*n + 60*m^2*n - 60*m*n^2 + 20*n^3 + 49*psi - 20*m*psi + 120*m^3*psi + 10*n*psi"
    " - 240*m^2*n*psi + 120*m*n^2*psi - 98*psi^2 + 40*m*psi^2 - 240*m^3*psi^2 - 20*n*psi^2"
    " + 240*m^2*n*psi^2 - 40*m*psi^3 + 160*m^3*psi^3";

// Numerator factors of the 2B / principal sp intersection point.
inline const char* const kPointF =
    "-68*n - 408*m*n - 816*m^2*n - 544*m^3*n + 136*n^2 + 544*m*n^2 + 544*m^2*n^2 + 96*n^3 + 192*m*n^3"
    " - 49*r - 256*m*r - 360*m^2*r + 64*m^3*r + 304*m^4*r - 212*n*r - 1000*m*n*r - 1456*m^2*n*r"
    " - 608*m^3*n*r + 92*n^2*r - 1296*m*n^2*r - 2960*m^2*n^2*r + 1824*n^3*r + 3264*m*n^3*r"
    " - 576*n^4*r - 196*r^2 - 632*m*r^2 - 176*m^2*r^2 + 608*m^3*r^2 - 772*n*r^2 - 3000*m*n*r^2"
    " - 496*m^2*n*r^2 + 4832*m^3*n*r^2 + 640*n^2*r^2 - 5792*m*n^2*r^2 - 9664*m^2*n^2*r^2"
    " + 4176*n^3*r^2 + 6432*m*n^3*r^2 - 1600*n^4*r^2 - 392*r^3 - 328*m*r^3 + 2368*m^2*r^3"
    " + 2272*m^3*r^3 - 1280*m^4*r^3 - 1544*n*r^3 - 5824*m*n*r^3 + 928*m^2*n*r^3 + 3840*m^3*n*r^3"
    " + 2240*n^2*r^3 - 4512*m*n^2*r^3 - 4480*m^2*n^2*r^3 + 1312*n^3*r^3 + 2560*m*n^3*r^3"
    " - 640*n^4*r^3 - 392*r^4 + 608*m*r^4 + 2912*m^2*r^4 - 1280*m^3*r^4 - 912*n*r^4 - 2784*m*n*r^4"
    " + 1600*m^2*n*r^4 - 640*m^3*n*r^4 - 128*n^2*r^4 + 640*m*n^2*r^4 + 1920*m^2*n^2*r^4 - 960*n^3*r^4"
    " - 1920*m*n^3*r^4 + 640*n^4*r^4 + 608*m*r^5 - 1216*m^2*r^5 - 128*m^3*r^5 + 256*m^4*r^5"
    " - 608*n*r^5 + 2432*m*n*r^5 + 384*m^2*n*r^5 - 1024*m^3*n*r^5 - 1216*n^2*r^5 - 384*m*n^2*r^5"
    " + 1536*m^2*n^2*r^5 + 128*n^3*r^5 - 1024*m*n^3*r^5 + 256*n^4*r^5";
inline const char* const kPointG =
    "-7 - 28*m - 28*m^2 + 14*n + 28*m*n - 24*n^2 - 14*r - 28*m*r - 28*n*r - 16*m*n*r + 16*n^2*r"
    " - 28*r^2 + 16*m^2*r^2 - 32*m*n*r^2 + 16*n^2*r^2";
inline const char* const kPointH =
    "-44*n - 88*m*n - 49*r - 108*m*r - 20*m^2*r - 78*n*r + 20*m*n*r + 40*n^2*r - 98*r^2 - 20*m*r^2"
    " + 40*n*r^2 - 120*m*n*r^2 + 120*n^2*r^2 - 40*m*r^3 + 80*m^2*r^3 + 40*n*r^3 - 160*m*n*r^3"
    " + 80*n^2*r^3";

inline const RatFunc& curve_f() {
  static const RatFunc v = parse_ratfunc(kCurveF);
  return v;
}
inline const RatFunc& curve_g() {
  static const RatFunc v = parse_ratfunc(kCurveG);
  return v;
}
inline const RatFunc& curve_h() {
  static const RatFunc v = parse_ratfunc(kCurveH);
  return v;
}
inline const RatFunc& point_f() {
  static const RatFunc v = parse_ratfunc(kPointF);
  return v;
}
inline const RatFunc& point_g() {
  static const RatFunc v = parse_ratfunc(kPointG);
  return v;
}
inline const RatFunc& point_h() {
  static const RatFunc v = parse_ratfunc(kPointH);
  return v;
}

inline TruncationCurve map_psi(const TruncationCurve& curve, const RatFunc& g) {
  return {substitute(curve.c, Var::psi, g), substitute(curve.lambda, Var::psi, g)};
}

}  // namespace detail

/// Phi_{2B,n,m}(psi) with n, m rational or symbolic. Throws DomainError when
/// a denominator factor of lambda vanishes identically (possible only at
/// half-integer parameters).
inline TruncationCurve phi_2B(const RatFunc& n, const RatFunc& m) {
  const RatFunc psi = RatFunc::var(Var::psi);
  const RatFunc one(1), two(2), four(4);
  std::vector<std::pair<Var, RatFunc>> nm{{Var::n, n}, {Var::m, m}};
  RatFunc f = substitute(detail::curve_f(), nm);
  RatFunc g = substitute(detail::curve_g(), nm);
  RatFunc h = substitute(detail::curve_h(), nm);
  RatFunc c = -((-m + n - psi + two * m * psi) * (one - two * m + two * n + four * m * psi) *
                (-one - two * m + two * n + two * psi + four * m * psi)) /
              (two * psi * (two * psi - one));
  RatFunc den = RatFunc(7) * (-m + n + psi + two * m * psi) * (-one - two * m + two * n + four * m * psi) *
                (one - two * m + two * n - two * psi + four * m * psi) * g * h;
  if (den.is_zero())
    throw DomainError("lambda_2B is undefined at n = " + n.str() + ", m = " + m.str());
  RatFunc lambda = -(two * psi * (two * psi - one) * f) / den;
  return {c, lambda};
}

inline TruncationCurve phi_2B(const BigRat& n, const BigRat& m) { return phi_2B(RatFunc(n), RatFunc(m)); }

/// Base curve used by phi_expr; tests substitute perturbed variants.
using BaseCurveFn = std::function<TruncationCurve(const RatFunc&, const RatFunc&)>;

/// Phi_{iX,n,m}(psi) by the fixed derivation routes from Phi_{2B}:
///   1O(n,m) = 2B(n, m+1/2) at psi/2,  2D(n,m) = 2B(n-1/2, m),
///   1C(n,m) = 2B(n+1/2, m+1/2) at psi/2,
///   1B(n,m) = 1O(n, m+n) at 1/psi,    1D(n,m) = 2D(n, m+n) at 1/(2 psi),
///   2C(n,m) = 1C(n, m+n) at 1/(2 psi), 2O(n,m) = 2B(n, m+n) at 1/(4 psi).
/// n, m need not be integral or non-negative.
inline TruncationCurve phi_expr(Family f, const RatFunc& n, const RatFunc& m, const BaseCurveFn& base = nullptr) {
  const RatFunc psi = RatFunc::var(Var::psi);
  const RatFunc half(BigRat(1, 2));
  auto b = [&](const RatFunc& nn, const RatFunc& mm) { return base ? base(nn, mm) : phi_2B(nn, mm); };
  switch (f) {
    case Family::F2B: return b(n, m);
    case Family::F1O: return detail::map_psi(b(n, m + half), psi * half);
    case Family::F2D: return b(n - half, m);
    case Family::F1C: return detail::map_psi(b(n + half, m + half), psi * half);
    case Family::F1B: return detail::map_psi(phi_expr(Family::F1O, n, m + n, base), psi.inverse());
    case Family::F1D: return detail::map_psi(phi_expr(Family::F2D, n, m + n, base), (RatFunc(2) * psi).inverse());
    case Family::F2C: return detail::map_psi(phi_expr(Family::F1C, n, m + n, base), (RatFunc(2) * psi).inverse());
    case Family::F2O: return detail::map_psi(phi_expr(Family::F2B, n, m + n, base), (RatFunc(4) * psi).inverse());
  }
  return {};
}

inline TruncationCurve phi(const HookFamily& fam) { return phi_expr(fam.family(), RatFunc(fam.n()), RatFunc(fam.m())); }

// ---------------------------------------------------------------------------
// Triality identities
// ---------------------------------------------------------------------------

struct IdentityCheck {
  std::string name;
  bool pass = false;
  /// Canonical differences (left minus right) when the check fails.
  std::string c_difference;
  std::string lambda_difference;
};

struct TrialityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
  }
};

/// Checks the eight pairwise equalities
///   Phi_{2B,n,m}(psi) = Phi_{2O,n,m-n}(1/(4psi))   = Phi_{2B,m,n}(psi/(2psi-1)),
///   Phi_{1C,n,m}(psi) = Phi_{2C,n,m-n}(1/(2psi))   = Phi_{1C,m,n}(psi/(psi-1)),
///   Phi_{2D,n,m}(psi) = Phi_{1D,n,m-n}(1/(2psi))   = Phi_{1O,m,n-1}(2psi/(2psi-1)),
///   Phi_{1O,n,m}(psi) = Phi_{1B,n,m-n}(1/psi)      = Phi_{2D,m+1,n}(psi/(2(psi-1)))
/// with n, m integers or symbols.
inline TrialityReport verify_trialities_expr(const RatFunc& n, const RatFunc& m, const BaseCurveFn& base = nullptr) {
  const RatFunc psi = RatFunc::var(Var::psi);
  const RatFunc one(1), two(2), four(4);
  struct Line {
    Family lhs;
    Family mid;
    RatFunc mid_n, mid_m, mid_map;
    Family rhs;
    RatFunc rhs_n, rhs_m, rhs_map;
  };
  const std::vector<Line> lines = {
      {Family::F2B, Family::F2O, n, m - n, (four * psi).inverse(), Family::F2B, m, n, psi / (two * psi - one)},
      {Family::F1C, Family::F2C, n, m - n, (two * psi).inverse(), Family::F1C, m, n, psi / (psi - one)},
      {Family::F2D, Family::F1D, n, m - n, (two * psi).inverse(), Family::F1O, m, n - one,
       two * psi / (two * psi - one)},
      {Family::F1O, Family::F1B, n, m - n, psi.inverse(), Family::F2D, m + one, n, psi / (two * (psi - one))},
  };
  TrialityReport report;
  auto compare = [&](const std::string& name, const TruncationCurve& a, const TruncationCurve& b) {
    IdentityCheck chk;
    chk.name = name;
    chk.pass = a == b;
    if (!chk.pass) {
      chk.c_difference = (a.c - b.c).str();
      chk.lambda_difference = (a.lambda - b.lambda).str();
    }
    report.checks.push_back(std::move(chk));
  };
  for (const auto& L : lines) {
    TruncationCurve left = phi_expr(L.lhs, n, m, base);
    TruncationCurve mid = detail::map_psi(phi_expr(L.mid, L.mid_n, L.mid_m, base), L.mid_map);
    TruncationCurve right = detail::map_psi(phi_expr(L.rhs, L.rhs_n, L.rhs_m, base), L.rhs_map);
    std::string tag = std::string(family_tag(L.lhs));
    compare(tag + " = " + std::string(family_tag(L.mid)) + " at " + L.mid_map.str(), left, mid);
    compare(tag + " = " + std::string(family_tag(L.rhs)) + " at " + L.rhs_map.str(), left, right);
  }
  return report;
}

/// Integer form; requires m >= n >= 0 and m + n >= 1.
inline TrialityReport verify_trialities(long n, long m) {
  if (n < 0 || m < n || n + m < 1) throw DomainError("verify_trialities needs m >= n >= 0 and m + n >= 1");
  return verify_trialities_expr(RatFunc(n), RatFunc(m));
}

// ---------------------------------------------------------------------------
// Known intersection with the principal sp curve
// ---------------------------------------------------------------------------

struct KnownPointCheck {
  CurvePoint point;
  RatFunc psi_star;
  bool consistent = false;
};

/// The printed intersection point of Phi_{2B,n,m} with the curve of
/// W^s(sp_{2r}), checked against Phi_{2B,n,m} at
/// psi* = (1+2m-2n)/(2(1+2m+2r)).
inline KnownPointCheck known_point_2B_sp(const RatFunc& n, const RatFunc& m, const RatFunc& r) {
  const RatFunc one(1), two(2), four(4);
  std::vector<std::pair<Var, RatFunc>> nmr{{Var::n, n}, {Var::m, m}, {Var::r, r}};
  RatFunc f = substitute(detail::point_f(), nmr);
  RatFunc g = substitute(detail::point_g(), nmr);
  RatFunc h = substitute(detail::point_h(), nmr);
  KnownPointCheck out;
  out.point.c = -(r * (-one - two * m + four * n - four * m * r + four * n * r) *
                  (one + two * m + two * n + two * r - four * m * r + four * n * r)) /
                (two * (n + r) * (one + two * m + two * r));
  out.point.lambda = -(two * (n + r) * (one + two * m + two * r) * f) /
                     (RatFunc(7) * (one + two * r) * (two * n + r - two * m * r + two * n * r) *
                      (one + two * m - four * m * r + four * n * r) * g * h);
  out.psi_star = (one + two * m - two * n) / (two * (one + two * m + two * r));
  TruncationCurve at = detail::map_psi(phi_2B(n, m), out.psi_star);
  out.consistent = at.c == out.point.c && at.lambda == out.point.lambda;
  return out;
}

// ---------------------------------------------------------------------------
// Intersection of two numeric curves
// ---------------------------------------------------------------------------

/// Central charges at which simple quotients degenerate; coincidences there
/// need not come from curve intersections.
inline bool is_degenerate_charge(const BigRat& c) {
  return c == BigRat(0) || c == BigRat(1) || c == BigRat(-24) || c == BigRat(-22, 5) || c == BigRat(1, 2);
}

struct IntersectionPoint {
  BigRat psi1, psi2, c, lambda;
  bool degenerate = false;

  friend bool operator==(const IntersectionPoint&, const IntersectionPoint&) = default;
};

struct IntersectionResult {
  std::vector<IntersectionPoint> points;
  /// Common factors of both equations in (psi1, psi2): one-dimensional
  /// components such as the diagonal psi1 = psi2 for a self-intersection.
  std::vector<std::string> identity_components;
  /// The same components as polynomials in psi1, psi2.
  std::vector<RatFunc> component_equations;
  /// Degree in psi1 of the eliminant left after removing its rational roots.
  long residual_degree = 0;
};

namespace detail {

inline void require_psi_only(const TruncationCurve& t, const char* which) {
  unsigned allowed = 1u << static_cast<int>(Var::psi);
  if (((t.c.var_mask() | t.lambda.var_mask()) & ~allowed) != 0)
    throw DomainError(std::string("curve ") + which + " has residual symbols other than psi");
  if (!t.c.has_var(Var::psi)) throw DomainError(std::string("curve ") + which + " has constant central charge");
}

inline ZPoly strip_factor(const ZPoly& p, const ZPoly& g) { return g.is_constant() ? p : divide_or_throw(p, g); }

inline UniPoly univariate(const ZPoly& p, Var v) { return UniPoly::from_multi(to_rational(p), v); }

inline std::optional<BigRat> try_eval(const RatFunc& f, Var v, const BigRat& x) {
  try {
    return eval(f, {{v, x}});
  } catch (const PoleError&) {
    return std::nullopt;
  }
}

inline long squarefree_degree(const ZPoly& p, Var v) {
  std::vector<ZPoly> cs = p.coeffs_in(v), ds;
  for (std::size_t i = 1; i < cs.size(); ++i) ds.push_back(cs[i].scaled(mpz_class(static_cast<long>(i))));
  ZPoly dp = ZPoly::from_coeffs(v, ds);
  ZPoly g = gcd(p, dp);
  return static_cast<long>(p.degree(v)) - static_cast<long>(g.degree(v));
}

}  // namespace detail

/// All rational solutions of c_A(psi1) = c_B(psi2), lambda_A(psi1) =
/// lambda_B(psi2). Poles are discarded, degenerate central charges flagged.
inline IntersectionResult intersect(const TruncationCurve& A, const TruncationCurve& B) {
  detail::require_psi_only(A, "A");
  detail::require_psi_only(B, "B");
  const RatFunc p1 = RatFunc::var(Var::psi1), p2 = RatFunc::var(Var::psi2);
  TruncationCurve a = detail::map_psi(A, p1), b = detail::map_psi(B, p2);
  ZPoly P = (a.c - b.c).znum();
  ZPoly Q = (a.lambda - b.lambda).znum();
  IntersectionResult out;
  ZPoly G = gcd(P, Q);
  if (!G.is_constant()) {
    if (G.has_var(Var::psi1) && G.has_var(Var::psi2)) {
      out.identity_components.push_back(to_rational(G).str() + " = 0");
      out.component_equations.emplace_back(to_rational(G));
    }
    P = detail::strip_factor(P, G);
    Q = detail::strip_factor(Q, G);
  }

  // Candidate psi1 values: rational roots of an eliminant in psi1.
  ZPoly E;
  bool ok = true;
  if (P.is_zero() || Q.is_zero()) {
    ok = false;
  } else if (P.degree(Var::psi2) == 0) {
    E = P;
  } else if (Q.degree(Var::psi2) == 0) {
    E = Q;
  } else {
    E = to_integer_form(resultant(to_rational(P), to_rational(Q), Var::psi2)).second;
  }
  std::vector<BigRat> cand1;
  if (ok && !E.is_constant()) {
    cand1 = rational_roots(detail::univariate(E, Var::psi1));
    long sq = detail::squarefree_degree(E, Var::psi1);
    out.residual_degree = sq - static_cast<long>(cand1.size());
  }

  for (const BigRat& x : cand1) {
    RatFunc px = specialize(RatFunc(to_rational(P)), {{Var::psi1, x}});
    RatFunc qx = specialize(RatFunc(to_rational(Q)), {{Var::psi1, x}});
    ZPoly h = gcd(px.znum(), qx.znum());
    if (h.is_zero() || h.is_constant()) continue;
    for (const BigRat& y : rational_roots(detail::univariate(h, Var::psi2))) {
      auto ca = detail::try_eval(A.c, Var::psi, x), cb = detail::try_eval(B.c, Var::psi, y);
      auto la = detail::try_eval(A.lambda, Var::psi, x), lb = detail::try_eval(B.lambda, Var::psi, y);
      if (!ca || !cb || !la || !lb) continue;
      if (*ca != *cb || *la != *lb) continue;
      out.points.push_back({x, y, *ca, *la, is_degenerate_charge(*ca)});
    }
  }
  std::sort(out.points.begin(), out.points.end(), [](const IntersectionPoint& u, const IntersectionPoint& v) {
    return u.psi1 != v.psi1 ? u.psi1 < v.psi1 : u.psi2 < v.psi2;
  });
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

/// True when (psi1, psi2) is an enumerated point or lies on an identity component.
inline bool intersection_contains(const IntersectionResult& res, const BigRat& psi1, const BigRat& psi2) {
  for (const auto& p : res.points)
    if (p.psi1 == psi1 && p.psi2 == psi2) return true;
  for (const auto& g : res.component_equations)
    if (eval(g, {{Var::psi1, psi1}, {Var::psi2, psi2}}).is_zero()) return true;
  return false;
}

}  // namespace osptri
