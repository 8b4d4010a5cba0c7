#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osptri/curves.hpp"
#include "osptri/liedata.hpp"

namespace osptri {

// ---------------------------------------------------------------------------
// Target algebras and their hook-family specializations
// ---------------------------------------------------------------------------

/// Principal W-algebras used as coincidence partners:
/// W_s(sp_{2r}), W_s(so_{2r})^Z2, W_s(osp_{1|2r})^Z2 and W_s(so_{2r+1}).
enum class TargetKind { sp, so_even, osp, so_odd };

inline std::string_view target_kind_tag(TargetKind k) {
  switch (k) {
    case TargetKind::sp: return "sp";
    case TargetKind::so_even: return "so_even";
    case TargetKind::osp: return "osp";
    case TargetKind::so_odd: return "so_odd";
  }
  return "";
}

inline std::optional<TargetKind> target_kind_from_tag(std::string_view s) {
  for (TargetKind k : {TargetKind::sp, TargetKind::so_even, TargetKind::osp, TargetKind::so_odd})
    if (target_kind_tag(k) == s) return k;
  if (s == "so") return TargetKind::so_even;
  return std::nullopt;
}

/// "sp(2r)", "so(2r)", "osp(1|2r)" or "so(2r+1)" for a concrete rank.
inline std::string target_algebra(TargetKind k, long r) {
  switch (k) {
    case TargetKind::sp: return AlgebraDesc::sp(r).str();
    case TargetKind::so_even: return AlgebraDesc::so(2 * r).str();
    case TargetKind::osp: return "osp(1|" + std::to_string(2 * r) + ")";
    case TargetKind::so_odd: return AlgebraDesc::so(2 * r + 1).str();
  }
  return "";
}

/// Smallest rank for which the target curve is a genuine one-parameter curve.
inline long min_target_rank(TargetKind k) { return k == TargetKind::so_even ? 2 : 1; }

/// Dual Coxeter number of the target, in the normalization of its level s.
inline BigRat target_dual_coxeter(TargetKind k, long r) {
  switch (k) {
    case TargetKind::sp: return BigRat(r + 1);
    case TargetKind::so_even: return BigRat(2 * r - 2);
    case TargetKind::osp: return BigRat(2 * r + 1, 2);
    case TargetKind::so_odd: return BigRat(2 * r - 1);
  }
  return BigRat(0);
}

struct TargetSpec {
  Family family;
  RatFunc n, m;
  /// psi = s + shift.
  RatFunc shift;
};

/// The degenerate hook family realizing the target:
///   sp(2r) -> 2C(0, r),      psi = s + r + 1
///   so(2r) -> 1O(0, r - 1),  psi = s + 2r - 2
///   osp(1|2r) -> 2B(0, r),   psi = s + r + 1/2
///   so(2r+1) -> 1C(0, r),    psi = s + 2r - 1
inline TargetSpec target_dictionary(TargetKind k, const RatFunc& r) {
  const RatFunc one(1), two(2);
  switch (k) {
    case TargetKind::sp: return {Family::F2C, RatFunc(0), r, r + one};
    case TargetKind::so_even: return {Family::F1O, RatFunc(0), r - one, two * r - two};
    case TargetKind::osp: return {Family::F2B, RatFunc(0), r, r + RatFunc(BigRat(1, 2))};
    case TargetKind::so_odd: return {Family::F1C, RatFunc(0), r, two * r - one};
  }
  return {};
}

/// Truncation curve of the target with the level s in the psi slot.
inline TruncationCurve target_curve(TargetKind k, const RatFunc& r) {
  TargetSpec t = target_dictionary(k, r);
  return detail::map_psi(phi_expr(t.family, t.n, t.m), RatFunc::var(Var::psi) + t.shift);
}

// ---------------------------------------------------------------------------
// Coincidence tables
// ---------------------------------------------------------------------------

enum class Exclusion { r_ne_n, r_ne_m, r_ne_n_minus_m, r_ne_m_minus_n, r_ne_n_plus_m, r_ne_m_plus_1 };

inline std::string exclusion_text(Exclusion e) {
  switch (e) {
    case Exclusion::r_ne_n: return "r ≠ n";
    case Exclusion::r_ne_m: return "r ≠ m";
    case Exclusion::r_ne_n_minus_m: return "r ≠ n - m";
    case Exclusion::r_ne_m_minus_n: return "r ≠ m - n";
    case Exclusion::r_ne_n_plus_m: return "r ≠ n + m";
    case Exclusion::r_ne_m_plus_1: return "r ≠ m + 1";
  }
  return "";
}

/// True when the predicate r ≠ ... holds.
inline bool exclusion_holds(Exclusion e, long n, long m, long r) {
  switch (e) {
    case Exclusion::r_ne_n: return r != n;
    case Exclusion::r_ne_m: return r != m;
    case Exclusion::r_ne_n_minus_m: return r != n - m;
    case Exclusion::r_ne_m_minus_n: return r != m - n;
    case Exclusion::r_ne_n_plus_m: return r != n + m;
    case Exclusion::r_ne_m_plus_1: return r != m + 1;
  }
  return true;
}

struct CoincidenceEntry {
  Family source;
  TargetKind target;
  int item = 0;
  /// psi and s as rational functions of n, m, r.
  RatFunc psi, s;
  std::vector<Exclusion> exclusions;

  /// Theorem label of the table, e.g. "coinc:typeC-2B".
  std::string theorem() const {
    const char letter = target == TargetKind::sp ? 'C' : target == TargetKind::so_even ? 'D' : 'O';
    return std::string("coinc:type") + letter + "-" + std::string(family_tag(source));
  }
  std::string tag() const { return theorem() + "(" + std::to_string(item) + ")"; }
};

namespace detail {

struct RawEntry {
  Family source;
  TargetKind target;
  int item;
  const char* psi;
  const char* s;
  std::vector<Exclusion> exclusions;
};

inline const std::vector<CoincidenceEntry>& coincidence_storage() {
  static const std::vector<CoincidenceEntry> table = [] {
    const std::vector<RawEntry> raw = {
      {Family::F1B, TargetKind::sp, 1, "(1+m+n+r)/(1+m)", "-(r+1)+(1+m+n+r)/(2*(n+r))", {}},
      {Family::F1B, TargetKind::sp, 2, "2*(m+n)/(1+2*m+2*r)", "-(r+1)+(1-2*n+2*r)/(2*(1+2*m+2*r))", {}},
      {Family::F1B, TargetKind::sp, 3, "(1+2*m+2*n+2*r)/(2*m)", "-(r+1)+(1+2*n+2*r)/(2*(1+2*m+2*n+2*r))", {}},
      {Family::F1B, TargetKind::sp, 4, "(1+m+n)/(1+m+r)", "-(r+1)+(1+m+r)/(2*(r-n))", {Exclusion::r_ne_n}},
      {Family::F1B, TargetKind::sp, 5, "2*(m+n-r)/(1+2*m-2*r)", "-(r+1)+(r-m-n)/(2*r-2*m-1)", {}},
      {Family::F1B, TargetKind::sp, 6, "(1+2*m+2*n-2*r)/(2*(m-r))", "-(r+1)+(r-m)/(2*r-2*m-2*n-1)", {Exclusion::r_ne_m}},
      {Family::F1D, TargetKind::sp, 1, "(m+n+r)/m", "-(r+1)+(n+r)/(2*(m+n+r))", {}},
      {Family::F1D, TargetKind::sp, 2, "(2*m+2*n-1)/(2*m+2*r+1)", "-(r+1)+(1-n+r)/(1+2*m+2*r)", {}},
      {Family::F1D, TargetKind::sp, 3, "(1+2*m+2*n+2*r)/(2*(1+m))", "-(r+1)+(1+2*m+2*n+2*r)/(2*(2*r+2*n-1))", {}},
      {Family::F1D, TargetKind::sp, 4, "(1+2*m+2*n)/(2*(1+m+r))", "-(r+1)+(1+m+r)/(1-2*n+2*r)", {}},
      {Family::F1D, TargetKind::sp, 5, "(2*m+2*n-2*r-1)/(2*m-2*r+1)", "-(r+1)+(1-2*m-2*n+2*r)/(2*(2*r-2*m-1))", {}},
      {Family::F1D, TargetKind::sp, 6, "(m+n-r)/(m-r)", "-(r+1)+(r-m)/(2*(r-m-n))", {Exclusion::r_ne_m, Exclusion::r_ne_n_plus_m}},
      {Family::F2B, TargetKind::sp, 1, "(1+2*m-2*n+2*r)/(2*(1+2*m))", "-(r+1)+(1+2*m-2*n+2*r)/(4*(r-n))", {Exclusion::r_ne_n}},
      {Family::F2B, TargetKind::sp, 2, "(1+2*m-2*n)/(2*(1+2*m+2*r))", "-(r+1)+(1+2*m+2*r)/(4*(n+r))", {}},
      {Family::F2B, TargetKind::sp, 3, "(m-n+r)/(2*m-1)", "-(r+1)+(1-2*n+2*r)/(4*(m-n+r))", {Exclusion::r_ne_n_minus_m}},
      {Family::F2B, TargetKind::sp, 4, "(m-n-r)/(2*m-2*r-1)", "-(r+1)+(1-2*m+2*r)/(4*(n-m+r))", {Exclusion::r_ne_m_minus_n}},
      {Family::F2B, TargetKind::sp, 5, "(2*m-2*n-2*r-1)/(4*(m-r))", "-(r+1)+(1-2*m+2*n+2*r)/(4*(r-m))", {Exclusion::r_ne_m}},
      {Family::F2B, TargetKind::sp, 6, "(2*m-2*n-1)/(4*(m+r))", "-(r+1)+(1+2*n+2*r)/(4*(m+r))", {}},
      {Family::F2C, TargetKind::sp, 1, "(1+m+n+r)/(1+2*m)", "-(r+1)+(1+m+n+r)/(1+2*n+2*r)", {}},
      {Family::F2C, TargetKind::sp, 2, "(1+m+n)/(1+2*m+2*r)", "-(r+1)+(1+2*m+2*r)/(2*(2*r-2*n-1))", {}},
      {Family::F2C, TargetKind::sp, 3, "(1+2*m+2*n+2*r)/(2*(2*m-1))", "-(r+1)+(1+n+r)/(1+2*m+2*n+2*r)", {}},
      {Family::F2C, TargetKind::sp, 4, "(m+n)/(2*(m+r))", "-(r+1)+(r-n)/(2*(m+r))", {}},
      {Family::F2C, TargetKind::sp, 5, "(m+n-r)/(2*(m-r))", "-(r+1)+(r-m-n)/(2*(r-m))", {Exclusion::r_ne_m}},
      {Family::F2C, TargetKind::sp, 6, "(1+2*m+2*n-2*r)/(2*(2*m-2*r-1))", "-(r+1)+(1-2*m+2*r)/(2*(2*r-2*m-2*n-1))", {}},
      {Family::F1B, TargetKind::so_even, 1, "2*(m+n+r)/(1+2*m)", "-(2*r-2)+(2*n+2*r-1)/(2*(m+n+r))", {}},
      {Family::F1B, TargetKind::so_even, 2, "(1+2*m+2*n)/(2*(m+r))", "-(2*r-2)+(2*r-2*n-1)/(2*(m+r))", {}},
      {Family::F1B, TargetKind::so_even, 3, "(1+m+n-r)/(1+m-r)", "-(2*r-2)+(r-m-n-1)/(r-m-1)", {Exclusion::r_ne_m_plus_1}},
      {Family::F1D, TargetKind::so_even, 1, "(2*m+2*n+2*r-1)/(1+2*m)", "-(2*r-2)+2*(n+r-1)/(2*m+2*n+2*r-1)", {}},
      {Family::F1D, TargetKind::so_even, 2, "(m+n)/(m+r)", "-(2*r-2)+(r-n)/(m+r)", {}},
      {Family::F1D, TargetKind::so_even, 3, "(1+2*m+2*n-2*r)/(2*(1+m-r))", "-(2*r-2)+(2*r-2*m-2*n-1)/(2*(r-m-1))", {Exclusion::r_ne_m_plus_1}},
      {Family::F2B, TargetKind::so_even, 1, "(2*m-2*n+2*r-1)/(4*m)", "-(2*r-2)+(2*r-2*n-1)/(2*m-2*n+2*r-1)", {}},
      {Family::F2B, TargetKind::so_even, 2, "(1+2*m-2*n-2*r)/(2*(1+2*m-2*r))", "-(2*r-2)+(2*r-2*m-1)/(2*n+2*r-2*m-1)", {}},
      {Family::F2B, TargetKind::so_even, 3, "(m-n)/(2*m+2*r-1)", "-(2*r-2)+(2*n+2*r-1)/(2*m+2*r-1)", {}},
      {Family::F2C, TargetKind::so_even, 1, "(m+n+r)/(2*m)", "-(2*r-2)+(n+r)/(m+n+r)", {}},
      {Family::F2C, TargetKind::so_even, 2, "(1+2*m+2*n)/(2*(2*m+2*r-1))", "-(2*r-2)+2*(r-n-1)/(2*m+2*r-1)", {}},
      {Family::F2C, TargetKind::so_even, 3, "(1+m+n-r)/(1+2*m-2*r)", "-(2*r-2)+2*(r-m-n-1)/(2*r-2*m-1)", {}},
      {Family::F1B, TargetKind::osp, 1, "(1+2*m+2*n+2*r)/(1+2*m)", "-(r+1/2)+(n+r)/(1+2*m+2*n+2*r)", {}},
      {Family::F1B, TargetKind::osp, 2, "(1+2*m+2*n)/(1+2*m+2*r)", "-(r+1/2)+(r-n)/(1+2*m+2*r)", {}},
      {Family::F1B, TargetKind::osp, 3, "(1+2*m+2*n-2*r)/(1+2*m-2*r)", "-(r+1/2)+(2*r-2*m-2*n-1)/(2*(2*r-2*m-1))", {}},
      {Family::F1D, TargetKind::osp, 1, "2*(m+n+r)/(1+2*m)", "-(r+1/2)+(m+n+r)/(2*n+2*r-1)", {}},
      {Family::F1D, TargetKind::osp, 2, "2*(m+n)/(1+2*m+2*r)", "-(r+1/2)+(1-2*n+2*r)/(2*(1+2*m+2*r))", {}},
      {Family::F1D, TargetKind::osp, 3, "2*(m+n-r)/(1+2*m-2*r)", "-(r+1/2)+(r-m-n)/(2*r-2*m-1)", {}},
      {Family::F2B, TargetKind::osp, 1, "(m-n+r)/(2*m)", "-(r+1/2)+(r-n)/(2*(m-n+r))", {Exclusion::r_ne_n_minus_m}},
      {Family::F2B, TargetKind::osp, 2, "(m-n-r)/(2*(m-r))", "-(r+1/2)+(r-m)/(2*(n-m+r))", {Exclusion::r_ne_m, Exclusion::r_ne_m_minus_n}},
      {Family::F2B, TargetKind::osp, 3, "(m-n)/(2*(m+r))", "-(r+1/2)+(n+r)/(2*(m+r))", {}},
      {Family::F2C, TargetKind::osp, 1, "(1+2*m+2*n+2*r)/(4*m)", "-(r+1/2)+(1+2*n+2*r)/(2*(1+2*m+2*n+2*r))", {}},
      {Family::F2C, TargetKind::osp, 2, "(1+2*m+2*n)/(4*(m+r))", "-(r+1/2)+(m+r)/(2*r-2*n-1)", {}},
      {Family::F2C, TargetKind::osp, 3, "(1+2*m+2*n-2*r)/(4*(m-r))", "-(r+1/2)+(r-m)/(2*r-2*m-2*n-1)", {Exclusion::r_ne_m}},
    };
    std::vector<CoincidenceEntry> out;
    out.reserve(raw.size());
    for (const auto& e : raw)
      out.push_back({e.source, e.target, e.item, parse_ratfunc(e.psi), parse_ratfunc(e.s), e.exclusions});
    return out;
  }();
  return table;
}

}  // namespace detail

/// Every coincidence entry, in table order (sp, then so, then osp targets).
inline const std::vector<CoincidenceEntry>& all_coincidences() { return detail::coincidence_storage(); }

/// Entries for one source family and target kind. Throws DomainError for a
/// pair with no coincidence theorem.
inline std::vector<CoincidenceEntry> coincidence_table(Family source, TargetKind target) {
  std::vector<CoincidenceEntry> out;
  for (const auto& e : all_coincidences())
    if (e.source == source && e.target == target) out.push_back(e);
  if (out.empty())
    throw DomainError("no coincidence table for " + std::string(family_tag(source)) + " and " +
                      std::string(target_kind_tag(target)));
  return out;
}

enum class CoincidenceStatus { pass, skipped, fail, pole };

inline std::string_view status_tag(CoincidenceStatus s) {
  switch (s) {
    case CoincidenceStatus::pass: return "pass";
    case CoincidenceStatus::skipped: return "skipped";
    case CoincidenceStatus::fail: return "fail";
    case CoincidenceStatus::pole: return "pole";
  }
  return "";
}

struct CoincidenceCheck {
  CoincidenceStatus status = CoincidenceStatus::fail;
  /// Exclusion that fired, pole location, or the mismatching coordinate.
  std::string reason;
  std::optional<BigRat> psi, s, psi_target, c, lambda;
  bool degenerate = false;
};

namespace detail {

/// Numeric curve of a family at integer or half-integer parameters; nullopt
/// when the curve is undefined there. Cached per thread.
inline const std::optional<TruncationCurve>& cached_curve(Family f, const BigRat& n, const BigRat& m) {
  thread_local std::map<std::string, std::optional<TruncationCurve>> cache;
  std::string key = std::string(family_tag(f)) + ":" + n.str() + ":" + m.str();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::optional<TruncationCurve> curve;
  try {
    curve = phi_expr(f, RatFunc(n), RatFunc(m));
  } catch (const DomainError&) {
  }
  return cache.emplace(key, std::move(curve)).first->second;
}

inline std::optional<BigRat> eval_or_pole(const RatFunc& f, const std::map<Var, BigRat>& at) {
  try {
    return eval(f, at);
  } catch (const PoleError&) {
    return std::nullopt;
  }
}

/// Curves with n, m left symbolic. Their denominators mark the points where
/// the generic formulas for c and lambda are undefined, even when a numeric
/// specialization happens to cancel the pole.
inline const TruncationCurve& generic_curve(Family f) {
  static const std::map<Family, TruncationCurve> curves = [] {
    std::map<Family, TruncationCurve> out;
    for (Family g : kAllFamilies) out.emplace(g, phi_expr(g, RatFunc::var(Var::n), RatFunc::var(Var::m)));
    return out;
  }();
  return curves.at(f);
}

inline const TruncationCurve& generic_target_curve(TargetKind k) {
  static const std::map<TargetKind, TruncationCurve> curves = [] {
    std::map<TargetKind, TruncationCurve> out;
    for (TargetKind g : {TargetKind::sp, TargetKind::so_even, TargetKind::osp, TargetKind::so_odd})
      out.emplace(g, target_curve(g, RatFunc::var(Var::r)));
    return out;
  }();
  return curves.at(k);
}

inline bool defined_at(const TruncationCurve& t, const std::map<Var, BigRat>& at) {
  return eval_or_pole(t.c, at).has_value() && eval_or_pole(t.lambda, at).has_value();
}

inline CoincidenceCheck pole(std::string why) {
  CoincidenceCheck out;
  out.status = CoincidenceStatus::pole;
  out.reason = std::move(why);
  return out;
}

}  // namespace detail

/// Checks Phi_source(psi(n,m,r)) = Phi_target(psi'(s(n,m,r))) exactly.
/// Exclusions are tested first; poles and undefined curves are reported.
/// Points where the generic (n, m)-formula of either curve is undefined count
/// as poles: there the specialized curves need not agree.
/// s_offset perturbs s and exists for negative controls.
inline CoincidenceCheck verify_coincidence(const CoincidenceEntry& e, long n, long m, long r,
                                           const BigRat& s_offset = BigRat(0)) {
  if (n < 0 || m < 0) throw DomainError("verify_coincidence needs n, m >= 0");
  if (r < min_target_rank(e.target))
    throw DomainError("verify_coincidence needs r >= " + std::to_string(min_target_rank(e.target)) + " for " +
                      std::string(target_kind_tag(e.target)));
  for (Exclusion x : e.exclusions) {
    if (!exclusion_holds(x, n, m, r)) {
      CoincidenceCheck out;
      out.status = CoincidenceStatus::skipped;
      out.reason = exclusion_text(x);
      return out;
    }
  }
  const std::map<Var, BigRat> at{{Var::n, BigRat(n)}, {Var::m, BigRat(m)}, {Var::r, BigRat(r)}};
  auto psi = detail::eval_or_pole(e.psi, at);
  if (!psi) return detail::pole("psi has a pole");
  auto s = detail::eval_or_pole(e.s, at);
  if (!s) return detail::pole("s has a pole");
  *s += s_offset;
  if (!detail::defined_at(detail::generic_curve(e.source), {{Var::n, BigRat(n)}, {Var::m, BigRat(m)}, {Var::psi, *psi}}))
    return detail::pole("generic " + std::string(family_tag(e.source)) + " formula undefined at psi = " + psi->str());
  if (!detail::defined_at(detail::generic_target_curve(e.target), {{Var::r, BigRat(r)}, {Var::psi, *s}}))
    return detail::pole("generic target formula undefined at s = " + s->str());

  TargetSpec spec = target_dictionary(e.target, RatFunc(r));
  BigRat psi_target = *s + spec.shift.constant_value();
  const auto& src = detail::cached_curve(e.source, BigRat(n), BigRat(m));
  if (!src) return detail::pole("curve of " + HookFamily::make(e.source, n, m).str() + " is undefined");
  const auto& tgt = detail::cached_curve(spec.family, spec.n.constant_value(), spec.m.constant_value());
  if (!tgt) return detail::pole("target curve is undefined");

  const std::map<Var, BigRat> at_src{{Var::psi, *psi}}, at_tgt{{Var::psi, psi_target}};
  auto c1 = detail::eval_or_pole(src->c, at_src), l1 = detail::eval_or_pole(src->lambda, at_src);
  if (!c1 || !l1) return detail::pole("source curve has a pole at psi = " + psi->str());
  auto c2 = detail::eval_or_pole(tgt->c, at_tgt), l2 = detail::eval_or_pole(tgt->lambda, at_tgt);
  if (!c2 || !l2) return detail::pole("target curve has a pole at psi = " + psi_target.str());

  CoincidenceCheck out;
  out.psi = psi;
  out.s = s;
  out.psi_target = psi_target;
  out.c = c1;
  out.lambda = l1;
  out.degenerate = is_degenerate_charge(*c1);
  if (*c1 != *c2) {
    out.status = CoincidenceStatus::fail;
    out.reason = "c: " + c1->str() + " vs " + c2->str();
  } else if (*l1 != *l2) {
    out.status = CoincidenceStatus::fail;
    out.reason = "lambda: " + l1->str() + " vs " + l2->str();
  } else {
    out.status = CoincidenceStatus::pass;
  }
  return out;
}

struct SymbolicCheck {
  bool pass = false;
  std::string c_difference, lambda_difference;
};

/// The same identity with n, m, r left symbolic.
inline SymbolicCheck verify_coincidence_symbolic(const CoincidenceEntry& e) {
  const RatFunc n = RatFunc::var(Var::n), m = RatFunc::var(Var::m), r = RatFunc::var(Var::r);
  TruncationCurve left = detail::map_psi(phi_expr(e.source, n, m), e.psi);
  TruncationCurve right = detail::map_psi(target_curve(e.target, r), e.s);
  SymbolicCheck out;
  out.pass = left == right;
  if (!out.pass) {
    out.c_difference = (left.c - right.c).str();
    out.lambda_difference = (left.lambda - right.lambda).str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// osp(1|2m) and osp(1|2n) coincidences
// ---------------------------------------------------------------------------

struct OspOspPair {
  BigRat k, ell, c;
  bool pass = false;
  bool degenerate = false;
};

struct OspOspReport {
  long m = 0, n = 0;
  /// Printed c = -(1+2m)(1+2n)(2mn-m-n) / (2(m+n)).
  BigRat c_printed;
  std::vector<OspOspPair> pairs;
  bool all_pass() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const OspOspPair& p) { return p.pass; });
  }
};

/// Levels k of W_k(osp_{1|2m}) in the printed list, for partner rank n.
inline std::vector<BigRat> osp_osp_levels(long m, long n) {
  const BigRat base = -BigRat(2 * m + 1, 2);
  return {base + BigRat(m + n, 2 * m), base + BigRat(m, 2 * (m + n))};
}

/// Checks Phi_{2B,0,m}(k + m + 1/2) = Phi_{2B,0,n}(l + n + 1/2) and the
/// printed central charge for all four (k, l) combinations.
inline OspOspReport verify_osp_osp(long m, long n) {
  if (m < 1 || n < 1) throw DomainError("verify_osp_osp needs m, n >= 1");
  OspOspReport out;
  out.m = m;
  out.n = n;
  out.c_printed = -BigRat((1 + 2 * m) * (1 + 2 * n) * (2 * m * n - m - n), 2 * (m + n));
  const auto& A = detail::cached_curve(Family::F2B, BigRat(0), BigRat(m));
  const auto& B = detail::cached_curve(Family::F2B, BigRat(0), BigRat(n));
  for (const BigRat& k : osp_osp_levels(m, n)) {
    for (const BigRat& ell : osp_osp_levels(n, m)) {
      OspOspPair p{k, ell, BigRat(0)};
      auto ca = detail::eval_or_pole(A->c, {{Var::psi, k + BigRat(2 * m + 1, 2)}});
      auto la = detail::eval_or_pole(A->lambda, {{Var::psi, k + BigRat(2 * m + 1, 2)}});
      auto cb = detail::eval_or_pole(B->c, {{Var::psi, ell + BigRat(2 * n + 1, 2)}});
      auto lb = detail::eval_or_pole(B->lambda, {{Var::psi, ell + BigRat(2 * n + 1, 2)}});
      if (ca && la && cb && lb) {
        p.c = *ca;
        p.pass = *ca == *cb && *la == *lb && *ca == out.c_printed;
        p.degenerate = is_degenerate_charge(*ca);
      }
      out.pairs.push_back(p);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rationality witnesses
// ---------------------------------------------------------------------------

struct WitnessCondition {
  std::string text;
  bool holds = false;
};

struct WitnessPartner {
  std::string algebra;
  /// Set when the partner is a principal W-algebra with a target curve.
  std::optional<TargetKind> kind;
  long rank = 0;
  BigRat s;
};

struct RationalityWitness {
  Family family = Family::F2B;
  long n = 0, m = 0;
  BigRat psi;
  std::string theorem;
  /// Auxiliary parameters of the theorem, e.g. {"r", 1}.
  std::vector<std::pair<std::string, long>> params;
  std::vector<WitnessCondition> conditions;
  std::optional<WitnessPartner> partner;
  bool conjectural = false;

  std::string status() const { return conjectural ? "conjectural" : "certified"; }
  bool conditions_hold() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const WitnessCondition& c) { return c.holds; });
  }
};

/// Inclusive ranges of the auxiliary theorem parameters.
struct WitnessBounds {
  long r_min = 1, r_max = 3;
  long p_min = 1, p_max = 6;
  long q_min = 1, q_max = 6;
};

namespace detail {

inline WitnessCondition gcd_condition(long a, long b) {
  long g = std::gcd(a, b);
  return {"gcd(" + std::to_string(a) + "," + std::to_string(b) + ")=" + std::to_string(g), g == 1};
}

inline WitnessCondition at_least(const std::string& name, long value, long bound) {
  return {name + "=" + std::to_string(value) + ">=" + std::to_string(bound), value >= bound};
}

/// k = -2 + p/q with p >= 2 after reduction.
inline WitnessCondition sl2_admissible(const std::string& name, const BigRat& k) {
  BigRat pq = k + BigRat(2);
  bool ok = pq > BigRat(0) && pq.num() >= 2;
  return {name + "=-2+" + pq.str() + " admissible for sl(2)", ok};
}

struct WitnessArgs {
  long n, m, a, p, q;
};

enum class AuxKind { none, r, k, pq };

/// One catalogued theorem. For the single-parameter theorems psi, s and the
/// partner rank are rational expressions in n, m, r (the auxiliary parameter
/// sits in r even when the theorem calls it k).
struct WitnessTheorem {
  std::string tag;
  Family family;
  std::optional<long> fixed_n, fixed_m;
  long min_n = 0, min_m = 0;
  AuxKind aux = AuxKind::r;
  bool conjectural = false;
  const char* psi = nullptr;
  const char* s = nullptr;
  const char* rank = nullptr;
  std::optional<TargetKind> partner;
  std::function<std::vector<WitnessCondition>(const WitnessArgs&)> conditions;
  /// Used by the two-parameter theorems instead of the expressions above.
  std::function<std::optional<RationalityWitness>(const WitnessArgs&)> custom;

  bool applies(long n, long m) const {
    if (fixed_n && *fixed_n != n) return false;
    if (fixed_m && *fixed_m != m) return false;
    return n >= min_n && m >= min_m;
  }
};

inline std::vector<WitnessCondition> no_conditions(const WitnessArgs&) { return {}; }

inline std::optional<RationalityWitness> expression_witness(const WitnessTheorem& t, const WitnessArgs& a) {
  RationalityWitness w;
  w.family = t.family;
  w.n = a.n;
  w.m = a.m;
  w.theorem = t.tag;
  w.conjectural = t.conjectural;
  if (t.aux == AuxKind::r) w.params.push_back({"r", a.a});
  if (t.aux == AuxKind::k) w.params.push_back({"k", a.a});
  w.conditions = t.conditions ? t.conditions(a) : std::vector<WitnessCondition>{};
  if (!w.conditions_hold()) return w;
  const std::map<Var, BigRat> at{{Var::n, BigRat(a.n)}, {Var::m, BigRat(a.m)}, {Var::r, BigRat(a.a)}};
  auto psi = eval_or_pole(parse_ratfunc(t.psi), at);
  if (!psi) return std::nullopt;
  w.psi = *psi;
  if (t.s) {
    auto s = eval_or_pole(parse_ratfunc(t.s), at);
    if (!s) return std::nullopt;
    long rank = eval(parse_ratfunc(t.rank), at).num().get_si();
    w.partner = WitnessPartner{target_algebra(*t.partner, rank), t.partner, rank, *s};
  }
  return w;
}

inline std::vector<WitnessCondition> ospcoset_conditions(long n, long p, long q) {
  std::vector<WitnessCondition> out{gcd_condition(p, q)};
  if (q % 2 == 1)
    out.push_back(at_least("p", p, 2 * n - 1));
  else
    out.push_back(at_least("p", p, 2 * n));
  return out;
}

inline std::optional<RationalityWitness> pq_witness(const std::string& tag, Family f, const WitnessArgs& a,
                                                    std::vector<WitnessCondition> conds, const BigRat& psi,
                                                    bool conjectural, std::optional<WitnessPartner> partner) {
  RationalityWitness w;
  w.family = f;
  w.n = a.n;
  w.m = a.m;
  w.theorem = tag;
  w.params = {{"p", a.p}, {"q", a.q}};
  w.conditions = std::move(conds);
  w.conjectural = conjectural;
  w.psi = psi;
  w.partner = std::move(partner);
  return w;
}

inline std::string diagonal_sl2_coset(const BigRat& a) {
  return "Com(V^{" + (a + BigRat(2)).str() + "}(sl(2)), V^{" + a.str() + "}(sl(2)) ⊗ L_2(sl(2)))";
}

inline std::optional<RationalityWitness> osp12_witness(int form, const WitnessArgs& a) {
  BigRat level = BigRat(-2) + BigRat(a.p, a.q);
  std::vector<WitnessCondition> conds{gcd_condition(a.p, a.q), at_least("p", a.p, 2)};
  // psi = (2+a)/(2(4+a)) or (4+a)/(2(2+a)).
  BigRat psi = form == 1 ? (BigRat(2) + level) / (BigRat(2) * (BigRat(4) + level))
                         : (BigRat(4) + level) / (BigRat(2) * (BigRat(2) + level));
  return pq_witness(form == 1 ? "thm:osp12(1)" : "thm:osp12(2)", Family::F2B, a, std::move(conds), psi, false,
                    WitnessPartner{diagonal_sl2_coset(level), std::nullopt, 1, level});
}

inline const std::vector<WitnessTheorem>& witness_theorems() {
  static const std::vector<WitnessTheorem> table = [] {
    using W = WitnessTheorem;
    std::vector<W> t;
    auto add = [&](W w) { t.push_back(std::move(w)); };

    // Affine osp(1|2n) at positive integer level k: C_{psi,1C}(n,0), psi = -2k-2n-1.
    add({"thm:osp", Family::F1C, std::nullopt, 0, 1, 0, AuxKind::k, false, "-2*r-2*n-1",
         "-(n+1)+(1+r+n)/(1+2*r+2*n)", "n", TargetKind::sp,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{at_least("k", a.a, 1)}; }, nullptr});

    // Principal W(osp(1|2m)) through 2B(0, m).
    add({"thm:Wosp1(1)", Family::F2B, 0, std::nullopt, 0, 1, AuxKind::r, false, "(2*m-1)/(4*(m+r))",
         "-(r+1)+(1+2*r)/(4*(m+r))", "r", TargetKind::sp,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{gcd_condition(a.m + a.a, 1 + 2 * a.a)}; },
         nullptr});
    add({"thm:Wosp1(2)", Family::F2B, 0, std::nullopt, 0, 1, AuxKind::r, false, "(1+2*m)/(2*(1+2*m+2*r))",
         "-(r+1)+(1+2*m+2*r)/(4*r)", "r", TargetKind::sp,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{gcd_condition(a.a, 1 + 2 * a.m)}; },
         nullptr});
    add({"thm:Wosp2", Family::F2B, 0, std::nullopt, 0, 1, AuxKind::r, false, "m/(2*m+2*r-1)",
         "-(2*r-2)+(2*r-1)/(2*m+2*r-1)", "r", TargetKind::so_even,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{gcd_condition(2 * a.a - 1, 2 * a.m)}; },
         nullptr});
    W osp12a{"thm:osp12(1)", Family::F2B, 0, 1, 0, 1, AuxKind::pq, false, nullptr, nullptr, nullptr, std::nullopt, no_conditions, nullptr};
    osp12a.custom = [](const WitnessArgs& a) { return osp12_witness(1, a); };
    add(osp12a);
    W osp12b{"thm:osp12(2)", Family::F2B, 0, 1, 0, 1, AuxKind::pq, false, nullptr, nullptr, nullptr, std::nullopt, no_conditions, nullptr};
    osp12b.custom = [](const WitnessArgs& a) { return osp12_witness(2, a); };
    add(osp12b);

    // Subregular W(so(2m+3)) through 1D(1, m).
    add({"Brational1", Family::F1D, 1, std::nullopt, 0, 1, AuxKind::r, false, "(3+2*m+2*r)/(2*m+2)",
         "-(r+1)+(2*m+2*r+3)/(2*(2*r+1))", "r", TargetKind::sp,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{gcd_condition(a.m + 1, 2 * a.a + 1)}; },
         nullptr});
    add({"Brational3", Family::F1D, 1, std::nullopt, 0, 1, AuxKind::r, false, "(2*m+2*r+1)/(2*m+1)",
         "-(2*r-2)+2*r/(2*m+2*r+1)", "r", TargetKind::so_even,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{gcd_condition(a.a, 2 * a.m + 1)}; },
         nullptr});
    add({"Brational5", Family::F1D, 1, std::nullopt, 0, 1, AuxKind::none, false, "2*(2+m)/(2*m+1)",
         "-3/2+(2+m)/3", "1", TargetKind::osp,
         [](const WitnessArgs& a) {
           return std::vector<WitnessCondition>{sl2_admissible("a", BigRat(-2) + BigRat(6, 2 * a.m + 1))};
         },
         nullptr});
    add({"cor:newrationalb", Family::F1D, 1, std::nullopt, 0, 1, AuxKind::none, false, "2*m/(2*m-1)",
         "-3/2+m/(2*m-1)", "1", TargetKind::osp,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{at_least("m", a.m, 2)}; }, nullptr});

    // Principal W(osp(2|2m)) through 2D(1, m), m = (subregular rank) + 1.
    add({"Brational2", Family::F2D, 1, std::nullopt, 0, 2, AuxKind::r, false, "m/(2*m+1+2*r)",
         "-(r+1)+(2*m+2*r+1)/(2*(2*r+1))", "r", TargetKind::sp,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{gcd_condition(a.m, 2 * a.a + 1)}; },
         nullptr});
    add({"Brational4", Family::F2D, 1, std::nullopt, 0, 2, AuxKind::r, false, "(2*m-1)/(2*(2*m+2*r-1))",
         "-(2*r-2)+2*r/(2*m+2*r-1)", "r", TargetKind::so_even,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{gcd_condition(a.a, 2 * a.m - 1)}; },
         nullptr});
    add({"Brational5", Family::F2D, 1, std::nullopt, 0, 2, AuxKind::none, false, "(2*m-1)/(4*(m+1))",
         "-3/2+(m+1)/3", "1", TargetKind::osp,
         [](const WitnessArgs& a) {
           return std::vector<WitnessCondition>{sl2_admissible("a", BigRat(-2) + BigRat(6, 2 * a.m - 1))};
         },
         nullptr});
    add({"cor:newrationalb", Family::F2D, 1, std::nullopt, 0, 2, AuxKind::none, false, "(2*m-3)/(4*(m-1))",
         "-3/2+(m-1)/(2*m-3)", "1", TargetKind::osp,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{at_least("m", a.m, 3)}; }, nullptr});

    // Minimal W(sp(2n+2)) at level r - 1/2 through 2C(n, 1).
    add({"mintypeC", Family::F2C, std::nullopt, 1, 1, 0, AuxKind::r, false, "(3+2*n+2*r)/2",
         "-(r+1)+(1+n+r)/(3+2*n+2*r)", "r", TargetKind::sp,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{at_least("r", a.a, 1)}; }, nullptr});

    // Com(L_{k-1/2}(sp(2n)), L_k(sp(2n)) ⊗ S(n)) through 2C(n, 0), psi = k + n + 1.
    add({"cosetC1", Family::F2C, std::nullopt, 0, 1, 0, AuxKind::k, false, "r+n+1",
         "-(r+1)+(1+n+r)/(1+2*n+2*r)", "r", TargetKind::sp,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{at_least("k", a.a, 1)}; }, nullptr});

    // Conjectural points.
    W conj{"conj:ospcoset", Family::F2B, 0, std::nullopt, 0, 1, AuxKind::pq, true, nullptr, nullptr, nullptr, std::nullopt, no_conditions, nullptr};
    conj.custom = [](const WitnessArgs& a) {
      return pq_witness("conj:ospcoset", Family::F2B, a, ospcoset_conditions(a.m, a.p, a.q), BigRat(a.p, 2 * (a.p + a.q)),
                        true, std::nullopt);
    };
    add(conj);
    W conj_dual{"conj:ospcoset(dual)", Family::F2B, 0, std::nullopt, 0, 1, AuxKind::pq, true, nullptr, nullptr, nullptr, std::nullopt, no_conditions, nullptr};
    conj_dual.custom = [](const WitnessArgs& a) {
      return pq_witness("conj:ospcoset(dual)", Family::F2B, a, ospcoset_conditions(a.m, a.p, a.q),
                        BigRat(a.p + a.q, 2 * a.p), true, std::nullopt);
    };
    add(conj_dual);
    add({"rem:newtypebsubreg", Family::F1D, 1, std::nullopt, 0, 1, AuxKind::r, true, "2*(m-r+1)/(1+2*m-2*r)",
         "-(r+1/2)+(m+1-r)/(2*m+1-2*r)", "r", TargetKind::osp,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{at_least("m", a.m, 2 * a.a - 1)}; },
         nullptr});
    add({"rem:newtypebsubreg", Family::F2D, 1, std::nullopt, 0, 2, AuxKind::r, true, "(2*m-1-2*r)/(4*(m-r))",
         "-(r+1/2)+(m-r)/(2*m-1-2*r)", "r", TargetKind::osp,
         [](const WitnessArgs& a) { return std::vector<WitnessCondition>{at_least("m", a.m, 2 * a.a)}; }, nullptr});
    return t;
  }();
  return table;
}

inline std::optional<RationalityWitness> generate_witness(const WitnessTheorem& t, const WitnessArgs& a) {
  return t.custom ? t.custom(a) : expression_witness(t, a);
}

}  // namespace detail

/// True when some catalogued theorem (certified or conjectural) covers the family.
inline bool has_rationality_theorem(const HookFamily& fam) {
  if (!fam.integral()) return false;
  for (const auto& t : detail::witness_theorems())
    if (t.family == fam.family() && t.applies(fam.n_int(), fam.m_int())) return true;
  return false;
}

/// Every witness within the bounds whose theorem conditions hold, sorted by
/// psi, then theorem tag, then parameters. Throws DomainError when no
/// catalogued theorem covers the family.
inline std::vector<RationalityWitness> rational_points(const HookFamily& fam, const WitnessBounds& bounds = {},
                                                        bool include_conjectural = false) {
  if (!has_rationality_theorem(fam)) throw DomainError("no rationality theorem is catalogued for " + fam.str());
  const long n = fam.n_int(), m = fam.m_int();
  std::vector<RationalityWitness> out;
  auto keep = [&](std::optional<RationalityWitness> w) {
    if (w && w->conditions_hold()) out.push_back(std::move(*w));
  };
  for (const auto& t : detail::witness_theorems()) {
    if (t.family != fam.family() || !t.applies(n, m)) continue;
    if (t.conjectural && !include_conjectural) continue;
    switch (t.aux) {
      case detail::AuxKind::none: keep(detail::generate_witness(t, {n, m, 0, 0, 0})); break;
      case detail::AuxKind::r:
      case detail::AuxKind::k:
        for (long a = std::max<long>(bounds.r_min, 1); a <= bounds.r_max; ++a)
          keep(detail::generate_witness(t, {n, m, a, 0, 0}));
        break;
      case detail::AuxKind::pq:
        for (long p = std::max<long>(bounds.p_min, 1); p <= bounds.p_max; ++p)
          for (long q = std::max<long>(bounds.q_min, 1); q <= bounds.q_max; ++q)
            keep(detail::generate_witness(t, {n, m, 0, p, q}));
        break;
    }
  }
  std::sort(out.begin(), out.end(), [](const RationalityWitness& a, const RationalityWitness& b) {
    if (a.psi != b.psi) return a.psi < b.psi;
    if (a.theorem != b.theorem) return a.theorem < b.theorem;
    return a.params < b.params;
  });
  return out;
}

/// Regenerates the witness from its theorem and parameters and compares.
inline bool recheck_witness(const RationalityWitness& w) {
  auto param = [&](const char* name) -> long {
    for (const auto& [k, v] : w.params)
      if (k == name) return v;
    return 0;
  };
  for (const auto& t : detail::witness_theorems()) {
    if (t.tag != w.theorem || t.family != w.family || !t.applies(w.n, w.m)) continue;
    long a = t.aux == detail::AuxKind::k ? param("k") : param("r");
    auto again = detail::generate_witness(t, {w.n, w.m, a, param("p"), param("q")});
    if (!again || !again->conditions_hold()) return false;
    bool same_partner = again->partner.has_value() == w.partner.has_value() &&
                        (!w.partner || (again->partner->s == w.partner->s && again->partner->rank == w.partner->rank &&
                                        again->partner->kind == w.partner->kind));
    return again->psi == w.psi && same_partner && again->conjectural == w.conjectural;
  }
  return false;
}

/// Checks the witness curve against its principal W partner:
/// Phi_family(psi) = Phi_target(s). Skipped (nullopt) when the partner has no
/// target curve.
inline std::optional<bool> verify_witness_partner(const RationalityWitness& w) {
  if (!w.partner || !w.partner->kind) return std::nullopt;
  const TargetKind kind = *w.partner->kind;
  if (w.partner->rank < min_target_rank(kind)) return std::nullopt;
  TargetSpec spec = target_dictionary(kind, RatFunc(w.partner->rank));
  const auto& src = detail::cached_curve(w.family, BigRat(w.n), BigRat(w.m));
  const auto& tgt = detail::cached_curve(spec.family, spec.n.constant_value(), spec.m.constant_value());
  if (!src || !tgt) return std::nullopt;
  BigRat psi_t = w.partner->s + spec.shift.constant_value();
  auto c1 = detail::eval_or_pole(src->c, {{Var::psi, w.psi}});
  auto l1 = detail::eval_or_pole(src->lambda, {{Var::psi, w.psi}});
  auto c2 = detail::eval_or_pole(tgt->c, {{Var::psi, psi_t}});
  auto l2 = detail::eval_or_pole(tgt->lambda, {{Var::psi, psi_t}});
  if (!c1 || !l1 || !c2 || !l2) return std::nullopt;
  return *c1 == *c2 && *l1 == *l2;
}

/// Truncation curve of Com(V^{a+2}(sl_2), V^a(sl_2) ⊗ L_2(sl_2)) in the level a.
inline TruncationCurve diagonal_sl2_coset_curve() {
  return {parse_ratfunc("3*r*(6+r)/(2*(2+r)*(4+r))"),
          parse_ratfunc("-2*(r+2)*(r+4)*(-5248-4488*r-352*r^2+132*r^3+11*r^4)/"
                        "(7*(r-2)*(r+8)*(68+42*r+7*r^2)*(352+354*r+59*r^2))")};
}

enum class Admissibility { yes, no, unknown };

inline std::string_view admissibility_tag(Admissibility a) {
  switch (a) {
    case Admissibility::yes: return "yes";
    case Admissibility::no: return "no";
    case Admissibility::unknown: return "unknown";
  }
  return "";
}

/// Whether a catalogued certified theorem puts W_s(alg) of the given rank at
/// a nondegenerate admissible level. "no" means a catalogued
/// parametrization reaches s but its arithmetic condition fails; "unknown"
/// means no catalogued parametrization reaches s.
inline Admissibility is_admissible_nondegenerate(TargetKind alg, long rank, const BigRat& s) {
  if (rank < 1) throw DomainError("rank must be positive");
  bool seen_failure = false;
  for (const auto& t : detail::witness_theorems()) {
    if (t.conjectural || t.custom || !t.s || t.partner != alg) continue;
    RatFunc rank_expr = parse_ratfunc(t.rank);
    RatFunc s_expr = parse_ratfunc(t.s);
    std::map<Var, BigRat> fixed;
    if (t.fixed_n) fixed[Var::n] = BigRat(*t.fixed_n);
    if (t.fixed_m) fixed[Var::m] = BigRat(*t.fixed_m);
    std::optional<Var> rank_var;
    if (rank_expr.is_constant()) {
      if (rank_expr.constant_value() != BigRat(rank)) continue;
    } else {
      rank_var = rank_expr.has_var(Var::r) ? Var::r : Var::n;
      fixed[*rank_var] = BigRat(rank);
    }
    RatFunc reduced = specialize(s_expr, fixed);
    std::optional<Var> free;
    for (Var v : {Var::n, Var::m, Var::r})
      if (reduced.has_var(v)) free = v;
    std::vector<std::map<Var, BigRat>> solutions;
    if (!free) {
      if (reduced.constant_value() == s) solutions.push_back(fixed);
    } else {
      MultiPoly eq = reduced.num() - reduced.den() * MultiPoly(s);
      if (eq.is_zero()) continue;
      for (const BigRat& x : rational_roots(UniPoly::from_multi(eq, *free))) {
        if (!x.is_integer()) continue;
        auto sol = fixed;
        sol[*free] = x;
        solutions.push_back(sol);
      }
    }
    for (const auto& sol : solutions) {
      auto get = [&](Var v) { return sol.count(v) ? sol.at(v).num().get_si() : 0L; };
      detail::WitnessArgs a{get(Var::n), get(Var::m), get(Var::r), 0, 0};
      if (!t.applies(a.n, a.m)) continue;
      if ((t.aux == detail::AuxKind::r || t.aux == detail::AuxKind::k) && a.a < 1) continue;
      auto conds = t.conditions ? t.conditions(a) : std::vector<WitnessCondition>{};
      bool ok = std::all_of(conds.begin(), conds.end(), [](const WitnessCondition& c) { return c.holds; });
      if (ok) return Admissibility::yes;
      seen_failure = true;
    }
  }
  return seen_failure ? Admissibility::no : Admissibility::unknown;
}

/// Level written as s = -h^vee + p/q. A non-reduced fraction fails the
/// coprimality that every catalogued parametrization requires.
inline Admissibility is_admissible_nondegenerate(TargetKind alg, long rank, long p, long q) {
  if (q == 0) throw DomainError("zero denominator");
  if (std::gcd(p, q) != 1) return Admissibility::no;
  return is_admissible_nondegenerate(alg, rank, -target_dual_coxeter(alg, rank) + BigRat(p, q));
}

// ---------------------------------------------------------------------------
// Gelfand-Tsetlin factors
// ---------------------------------------------------------------------------

struct GTFactor {
  /// "H", "D_k(j)", "E_k(j)", "l_i" or "s_i".
  std::string name;
  /// The coset or principal W-algebra the factor is identified with.
  std::string algebra;
  std::optional<TargetKind> kind;
  long rank = 0;
  std::optional<BigRat> level;
  std::string theorem;
  bool conjectural = false;
  /// Hook-family realization (family, n, m, psi) when one is known.
  std::optional<Family> family;
  long fam_n = 0, fam_m = 0;
  BigRat psi;
};

/// Factors of the Gelfand-Tsetlin subalgebra of L_k(so(2n+1)) (series 'B'),
/// L_k(so(2n+2)) (series 'D') or L_k(sp(2n)) (series 'C').
inline std::vector<GTFactor> gelfand_tsetlin_factors(char series, long n, long k) {
  if (n < 1 || k < 1) throw DomainError("gelfand_tsetlin_factors needs n, k >= 1");
  std::vector<GTFactor> out;
  const std::string ks = std::to_string(k);
  if (series == 'C') {
    for (long i = 1; i <= n; ++i) {
      const long j = n - i;
      const std::string is = std::to_string(i);
      GTFactor l;
      l.name = "l_" + is;
      l.kind = TargetKind::sp;
      l.rank = k;
      l.level = -BigRat(k + 1) + BigRat(2 + j + k, 3 + 2 * j + 2 * k);
      l.algebra = "W_{" + l.level->str() + "}(sp(" + std::to_string(2 * k) + "))";
      l.theorem = "cor:typeC-coset";
      // Com(L_{k-1/2}(sp(2j+2)), L_k(sp(2j+2)) ⊗ S(j+1)) = C_{k+j+2, 2C}(j+1, 0).
      l.family = Family::F2C;
      l.fam_n = j + 1;
      l.fam_m = 0;
      l.psi = BigRat(k + j + 2);
      out.push_back(l);
      GTFactor s;
      s.name = "s_" + is;
      s.kind = TargetKind::sp;
      s.rank = k;
      s.level = -BigRat(k + 1) + BigRat(1 + j + k, 3 + 2 * j + 2 * k);
      s.algebra = "W_{" + s.level->str() + "}(sp(" + std::to_string(2 * k) + "))";
      s.theorem = "cor:typeC-coset";
      if (j >= 1) {
        // Com(L_k(sp(2j)), W_{k-1/2}(sp(2j+2), f_min)) = C_{(3+2j+2k)/2, 2C}(j, 1).
        s.family = Family::F2C;
        s.fam_n = j;
        s.fam_m = 1;
        s.psi = BigRat(3 + 2 * j + 2 * k, 2);
      }
      out.push_back(s);
    }
    return out;
  }
  if (series != 'B' && series != 'D') throw DomainError(std::string("unknown series ") + series);
  GTFactor h;
  h.name = "H";
  h.algebra = "H(1)";
  out.push_back(h);
  const bool even = k % 2 == 0;
  const long r = even ? k / 2 : (k - 1) / 2;
  auto factor = [&](bool is_e, long j) {
    GTFactor f;
    const std::string js = std::to_string(j);
    f.name = std::string(is_e ? "E_" : "D_") + ks + "(" + js + ")";
    // D_k(j) = C_{k+2j-1, 1D}(j, 0), E_k(j) = C_{k+2j, 1B}(j, 0).
    f.family = is_e ? Family::F1B : Family::F1D;
    f.fam_n = j;
    f.fam_m = 0;
    f.psi = BigRat(is_e ? k + 2 * j : k + 2 * j - 1);
    if (r < 1) {
      f.algebra = is_e ? "Com(L_" + ks + "(so(" + std::to_string(2 * j + 1) + ")), L_" + ks + "(so(" +
                             std::to_string(2 * j + 2) + ")))^Z2"
                       : "Com(L_" + ks + "(so(" + std::to_string(2 * j) + ")), L_" + ks + "(so(" +
                             std::to_string(2 * j + 1) + ")))^Z2";
      return f;
    }
    f.rank = r;
    if (even) {
      f.kind = TargetKind::so_even;
      f.level = -BigRat(2 * r - 2) +
                (is_e ? BigRat(2 * j + 2 * r - 1, 2 * j + 2 * r) : BigRat(2 * j + 2 * r - 2, 2 * j + 2 * r - 1));
      f.theorem = is_e ? "coinc:typeD-1B" : "coinc:typeD-1D";
      f.algebra = "W_{" + f.level->str() + "}(so(" + std::to_string(2 * r) + "))^Z2";
    } else {
      f.kind = TargetKind::osp;
      f.level = -BigRat(2 * r + 1, 2) +
                (is_e ? BigRat(j + r, 2 * j + 2 * r + 1) : BigRat(j + r, 2 * j + 2 * r - 1));
      f.theorem = is_e ? "coinc:typeO-1B" : "coinc:typeO-1D";
      f.algebra = "W_{" + f.level->str() + "}(osp(1|" + std::to_string(2 * r) + "))^Z2";
      f.conjectural = true;
    }
    return f;
  };
  for (long j = 1; j <= n; ++j) {
    out.push_back(factor(false, j));
    if (j < n || series == 'D') out.push_back(factor(true, j));
  }
  return out;
}

/// Checks a factor's level against its hook-family realization through the
/// target dictionary; nullopt when the factor carries no such data.
inline std::optional<bool> verify_gt_factor(const GTFactor& f) {
  if (!f.family || !f.kind || !f.level || f.rank < min_target_rank(*f.kind)) return std::nullopt;
  TargetSpec spec = target_dictionary(*f.kind, RatFunc(f.rank));
  const auto& src = detail::cached_curve(*f.family, BigRat(f.fam_n), BigRat(f.fam_m));
  const auto& tgt = detail::cached_curve(spec.family, spec.n.constant_value(), spec.m.constant_value());
  if (!src || !tgt) return std::nullopt;
  BigRat psi_t = *f.level + spec.shift.constant_value();
  auto c1 = detail::eval_or_pole(src->c, {{Var::psi, f.psi}});
  auto l1 = detail::eval_or_pole(src->lambda, {{Var::psi, f.psi}});
  auto c2 = detail::eval_or_pole(tgt->c, {{Var::psi, psi_t}});
  auto l2 = detail::eval_or_pole(tgt->lambda, {{Var::psi, psi_t}});
  if (!c1 || !l1 || !c2 || !l2) return std::nullopt;
  return *c1 == *c2 && *l1 == *l2;
}

}  // namespace osptri
