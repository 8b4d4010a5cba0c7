#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "osptri/exact.hpp"

namespace osptri {

// ---------------------------------------------------------------------------
// Lie (super)algebra descriptors
// ---------------------------------------------------------------------------

/// Normalization of the bilinear form on osp(M|2N): the B flag normalizes on
/// the orthogonal block, the C flag on the symplectic block.
enum class OspNorm { B, C };

/// so(M), sp(2N) or osp(M|2N). Parameters are the matrix sizes, so so(7) has
/// M = 7 and sp(4) has N = 2.
struct AlgebraDesc {
  enum class Kind { so_odd, so_even, sp, osp };
  Kind kind = Kind::so_odd;
  long M = 0;
  long N = 0;
  OspNorm norm = OspNorm::B;

  static AlgebraDesc so(long dim) {
    if (dim < 0) throw DomainError("so(M) needs M >= 0");
    return {dim % 2 ? Kind::so_odd : Kind::so_even, dim, 0, OspNorm::B};
  }
  static AlgebraDesc sp(long half) {
    if (half < 0) throw DomainError("sp(2N) needs N >= 0");
    return {Kind::sp, 0, half, OspNorm::C};
  }
  static AlgebraDesc osp(long m, long n, OspNorm norm) {
    if (m < 0 || n < 0) throw DomainError("osp(M|2N) needs M, N >= 0");
    return {Kind::osp, m, n, norm};
  }

  /// "so(7)", "sp(4)", "osp(1|4)".
  std::string str() const {
    switch (kind) {
      case Kind::so_odd:
      case Kind::so_even:
        return "so(" + std::to_string(M) + ")";
      case Kind::sp:
        return "sp(" + std::to_string(2 * N) + ")";
      case Kind::osp:
        return "osp(" + std::to_string(M) + "|" + std::to_string(2 * N) + ")";
    }
    return {};
  }
};

inline BigRat dual_coxeter(const AlgebraDesc& a) {
  switch (a.kind) {
    case AlgebraDesc::Kind::so_odd:
    case AlgebraDesc::Kind::so_even:
      return BigRat(a.M - 2);
    case AlgebraDesc::Kind::sp:
      return BigRat(a.N + 1);
    case AlgebraDesc::Kind::osp:
      if (a.norm == OspNorm::B) return BigRat(a.M - 2 * a.N - 2);
      return BigRat(2 * a.N + 2 - a.M, 2);
  }
  return BigRat(0);
}

/// Superdimension (even minus odd); ordinary dimension for so and sp.
inline BigRat sdim(const AlgebraDesc& a) {
  switch (a.kind) {
    case AlgebraDesc::Kind::so_odd:
    case AlgebraDesc::Kind::so_even:
      return BigRat(a.M * (a.M - 1), 2);
    case AlgebraDesc::Kind::sp:
      return BigRat(a.N * (2 * a.N + 1));
    case AlgebraDesc::Kind::osp: {
      long d = a.M - 2 * a.N;
      return BigRat(d * (d - 1), 2);
    }
  }
  return BigRat(0);
}

/// Total dimension (even plus odd).
inline long dim(const AlgebraDesc& a) {
  switch (a.kind) {
    case AlgebraDesc::Kind::so_odd:
    case AlgebraDesc::Kind::so_even:
      return a.M * (a.M - 1) / 2;
    case AlgebraDesc::Kind::sp:
      return a.N * (2 * a.N + 1);
    case AlgebraDesc::Kind::osp:
      return a.M * (a.M - 1) / 2 + a.N * (2 * a.N + 1) + 2 * a.M * a.N;
  }
  return 0;
}

/// Ghost contribution c_d = -(d-1)(d^2-2d-1)/2 of one sl2 block of size d.
inline BigRat ghost_central_charge(long d) {
  if (d < 1) throw DomainError("ghost_central_charge needs d >= 1");
  return BigRat(-(d - 1) * (d * d - 2 * d - 1), 2);
}

// ---------------------------------------------------------------------------
// Hook-type families
// ---------------------------------------------------------------------------

enum class Family : std::uint8_t { F1B, F1C, F1D, F1O, F2B, F2C, F2D, F2O };

inline constexpr std::array<Family, 8> kAllFamilies = {Family::F1B, Family::F1C, Family::F1D, Family::F1O,
                                                       Family::F2B, Family::F2C, Family::F2D, Family::F2O};

inline std::string_view family_tag(Family f) {
  static constexpr std::array<std::string_view, 8> tags = {"1B", "1C", "1D", "1O", "2B", "2C", "2D", "2O"};
  return tags[static_cast<int>(f)];
}

inline std::optional<Family> family_from_tag(std::string_view s) {
  for (Family f : kAllFamilies)
    if (family_tag(f) == s) return f;
  return std::nullopt;
}

inline int family_index(Family f) { return static_cast<int>(f) < 4 ? 1 : 2; }
inline char family_type(Family f) { return family_tag(f)[1]; }

/// One of the eight families with parameters n, m. The public constructor
/// requires non-negative integers; half-integers are reachable only through
/// make_internal, which the curve symmetries need.
class HookFamily {
 public:
  static HookFamily make(Family f, long n, long m) {
    if (n < 0 || m < 0) throw DomainError("family parameters must satisfy n, m >= 0");
    return HookFamily(f, BigRat(n), BigRat(m));
  }
  static HookFamily make_internal(Family f, BigRat n, BigRat m) { return HookFamily(f, std::move(n), std::move(m)); }

  Family family() const { return f_; }
  const BigRat& n() const { return n_; }
  const BigRat& m() const { return m_; }
  bool integral() const { return n_.is_integer() && m_.is_integer(); }
  long n_int() const { return require_int(n_); }
  long m_int() const { return require_int(m_); }
  std::string str() const { return std::string(family_tag(f_)) + "(" + n_.str() + "," + m_.str() + ")"; }

 private:
  HookFamily(Family f, BigRat n, BigRat m) : f_(f), n_(std::move(n)), m_(std::move(m)) {}
  static long require_int(const BigRat& x) {
    if (!x.is_integer()) throw DomainError("integer family parameter required, got " + x.str());
    return x.num().get_si();
  }

  Family f_;
  BigRat n_, m_;
};

/// Relation between the level k of g and the level l of the coset algebra.
enum class EllRule { k, minus_half_k, minus_two_k };

/// Level bookkeeping: psi = k + h_dual_g, l = ell(k), t = t(psi).
struct LevelDictionary {
  BigRat h_dual_g;
  EllRule ell_of_k;
  RatFunc t_of_psi;
  AlgebraDesc affine_subalgebra;
};

/// Decomposition data g = a + b + rho_a (x) rho_b of one family.
struct FamilyData {
  AlgebraDesc g, a, b;
  BigRat h_dual_g;
  /// h^vee of a in the normalization that matches t.
  BigRat h_dual_a;
  long d_a = 0, d_b = 0;
  /// d_a, or sd_a = d_a - 2 when a = osp(1|2n).
  long count_a = 0;
  /// Parity of rho_a (x) rho_b.
  bool even = true;
  EllRule ell;
};

inline FamilyData family_data(const HookFamily& fam) {
  const long n = fam.n_int(), m = fam.m_int();
  FamilyData d;
  switch (fam.family()) {
    case Family::F1B:
      d = {AlgebraDesc::so(2 * n + 2 * m + 2), AlgebraDesc::so(2 * n + 1), AlgebraDesc::so(2 * m + 1),
           BigRat(2 * n + 2 * m), BigRat(2 * n - 1), 2 * n + 1, 2 * m + 1, 2 * n + 1, true, EllRule::k};
      break;
    case Family::F1C:
      d = {AlgebraDesc::osp(2 * m + 1, n, OspNorm::B), AlgebraDesc::sp(n), AlgebraDesc::so(2 * m + 1),
           BigRat(2 * m - 2 * n - 1), BigRat(n + 1), 2 * n, 2 * m + 1, 2 * n, false, EllRule::minus_half_k};
      break;
    case Family::F1D:
      d = {AlgebraDesc::so(2 * n + 2 * m + 1), AlgebraDesc::so(2 * n), AlgebraDesc::so(2 * m + 1),
           BigRat(2 * n + 2 * m - 1), BigRat(2 * n - 2), 2 * n, 2 * m + 1, 2 * n, true, EllRule::k};
      break;
    case Family::F1O:
      d = {AlgebraDesc::osp(2 * m + 2, n, OspNorm::B), AlgebraDesc::osp(1, n, OspNorm::C), AlgebraDesc::so(2 * m + 1),
           BigRat(2 * m - 2 * n), BigRat(2 * n + 1, 2), 2 * n + 1, 2 * m + 1, 2 * n - 1, false,
           EllRule::minus_half_k};
      break;
    case Family::F2B:
      d = {AlgebraDesc::osp(2 * n + 1, m, OspNorm::C), AlgebraDesc::so(2 * n + 1), AlgebraDesc::sp(m),
           BigRat(2 * m - 2 * n + 1, 2), BigRat(2 * n - 1), 2 * n + 1, 2 * m, 2 * n + 1, false,
           EllRule::minus_two_k};
      break;
    case Family::F2C:
      d = {AlgebraDesc::sp(n + m), AlgebraDesc::sp(n), AlgebraDesc::sp(m),
           BigRat(n + m + 1), BigRat(n + 1), 2 * n, 2 * m, 2 * n, true, EllRule::k};
      break;
    case Family::F2D:
      d = {AlgebraDesc::osp(2 * n, m, OspNorm::C), AlgebraDesc::so(2 * n), AlgebraDesc::sp(m),
           BigRat(m - n + 1), BigRat(2 * n - 2), 2 * n, 2 * m, 2 * n, false, EllRule::minus_two_k};
      break;
    case Family::F2O:
      d = {AlgebraDesc::osp(1, n + m, OspNorm::C), AlgebraDesc::osp(1, n, OspNorm::C), AlgebraDesc::sp(m),
           BigRat(2 * m + 2 * n + 1, 2), BigRat(2 * n + 1, 2), 2 * n + 1, 2 * m, 2 * n - 1, true, EllRule::k};
      break;
  }
  return d;
}

/// Level t of the affine subalgebra as a function of psi, for symbolic n.
inline RatFunc affine_level_expr(Family f, const RatFunc& n) {
  const RatFunc psi = RatFunc::var(Var::psi);
  const RatFunc half(BigRat(1, 2));
  switch (f) {
    case Family::F1B: return psi - RatFunc(2) * n;
    case Family::F1C: return -psi * half - n - half;
    case Family::F1D: return psi - RatFunc(2) * n + RatFunc(1);
    case Family::F1O: return -psi * half - n;
    case Family::F2B: return RatFunc(-2) * psi - RatFunc(2) * n + RatFunc(2);
    case Family::F2C: return psi - n - RatFunc(BigRat(3, 2));
    case Family::F2D: return RatFunc(-2) * psi - RatFunc(2) * n + RatFunc(3);
    case Family::F2O: return psi - n - RatFunc(1);
  }
  return RatFunc();
}

inline RatFunc affine_subalgebra_level(const HookFamily& fam) {
  return affine_level_expr(fam.family(), RatFunc(fam.n()));
}

inline LevelDictionary level_dictionary(const HookFamily& fam) {
  FamilyData d = family_data(fam);
  return {d.h_dual_g, d.ell, affine_subalgebra_level(fam), d.a};
}

/// l(k) with k = psi - h_dual_g.
inline RatFunc ell_of_psi(const HookFamily& fam) {
  FamilyData d = family_data(fam);
  RatFunc k = RatFunc::var(Var::psi) - RatFunc(d.h_dual_g);
  switch (d.ell) {
    case EllRule::k: return k;
    case EllRule::minus_half_k: return k * RatFunc(BigRat(-1, 2));
    case EllRule::minus_two_k: return k * RatFunc(-2);
  }
  return k;
}

/// t predicted from l: l + (d_b - 1) * (1 for so, 1/2 for sp and osp(1|2n)),
/// with the sign + when rho_a (x) rho_b is even and - when odd.
inline RatFunc affine_level_from_ell(const HookFamily& fam) {
  FamilyData d = family_data(fam);
  bool orthogonal = d.a.kind == AlgebraDesc::Kind::so_odd || d.a.kind == AlgebraDesc::Kind::so_even;
  BigRat shift = BigRat(d.d_b - 1) * (orthogonal ? BigRat(1) : BigRat(1, 2));
  if (!d.even) shift = -shift;
  return ell_of_psi(fam) + RatFunc(shift);
}

/// Printed closed form of the coset central charge, for symbolic n and m.
inline RatFunc central_charge_expr(Family f, const RatFunc& n, const RatFunc& m) {
  const RatFunc p = RatFunc::var(Var::psi);
  const RatFunc one(1), two(2), four(4);
  switch (f) {
    case Family::F1B:
      return -((p + m * p - m - n - one) * (two * m * p - two * m - two * n - one) * (p + two * m * p - two * m - two * n)) /
             ((p - one) * p);
    case Family::F1C:
      return -((-m + n + m * p) * (one - two * m + two * n + p + two * m * p) *
               (-one - two * m + two * n + two * p + two * m * p)) /
             ((p - one) * p);
    case Family::F1D:
      return -((-m - n + m * p) * (one - two * m - two * n + p + two * m * p) *
               (-one - two * m - two * n + two * p + two * m * p)) /
             ((p - one) * p);
    case Family::F1O:
      return -((-one - m + n + p + m * p) * (-one - two * m + two * n + two * m * p) * (-two * m + two * n + p + two * m * p)) /
             ((p - one) * p);
    case Family::F2B:
      return -((-m + n - p + two * m * p) * (one - two * m + two * n + four * m * p) *
               (-one - two * m + two * n + two * p + four * m * p)) /
             (two * p * (two * p - one));
    case Family::F2C:
      return -((-m - n + two * m * p) * (-one - m - n + p + two * m * p) * (-one - two * m - two * n - two * p + four * m * p)) /
             (p * (two * p - one));
    case Family::F2D:
      return -((-m + n + two * m * p) * (-one - m + n + p + two * m * p) * (-one - two * m + two * n - two * p + four * m * p)) /
             (p * (two * p - one));
    case Family::F2O:
      return -((-m - n - p + two * m * p) * (one - two * m - two * n + four * m * p) *
               (-one - two * m - two * n + two * p + four * m * p)) /
             (two * p * (two * p - one));
  }
  return RatFunc();
}

/// Central charge of the coset C^psi_{iX}(n, m) as a function of psi.
inline RatFunc central_charge(const HookFamily& fam) {
  return central_charge_expr(fam.family(), RatFunc(fam.n()), RatFunc(fam.m()));
}

/// Central charge rebuilt from the blocks c_g + c_dilaton + c_ghost minus the
/// Sugawara charge of V^t(a).
///
/// The ghost term is c_prin + eps * count_a * c_{d_b}. Calibrating against
/// the closed forms fixes eps = +1 for 1B, 1D, 2C, 2O (rho_a (x) rho_b even)
/// and eps = -1 for 1C, 1O, 2B, 2D (odd), with count_a = sd_a = 2n - 1 for
/// a = osp(1|2n) and d_a otherwise.
inline RatFunc assemble_central_charge(const HookFamily& fam) {
  const long n = fam.n_int(), m = fam.m_int();
  if (n + m < 1) throw DomainError("assemble_central_charge needs n + m >= 1");
  if (family_index(fam.family()) == 2 && m < 1)
    throw DomainError("assemble_central_charge needs m >= 1 for the i = 2 families");
  FamilyData d = family_data(fam);
  const RatFunc psi = RatFunc::var(Var::psi);
  const RatFunc k = psi - RatFunc(d.h_dual_g);
  RatFunc c_g = k * RatFunc(sdim(d.g)) / psi;
  BigRat dil = d.b.kind == AlgebraDesc::Kind::sp ? BigRat(2 * m * (4 * m * m - 1)) : BigRat(2 * m * (m + 1) * (2 * m + 1));
  RatFunc c_dil = -k * RatFunc(dil);
  BigRat c_prin(6 * m * m - 8 * m * m * m * m);
  BigRat eps = d.even ? BigRat(1) : BigRat(-1);
  RatFunc c_ghost(c_prin + eps * BigRat(d.count_a) * ghost_central_charge(d.d_b));
  RatFunc c = c_g + c_dil + c_ghost;
  BigRat sa = sdim(d.a);
  if (!sa.is_zero()) {
    RatFunc t = affine_subalgebra_level(fam);
    c -= t * RatFunc(sa) / (t + RatFunc(d.h_dual_a));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Generator profile and degenerate-case descriptions
// ---------------------------------------------------------------------------

struct WeightMultiplicity {
  BigRat weight;
  long multiplicity;
};

/// Strong generating type W(1^{dim a}, 2, 4, ..., 2m, ((d_b+1)/2)^{d_a}) as
/// the raw list of blocks (zero multiplicities dropped).
inline std::vector<WeightMultiplicity> generator_profile(const HookFamily& fam) {
  FamilyData d = family_data(fam);
  std::vector<WeightMultiplicity> out;
  long da = dim(d.a);
  if (da > 0) out.push_back({BigRat(1), da});
  for (long j = 1; j <= fam.m_int(); ++j) out.push_back({BigRat(2 * j), 1});
  if (d.d_a > 0) out.push_back({BigRat(d.d_b + 1, 2), d.d_a});
  return out;
}

inline std::string profile_str(const std::vector<WeightMultiplicity>& prof) {
  std::string s = "W(";
  for (std::size_t i = 0; i < prof.size(); ++i) {
    if (i) s += ", ";
    std::string w = prof[i].weight.str();
    if (!prof[i].weight.is_integer()) w = "(" + w + ")";
    s += w;
    if (prof[i].multiplicity != 1) s += "^" + std::to_string(prof[i].multiplicity);
  }
  return s + ")";
}

struct Description {
  /// Identity of W^psi_{iX}(n, m).
  std::string algebra;
  /// Identity of the coset C^psi_{iX}(n, m).
  std::string coset;
};

namespace detail {

inline std::string lvl(const RatFunc& x) { return "{" + x.str() + "}"; }

}  // namespace detail

inline Description describe(const HookFamily& fam) {
  const long n = fam.n_int(), m = fam.m_int();
  FamilyData d = family_data(fam);
  const RatFunc psi = RatFunc::var(Var::psi);
  auto P = [&](long a, long b = 1) { return detail::lvl(psi + RatFunc(BigRat(a, b))); };
  auto Pm = [&](long c, long a, long b = 1) { return detail::lvl(RatFunc(c) * psi + RatFunc(BigRat(a, b))); };
  const std::string t = detail::lvl(affine_subalgebra_level(fam));
  const std::string k = detail::lvl(psi - RatFunc(d.h_dual_g));
  const std::string A = d.a.str();
  auto so = [](long x) { return AlgebraDesc::so(x).str(); };
  auto sp = [](long x) { return AlgebraDesc::sp(x).str(); };
  auto osp = [](long x, long y) { return AlgebraDesc::osp(x, y, OspNorm::B).str(); };
  auto com = [&](const std::string& inner, bool z2) {
    return "Com(V^" + t + "(" + A + "), " + inner + ")" + (z2 ? "^Z2" : "");
  };
  std::string generic = "W^" + k + "(" + d.g.str() + ", f_" + d.b.str() + ")";
  switch (fam.family()) {
    case Family::F1B:
      if (n == 0 && m == 0) return {"H(1)", "H(1)^Z2"};
      if (n == 0) {
        std::string w = "W^" + P(-2 * m) + "(" + so(2 * m + 2) + ")";
        return {w + ", principal", w + "^Z2"};
      }
      if (m == 0) {
        std::string w = "V^" + P(-2 * n) + "(" + so(2 * n + 2) + ")";
        return {w, com(w, true)};
      }
      return {generic, com(generic, true)};
    case Family::F1C:
      if (n == 0 && m == 0) return {"ℂ", "ℂ"};
      if (n == 0) {
        std::string w = "W^" + P(1 - 2 * m) + "(" + so(2 * m + 1) + ")";
        return {w + ", principal", w};
      }
      if (m == 0) {
        std::string w = "V^" + P(2 * n + 1) + "(" + osp(1, n) + ")";
        return {w, com(w, false)};
      }
      return {generic, com(generic, false)};
    case Family::F1D:
      if (n == 0 && m == 0) return {"ℂ", "ℂ"};
      if (n == 0) {
        std::string w = "W^" + P(1 - 2 * m) + "(" + so(2 * m + 1) + ")";
        return {w + ", principal", w};
      }
      if (m == 0) {
        std::string w = "V^" + P(1 - 2 * n) + "(" + so(2 * n + 1) + ")";
        return {w, com(w, true)};
      }
      if (n == 1) {
        std::string w = "W^" + P(-2 * m - 1) + "(" + so(2 * m + 3) + ", f_subreg)";
        return {w + ", affine part H(1)", "Com(H(1), " + w + ")^Z2"};
      }
      return {generic, com(generic, true)};
    case Family::F1O:
      if (n == 0 && m == 0) return {"H(1)", "H(1)^Z2"};
      if (n == 0) {
        std::string w = "W^" + P(-2 * m) + "(" + so(2 * m + 2) + ")";
        return {w + ", principal", w + "^Z2"};
      }
      if (m == 0) {
        std::string w = "V^" + P(2 * n) + "(" + osp(2, n) + ")";
        return {w, com(w, false)};
      }
      return {generic, com(generic, true)};
    case Family::F2B:
      if (n == 0 && m == 0) return {"F(1)", "F(1)^Z2"};
      if (n == 0) {
        std::string w = "W^" + P(-2 * m - 1, 2) + "(" + osp(1, m) + ")";
        return {w + ", principal", w + "^Z2"};
      }
      if (m == 0) {
        std::string w = "V^" + Pm(-2, 1 - 2 * n) + "(" + so(2 * n + 1) + ") ⊗ F(" + std::to_string(2 * n + 1) + ")";
        return {w, com(w, true)};
      }
      if (m == 1) {
        std::string w = "W^" + P(2 * n - 3, 2) + "(" + osp(2 * n + 1, 1) + ", f_min)";
        return {w, com(w, true)};
      }
      return {generic, com(generic, true)};
    case Family::F2C:
      if (n == 0 && m == 0) return {"ℂ", "ℂ"};
      if (n == 0) {
        std::string w = "W^" + P(-m - 1) + "(" + sp(m) + ")";
        return {w + ", principal", w};
      }
      if (m == 0) {
        std::string w = "V^" + P(-n - 1) + "(" + sp(n) + ") ⊗ S(" + std::to_string(n) + ")";
        return {w, com(w, false)};
      }
      if (m == 1) {
        std::string w = "W^" + P(-n - 2) + "(" + sp(n + 1) + ", f_min)";
        return {w, com(w, false)};
      }
      return {generic, com(generic, false)};
    case Family::F2D:
      if (n == 0 && m == 0) return {"ℂ", "ℂ"};
      if (n == 0) {
        std::string w = "W^" + P(-m - 1) + "(" + sp(m) + ")";
        return {w + ", principal", w};
      }
      if (m == 0) {
        std::string w = "V^" + Pm(-2, 2 - 2 * n) + "(" + so(2 * n) + ") ⊗ F(" + std::to_string(2 * n) + ")";
        return {w, com(w, true)};
      }
      if (n == 1) {
        std::string w = "W^" + P(-m) + "(" + osp(2, m) + ")";
        return {w + ", principal, affine part H(1)", "Com(H(1), " + w + ")^Z2"};
      }
      if (m == 1) {
        std::string w = "W^" + P(n - 2) + "(" + osp(2 * n, 1) + ", f_min)";
        return {w, com(w, true)};
      }
      return {generic, com(generic, true)};
    case Family::F2O:
      if (n == 0 && m == 0) return {"F(1)", "F(1)^Z2"};
      if (n == 0) {
        std::string w = "W^" + P(-2 * m - 1, 2) + "(" + osp(1, m) + ")";
        return {w + ", principal", w + "^Z2"};
      }
      if (m == 0) {
        std::string w = "V^" + P(-2 * n - 1, 2) + "(" + osp(1, n) + ") ⊗ S(" + std::to_string(n) + ") ⊗ F(1)";
        return {w, com(w, true)};
      }
      if (m == 1) {
        std::string w = "W^" + P(-2 * n - 3, 2) + "(" + osp(1, n + 1) + ", f_min)";
        return {w, com(w, true)};
      }
      return {generic, com(generic, true)};
  }
  return {};
}

}  // namespace osptri
