#include <gtest/gtest.h>

#include <algorithm>

#include "osptri/catalog.hpp"
#include "osptri/curves.hpp"

using namespace osptri;

namespace {

BigRat at(const RatFunc& f, BigRat psi) { return eval(f, {{Var::psi, psi}}); }
TruncationCurve curve(Family f, long n, long m) { return phi(HookFamily::make(f, n, m)); }

bool phi_defined(Family f, long n, long m) {
  if ((f == Family::F1B || f == Family::F1O) && n == 0 && m == 0) return false;
  return !(f == Family::F2D && n == 1 && m == 0);
}

bool contains(const IntersectionResult& res, const BigRat& a, const BigRat& b) {
  return std::any_of(res.points.begin(), res.points.end(),
                     [&](const IntersectionPoint& p) { return p.psi1 == a && p.psi2 == b; });
}

}  // namespace

TEST(Phi2B, PrintedValues) {
  EXPECT_EQ(at(phi_2B(BigRat(1), BigRat(1)).c, BigRat(1)), BigRat(-25, 2));
  EXPECT_EQ(at(phi_2B(BigRat(0), BigRat(0)).lambda, BigRat(1)), BigRat(2, 49));
  EXPECT_EQ(phi_2B(BigRat(0), BigRat(0)).c, RatFunc(BigRat(1, 2)));
}

TEST(Phi2B, TranscriptionChecksum) {
  // f, g, h at (n, m, psi) = (0, 0, 1).
  std::map<Var, BigRat> pt{{Var::n, BigRat(0)}, {Var::m, BigRat(0)}, {Var::psi, BigRat(1)}};
  EXPECT_EQ(eval(detail::curve_f(), pt), BigRat(-147));
  EXPECT_EQ(eval(detail::curve_g(), pt), BigRat(-21));
  EXPECT_EQ(eval(detail::curve_h(), pt), BigRat(-49));
}

TEST(Phi2B, HalfIntegerParameters) {
  auto c = phi_2B(BigRat(1, 2), BigRat(3, 2));
  EXPECT_TRUE(c.c.has_var(Var::psi));
  EXPECT_EQ(c, phi_expr(Family::F2B, RatFunc(BigRat(1, 2)), RatFunc(BigRat(3, 2))));
}

TEST(Phi, TwoOFromTwoB) {
  RatFunc psi = RatFunc::var(Var::psi);
  EXPECT_EQ(detail::map_psi(curve(Family::F2O, 0, 1), (RatFunc(4) * psi).inverse()), phi_2B(BigRat(0), BigRat(1)));
}

TEST(Phi, PrincipalChargesMatchClosedForms) {
  EXPECT_EQ(curve(Family::F2C, 0, 1).c, central_charge(HookFamily::make(Family::F2C, 0, 1)));
  EXPECT_EQ(curve(Family::F1D, 0, 2).c, curve(Family::F1C, 0, 2).c);
  EXPECT_EQ(curve(Family::F1D, 0, 2).c, central_charge(HookFamily::make(Family::F1D, 0, 2)));
}

TEST(Phi, ChargeComponentMatchesLiedata) {
  for (Family f : kAllFamilies)
    for (long n = 0; n <= 4; ++n)
      for (long m = 0; m <= 4; ++m) {
        if (!phi_defined(f, n, m)) continue;
        auto fam = HookFamily::make(f, n, m);
        EXPECT_EQ(phi(fam).c, central_charge(fam)) << fam.str();
      }
}

TEST(Phi, UndefinedSpecializationsThrow) {
  EXPECT_THROW(curve(Family::F1B, 0, 0), DomainError);
  EXPECT_THROW(curve(Family::F1O, 0, 0), DomainError);
  EXPECT_THROW(curve(Family::F2D, 1, 0), DomainError);
}

TEST(Phi, SymbolicSpecializesToNumeric) {
  RatFunc n = RatFunc::var(Var::n), m = RatFunc::var(Var::m);
  for (Family f : kAllFamilies) {
    TruncationCurve sym = phi_expr(f, n, m);
    std::map<Var, BigRat> nm{{Var::n, BigRat(2)}, {Var::m, BigRat(3)}};
    EXPECT_EQ(specialize(sym.c, nm), curve(f, 2, 3).c) << family_tag(f);
    EXPECT_EQ(specialize(sym.lambda, nm), curve(f, 2, 3).lambda) << family_tag(f);
  }
}

TEST(Trialities, IntegerRange) {
  for (long n = 0; n <= 5; ++n)
    for (long m = std::max<long>(n, 1); m <= 5; ++m) {
      auto rep = verify_trialities(n, m);
      EXPECT_EQ(rep.checks.size(), 8u);
      for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << n << "," << m << ": " << c.name;
    }
}

TEST(Trialities, Symbolic) {
  auto rep = verify_trialities_expr(RatFunc::var(Var::n), RatFunc::var(Var::m));
  EXPECT_EQ(rep.checks.size(), 8u);
  EXPECT_TRUE(rep.all_pass());
}

TEST(Trialities, SpotValue) {
  EXPECT_TRUE(verify_trialities(0, 1).all_pass());
  EXPECT_EQ(at(curve(Family::F2B, 0, 1).c, BigRat(1)), BigRat(0));
  RatFunc psi = RatFunc::var(Var::psi);
  RatFunc mapped = substitute(curve(Family::F2B, 1, 0).c, Var::psi, psi / (RatFunc(2) * psi - RatFunc(1)));
  EXPECT_EQ(at(mapped, BigRat(1)), BigRat(0));
}

TEST(Trialities, ConstantShiftOfLambdaIsInvisible) {
  // Every derivation route only substitutes psi, n and m, so a constant
  // added to lambda_2B propagates to all eight curves alike.
  BaseCurveFn shifted = [](const RatFunc& n, const RatFunc& m) {
    TruncationCurve t = phi_2B(n, m);
    t.lambda = t.lambda + RatFunc(1);
    return t;
  };
  EXPECT_TRUE(verify_trialities_expr(RatFunc(1), RatFunc(2), shifted).all_pass());
}

TEST(Trialities, PerturbedLambdaFailsLineOne) {
  BaseCurveFn bad = [](const RatFunc& n, const RatFunc& m) {
    TruncationCurve t = phi_2B(n, m);
    t.lambda = t.lambda + RatFunc::var(Var::psi);
    return t;
  };
  auto rep = verify_trialities_expr(RatFunc(1), RatFunc(2), bad);
  ASSERT_EQ(rep.checks.size(), 8u);
  // 2B(n,m) = 2B(m,n) at psi/(2psi-1).
  EXPECT_FALSE(rep.checks[1].pass);
  EXPECT_FALSE(rep.checks[1].lambda_difference.empty());
  EXPECT_EQ(rep.checks[1].c_difference, "0");
  EXPECT_FALSE(rep.all_pass());
}

TEST(Trialities, RangeErrors) {
  EXPECT_THROW(verify_trialities(2, 1), DomainError);
  EXPECT_THROW(verify_trialities(0, 0), DomainError);
  EXPECT_THROW(verify_trialities(-1, 1), DomainError);
}

TEST(KnownPoint, Examples) {
  auto p = known_point_2B_sp(RatFunc(0), RatFunc(0), RatFunc(1));
  EXPECT_EQ(p.point.c, RatFunc(BigRat(1, 2)));
  EXPECT_EQ(p.psi_star, RatFunc(BigRat(1, 6)));
  EXPECT_TRUE(p.consistent);
  auto q = known_point_2B_sp(RatFunc(1), RatFunc(1), RatFunc(1));
  EXPECT_EQ(q.point.c, RatFunc(BigRat(-7, 20)));
  EXPECT_TRUE(q.consistent);
}

TEST(KnownPoint, TrivariateIdentity) {
  auto p = known_point_2B_sp(RatFunc::var(Var::n), RatFunc::var(Var::m), RatFunc::var(Var::r));
  EXPECT_TRUE(p.consistent);
}

TEST(KnownPoint, LiesOnTheSpCurve) {
  // psi' = s + r + 1 on 2C(0, r) with s from the matching coincidence entry.
  RatFunc n = RatFunc::var(Var::n), m = RatFunc::var(Var::m), r = RatFunc::var(Var::r);
  auto p = known_point_2B_sp(n, m, r);
  auto e = coincidence_table(Family::F2B, TargetKind::sp)[1];
  TruncationCurve sp = detail::map_psi(target_curve(TargetKind::sp, r), e.s);
  EXPECT_EQ(e.psi, p.psi_star);
  EXPECT_EQ(sp.c, p.point.c);
  EXPECT_EQ(sp.lambda, p.point.lambda);
}

TEST(Virasoro, QuotientIdentity) {
  TruncationCurve C = curve(Family::F2C, 0, 1);
  RatFunc lhs = RatFunc(49) * C.lambda * C.lambda * (C.c - RatFunc(25)) * (C.c - RatFunc(1));
  EXPECT_EQ(lhs, RatFunc(1));
}

TEST(Degenerate, Charges) {
  for (auto c : {BigRat(0), BigRat(1), BigRat(-24), BigRat(-22, 5), BigRat(1, 2)}) EXPECT_TRUE(is_degenerate_charge(c));
  EXPECT_FALSE(is_degenerate_charge(BigRat(-2)));
}

TEST(Intersect, SpPrincipalPoint) {
  auto res = intersect(curve(Family::F2B, 0, 1), curve(Family::F2C, 0, 1));
  EXPECT_TRUE(contains(res, BigRat(1, 8), BigRat(3, 8)));
  for (const auto& p : res.points) {
    EXPECT_EQ(at(curve(Family::F2B, 0, 1).c, p.psi1), p.c);
    EXPECT_EQ(at(curve(Family::F2C, 0, 1).lambda, p.psi2), p.lambda);
    EXPECT_EQ(p.degenerate, is_degenerate_charge(p.c));
  }
}

TEST(Intersect, SelfIntersectionIsAnIdentityComponent) {
  TruncationCurve C = curve(Family::F2B, 1, 1);
  auto res = intersect(C, C);
  EXPECT_FALSE(res.identity_components.empty());
}

TEST(Intersect, Symmetric) {
  TruncationCurve A = curve(Family::F2B, 0, 1), B = curve(Family::F2C, 0, 2);
  auto ab = intersect(A, B), ba = intersect(B, A);
  ASSERT_EQ(ab.points.size(), ba.points.size());
  for (const auto& p : ab.points) EXPECT_TRUE(contains(ba, p.psi2, p.psi1));
}

TEST(Intersect, SoTargetRecoversTablePoints) {
  // so(4): 1O(0, 1) with psi' = s + 2.
  auto res = intersect(curve(Family::F2B, 0, 1), curve(Family::F1O, 0, 1));
  int checked = 0;
  for (const auto& e : coincidence_table(Family::F2B, TargetKind::so_even)) {
    auto chk = verify_coincidence(e, 0, 1, 2);
    if (chk.status != CoincidenceStatus::pass) continue;
    EXPECT_TRUE(contains(res, *chk.psi, *chk.psi_target)) << e.tag();
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Intersect, RejectsResidualSymbols) {
  TruncationCurve sym = phi_expr(Family::F2B, RatFunc::var(Var::n), RatFunc(1));
  EXPECT_THROW(intersect(sym, curve(Family::F2B, 0, 1)), DomainError);
}
