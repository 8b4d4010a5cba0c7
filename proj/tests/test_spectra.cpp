#include <gtest/gtest.h>

#include <numeric>

#include "osptri/catalog.hpp"
#include "osptri/spectra.hpp"

using namespace osptri;

namespace {

const SimpleKind kKinds[] = {SimpleKind::so_odd, SimpleKind::sp};
const SingObject kObjects[] = {SingObject::affine, SingObject::principal_W};

/// |rho - psi rho^vee|^2 over the first n coordinates.
BigRat shifted_norm(const RootSystemData& R, const BigRat& psi) {
  BigRat acc(0);
  for (long i = 0; i < R.n; ++i) {
    BigRat x = R.rho.q[i] - psi * R.rho_check.q[i];
    acc += x * x;
  }
  return acc * R.scale;
}

}  // namespace

TEST(RootSystem, InnerProductTable) {
  for (long n = 2; n <= 6; ++n) {
    auto so = root_system(SimpleKind::so_odd, n);
    EXPECT_EQ(so.ip(so.rho, so.theta_check), BigRat(2 * n - 2));
    EXPECT_EQ(so.ip(so.rho_check, so.theta), BigRat(2 * n - 1));
    EXPECT_EQ(so.ip(so.rho, so.theta_s_check), BigRat(2 * n - 1));
    EXPECT_EQ(so.ip(so.rho_check, so.theta_s), BigRat(n));
    auto sp = root_system(SimpleKind::sp, n);
    EXPECT_EQ(sp.ip(sp.rho, sp.theta_check), BigRat(n));
    EXPECT_EQ(sp.ip(sp.rho_check, sp.theta), BigRat(2 * n - 1));
    EXPECT_EQ(sp.ip(sp.rho, sp.theta_s_check), BigRat(2 * n - 1));
    EXPECT_EQ(sp.ip(sp.rho_check, sp.theta_s), BigRat(2 * n - 2));
  }
}

TEST(RootSystem, Normalization) {
  for (SimpleKind k : kKinds)
    for (long n = 1; n <= 5; ++n) {
      auto R = root_system(k, n);
      EXPECT_EQ(R.ip(R.theta, R.theta), BigRat(2));
      EXPECT_EQ(R.ip(R.theta, R.theta_check), BigRat(2));
      EXPECT_EQ(R.ip(R.theta_s, R.theta_s_check), BigRat(2));
      EXPECT_EQ(R.simple_roots.size(), static_cast<std::size_t>(n));
      // (rho^vee, alpha) = 1 on every simple root.
      for (const auto& a : R.simple_roots) EXPECT_EQ(R.ip(R.rho_check, a), BigRat(1));
    }
  EXPECT_EQ(root_system(SimpleKind::so_odd, 3).dual_coxeter, 5);
  EXPECT_EQ(root_system(SimpleKind::sp, 3).dual_coxeter, 4);
  EXPECT_EQ(root_system(SimpleKind::sp, 3).coxeter, 6);
  EXPECT_THROW(root_system(SimpleKind::sp, 0), DomainError);
}

TEST(SingWeight, GeneralExamples) {
  EXPECT_EQ(sing_weight_general(SimpleKind::sp, SingObject::affine, 1, 3, 1), BigRat(2));
  EXPECT_EQ(sing_weight_general(SimpleKind::sp, SingObject::principal_W, 2, 5, 3), BigRat(0));
  EXPECT_EQ(sing_weight_general(SimpleKind::so_odd, SingObject::affine, 2, 5, 2), BigRat(2));
}

TEST(SingWeight, NonCoprimeLevelsAreRejected) {
  // u/v must be in lowest terms; (4, 2) and (3, 3) are not admissible data.
  EXPECT_THROW(sing_weight_general(SimpleKind::so_odd, SingObject::affine, 2, 4, 2), DomainError);
  EXPECT_THROW(sing_weight_closed(SimpleKind::so_odd, SingObject::affine, 2, 4, 2), DomainError);
  EXPECT_THROW(sing_weight_closed(SimpleKind::so_odd, SingObject::principal_W, 1, 3, 3), DomainError);
}

TEST(SingWeight, ClosedExamples) {
  EXPECT_EQ(sing_weight_closed(SimpleKind::sp, SingObject::affine, 2, 5, 3), BigRat(9));
  EXPECT_EQ(sing_weight_closed(SimpleKind::so_odd, SingObject::affine, 2, 5, 2), BigRat(2));
  EXPECT_EQ(sing_weight_closed(SimpleKind::so_odd, SingObject::principal_W, 1, 4, 3), BigRat(8));
}

TEST(SingWeight, GeneralEqualsClosedOnSweep) {
  int count = 0;
  for (SimpleKind k : kKinds)
    for (SingObject o : kObjects)
      for (long n = 1; n <= 4; ++n)
        for (long v = 1; v <= 6; ++v)
          for (long u = n + 1; u <= 12; ++u) {
            if (std::gcd(u, v) != 1) continue;
            EXPECT_EQ(sing_weight_general(k, o, n, u, v), sing_weight_closed(k, o, n, u, v))
                << static_cast<int>(k) << static_cast<int>(o) << " n=" << n << " u=" << u << " v=" << v;
            ++count;
          }
  EXPECT_GT(count, 500);
}

TEST(SingWeight, Errors) {
  EXPECT_THROW(sing_weight_general(SimpleKind::sp, SingObject::affine, 2, 4, 2), DomainError);
  EXPECT_THROW(sing_weight_closed(SimpleKind::sp, SingObject::affine, 0, 3, 1), DomainError);
  EXPECT_THROW(sing_weight_general(SimpleKind::so_odd, SingObject::affine, 2, 0, 1), DomainError);
}

TEST(GeneratorWeight, Examples) {
  EXPECT_EQ(max_generator_weight(HookFamily::make(Family::F2B, 1, 1)), 14);
  EXPECT_EQ(max_generator_weight(HookFamily::make(Family::F1B, 1, 0)), 18);
  EXPECT_EQ(max_generator_weight(HookFamily::make(Family::F1O, 0, 1)), 8);
  EXPECT_THROW(max_generator_weight(Family::F2B, 0, 0), DomainError);
}

TEST(GeneratorWeight, PositiveAndEven) {
  for (Family f : kAllFamilies)
    for (long n = 0; n <= 5; ++n)
      for (long m = 0; m <= 5; ++m) {
        if (n + m < 1) continue;
        long w = max_generator_weight(f, n, m);
        EXPECT_GT(w, 0);
        EXPECT_EQ(w % 2, 0);
      }
}

TEST(GeneratorWeight, TrialityInvariance) {
  for (long n = 0; n <= 5; ++n)
    for (long m = std::max<long>(n, 1); m <= 5; ++m) {
      long a = max_generator_weight(Family::F2B, n, m);
      EXPECT_EQ(a, max_generator_weight(Family::F2O, n, m - n));
      EXPECT_EQ(a, max_generator_weight(Family::F2B, m, n));

      long b = max_generator_weight(Family::F1C, n, m);
      EXPECT_EQ(b, max_generator_weight(Family::F2C, n, m - n));
      EXPECT_EQ(b, max_generator_weight(Family::F1C, m, n));

      long c = max_generator_weight(Family::F2D, n, m);
      EXPECT_EQ(c, max_generator_weight(Family::F1D, n, m - n));
      if (n >= 1) {
        EXPECT_EQ(c, max_generator_weight(Family::F1O, m, n - 1));
      }

      long d = max_generator_weight(Family::F1O, n, m);
      EXPECT_EQ(d, max_generator_weight(Family::F1B, n, m - n));
      EXPECT_EQ(d, max_generator_weight(Family::F2D, m + 1, n));
    }
}

TEST(TargetCharge, MatchesFreudenthalDeVries) {
  // c(W^s(g)) = rank - 12 |rho - psi rho^vee|^2 / psi with psi = s + h^vee.
  const BigRat samples[] = {BigRat(1, 3), BigRat(-7, 5), BigRat(5, 2), BigRat(11, 7)};
  for (long r = 2; r <= 4; ++r) {
    auto sp = root_system(SimpleKind::sp, r);
    auto so = root_system(SimpleKind::so_odd, r);
    TruncationCurve sp_curve = target_curve(TargetKind::sp, RatFunc(r));
    TruncationCurve so_curve = target_curve(TargetKind::so_odd, RatFunc(r));
    for (const BigRat& s : samples) {
      BigRat psi_sp = s + BigRat(sp.dual_coxeter);
      BigRat psi_so = s + BigRat(so.dual_coxeter);
      EXPECT_EQ(eval(sp_curve.c, {{Var::psi, s}}), BigRat(r) - BigRat(12) * shifted_norm(sp, psi_sp) / psi_sp);
      EXPECT_EQ(eval(so_curve.c, {{Var::psi, s}}), BigRat(r) - BigRat(12) * shifted_norm(so, psi_so) / psi_so);
    }
  }
}
