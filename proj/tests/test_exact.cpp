#include <gtest/gtest.h>

#include <random>
#include <set>

#include "osptri/exact.hpp"

using namespace osptri;

namespace {

RatFunc P(const char* s) { return parse_ratfunc(s); }
MultiPoly M(const char* s) { return parse_poly(s); }

// Small random polynomial in the given variables with integer coefficients.
MultiPoly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  MultiPoly p;
  for (int i = 0; i < terms; ++i) {
    MultiPoly t(BigRat(coef(rng)));
    int d = deg(rng);
    for (int j = 0; j < d; ++j) t *= MultiPoly::var(vars[pick(rng)]);
    p += t;
  }
  return p;
}

RatFunc random_ratfunc(std::mt19937_64& rng, const std::vector<Var>& vars) {
  MultiPoly den;
  while (den.is_zero()) den = random_poly(rng, vars, 2, 3);
  return RatFunc::normalize(random_poly(rng, vars, 3, 4), den);
}

// Rational-root oracle: enumerate p/q with p | a_0 and q | a_n.
std::set<BigRat> divisor_roots(const UniPoly& u) {
  std::vector<BigRat> c = u.coeffs();
  std::set<BigRat> out;
  std::size_t low = 0;
  while (low < c.size() && c[low].is_zero()) ++low;
  if (low > 0) out.insert(BigRat(0));
  mpz_class l = 1;
  for (auto& x : c) l = lcm(l, x.den());
  std::vector<mpz_class> z;
  for (std::size_t i = low; i < c.size(); ++i) z.push_back((c[i] * BigRat(l)).num());
  auto divisors = [](mpz_class x) {
    x = abs(x);
    std::vector<mpz_class> d;
    for (mpz_class i = 1; i * i <= x; ++i)
      if (x % i == 0) {
        d.push_back(i);
        if (i * i != x) d.push_back(x / i);
      }
    return d;
  };
  for (const auto& p : divisors(z.front()))
    for (const auto& q : divisors(z.back()))
      for (int sgn : {1, -1}) {
        BigRat cand(mpz_class(sgn * p), q);
        if (u(cand).is_zero()) out.insert(cand);
      }
  return out;
}

}  // namespace

TEST(BigRat, CanonicalForm) {
  EXPECT_EQ(BigRat(6, -4).str(), "-3/2");
  EXPECT_EQ(BigRat(0, 7).str(), "0");
  EXPECT_EQ(BigRat(4, 2).str(), "2");
  EXPECT_THROW(BigRat(1, 0), ZeroDenominator);
}

TEST(BigRat, Parse) {
  EXPECT_EQ(parse_rational("3/10"), BigRat(3, 10));
  EXPECT_EQ(parse_rational("-11/8"), BigRat(-11, 8));
  EXPECT_EQ(parse_rational("+4/6"), BigRat(2, 3));
  EXPECT_THROW(parse_rational("1/0"), ZeroDenominator);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/"), ParseError);
}

TEST(BigRat, Pow) {
  EXPECT_EQ(BigRat(2, 3).pow(3), BigRat(8, 27));
  EXPECT_EQ(BigRat(2, 3).pow(-2), BigRat(9, 4));
  EXPECT_THROW(BigRat(0).pow(-1), ZeroDenominator);
}

TEST(Poly, GradedLexSerialization) {
  EXPECT_EQ(M("psi + n^2 + 1").str(), "n^2 + psi + 1");
  EXPECT_EQ(M("s*psi + r^2").str(), "psi*s + r^2");
  EXPECT_EQ(M("-psi1 + 2*psi2*psi").str(), "2*psi*psi2 - psi1");
  EXPECT_EQ(M("0").str(), "0");
}

TEST(Poly, AliasesAndUnknownNames) {
  EXPECT_EQ(P("ψ'"), P("psi1"));
  EXPECT_EQ(P("ψ''"), P("psi2"));
  EXPECT_EQ(P("ψ₁"), P("psi1"));
  EXPECT_THROW(P("x + 1"), ParseError);
  EXPECT_THROW(P("psi +"), ParseError);
  EXPECT_THROW(P("1/(psi-psi)"), ParseError);
}

TEST(RatFunc, NormalizeExamples) {
  EXPECT_EQ(RatFunc::normalize(M("2*psi^2 - 2"), M("2*psi - 2")).str(), "psi + 1");
  EXPECT_EQ(RatFunc::normalize(M("0"), M("psi")).str(), "0");
  RatFunc r = RatFunc::normalize(M("-psi"), M("-2*psi + 1"));
  EXPECT_EQ(r.str(), "(psi)/(2*psi - 1)");
  EXPECT_THROW(RatFunc::normalize(M("1"), M("0")), ZeroDenominator);
}

TEST(RatFunc, NormalizeIsIdempotentAndScaleInvariant) {
  std::mt19937_64 rng(11);
  std::vector<Var> vars{Var::psi, Var::n, Var::m};
  for (int i = 0; i < 60; ++i) {
    MultiPoly a;
    while (a.is_zero()) a = random_poly(rng, vars, 2, 3);
    MultiPoly p = random_poly(rng, vars, 3, 4), q;
    while (q.is_zero()) q = random_poly(rng, vars, 2, 3);
    RatFunc f = RatFunc::normalize(p, q);
    EXPECT_EQ(RatFunc::normalize(f.num(), f.den()), f);
    EXPECT_EQ(RatFunc::normalize(a * p, a * q), f);
    EXPECT_TRUE(gcd(f.znum(), f.zden()).is_constant());
  }
}

TEST(RatFunc, FieldAxioms) {
  std::mt19937_64 rng(2024);
  std::vector<Var> vars{Var::psi, Var::n};
  for (int i = 0; i < 40; ++i) {
    RatFunc a = random_ratfunc(rng, vars), b = random_ratfunc(rng, vars), c = random_ratfunc(rng, vars);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, RatFunc());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), RatFunc(1));
    }
    for (const RatFunc& x : {a + b, a * b, a - c}) EXPECT_TRUE(gcd(x.znum(), x.zden()).is_constant());
  }
}

TEST(RatFunc, SubstituteExamples) {
  RatFunc psi = RatFunc::var(Var::psi);
  EXPECT_EQ(substitute(psi, Var::psi, P("1/(4*psi)")), P("1/(4*psi)"));
  EXPECT_EQ(substitute(P("1/psi"), Var::psi, P("1/psi")), psi);
  RatFunc g = P("psi/(2*psi-1)");
  EXPECT_EQ(substitute(g, Var::psi, g), psi);
  EXPECT_THROW(substitute(P("1/(psi - n)"), Var::psi, RatFunc::var(Var::n)), ZeroDenominator);
}

TEST(RatFunc, SimultaneousSubstitution) {
  RatFunc f = P("psi - n");
  RatFunc g = substitute(f, {{Var::psi, RatFunc::var(Var::n)}, {Var::n, RatFunc::var(Var::psi)}});
  EXPECT_EQ(g, P("n - psi"));
}

TEST(RatFunc, EvalExamples) {
  EXPECT_EQ(eval(P("(psi+1)/(psi-1)"), {{Var::psi, BigRat(3)}}), BigRat(2));
  EXPECT_THROW(eval(P("1/(2*psi-1)"), {{Var::psi, BigRat(1, 2)}}), PoleError);
  EXPECT_THROW(eval(P("psi + n"), {{Var::psi, BigRat(1)}}), MissingVariable);
}

TEST(RatFunc, EvalCommutesWithSubstitution) {
  std::mt19937_64 rng(7);
  std::vector<Var> vars{Var::psi, Var::n};
  std::uniform_int_distribution<int> val(-9, 9);
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    RatFunc f = random_ratfunc(rng, vars), g = random_ratfunc(rng, vars);
    std::map<Var, BigRat> sigma{{Var::psi, BigRat(val(rng), 7)}, {Var::n, BigRat(val(rng), 5)}};
    RatFunc h;
    try {
      h = substitute(f, Var::psi, g);
    } catch (const ZeroDenominator&) {
      continue;
    }
    try {
      BigRat gv = eval(g, sigma);
      auto s2 = sigma;
      s2[Var::psi] = gv;
      BigRat lhs = eval(h, sigma), rhs = eval(f, s2);
      EXPECT_EQ(lhs, rhs);
      ++checked;
    } catch (const PoleError&) {
    }
  }
  EXPECT_GT(checked, 40);
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(M("psi^2 - 2"), M("psi - n"), Var::psi), M("n^2 - 2"));
  MultiPoly p = M("psi^2*n + 3*psi - 1");
  EXPECT_TRUE(resultant(p, p, Var::psi).is_zero());
  EXPECT_EQ(resultant(M("psi1 - 2*psi2"), M("psi1*psi2 - 1"), Var::psi1), M("2*psi2^2 - 1"));
  EXPECT_THROW(resultant(M("n + 1"), M("psi"), Var::psi), DomainError);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  // Univariate integer instances against an exact Sylvester determinant.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-6, 6), deg(1, 4);
  for (int it = 0; it < 60; ++it) {
    int dp = deg(rng), dq = deg(rng);
    std::vector<BigRat> a(dp + 1), b(dq + 1);
    for (auto& x : a) x = coef(rng);
    for (auto& x : b) x = coef(rng);
    if (a.back().is_zero()) a.back() = 1;
    if (b.back().is_zero()) b.back() = -2;
    UniPoly ua(Var::psi, a), ub(Var::psi, b);
    int N = dp + dq;
    std::vector<std::vector<BigRat>> S(N, std::vector<BigRat>(N));
    for (int i = 0; i < dq; ++i)
      for (int j = 0; j <= dp; ++j) S[i][i + j] = a[dp - j];
    for (int i = 0; i < dp; ++i)
      for (int j = 0; j <= dq; ++j) S[dq + i][i + j] = b[dq - j];
    BigRat det(1);
    for (int c = 0; c < N; ++c) {
      int piv = -1;
      for (int r = c; r < N; ++r)
        if (!S[r][c].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) {
        det = 0;
        break;
      }
      if (piv != c) {
        std::swap(S[piv], S[c]);
        det = -det;
      }
      det *= S[c][c];
      for (int r = c + 1; r < N; ++r) {
        BigRat f = S[r][c] / S[c][c];
        for (int k = c; k < N; ++k) S[r][k] -= f * S[c][k];
      }
    }
    MultiPoly res = resultant(ua.to_multi(), ub.to_multi(), Var::psi);
    EXPECT_EQ(res, MultiPoly(det));
  }
}

TEST(Resultant, VanishesAtSharedRationalRoots) {
  // p, q in (psi, n) sharing a root psi = x at n = n0; brute-force check.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int it = 0; it < 30; ++it) {
    BigRat x(small(rng), 3), n0(small(rng), 2);
    MultiPoly lin = M("psi") - MultiPoly(x) + (M("n") - MultiPoly(n0)) * MultiPoly(BigRat(small(rng)));
    MultiPoly p = lin * (M("psi^2") + MultiPoly(BigRat(small(rng))) * M("n") + MultiPoly(BigRat(1)));
    MultiPoly q = lin * (M("psi") + MultiPoly(BigRat(small(rng)))) + (M("n") - MultiPoly(n0)) * M("psi^3");
    if (q.degree(Var::psi) == 0) continue;
    MultiPoly r = resultant(p, q, Var::psi);
    BigRat val = eval(RatFunc(r), {{Var::n, n0}});
    EXPECT_TRUE(val.is_zero());
  }
}

TEST(RationalRoots, Examples) {
  auto roots = [](const char* s) { return rational_roots(UniPoly::from_multi(M(s), Var::psi)); };
  EXPECT_EQ(roots("2*psi^2 - 3*psi + 1"), (std::vector<BigRat>{BigRat(1, 2), BigRat(1)}));
  EXPECT_TRUE(roots("psi^2 + 1").empty());
  EXPECT_EQ(roots("8*psi^3 - 1"), (std::vector<BigRat>{BigRat(1, 2)}));
  EXPECT_EQ(roots("psi^3*(7*psi - 3)*(psi + 5)"), (std::vector<BigRat>{BigRat(-5), BigRat(0), BigRat(3, 7)}));
  EXPECT_EQ(roots("5"), std::vector<BigRat>{});
  EXPECT_THROW(roots("0"), DomainError);
  EXPECT_THROW(UniPoly::from_multi(M("psi*n"), Var::psi), DomainError);
}

TEST(RationalRoots, MatchesDivisorEnumeration) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 9), extra(-20, 20), cnt(0, 4);
  for (int it = 0; it < 120; ++it) {
    MultiPoly p(BigRat(den(rng)));
    int k = cnt(rng);
    for (int i = 0; i < k; ++i) p *= M("psi") - MultiPoly(BigRat(num(rng), den(rng)));
    // An irreducible-ish quadratic factor keeps the problem non-trivial.
    p *= M("psi^2") + MultiPoly(BigRat(extra(rng))) * M("psi") + MultiPoly(BigRat(2 * extra(rng) + 1));
    UniPoly u = UniPoly::from_multi(p, Var::psi);
    std::vector<BigRat> got = rational_roots(u);
    std::set<BigRat> want = divisor_roots(u);
    EXPECT_EQ(std::set<BigRat>(got.begin(), got.end()), want);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
}

TEST(Gcd, MultivariateFactorsRecovered) {
  std::mt19937_64 rng(17);
  std::vector<Var> vars{Var::psi, Var::n, Var::m};
  for (int i = 0; i < 40; ++i) {
    MultiPoly g = random_poly(rng, vars, 3, 3) + M("psi*n*m");
    MultiPoly a = random_poly(rng, vars, 3, 4) + M("n^4"), b = random_poly(rng, vars, 3, 4) + M("m^4 + 1");
    ZPoly za = to_integer_form(a * g).second, zb = to_integer_form(b * g).second;
    ZPoly d = gcd(za, zb);
    ZPoly zg = primitive(to_integer_form(g).second);
    EXPECT_TRUE(exact_divide(d, zg).has_value()) << g.str() << " vs " << d.str();
    EXPECT_TRUE(exact_divide(za, d).has_value());
    EXPECT_TRUE(exact_divide(zb, d).has_value());
  }
}
