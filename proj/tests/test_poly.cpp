#include <gtest/gtest.h>

#include "carnot/poly.hpp"
#include "oracles.hpp"

using namespace carnot;

namespace {

UPoly from_roots(const std::vector<Rational>& roots) {
  UPoly p = UPoly::constant(Rational(1));
  for (const auto& r : roots) p = p * UPoly(Vec{Rational(-r), Rational(1)});
  return p;
}

}  // namespace

TEST(UPoly, ArithmeticAndDivision) {
  UPoly p(Vec{Rational(-1), Rational(0), Rational(1)});  // t^2 - 1
  UPoly d(Vec{Rational(1), Rational(1)});               // t + 1
  auto [quo, rem] = divmod(p, d);
  EXPECT_EQ(quo, UPoly(Vec{Rational(-1), Rational(1)}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(p.derivative(), UPoly(Vec{Rational(0), Rational(2)}));
  EXPECT_EQ(p.integral().derivative(), p);
  EXPECT_EQ(UPoly().degree(), -1);
}

TEST(UPoly, GcdIsMonic) {
  UPoly a = from_roots({Rational(1), Rational(2)});
  UPoly b = Rational(3) * from_roots({Rational(2), Rational(5)});
  EXPECT_EQ(gcd(a, b), from_roots({Rational(2)}));
}

// Sturm counts agree with polynomials built from known roots.
TEST(UPoly, SturmCountsKnownRoots) {
  oracle::Gen gen(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> roots;
    std::size_t k = static_cast<std::size_t>(gen.integer(1, 5));
    for (std::size_t i = 0; i < k; ++i) roots.push_back(gen.rational(4, 2));
    UPoly p = from_roots(roots);
    // add an irreducible quadratic factor sometimes: no extra real roots
    if (trial % 3 == 0) p = p * UPoly(Vec{Rational(1), Rational(0), Rational(1)});
    std::vector<Rational> distinct = roots;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    EXPECT_EQ(count_real_roots(p), distinct.size());
    Rational lo(-1), hi(1);
    std::size_t inside = 0;
    for (const auto& r : distinct)
      if (r > lo && r <= hi) ++inside;
    EXPECT_EQ(count_real_roots(p, lo, hi), inside);
    EXPECT_EQ(rational_roots(p), distinct);
    auto iv = isolate_real_roots(p);
    ASSERT_EQ(iv.size(), distinct.size());
    for (std::size_t i = 0; i < iv.size(); ++i) {
      EXPECT_LE(iv[i].first, distinct[i]);
      EXPECT_GE(iv[i].second, distinct[i]);
    }
  }
}

TEST(UPoly, IrrationalRootsIsolated) {
  UPoly p(Vec{Rational(-2), Rational(0), Rational(1)});  // t^2 - 2
  EXPECT_EQ(count_real_roots(p), 2u);
  EXPECT_TRUE(rational_roots(p).empty());
  auto iv = isolate_real_roots(p);
  ASSERT_EQ(iv.size(), 2u);
  // Intervals are half-open (lo, hi]; each must bracket a sign change of p.
  for (const auto& [lo, hi] : iv) EXPECT_LT(sgn(p(lo)) * sgn(p(hi)), 0);
  EXPECT_LE(iv[0].second, Rational(0));
  EXPECT_GE(iv[1].first, Rational(0));
}

TEST(MPoly, VectorFieldBracket) {
  // [d/dx, x d/dy] = d/dy
  VectorField a{MPoly::constant(2, Rational(1)), MPoly::constant(2, Rational(0))};
  VectorField b{MPoly::constant(2, Rational(0)), MPoly::variable(2, 0)};
  VectorField c = lie_bracket(a, b);
  EXPECT_EQ(c[0], MPoly::constant(2, Rational(0)));
  EXPECT_EQ(c[1], MPoly::constant(2, Rational(1)));
}
