#include <gtest/gtest.h>

#include "carnot/errors.hpp"
#include "carnot/linalg.hpp"
#include "oracles.hpp"

using namespace carnot;

namespace {

Rational q(const char* s) { return parse_rational(s); }

Mat random_mat(oracle::Gen& gen, std::size_t r, std::size_t c, long range = 2) {
  Mat m(r);
  for (auto& row : m) row = gen.vec(c, range);
  return m;
}

}  // namespace

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(to_string(q("6/4")), "3/2");
  EXPECT_EQ(to_string(q("-0/5")), "0");
  EXPECT_EQ(to_string(q("-7")), "-7");
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", "1//2", " 1", "+-1"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, VectorHelpers) {
  Vec a{q("1"), q("1/2")}, b{q("-1"), q("3")};
  EXPECT_EQ(add(a, b), (Vec{q("0"), q("7/2")}));
  EXPECT_EQ(dot(a, b), q("1/2"));
  Vec y = a;
  axpy(y, q("2"), b);
  EXPECT_EQ(y, (Vec{q("-1"), q("13/2")}));
  EXPECT_EQ(to_string(a), "(1, 1/2)");
}

TEST(Subspace, RrefIsCanonical) {
  Subspace a = Subspace::span(3, {{q("2"), q("4"), q("0")}, {q("1"), q("2"), q("1")}});
  Subspace b = Subspace::span(3, {{q("0"), q("0"), q("5")}, {q("1"), q("2"), q("0")}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_EQ(a.basis()[0], (Vec{q("1"), q("2"), q("0")}));
  EXPECT_EQ(a.free_columns(), std::vector<std::size_t>{1});
}

TEST(Subspace, RaggedInputThrows) {
  EXPECT_THROW(Subspace::span(3, {{q("1"), q("0")}}), DimensionMismatch);
}

TEST(Subspace, CoordinatesOfNonMemberThrow) {
  Subspace a = Subspace::span(3, {{q("1"), q("0"), q("0")}});
  EXPECT_EQ(a.coordinates({q("3"), q("0"), q("0")}), Vec{q("3")});
  EXPECT_THROW(a.coordinates({q("0"), q("1"), q("0")}), NonSpanning);
}

TEST(Subspace, DimensionFormulaProperty) {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    Subspace a = Subspace::span(n, random_mat(gen, static_cast<std::size_t>(gen.integer(0, 4)), n, 1));
    Subspace b = Subspace::span(n, random_mat(gen, static_cast<std::size_t>(gen.integer(0, 4)), n, 1));
    Subspace s = sum(a, b), i = intersect(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
    EXPECT_TRUE(s.contains(a));
    EXPECT_TRUE(s.contains(b));
  }
}

TEST(Subspace, AnnihilatorProperty) {
  oracle::Gen gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    Subspace a = Subspace::span(n, random_mat(gen, static_cast<std::size_t>(gen.integer(0, 5)), n, 1));
    Mat ann = a.annihilator();
    EXPECT_EQ(ann.size() + a.dim(), n);
    for (const auto& f : ann)
      for (const auto& v : a.basis()) EXPECT_EQ(dot(f, v), 0);
  }
}

TEST(Matrix, KernelAndRankProperty) {
  oracle::Gen gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = static_cast<std::size_t>(gen.integer(1, 5)), c = static_cast<std::size_t>(gen.integer(1, 6));
    Mat m = random_mat(gen, r, c, 1);
    Mat k = kernel(m, c);
    EXPECT_EQ(k.size() + rank(m, c), c);
    for (const auto& v : k) EXPECT_TRUE(is_zero(mat_vec(m, v)));
  }
}

TEST(Matrix, SolveAndInverse) {
  oracle::Gen gen(14);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    Mat m = random_mat(gen, n, n);
    Vec x = gen.vec(n);
    Vec b = mat_vec(m, x);
    auto s = solve(m, b, n);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(mat_vec(m, *s), b);
    if (rank(m, n) == n) EXPECT_EQ(mat_mul(m, inverse(m)), identity(n));
  }
  EXPECT_THROW(inverse({{q("1"), q("2")}, {q("2"), q("4")}}), SingularMatrix);
  EXPECT_FALSE(solve({{q("1"), q("1")}, {q("1"), q("1")}}, {q("0"), q("1")}, 2).has_value());
}

TEST(QuadraticForm, RejectsAsymmetric) {
  EXPECT_THROW(QForm({{q("1"), q("2")}, {q("0"), q("1")}}), NotSymmetric);
}

TEST(QuadraticForm, ZeroDiagonalHyperbolicPlane) {
  QForm h({{q("0"), q("1")}, {q("1"), q("0")}});
  EXPECT_EQ(signature(h), (Inertia{1, 1, 0}));
  EXPECT_TRUE(radical(h).is_zero());
}

TEST(QuadraticForm, RadicalOfSemidefinite) {
  // (a1 + a2)^2
  QForm f({{q("1"), q("1"), q("0")}, {q("1"), q("1"), q("0")}, {q("0"), q("0"), q("0")}});
  EXPECT_EQ(signature(f), (Inertia{1, 0, 2}));
  Subspace r = radical(f);
  EXPECT_EQ(r.dim(), 2u);
  EXPECT_TRUE(r.contains(Vec{q("1"), q("-1"), q("0")}));
}

// Exact Lagrange inertia agrees with floating Jacobi rotations on random forms.
TEST(QuadraticForm, SignatureMatchesEigenOracle) {
  oracle::Gen gen(15);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    // Build M = P^T D P with known inertia so that the double oracle is well conditioned.
    Mat p = random_mat(gen, n, n, 2);
    if (rank(p, n) != n) continue;
    Vec d(n);
    for (auto& x : d) x = Rational(gen.integer(-2, 2));
    Mat m(n, zeros(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m[i][j] += p[k][i] * d[k] * p[k][j];
    Inertia exact = signature(QForm(m));
    oracle::Inertia ref = oracle::jacobi_inertia(m, 1e-7);
    EXPECT_EQ(exact.pos, ref.pos);
    EXPECT_EQ(exact.neg, ref.neg);
    EXPECT_EQ(exact.zero, ref.zero);
    EXPECT_EQ(radical(QForm(m)).dim(), exact.zero);
  }
}

TEST(QuadraticForm, RestrictionIsCongruence) {
  QForm f({{q("1"), q("0")}, {q("0"), q("-1")}});
  QForm r = f.restrict_to({{q("1"), q("1")}});
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(f({q("2"), q("1")}), q("3"));
}
