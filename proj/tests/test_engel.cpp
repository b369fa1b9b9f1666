#include <gtest/gtest.h>

#include "carnot/engel.hpp"
#include "carnot/errors.hpp"
#include "carnot/hall.hpp"
#include "common.hpp"
#include "oracles.hpp"

using namespace carnot;

namespace {

// Random invertible layer-preserving change of basis.
Mat random_graded_basis(const GradedLieAlgebra& g, oracle::Gen& gen) {
  while (true) {
    Mat p(g.dim(), zeros(g.dim()));
    for (std::size_t k = 1; k <= g.step(); ++k)
      for (std::size_t i = g.layer_begin(k); i < g.layer_end(k); ++i)
        for (std::size_t j = g.layer_begin(k); j < g.layer_end(k); ++j) p[i][j] = Rational(gen.integer(-2, 2));
    if (rank(p, g.dim()) == g.dim()) return p;
  }
}

Vec e(std::size_t n, std::size_t i) { return unit(n, i); }

GradedLieAlgebra free_step4() { return free_nilpotent(2, 4).algebra; }

}  // namespace

TEST(Engel, DefiningRelations) {
  for (std::size_t n = 1; n <= 5; ++n) {
    GradedLieAlgebra g = make_engel(n);
    std::size_t d = g.dim();
    ASSERT_EQ(d, 2 * (n + 1));
    EXPECT_EQ(g.layer_dims(), (std::vector<std::size_t>{n + 1, n, 1}));
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(g.bracket_basis(1 + i, 0), e(d, n + 1 + i));
      EXPECT_EQ(g.bracket_basis(1 + i, n + 1 + i), e(d, d - 1));
    }
    EXPECT_TRUE(is_trimmed(g).trimmed);
  }
}

TEST(Recognizer, RecoversNOnRandomIsomorphs) {
  oracle::Gen gen(51);
  for (std::size_t n = 1; n <= 3; ++n) {
    GradedLieAlgebra g = make_engel(n);
    for (int t = 0; t < 20; ++t) {
      GradedLieAlgebra h = change_basis(g, random_graded_basis(g, gen));
      Recognition r = recognize_engel(h);
      ASSERT_TRUE(r.ok()) << to_string(r.failure) << " " << r.detail;
      const auto& s = *r.structure;
      EXPECT_EQ(s.n, n);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(h.bracket(s.Y[i], s.X), s.T[i]);
        for (std::size_t j = 0; j < n; ++j) EXPECT_TRUE(is_zero(h.bracket(s.Y[i], s.Y[j])));
        EXPECT_TRUE(is_zero(h.bracket(s.X, s.T[i])));
      }
      Inertia in = signature(QForm(s.gram));
      EXPECT_EQ(in.zero, 0u);
      EXPECT_TRUE(in.pos == n || in.neg == n);
    }
  }
}

TEST(Recognizer, DocumentedFailureSteps) {
  struct Case {
    const char* name;
    EngelFailure failure;
  };
  for (const auto& c : {Case{"n626", EngelFailure::AdX}, Case{"137A", EngelFailure::LayerShape},
                        Case{"free23", EngelFailure::LayerShape}, Case{"heisenberg", EngelFailure::LayerShape}}) {
    Recognition r = recognize_engel(corpus(c.name));
    EXPECT_FALSE(r.ok()) << c.name;
    EXPECT_EQ(r.failure, c.failure) << c.name;
  }
  EXPECT_EQ(failure_step(EngelFailure::AdX), 3);
}

TEST(Recognizer, IndefiniteGramRejected) {
  // En^2 with [Y2, T2] = -Z: the Y-pairing is indefinite.
  Presentation p = make_engel(2).presentation();
  for (auto& b : p.brackets)
    if (p.basis[b.left] == "Y2" && p.basis[b.right] == "T2") b.result = neg(b.result);
  Recognition r = recognize_engel(GradedLieAlgebra(p));
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failure, EngelFailure::GramNotDefinite);
}

TEST(Automorphism, ConformalOrthogonalBlocks) {
  Mat rot{{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}};
  EXPECT_TRUE(verify_automorphism(2, Rational(2), Rational(-3), rot));
  EXPECT_FALSE(verify_automorphism(2, Rational(1), Rational(1), {{Rational(1), Rational(0)}, {Rational(0), Rational(2)}}));
  EXPECT_THROW(verify_automorphism(2, Rational(1), Rational(1), {{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}),
               SingularMatrix);
  EXPECT_THROW(verify_automorphism(1, Rational(0), Rational(1), {{Rational(1)}}), SingularMatrix);
}

TEST(Abnormal, EngelTwoLines) {
  GradedLieAlgebra g = make_engel(2);  // X, Y1, Y2, T1, T2, Z
  Vec x = e(6, 0), y1 = e(6, 1);
  EXPECT_FALSE(is_nonabnormal(g, y1));
  EXPECT_FALSE(is_nonabnormal(g, x));
  EXPECT_TRUE(is_nonabnormal(g, add(x, y1)));
  EXPECT_THROW(is_nonabnormal(g, e(6, 3)), NotHorizontal);
  EXPECT_THROW(is_nonabnormal(free_step4(), unit(8, 0)), UnsupportedStep);
}

TEST(Realization, FieldsSatisfyBracketRelations) {
  for (std::size_t n = 1; n <= 3; ++n) {
    GradedLieAlgebra g = make_engel(n);
    std::size_t d = g.dim();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        VectorField lhs = lie_bracket(vf_realization(n, e(d, a)), vf_realization(n, e(d, b)));
        VectorField rhs = vf_realization(n, g.bracket_basis(a, b));
        EXPECT_EQ(lhs, rhs) << n << ": " << a << "," << b;
      }
  }
}

TEST(Realization, ClosedFormSegments) {
  // X-segment from 0: last coordinate stays 0.
  Vec x = e(4, 0), y = e(4, 1);
  Vec p = flow_segment(1, zeros(4), x, Rational(3));
  EXPECT_EQ(p[3], 0);
  // exp(Y) then X for time t: last coordinate t/2.
  Vec q = flow(1, zeros(4), {{y, Rational(1)}, {x, Rational(5)}});
  EXPECT_EQ(q[3], Rational(5, 2));
}

TEST(Realization, MonotoneCoordinate) {
  Vec x = e(4, 0), y = e(4, 1);
  EXPECT_TRUE(check_monotone_coordinate(1, {{x, Rational(2)}}));
  EXPECT_TRUE(check_monotone_coordinate(1, {{y, Rational(1)}, {x, Rational(1)}, {neg(y), Rational(3)}, {x, Rational(1, 2)}}));
  EXPECT_THROW(check_monotone_coordinate(1, {{neg(x), Rational(1)}}), OutsideHalfSpace);
  EXPECT_THROW(check_monotone_coordinate(1, {{x, Rational(-1)}}), OutsideHalfSpace);
  EXPECT_THROW(check_monotone_coordinate(1, {{e(4, 2), Rational(1)}}), OutsideHalfSpace);
}
