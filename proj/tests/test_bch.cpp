#include <gtest/gtest.h>

#include "carnot/bch.hpp"
#include "carnot/engel.hpp"
#include "carnot/errors.hpp"
#include "carnot/hall.hpp"
#include "common.hpp"
#include "oracles.hpp"

using namespace carnot;

TEST(Bch, CommutingCase) {
  GradedLieAlgebra g = corpus("137A");
  Vec a = unit(7, 0), b = unit(7, 2);
  EXPECT_EQ(bch_product(g, a, b), add(a, b));
}

TEST(Bch, EngelOneExample) {
  GradedLieAlgebra g = make_engel(1);  // X, Y1, T1, Z
  Vec r = bch_product(g, unit(4, 1), unit(4, 0));
  EXPECT_EQ(r, (Vec{Rational(1), Rational(1), Rational(1, 2), Rational(1, 12)}));
}

TEST(Bch, GroupLawProperties) {
  oracle::Gen gen(61);
  for (GradedLieAlgebra g : {make_engel(3), corpus("137A"), free_nilpotent(2, 4).algebra}) {
    for (int t = 0; t < 100; ++t) {
      Vec a = gen.vec(g.dim(), 2), b = gen.vec(g.dim(), 2), c = gen.vec(g.dim(), 2);
      EXPECT_EQ(bch_product(g, bch_product(g, a, b), c), bch_product(g, a, bch_product(g, b, c)));
      EXPECT_TRUE(is_zero(bch_product(g, a, neg(a))));
      EXPECT_EQ(bch_product(g, a, zeros(g.dim())), a);
      Rational s = gen.rational(2, 2);
      EXPECT_EQ(bch_product(g, dilate(g, a, s), dilate(g, b, s)), dilate(g, bch_product(g, a, b), s));
    }
  }
}

TEST(Bch, RejectsStepFive) {
  GradedLieAlgebra g = free_nilpotent(2, 5).algebra;
  EXPECT_THROW(bch_product(g, unit(g.dim(), 0), unit(g.dim(), 1)), UnsupportedStep);
}

// exp(a) exp(b) ... equals the composed flows of the left-invariant fields.
TEST(Bch, AgreesWithFlowComposition) {
  oracle::Gen gen(62);
  for (std::size_t n = 1; n <= 3; ++n) {
    GradedLieAlgebra g = make_engel(n);
    for (int t = 0; t < 100; ++t) {
      std::size_t len = static_cast<std::size_t>(gen.integer(1, 4));
      Mat f;
      std::vector<Segment> word;
      for (std::size_t i = 0; i < len; ++i) {
        f.push_back(gen.vec(g.dim(), 2));
        word.push_back({f.back(), Rational(1)});
      }
      EXPECT_EQ(realize(n, bch_word(g, f)), flow(n, zeros(g.dim()), word));
    }
  }
}

TEST(Sampler, FactorsLieInHalfSpace) {
  GradedLieAlgebra g = make_engel(2);
  Vec lam{Rational(1), Rational(-1), Rational(2)};
  SampleOptions o;
  o.count = 50;
  for (std::size_t i = 0; i < o.count; ++i)
    for (const auto& w : sample_factors(g, lam, o, i)) {
      Vec v1(w.begin(), w.begin() + 3);
      EXPECT_GE(dot(lam, v1), 0);
      for (std::size_t k = 3; k < w.size(); ++k) EXPECT_EQ(w[k], 0);
    }
}

TEST(Sampler, LengthOneGivesHalfSpacePoints) {
  GradedLieAlgebra g = make_engel(1);
  SampleOptions o;
  o.word_length = 1;
  o.count = 100;
  SampleRun run = sample_semigroup(g, {Rational(0), Rational(1)}, o);
  for (const auto& p : run.points) EXPECT_GE(p[1], 0);
}

TEST(Sampler, ReproducibleAcrossThreads) {
  GradedLieAlgebra g = make_engel(2);
  SampleOptions o;
  o.count = 300;
  o.seed = 7;
  SampleRun a = sample_semigroup(g, {Rational(1), Rational(0), Rational(0)}, o);
  o.threads = 4;
  SampleRun b = sample_semigroup(g, {Rational(1), Rational(0), Rational(0)}, o);
  EXPECT_EQ(a.points, b.points);
  EXPECT_EQ(a.lengths, b.lengths);
  EXPECT_EQ(a.min, b.min);
  o.seed = 8;
  SampleRun c = sample_semigroup(g, {Rational(1), Rational(0), Rational(0)}, o);
  EXPECT_NE(a.points, c.points);
}

TEST(Sampler, RngDeriveIsStable) {
  Rng a = Rng::derive(1, 5), b = Rng::derive(1, 5), c = Rng::derive(1, 6);
  EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(Rng::derive(1, 5).next(), c.next());
  Rng r(3);
  for (int i = 0; i < 1000; ++i) {
    long x = r.uniform(-3, 3);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 3);
  }
}
