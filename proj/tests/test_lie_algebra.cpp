#include <gtest/gtest.h>

#include "carnot/engel.hpp"
#include "carnot/errors.hpp"
#include "carnot/hall.hpp"
#include "common.hpp"
#include "oracles.hpp"

using namespace carnot;

namespace {

Presentation heisenberg_table() {
  Presentation p;
  p.name = "h";
  p.layers = {2, 1};
  p.basis = {"X", "Y", "Z"};
  p.brackets.push_back({0, 1, {Rational(0), Rational(0), Rational(1)}});
  return p;
}

// Random nonzero homogeneous vector of layer k.
Vec random_layer_vector(const GradedLieAlgebra& g, std::size_t k, oracle::Gen& gen) {
  Vec v = zeros(g.dim());
  while (is_zero(v))
    for (std::size_t i = g.layer_begin(k); i < g.layer_end(k); ++i) v[i] = Rational(gen.integer(-2, 2));
  return v;
}

}  // namespace

TEST(Validation, CorpusPassesDenseOracle) {
  for (const char* name : {"engel1", "engel2", "engel3", "engel4", "137A", "n626", "free23", "free33", "heisenberg",
                           "engel1xengel1"}) {
    GradedLieAlgebra g = corpus(name);
    auto d = oracle::dense(g.presentation());
    EXPECT_EQ(oracle::jacobi_violation(d), (std::vector<long>{-1, -1, -1})) << name;
    EXPECT_TRUE(oracle::graded(d)) << name;
    EXPECT_TRUE(g.is_stratified()) << name;
  }
}

TEST(Validation, ForgedTableNamesTheTriple) {
  try {
    corpus("bad-jacobi");
    FAIL() << "expected JacobiViolation";
  } catch (const JacobiViolation& e) {
    EXPECT_EQ(e.i, 0u);
    EXPECT_EQ(e.j, 1u);
    EXPECT_EQ(e.k, 2u);
    EXPECT_EQ(std::string(e.what()).rfind("JacobiViolation(e1,e2,e3)", 0), 0u);
  }
  Json j = read_json_file(corpus_path("bad-jacobi"));
  auto d = oracle::dense(presentation_from_json(j));
  EXPECT_EQ(oracle::jacobi_violation(d), (std::vector<long>{0, 1, 2}));
}

TEST(Validation, GradingViolation) {
  Presentation p = heisenberg_table();
  p.brackets[0].result = {Rational(1), Rational(0), Rational(0)};
  EXPECT_THROW(GradedLieAlgebra{p}, GradingViolation);
}

TEST(Validation, NonStratifiedIsRecordedNotRejected) {
  Presentation p = heisenberg_table();
  p.brackets.clear();
  GradedLieAlgebra g(p);
  EXPECT_FALSE(g.is_stratified());
  EXPECT_EQ(g.stratification_defect(), std::optional<std::size_t>(1));
  EXPECT_THROW(g.require_stratified("test"), NotStratified);
}

TEST(Validation, DuplicateAndSelfBrackets) {
  Presentation p = heisenberg_table();
  p.brackets.push_back(p.brackets[0]);
  EXPECT_THROW(GradedLieAlgebra{p}, Error);
  Presentation s = heisenberg_table();
  s.brackets.push_back({0, 0, {Rational(0), Rational(0), Rational(1)}});
  EXPECT_THROW(GradedLieAlgebra{s}, Error);
}

TEST(Brackets, AntisymmetryAndBilinearity) {
  GradedLieAlgebra g = corpus("137A");
  oracle::Gen gen(31);
  for (int t = 0; t < 50; ++t) {
    Vec a = gen.vec(g.dim()), b = gen.vec(g.dim()), c = gen.vec(g.dim());
    Rational s = gen.rational();
    EXPECT_EQ(g.bracket(a, b), neg(g.bracket(b, a)));
    Vec ac = a;
    axpy(ac, s, c);
    Vec lhs = g.bracket(ac, b), rhs = g.bracket(a, b);
    axpy(rhs, s, g.bracket(c, b));
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(g.bracket(a, b), oracle::br(oracle::dense(g.presentation()), a, b));
  }
}

TEST(Structure, CenterOfEngelAlgebras) {
  for (std::size_t n = 1; n <= 4; ++n) {
    GradedLieAlgebra g = make_engel(n);
    CenterInfo c = center(g);
    EXPECT_EQ(c.center.dim(), 1u);
    EXPECT_EQ(c.layer_dims, (std::vector<std::size_t>{0, 0, 1}));
  }
}

TEST(Structure, LowerCentralSeriesOfFree) {
  GradedLieAlgebra g = free_nilpotent(2, 3).algebra;
  std::vector<std::size_t> dims;
  for (const auto& s : lower_central_series(g)) dims.push_back(s.dim());
  EXPECT_EQ(dims, (std::vector<std::size_t>{5, 3, 2, 0}));
  EXPECT_EQ(derived(g).dim(), 3u);
}

TEST(Trimmed, PinnedCorpusValues) {
  for (const char* name : {"engel1", "engel2", "engel3", "engel4", "137A", "n626", "heisenberg"})
    EXPECT_TRUE(is_trimmed(corpus(name)).trimmed) << name;
  for (const char* name : {"engel1xengel1", "free23", "free33"})
    EXPECT_FALSE(is_trimmed(corpus(name)).trimmed) << name;
}

// Trimmed iff every nonzero homogeneous ideal lowers the step, checked on
// ideals generated by random homogeneous vectors.
TEST(Trimmed, QuotientCharacterization) {
  oracle::Gen gen(32);
  for (const char* name : {"engel1", "engel2", "engel3", "137A", "engel1xengel1", "free23", "n626"}) {
    GradedLieAlgebra g = corpus(name);
    bool trimmed = is_trimmed(g).trimmed;
    bool some_keeps_step = false;
    for (int t = 0; t < 50; ++t) {
      std::size_t k = static_cast<std::size_t>(gen.integer(1, static_cast<long>(g.step())));
      Subspace i = ideal_generated(g, {random_layer_vector(g, k, gen)});
      ASSERT_TRUE(is_hom_ideal(g, i));
      Quotient q = quotient(g, i);
      if (q.algebra.step() == g.step()) some_keeps_step = true;
    }
    if (trimmed)
      EXPECT_FALSE(some_keeps_step) << name;
    else
      EXPECT_TRUE(some_keeps_step) << name;
  }
}

TEST(Quotient, ProjectLiftRoundTrip) {
  GradedLieAlgebra g = corpus("free23");
  Subspace i = Subspace::span(g.dim(), {unit(g.dim(), 4)});
  Quotient q = quotient(g, i);
  EXPECT_EQ(q.algebra.layer_dims(), (std::vector<std::size_t>{2, 1, 1}));
  oracle::Gen gen(33);
  for (int t = 0; t < 30; ++t) {
    Vec a = gen.vec(g.dim()), b = gen.vec(g.dim());
    EXPECT_EQ(q.project(q.lift(q.project(a))), q.project(a));
    EXPECT_EQ(q.project(g.bracket(a, b)), q.algebra.bracket(q.project(a), q.project(b)));
  }
  EXPECT_TRUE(recognize_engel(q.algebra).ok());
}

TEST(Quotient, RejectsNonIdeal) {
  GradedLieAlgebra g = corpus("engel1");
  EXPECT_THROW(quotient(g, Subspace::span(g.dim(), {unit(g.dim(), 1)})), NotAnIdeal);
  Vec mixed = zeros(g.dim());
  mixed[0] = 1;
  mixed[2] = 1;
  EXPECT_THROW(quotient(g, Subspace::span(g.dim(), {mixed})), NotHomogeneous);
}

TEST(Product, EngelSquareMatchesCorpus) {
  Product p = product(make_engel(1), make_engel(1));
  EXPECT_EQ(p.algebra.layer_dims(), (std::vector<std::size_t>{4, 2, 2}));
  EXPECT_FALSE(is_trimmed(p.algebra).trimmed);
  EXPECT_EQ(center(p.algebra).center.dim(), 2u);
}

TEST(ChangeBasis, IsomorphicCopyKeepsInvariants) {
  GradedLieAlgebra g = corpus("n626");
  Mat p = identity(g.dim());
  p[0][1] = Rational(2);
  p[3][4] = Rational(-1, 2);
  GradedLieAlgebra h = change_basis(g, p);
  EXPECT_EQ(h.layer_dims(), g.layer_dims());
  EXPECT_EQ(center(h).center.dim(), center(g).center.dim());
  Mat bad = identity(g.dim());
  bad[0][3] = Rational(1);
  EXPECT_THROW(change_basis(g, bad), Error);
}
