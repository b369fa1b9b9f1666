#include <gtest/gtest.h>

#include "carnot/hall.hpp"
#include "common.hpp"
#include "oracles.hpp"

using namespace carnot;

TEST(Hall, LayerDimsMatchNecklaceCount) {
  for (auto [m, s] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {3, 2}, {2, 4}, {3, 3}, {2, 5}, {4, 3}}) {
    FreeNilpotent f = free_nilpotent(m, s);
    ASSERT_EQ(f.algebra.step(), s);
    for (std::size_t k = 1; k <= s; ++k)
      EXPECT_EQ(f.algebra.layer_dims()[k - 1], oracle::lyndon_count(m, k)) << m << "," << s << " layer " << k;
    EXPECT_TRUE(f.algebra.is_stratified());
  }
}

TEST(Hall, NamesAndOrder) {
  auto h = hall_basis(2, 3);
  std::vector<std::string> names;
  for (const auto& e : h) names.push_back(e.name);
  EXPECT_EQ(names, (std::vector<std::string>{"X1", "X2", "[X1,X2]", "[X1,[X1,X2]]", "[X2,[X1,X2]]"}));
}

TEST(Hall, FreeAlgebrasSatisfyJacobi) {
  for (auto [m, s] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {3, 3}}) {
    auto d = oracle::dense(free_nilpotent(m, s).algebra.presentation());
    EXPECT_EQ(oracle::jacobi_violation(d), (std::vector<long>{-1, -1, -1}));
  }
}

TEST(Hall, TruncationAndCenter) {
  GradedLieAlgebra g = free_nilpotent(2, 3).algebra;
  EXPECT_TRUE(is_zero(g.bracket_basis(3, 0)));
  CenterInfo c = center(g);
  EXPECT_EQ(c.center, layer(g, 3));
}

TEST(Hall, Free22IsHeisenberg) {
  GradedLieAlgebra g = free_nilpotent(2, 2).algebra;
  EXPECT_EQ(g.layer_dims(), (std::vector<std::size_t>{2, 1}));
  EXPECT_FALSE(is_zero(g.bracket_basis(0, 1)));
}

TEST(Hall, AdPowerClosureExamples) {
  GradedLieAlgebra e = corpus("engel1");  // X, Y, T, Z
  Subspace c = ad_power_closure(e, unit(4, 0), Subspace::span(4, {unit(4, 1)}));
  EXPECT_EQ(c, Subspace::span(4, {unit(4, 1), unit(4, 2)}));
  EXPECT_TRUE(ad_power_closure(e, unit(4, 0), Subspace(4)).is_zero());
  GradedLieAlgebra f = free_nilpotent(2, 3).algebra;
  Subspace d = ad_power_closure(f, unit(5, 0), Subspace::span(5, {unit(5, 1)}));
  EXPECT_EQ(d, Subspace::span(5, {unit(5, 1), unit(5, 2), unit(5, 3)}));
}

// If ad_X^k(dW) lies in a subalgebra h containing dW for all k, then [g,g] is in h.
// With h generated by those iterates, this must hold for every X outside dW.
TEST(Hall, AdPowerClosureGeneratesDerivedAlgebra) {
  oracle::Gen gen(41);
  for (auto [m, s] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {3, 3}, {2, 4}}) {
    GradedLieAlgebra g = free_nilpotent(m, s).algebra;
    for (int t = 0; t < 10; ++t) {
      Vec lam = gen.vec(m);
      if (is_zero(lam)) continue;
      Mat dw;
      for (const auto& k : kernel(Mat{lam}, m)) {
        Vec v = zeros(g.dim());
        std::copy(k.begin(), k.end(), v.begin());
        dw.push_back(v);
      }
      Vec x = zeros(g.dim());
      for (std::size_t i = 0; i < m; ++i) x[i] = lam[i];  // lam(x) = |lam|^2 > 0
      Subspace h = lie_generated(g, ad_power_closure(g, x, Subspace::span(g.dim(), dw)).basis());
      EXPECT_TRUE(h.contains(derived(g)));
      // Without the iterates the claim fails as soon as dW alone is not enough.
      Subspace h0 = lie_generated(g, dw);
      if (m == 2) EXPECT_FALSE(h0.contains(derived(g)));
    }
  }
}
