#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "carnot/lie_algebra.hpp"

namespace carnot {

// log(exp(a) exp(b)) through degree 4. Throws UnsupportedStep for step > 4.
Vec bch_product(const GradedLieAlgebra& g, const Vec& a, const Vec& b);
// Left-to-right product of exp(factors[0]) ... exp(factors[k-1]).
Vec bch_word(const GradedLieAlgebra& g, const Mat& factors);

struct SampleOptions {
  std::uint64_t seed = 1;
  std::size_t word_length = 4;
  // Draw each word's length uniformly from 1..word_length.
  bool variable_length = true;
  std::size_t count = 1000;
  // Coordinates are k / grid with |k| <= bound * grid.
  long bound = 2;
  long grid = 4;
  std::size_t threads = 1;
};

struct SampleRun {
  SampleOptions options;
  Vec lambda;
  Mat points;
  std::vector<std::size_t> lengths;
  Vec min;
  Vec max;
};

// Horizontal factors w with lambda(w) >= 0: coordinates on the grid, and
// w := -w whenever lambda(w) < 0. Point i depends only on (seed, i).
SampleRun sample_semigroup(const GradedLieAlgebra& g, const Vec& lambda, const SampleOptions& opt);

// The factors of sample i, for replay.
Mat sample_factors(const GradedLieAlgebra& g, const Vec& lambda, const SampleOptions& opt,
                   std::size_t index);

// Deterministic 64-bit stream used by every randomized component. The
// mt19937_64 and seed_seq outputs are fixed by the standard; the standard
// distributions are not, so uniform() does its own rejection sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  static Rng derive(std::uint64_t seed, std::uint64_t index);
  std::uint64_t next();
  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

 private:
  explicit Rng(std::seed_seq seq);
  std::mt19937_64 engine_;
};

}  // namespace carnot
