#include "carnot/bch.hpp"

#include <algorithm>
#include <thread>

#include "carnot/errors.hpp"

namespace carnot {

Vec bch_product(const GradedLieAlgebra& g, const Vec& a, const Vec& b) {
  if (g.step() > 4) throw UnsupportedStep("BCH product is implemented for step <= 4");
  Vec ab = g.bracket(a, b);
  Vec r = add(a, b);
  axpy(r, Rational(1, 2), ab);
  if (g.step() >= 3 && !is_zero(ab)) {
    Vec aab = g.bracket(a, ab);
    Vec bba = g.bracket(b, neg(ab));
    axpy(r, Rational(1, 12), aab);
    axpy(r, Rational(1, 12), bba);
    if (g.step() >= 4) axpy(r, Rational(-1, 24), g.bracket(b, aab));
  }
  return r;
}

Vec bch_word(const GradedLieAlgebra& g, const Mat& factors) {
  Vec r = zeros(g.dim());
  for (const auto& f : factors) r = bch_product(g, r, f);
  return r;
}

Rng::Rng(std::uint64_t seed) : Rng(std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}) {}

Rng::Rng(std::seed_seq seq) : engine_(seq) {}

Rng Rng::derive(std::uint64_t seed, std::uint64_t index) {
  return Rng(std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)});
}

std::uint64_t Rng::next() { return engine_(); }

long Rng::uniform(long lo, long hi) {
  auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased and platform independent.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<long>(x % range);
}

Mat sample_factors(const GradedLieAlgebra& g, const Vec& lambda, const SampleOptions& opt,
                   std::size_t index) {
  std::size_t d1 = g.rank();
  if (lambda.size() != d1) throw DimensionMismatch("covector length differs from rank");
  Rng rng = Rng::derive(opt.seed, index);
  std::size_t len = opt.word_length;
  if (opt.variable_length && opt.word_length > 1)
    len = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(opt.word_length)));
  long k = opt.bound * opt.grid;
  Mat out;
  for (std::size_t w = 0; w < len; ++w) {
    Vec v = zeros(g.dim());
    Rational l(0);
    for (std::size_t i = 0; i < d1; ++i) {
      v[i] = Rational(rng.uniform(-k, k), opt.grid);
      v[i].canonicalize();
      l += lambda[i] * v[i];
    }
    if (sgn(l) < 0) v = neg(v);
    out.push_back(std::move(v));
  }
  return out;
}

SampleRun sample_semigroup(const GradedLieAlgebra& g, const Vec& lambda, const SampleOptions& opt) {
  if (g.step() > 4) throw UnsupportedStep("BCH product is implemented for step <= 4");
  if (is_zero(lambda)) throw Error("covector must be nonzero");
  if (opt.grid <= 0 || opt.bound <= 0) throw Error("grid and bound must be positive");
  SampleRun run;
  run.options = opt;
  run.lambda = lambda;
  run.points.assign(opt.count, Vec());
  run.lengths.assign(opt.count, 0);
  std::size_t workers = std::max<std::size_t>(1, std::min(opt.threads, opt.count));
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < opt.count; i += workers) {
      Mat f = sample_factors(g, lambda, opt, i);
      run.lengths[i] = f.size();
      run.points[i] = bch_word(g, f);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (!run.points.empty()) {
    run.min = run.points[0];
    run.max = run.points[0];
    for (const auto& p : run.points)
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (p[c] < run.min[c]) run.min[c] = p[c];
        if (p[c] > run.max[c]) run.max[c] = p[c];
      }
  }
  return run;
}

}  // namespace carnot
