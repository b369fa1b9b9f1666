#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "carnot/lie_algebra.hpp"

namespace carnot {

struct HallElement {
  std::size_t degree = 1;
  // Positions of the factors in the Hall list, or -1 for a generator.
  long left = -1;
  long right = -1;
  std::size_t generator = 0;
  std::size_t order_rank = 0;
  std::string name;
  bool is_generator() const { return left < 0; }
};

// Hall basis of the free Lie algebra on `rank` generators, truncated at
// degree `step`, in Hall order (degree-compatible; X1 minimal).
std::vector<HallElement> hall_basis(std::size_t rank, std::size_t step);

struct FreeNilpotent {
  std::size_t rank = 0;
  std::size_t step = 0;
  std::vector<HallElement> elements;
  GradedLieAlgebra algebra;
  std::map<std::pair<long, long>, std::size_t> hall_index;
};

FreeNilpotent free_nilpotent(std::size_t rank, std::size_t step);

// Smallest ad_X-invariant subspace containing `seed`.
Subspace ad_power_closure(const GradedLieAlgebra& g, const Vec& x, const Subspace& seed);

}  // namespace carnot
