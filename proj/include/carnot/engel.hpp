#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "carnot/lie_algebra.hpp"
#include "carnot/poly.hpp"

namespace carnot {

// Basis order: X, Y1..Yn, T1..Tn, Z with [Yi,X] = Ti and [Yi,Ti] = Z.
GradedLieAlgebra make_engel(std::size_t n);

enum class EngelFailure {
  None,
  NotStratified,
  LayerShape,
  XLine,
  AdX,
  NoAbelianHyperplane,
  NonUniqueHyperplane,
  GramNotDefinite,
};

std::string to_string(EngelFailure f);
// Recognizer step (1-5) at which a failure is detected.
int failure_step(EngelFailure f);

struct EngelStructure {
  std::size_t n = 0;
  Subspace x_line;
  Subspace abelian_hyperplane;
  Vec X;
  Mat Y;
  Mat T;
  Vec Z;
  Mat gram;
  int gram_sign = 1;
};

struct Recognition {
  std::optional<EngelStructure> structure;
  EngelFailure failure = EngelFailure::None;
  std::string detail;
  bool ok() const { return structure.has_value(); }
};

Recognition recognize_engel(const GradedLieAlgebra& g);

// Does diag(a, bA) on V1 (basis X, Y1..Yn of make_engel(n)) extend to an
// automorphism? Throws SingularMatrix if A is singular or a, b vanish.
bool verify_automorphism(std::size_t n, const Rational& a, const Rational& b, const Mat& A);

// ad_nu(V1) = V2 and ad_nu^2(V1) = V3. Throws NotHorizontal if nu is not in V1.
bool is_nonabnormal(const GradedLieAlgebra& g, const Vec& nu);

// Coordinate realization of En^n on Q^{2(n+1)}. Coordinates: x_0..x_{n-1}
// pair with Y1..Yn, x_n with X, x_{n+1+i} with T_{i+1}, x_{2n+1} with Z.
// Directions are vectors in the make_engel(n) basis.
VectorField vf_realization(std::size_t n, const Vec& direction);

struct Segment {
  Vec direction;
  Rational time;
};

// Endpoint of the flow of the constant-coefficient field `direction`
// from `start` for time t, in closed form.
Vec flow_segment(std::size_t n, const Vec& start, const Vec& direction, const Rational& t);
Vec flow(std::size_t n, const Vec& start, const std::vector<Segment>& word);
// Realization coordinates of exp(v).
Vec realize(std::size_t n, const Vec& v);

// For the half-space with X-coefficient >= 0 (boundary span{Y1..Yn}):
// checks each segment's last-coordinate derivative symbolically and that
// every segment endpoint stays in {x_last >= 0}. Throws OutsideHalfSpace for
// directions outside the half-space or negative times.
bool check_monotone_coordinate(std::size_t n, const std::vector<Segment>& trajectory,
                               const Vec& start = {});

}  // namespace carnot
