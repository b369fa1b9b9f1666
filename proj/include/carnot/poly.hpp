#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "carnot/rational.hpp"

namespace carnot {

// Dense univariate polynomial, coefficient i multiplies t^i. No trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Vec coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, std::size_t deg);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Vec& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const;
  UPoly derivative() const;
  // Antiderivative vanishing at 0.
  UPoly integral() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& c, const UPoly& a);
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

 private:
  void trim();
  Vec c_;
};

// Quotient and remainder; throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree(const UPoly& p);

std::vector<UPoly> sturm_sequence(const UPoly& p);
// Distinct real roots in the half-open interval (lo, hi].
std::size_t count_real_roots(const UPoly& p, const Rational& lo, const Rational& hi);
std::size_t count_real_roots(const UPoly& p);
// Disjoint intervals (lo, hi] each containing exactly one distinct real root.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& p);
// Distinct rational roots, increasing.
std::vector<Rational> rational_roots(const UPoly& p);

// Sparse multivariate polynomial over a fixed number of variables.
class MPoly {
 public:
  using Exps = std::vector<unsigned>;
  explicit MPoly(std::size_t nvars = 0) : n_(nvars) {}
  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exps, Rational>& terms() const { return terms_; }
  MPoly derivative(std::size_t var) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& c, const MPoly& a);
  bool operator==(const MPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  void add_term(const Exps& e, const Rational& c);
  std::size_t n_;
  std::map<Exps, Rational> terms_;
};

// Polynomial vector field: component i is the coefficient of d/dx_i.
using VectorField = std::vector<MPoly>;
// [A, B] = A(B) - B(A) acting on coordinate functions.
VectorField lie_bracket(const VectorField& a, const VectorField& b);

}  // namespace carnot
