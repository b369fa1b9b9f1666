#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "carnot/rational.hpp"

namespace carnot {

// Row space of a rational matrix, stored in reduced row echelon form.
// Equality is equality of the stored bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const Mat& rows);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const Mat& basis() const& { return basis_; }
  // By value on temporaries, so range-for over span(...).basis() is safe.
  Mat basis() && { return std::move(basis_); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // v minus its projection along the pivot columns; zero iff v is a member.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coefficients of v in the stored basis; throws NonSpanning if v is not a member.
  Vec coordinates(const Vec& v) const;
  // Standard basis indices that are not pivots.
  std::vector<std::size_t> free_columns() const;
  // Basis of {f : f . v = 0 for all v in this}.
  Mat annihilator() const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  std::size_t ambient_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

// In-place RREF; returns pivot columns. Zero rows are dropped.
std::vector<std::size_t> rref(Mat& m, std::size_t ncols);

Subspace canonicalize(const Mat& rows);
Subspace canonicalize(const Mat& rows, std::size_t ambient);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
bool member(const Vec& v, const Subspace& a);

// Coordinates of v modulo `ideal` in `complement`. The complement and the
// ideal basis together must form a basis of the ambient space.
Vec quotient_coords(const Vec& v, const Subspace& ideal, const Mat& complement);

std::size_t rank(const Mat& m, std::size_t ncols);
// Basis of {x : m x = 0}.
Mat kernel(const Mat& m, std::size_t ncols);
// Some x with m x = b, if any.
std::optional<Vec> solve(const Mat& m, const Vec& b, std::size_t ncols);
Mat transpose(const Mat& m, std::size_t ncols);
Mat identity(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);
Mat inverse(const Mat& a);

struct Inertia {
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::size_t zero = 0;
  bool operator==(const Inertia&) const = default;
  bool semidefinite() const { return pos == 0 || neg == 0; }
};

class QForm {
 public:
  explicit QForm(Mat matrix);
  std::size_t dim() const { return m_.size(); }
  const Mat& matrix() const { return m_; }
  Rational operator()(const Vec& v) const;
  bool is_zero() const;
  // Restriction to span(basis): matrix B M B^T.
  QForm restrict_to(const Mat& basis) const;

 private:
  Mat m_;
};

Inertia signature(const QForm& q);
Subspace radical(const QForm& q);

}  // namespace carnot
