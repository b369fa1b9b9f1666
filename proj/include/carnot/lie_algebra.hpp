#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carnot/linalg.hpp"

namespace carnot {

// One bracket entry of a presentation: [basis[left], basis[right]] = result.
struct BracketEntry {
  std::size_t left;
  std::size_t right;
  Vec result;
};

struct Presentation {
  std::string name;
  std::vector<std::size_t> layers;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
};

// Graded nilpotent Lie algebra given by structure constants. Basis vectors
// are ordered by layer. Construction validates the grading and the Jacobi
// identity; stratification is recorded but not required.
class GradedLieAlgebra {
 public:
  using Sparse = std::vector<std::pair<std::size_t, Rational>>;

  GradedLieAlgebra() = default;
  // Throws GradingViolation / JacobiViolation / Error on malformed input.
  explicit GradedLieAlgebra(const Presentation& p);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return names_.size(); }
  std::size_t step() const { return layer_dims_.size(); }
  std::size_t rank() const { return layer_dims_.empty() ? 0 : layer_dims_[0]; }
  const std::vector<std::size_t>& layer_dims() const { return layer_dims_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  // 1-based layer of basis vector i.
  std::size_t degree(std::size_t i) const { return degree_[i]; }
  // Index range [begin, end) of layer k (1-based); empty range if k > step.
  std::size_t layer_begin(std::size_t k) const;
  std::size_t layer_end(std::size_t k) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  // [e_i, e_j] as a sparse vector, antisymmetry applied.
  Sparse basis_bracket(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& v, const Vec& w) const;
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec basis_vector(std::size_t i) const { return unit(dim(), i); }

  // Smallest k with V_{k+1} != [V_1, V_k], if any.
  std::optional<std::size_t> stratification_defect() const { return defect_; }
  bool is_stratified() const { return !defect_.has_value(); }
  void require_stratified(const std::string& what) const;

  Presentation presentation() const;
  bool operator==(const GradedLieAlgebra& o) const;

 private:
  std::string name_;
  std::vector<std::size_t> layer_dims_;
  std::vector<std::string> names_;
  std::vector<std::size_t> degree_;
  // Brackets [e_i, e_j] for i < j, indexed i * dim + j.
  std::map<std::size_t, Sparse> table_;
  std::optional<std::size_t> defect_;
};

std::string format_vector(const GradedLieAlgebra& g, const Vec& v);

Subspace layer(const GradedLieAlgebra& g, std::size_t k);
Subspace span_of(const GradedLieAlgebra& g, const Mat& vectors);
// Layer-k component of v.
Vec layer_component(const GradedLieAlgebra& g, const Vec& v, std::size_t k);
// Smallest k such that v is in V_k, if v is nonzero and homogeneous.
std::optional<std::size_t> homogeneous_degree(const GradedLieAlgebra& g, const Vec& v);
// Span of [a, b] over basis vectors a of A and b of B.
Subspace bracket_span(const GradedLieAlgebra& g, const Subspace& a, const Subspace& b);

struct CenterInfo {
  Subspace center;
  std::vector<std::size_t> layer_dims;
};

CenterInfo center(const GradedLieAlgebra& g);
// {v : [v, s] = 0 for all s in S}
Subspace centralizer(const GradedLieAlgebra& g, const Subspace& s);
std::vector<Subspace> lower_central_series(const GradedLieAlgebra& g);
Subspace derived(const GradedLieAlgebra& g);

struct TrimmedReport {
  bool trimmed;
  Subspace center;
};
TrimmedReport is_trimmed(const GradedLieAlgebra& g);

bool is_homogeneous(const GradedLieAlgebra& g, const Subspace& s);
bool is_hom_ideal(const GradedLieAlgebra& g, const Subspace& s);
bool is_subalgebra(const GradedLieAlgebra& g, const Subspace& s);
Subspace ideal_generated(const GradedLieAlgebra& g, const Mat& vectors);
Subspace lie_generated(const GradedLieAlgebra& g, const Mat& vectors);

// Quotient by a homogeneous ideal. The quotient basis consists of the
// standard basis vectors at the free (non-pivot) columns of the ideal.
struct Quotient {
  GradedLieAlgebra algebra;
  Subspace ideal;
  std::vector<std::size_t> complement;
  Vec project(const Vec& v) const;
  // Canonical lift along the complement columns.
  Vec lift(const Vec& q) const;
  Subspace project(const Subspace& s) const;
  // Preimage of a subspace of the quotient.
  Subspace preimage(const Subspace& s) const;
};

Quotient quotient(const GradedLieAlgebra& g, const Subspace& ideal, const std::string& name = "");

struct Product {
  GradedLieAlgebra algebra;
  // Position in the product of each basis vector of the two factors.
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

Product product(const GradedLieAlgebra& a, const GradedLieAlgebra& b, const std::string& name = "");

Vec dilate(const GradedLieAlgebra& g, const Vec& v, const Rational& t);

// Algebra in the basis f_a = sum_i p[i][a] e_i. p must be invertible and
// map each layer onto itself.
GradedLieAlgebra change_basis(const GradedLieAlgebra& g, const Mat& p, const std::string& name = "");

// A homogeneous subalgebra as an algebra in its own right, with its graded
// basis expressed in g coordinates.
struct Subalgebra {
  GradedLieAlgebra algebra;
  Mat embedding;  // row a = image of basis vector a
};
Subalgebra subalgebra(const GradedLieAlgebra& g, const Subspace& s, const std::string& name = "");

// Matrix of ad_v restricted to span(domain), as rows of images.
Mat ad_images(const GradedLieAlgebra& g, const Vec& v, const Mat& domain);
Vec ad_power(const GradedLieAlgebra& g, const Vec& x, const Vec& y, std::size_t k);

}  // namespace carnot
