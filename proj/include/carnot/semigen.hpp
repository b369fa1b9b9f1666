#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "carnot/engel.hpp"
#include "carnot/lie_algebra.hpp"

namespace carnot {

struct HalfSpace {
  Vec lam;  // covector on V1, in the V1 basis order
};

// ker(lambda) inside V1, in g coordinates. Throws on a zero or mis-sized covector.
Subspace boundary(const GradedLieAlgebra& g, const HalfSpace& w);

enum class Rule { R1, R2, R3, R4, R5 };
std::string to_string(Rule r);
Rule parse_rule(const std::string& s);

// One saturation step. Meaning of `inputs` by rule:
//   R1: empty; every added vector lies in Lie<E>.
//   R2: [Y, X_1, ..., X_k]; added[i] = [X_i, Y] with ad_Y^2 X_i in E.
//   R3: [X, Y]; added = {[X, Y]} with ad_X^2 Y = ad_Y^2 X = 0.
//   R4: empty; added spans V2 cap Z(g).
//   R5: basis of V2 cap E; added lies in the ideal they generate.
struct TraceStep {
  Rule rule;
  Mat inputs;
  Mat added;
};

struct SaturationConfig {
  bool r1 = true, r2 = true, r3 = true, r4 = true, r5 = true;
  // R2 with X ranging over V1 + E instead of V1.
  bool r2_extended = false;
  // Extra R3 generator candidates (vectors in g coordinates).
  Mat generators;
  bool star_generators = true;
};

struct EdgeApprox {
  Subspace boundary;
  Subspace E;
  std::vector<TraceStep> trace;
  // Set when r2_extended produced a vector the plain rule would not have.
  bool extended_difference = false;
};

EdgeApprox saturate_edge(const GradedLieAlgebra& g, const HalfSpace& w,
                         const SaturationConfig& cfg = {});

// Diamond terms ad^2_{X_i} X_j and ad^2_{ad^k_{X_i} X_j}(X_i), k >= 2, for a V1 basis.
Mat diamond_terms(const GradedLieAlgebra& g, const Mat& basis);

enum class Answer { Yes, No, Unknown };
std::string to_string(Answer a);

struct RadicalStep {
  std::size_t generator;  // j: the form is a coordinate of ad_Y^2 X_j
  std::size_t coordinate;  // basis index of that coordinate
  Mat subspace_before;  // V1 coordinates
  Mat subspace_after;
  Mat constraints;  // new linear constraints, as V1 functionals
};

struct StarReport {
  Answer answer = Answer::Unknown;
  Mat basis;  // Yes: V1 basis (g coordinates)
  std::vector<RadicalStep> chain;  // No: radical chain
  Mat final_subspace;  // No: V1 coordinates of the bounding subspace
  std::string witness;
  std::vector<std::string> notes;
};

StarReport check_type_star(const GradedLieAlgebra& g);
// Re-checks a star report using only bracket computations and exact inertia.
bool verify_star_report(const GradedLieAlgebra& g, const StarReport& r, std::string* why = nullptr);
// Full fixpoint of the radical restriction; a V1 subspace containing every Y
// with ad_Y^2(V1) = 0 (g coordinates).
Subspace star_subspace(const GradedLieAlgebra& g);

// g = (product of factors) / ker(Phi), Phi given by the images of the
// factor bases in g.
struct ProductQuotientCert {
  std::vector<GradedLieAlgebra> factors;
  std::vector<Mat> images;
};

struct ProductQuotientCheck {
  bool ok = false;
  std::string failure;
  Subspace ideal;  // kernel of Phi in product coordinates
};
ProductQuotientCheck check_product_quotient(const GradedLieAlgebra& g, const ProductQuotientCert& c);

// Factorization along connected components of the V1 bracket graph.
std::optional<ProductQuotientCert> commuting_block_decomposition(const GradedLieAlgebra& g);

struct DiamondReport {
  Answer answer = Answer::Unknown;
  std::string reason;
  std::optional<ProductQuotientCert> certificate;
  std::optional<Subspace> abelian_hyperplane;
  StarReport star;
  std::vector<std::string> notes;
};

// Some abelian hyperplane of V1, found by solving the linear shift system
// for each choice of transverse basis vector (exhaustive).
std::optional<Subspace> find_abelian_hyperplane(const GradedLieAlgebra& g);

DiamondReport check_type_diamond(const GradedLieAlgebra& g,
                                 const std::optional<ProductQuotientCert>& cert = std::nullopt);

struct EngelQuotientCert {
  Subspace ideal;
  std::size_t n = 0;
  // Covector of a half-space of g mapping onto a bad half-space of the quotient.
  Vec lambda;
  std::string layer;  // search layer that produced it
};

struct SearchCandidate {
  Subspace ideal3;
  Subspace forced_ideal;
  EngelFailure failure = EngelFailure::None;
};

struct SearchOptions {
  std::uint64_t seed = 1;
  std::size_t max_samples = 64;
  std::size_t threads = 1;
  std::size_t max_results = 1;  // 0 = no limit
  bool v1_reduction = true;
};

struct EngelSearch {
  std::vector<EngelQuotientCert> found;
  bool exhaustive = false;
  std::vector<SearchCandidate> examined;
  std::vector<std::string> notes;
};

// Largest ideal containing `ideal3` (a subspace of V3 with codimension one)
// whose quotient has no center below the top layer. Step-3 algebras only.
Subspace forced_ideal(const GradedLieAlgebra& g, const Subspace& ideal3);

EngelSearch find_engel_quotients(const GradedLieAlgebra& g, const SearchOptions& opt = {});

// Bad-half-space covector for an Engel quotient g / ideal.
Vec engel_bad_covector(const GradedLieAlgebra& g, const Subspace& ideal, const Recognition& rec);

enum class Verdict { Semigenerated, NotSemigenerated, Unknown };
std::string to_string(Verdict v);

enum class CertKind { None, StepTwo, Saturation, Diamond, EngelQuotient, EngelSearch };
std::string to_string(CertKind k);

struct SaturationCert {
  Vec lambda;
  std::vector<TraceStep> trace;
  std::string conclusion;  // "V2", "V3", "derived" or "diamond-basis"
  Mat basis;  // V1 basis for "diamond-basis"
};

struct Decision {
  Verdict verdict = Verdict::Unknown;
  CertKind kind = CertKind::None;
  std::optional<SaturationCert> saturation;
  std::optional<ProductQuotientCert> diamond;
  std::optional<EngelQuotientCert> engel;
  std::vector<SearchCandidate> search;
  bool exhaustive = false;
  std::optional<Vec> lambda;  // set for half-space decisions
  std::string summary;
  std::vector<std::string> notes;
};

Decision decide_halfspace(const GradedLieAlgebra& g, const HalfSpace& w,
                          const SaturationConfig& cfg = {}, const SearchOptions& opt = {});
Decision decide_semigenerated(const GradedLieAlgebra& g, const SearchOptions& opt = {},
                              const std::optional<ProductQuotientCert>& diamond_cert = std::nullopt);

struct VerifyResult {
  bool ok = false;
  std::string first_failure;
};
VerifyResult verify_trace(const GradedLieAlgebra& g, const Vec& lambda,
                          const std::vector<TraceStep>& trace, Subspace* final_edge = nullptr);
VerifyResult verify_certificate(const GradedLieAlgebra& g, const Decision& d);

}  // namespace carnot
