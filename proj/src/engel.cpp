#include "carnot/engel.hpp"

#include "carnot/errors.hpp"

namespace carnot {

GradedLieAlgebra make_engel(std::size_t n) {
  if (n == 0) throw Error("make_engel needs n >= 1");
  Presentation p;
  p.name = "engel" + std::to_string(n);
  p.layers = {n + 1, n, 1};
  p.basis.push_back("X");
  for (std::size_t i = 1; i <= n; ++i) p.basis.push_back("Y" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) p.basis.push_back("T" + std::to_string(i));
  p.basis.push_back("Z");
  std::size_t dim = 2 * n + 2;
  for (std::size_t i = 1; i <= n; ++i) {
    p.brackets.push_back({i, 0, unit(dim, n + i)});
    p.brackets.push_back({i, n + i, unit(dim, dim - 1)});
  }
  return GradedLieAlgebra(p);
}

std::string to_string(EngelFailure f) {
  switch (f) {
    case EngelFailure::None: return "none";
    case EngelFailure::NotStratified: return "not stratified";
    case EngelFailure::LayerShape: return "layer shape is not (n+1, n, 1)";
    case EngelFailure::XLine: return "no unique horizontal line commuting with V2";
    case EngelFailure::AdX: return "ad_X: V1 -> V2 is not onto with kernel RX";
    case EngelFailure::NoAbelianHyperplane: return "no abelian hyperplane transverse to X";
    case EngelFailure::NonUniqueHyperplane: return "abelian hyperplane is not unique";
    case EngelFailure::GramNotDefinite: return "Gram matrix is not definite";
  }
  return "unknown";
}

int failure_step(EngelFailure f) {
  switch (f) {
    case EngelFailure::None: return 0;
    case EngelFailure::NotStratified:
    case EngelFailure::LayerShape: return 1;
    case EngelFailure::XLine: return 2;
    case EngelFailure::AdX: return 3;
    case EngelFailure::NoAbelianHyperplane:
    case EngelFailure::NonUniqueHyperplane: return 4;
    case EngelFailure::GramNotDefinite: return 5;
  }
  return -1;
}

namespace {

Recognition fail(EngelFailure f, std::string detail) {
  Recognition r;
  r.failure = f;
  r.detail = std::move(detail);
  return r;
}

}  // namespace

Recognition recognize_engel(const GradedLieAlgebra& g) {
  if (!g.is_stratified()) return fail(EngelFailure::NotStratified, "V_{k+1} != [V1,V_k]");
  const auto& d = g.layer_dims();
  if (d.size() != 3 || d[2] != 1 || d[0] != d[1] + 1 || d[1] == 0) {
    std::string shape = "(";
    for (std::size_t k = 0; k < d.size(); ++k) shape += (k ? "," : "") + std::to_string(d[k]);
    return fail(EngelFailure::LayerShape, "layers " + shape + ")");
  }
  const std::size_t n = d[1];
  const std::size_t dim = g.dim();
  Subspace v1 = layer(g, 1), v2 = layer(g, 2);

  Subspace xline = intersect(centralizer(g, v2), v1);
  if (xline.dim() != 1)
    return fail(EngelFailure::XLine,
                "{v in V1 : [v,V2] = 0} has dimension " + std::to_string(xline.dim()));
  Vec X = xline.basis()[0];

  Mat adx = ad_images(g, X, v1.basis());
  std::size_t r = rank(adx, dim);
  if (r != n)
    return fail(EngelFailure::AdX, "ad_X(V1) has dimension " + std::to_string(r) + ", kernel " +
                                       std::to_string(n + 1 - r));

  // Complement of the X-line: standard V1 basis vectors other than X's pivot.
  std::size_t xp = xline.pivots()[0];
  std::vector<Vec> e;
  for (std::size_t i = g.layer_begin(1); i < g.layer_end(1); ++i)
    if (i != xp) e.push_back(unit(dim, i));

  Vec shift = zeros(n);
  if (n >= 2) {
    // [e_i,e_j] + a_j [e_i,X] - a_i [e_j,X] = 0 for all i < j.
    Mat sys;
    Vec rhs;
    std::vector<Vec> ex(n);
    for (std::size_t i = 0; i < n; ++i) ex[i] = g.bracket(e[i], X);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vec b = g.bracket(e[i], e[j]);
        for (std::size_t c = 0; c < dim; ++c) {
          Vec row = zeros(n);
          row[j] += ex[i][c];
          row[i] -= ex[j][c];
          if (is_zero(row) && sgn(b[c]) == 0) continue;
          sys.push_back(std::move(row));
          rhs.push_back(-b[c]);
        }
      }
    auto sol = solve(sys, rhs, n);
    if (!sol) return fail(EngelFailure::NoAbelianHyperplane, "shift system is inconsistent");
    if (rank(sys, n) != n)
      return fail(EngelFailure::NonUniqueHyperplane, "shift system has a nontrivial kernel");
    shift = *sol;
  }

  EngelStructure s;
  s.n = n;
  s.x_line = xline;
  s.X = X;
  for (std::size_t i = 0; i < n; ++i) {
    Vec y = e[i];
    axpy(y, shift[i], X);
    s.Y.push_back(y);
  }
  s.abelian_hyperplane = Subspace::span(dim, s.Y);
  for (std::size_t i = 0; i < n; ++i) s.T.push_back(g.bracket(s.Y[i], X));
  s.Z = unit(dim, g.layer_begin(3));
  std::size_t zi = g.layer_begin(3);
  s.gram.assign(n, zeros(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.gram[i][j] = g.bracket(s.Y[i], s.T[j])[zi];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (s.gram[i][j] != s.gram[j][i])
        return fail(EngelFailure::GramNotDefinite, "Gram matrix is not symmetric");
  Inertia in = signature(QForm(s.gram));
  if (in.pos == n)
    s.gram_sign = 1;
  else if (in.neg == n)
    s.gram_sign = -1;
  else
    return fail(EngelFailure::GramNotDefinite,
                "inertia (" + std::to_string(in.pos) + "," + std::to_string(in.neg) + "," +
                    std::to_string(in.zero) + ")");
  Recognition out;
  out.structure = std::move(s);
  return out;
}

bool verify_automorphism(std::size_t n, const Rational& a, const Rational& b, const Mat& A) {
  if (sgn(a) == 0 || sgn(b) == 0) throw SingularMatrix("a and b must be nonzero");
  if (A.size() != n) throw DimensionMismatch("A must be n x n");
  inverse(A);  // throws SingularMatrix
  GradedLieAlgebra g = make_engel(n);
  const std::size_t dim = g.dim();
  Mat img(dim);
  img[0] = scale(a, unit(dim, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Vec y = zeros(dim);
    for (std::size_t k = 0; k < n; ++k) y[1 + k] = b * A[k][i];
    img[1 + i] = y;
  }
  for (std::size_t i = 0; i < n; ++i) img[n + 1 + i] = g.bracket(img[1 + i], img[0]);
  img[dim - 1] = g.bracket(img[1], img[n + 1]);
  if (rank(img, dim) != dim) return false;
  auto phi = [&](const Vec& v) {
    Vec r = zeros(dim);
    for (std::size_t c = 0; c < dim; ++c)
      if (sgn(v[c]) != 0) axpy(r, v[c], img[c]);
    return r;
  };
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = p + 1; q < dim; ++q)
      if (phi(g.bracket_basis(p, q)) != g.bracket(img[p], img[q])) return false;
  return true;
}

bool is_nonabnormal(const GradedLieAlgebra& g, const Vec& nu) {
  if (g.step() > 3) throw UnsupportedStep("abnormality criterion is stated for step <= 3");
  g.require_stratified("is_nonabnormal");
  Subspace v1 = layer(g, 1);
  if (nu.size() != g.dim() || !v1.contains(nu)) throw NotHorizontal("nu is not in V1");
  std::size_t d2 = g.step() >= 2 ? g.layer_dims()[1] : 0;
  std::size_t d3 = g.step() >= 3 ? g.layer_dims()[2] : 0;
  Mat im1 = ad_images(g, nu, v1.basis());
  if (rank(im1, g.dim()) != d2) return false;
  Mat im2 = ad_images(g, nu, im1);
  return rank(im2, g.dim()) == d3;
}

namespace {

struct Parts {
  Rational a;
  Vec b, c;
  Rational d;
};

Parts split(std::size_t n, const Vec& v) {
  if (v.size() != 2 * n + 2) throw DimensionMismatch("direction length");
  Parts p{v[0], Vec(v.begin() + 1, v.begin() + 1 + static_cast<std::ptrdiff_t>(n)),
          Vec(v.begin() + 1 + static_cast<std::ptrdiff_t>(n), v.begin() + 1 + 2 * static_cast<std::ptrdiff_t>(n)),
          v[2 * n + 1]};
  return p;
}

}  // namespace

VectorField vf_realization(std::size_t n, const Vec& direction) {
  Parts p = split(n, direction);
  std::size_t m = 2 * n + 2;
  VectorField f(m, MPoly(m));
  f[n] = MPoly::constant(m, p.a);
  MPoly last = MPoly::constant(m, p.d);
  for (std::size_t i = 0; i < n; ++i) {
    MPoly xi = MPoly::variable(m, i);
    f[i] = MPoly::constant(m, p.b[i]);
    f[n + 1 + i] = p.a * xi + MPoly::constant(m, p.c[i]);
    last = last + Rational(p.a / 2) * (xi * xi) + p.c[i] * xi;
  }
  f[m - 1] = last;
  return f;
}

Vec flow_segment(std::size_t n, const Vec& start, const Vec& direction, const Rational& t) {
  Parts p = split(n, direction);
  std::size_t m = 2 * n + 2;
  if (start.size() != m) throw DimensionMismatch("start point length");
  Vec x = start;
  Rational t2 = t * t, t3 = t2 * t;
  Rational last = start[m - 1] + p.d * t;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& x0 = start[i];
    const Rational& b = p.b[i];
    x[i] = x0 + b * t;
    x[n + 1 + i] = start[n + 1 + i] + (p.a * x0 + p.c[i]) * t + p.a * b * t2 / 2;
    last += p.a / 2 * (x0 * x0 * t + x0 * b * t2 + b * b * t3 / 3);
    last += p.c[i] * (x0 * t + b * t2 / 2);
  }
  x[n] = start[n] + p.a * t;
  x[m - 1] = last;
  return x;
}

Vec flow(std::size_t n, const Vec& start, const std::vector<Segment>& word) {
  Vec x = start;
  for (const auto& s : word) x = flow_segment(n, x, s.direction, s.time);
  return x;
}

Vec realize(std::size_t n, const Vec& v) { return flow_segment(n, zeros(2 * n + 2), v, Rational(1)); }

bool check_monotone_coordinate(std::size_t n, const std::vector<Segment>& trajectory,
                               const Vec& start) {
  std::size_t m = 2 * n + 2;
  Vec x = start.empty() ? zeros(m) : start;
  if (x.size() != m) throw DimensionMismatch("start point length");
  bool in_c = sgn(x[m - 1]) >= 0;
  for (const auto& s : trajectory) {
    Parts p = split(n, s.direction);
    if (!is_zero(p.c) || sgn(p.d) != 0)
      throw OutsideHalfSpace("segment direction is not horizontal");
    if (sgn(p.a) < 0) throw OutsideHalfSpace("segment direction has negative X component");
    if (sgn(s.time) < 0) throw OutsideHalfSpace("segment time is negative");
    // Along the segment x_i(u) = x_i + b_i u; the last coordinate is
    // last + sum_i a/2 (x_i^2 u + x_i b_i u^2 + b_i^2 u^3 / 3).
    UPoly expected, closed = UPoly::constant(x[m - 1]);
    for (std::size_t i = 0; i < n; ++i) {
      UPoly xi(Vec{x[i], p.b[i]});
      expected = expected + Rational(p.a / 2) * (xi * xi);
      closed = closed + UPoly(Vec{Rational(0), p.a / 2 * x[i] * x[i], p.a / 2 * x[i] * p.b[i],
                                  p.a / 2 * p.b[i] * p.b[i] / 3});
    }
    if (!(closed.derivative() == expected)) return false;
    x = flow_segment(n, x, s.direction, s.time);
    if (x[m - 1] != closed(s.time)) return false;
    in_c = in_c && sgn(x[m - 1]) >= 0;
  }
  return in_c;
}

}  // namespace carnot
