#include "carnot/linalg.hpp"

#include <algorithm>

#include "carnot/errors.hpp"

namespace carnot {

std::vector<std::size_t> rref(Mat& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    if (m[r][c] != 1) {
      Rational inv = 1 / m[r][c];
      for (std::size_t k = c; k < ncols; ++k) m[r][k] *= inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (sgn(m[r][k]) != 0) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

Subspace Subspace::span(std::size_t ambient, const Mat& rows) {
  for (const auto& row : rows)
    if (row.size() != ambient)
      throw DimensionMismatch("row of length " + std::to_string(row.size()) +
                              " in ambient dimension " + std::to_string(ambient));
  Subspace s(ambient);
  s.basis_ = rows;
  s.pivots_ = rref(s.basis_, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) { return span(ambient, identity(ambient)); }

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("reduce: ambient mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rational c = r[pivots_[i]];
    if (sgn(c) != 0) axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return carnot::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient mismatch");
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw NonSpanning("vector is not in the subspace");
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c)
      ++p;
    else
      out.push_back(c);
  }
  return out;
}

Mat Subspace::annihilator() const { return kernel(basis_, ambient_); }

Subspace canonicalize(const Mat& rows) {
  if (rows.empty()) return Subspace(0);
  return Subspace::span(rows[0].size(), rows);
}

Subspace canonicalize(const Mat& rows, std::size_t ambient) {
  return Subspace::span(ambient, rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch("intersect: ambient mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient());
  Mat ann = b.annihilator();
  if (ann.empty()) return a;
  // Coefficient vectors c with sum c_i a_i annihilated by every f in ann.
  Mat sys(ann.size(), Vec(a.dim()));
  for (std::size_t j = 0; j < ann.size(); ++j)
    for (std::size_t i = 0; i < a.dim(); ++i) sys[j][i] = dot(ann[j], a.basis()[i]);
  Mat ker = kernel(sys, a.dim());
  Mat rows;
  for (const auto& c : ker) {
    Vec v = zeros(a.ambient());
    for (std::size_t i = 0; i < c.size(); ++i) axpy(v, c[i], a.basis()[i]);
    rows.push_back(std::move(v));
  }
  return Subspace::span(a.ambient(), rows);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch("sum: ambient mismatch");
  Mat rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient(), rows);
}

bool member(const Vec& v, const Subspace& a) { return a.contains(v); }

Vec quotient_coords(const Vec& v, const Subspace& ideal, const Mat& complement) {
  std::size_t n = ideal.ambient();
  if (v.size() != n) throw DimensionMismatch("quotient_coords: vector length");
  for (const auto& c : complement)
    if (c.size() != n) throw DimensionMismatch("quotient_coords: complement length");
  if (complement.size() + ideal.dim() != n)
    throw NonSpanning("complement and ideal do not form a basis");
  // Columns: complement vectors then ideal basis.
  Mat cols = complement;
  cols.insert(cols.end(), ideal.basis().begin(), ideal.basis().end());
  Mat a = transpose(cols, n);
  if (rank(a, cols.size()) != n) throw NonSpanning("complement and ideal do not span");
  auto x = solve(a, v, cols.size());
  Vec out(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(complement.size()));
  return out;
}

std::size_t rank(const Mat& m, std::size_t ncols) {
  Mat c = m;
  return rref(c, ncols).size();
}

Mat kernel(const Mat& m, std::size_t ncols) {
  Mat r = m;
  auto piv = rref(r, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : piv) is_pivot[p] = true;
  Mat out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec x = zeros(ncols);
    x[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -r[i][f];
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Vec> solve(const Mat& m, const Vec& b, std::size_t ncols) {
  if (b.size() != m.size()) throw DimensionMismatch("solve: right-hand side length");
  Mat aug(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != ncols) throw DimensionMismatch("solve: ragged matrix");
    aug[i] = m[i];
    aug[i].push_back(b[i]);
  }
  auto piv = rref(aug, ncols + 1);
  if (!piv.empty() && piv.back() == ncols) return std::nullopt;
  Vec x = zeros(ncols);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][ncols];
  return x;
}

Mat transpose(const Mat& m, std::size_t ncols) {
  Mat t(ncols, Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = m[i][j];
  return t;
}

Mat identity(std::size_t n) {
  Mat m(n, zeros(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t inner = b.size();
  std::size_t cols = inner ? b[0].size() : 0;
  Mat c(a.size(), zeros(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw DimensionMismatch("mat_mul: inner dimension");
    for (std::size_t k = 0; k < inner; ++k)
      if (sgn(a[i][k]) != 0) axpy(c[i], a[i][k], b[k]);
  }
  return c;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  Vec y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
  return y;
}

Mat inverse(const Mat& a) {
  std::size_t n = a.size();
  Mat aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw DimensionMismatch("inverse: matrix not square");
    aug[i] = a[i];
    Vec e = unit(n, i);
    aug[i].insert(aug[i].end(), e.begin(), e.end());
  }
  auto piv = rref(aug, 2 * n);
  if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Mat inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = Vec(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
  return inv;
}

QForm::QForm(Mat matrix) : m_(std::move(matrix)) {
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (m_[i].size() != m_.size()) throw DimensionMismatch("quadratic form matrix not square");
    for (std::size_t j = 0; j < i; ++j)
      if (m_[i][j] != m_[j][i]) throw NotSymmetric("quadratic form matrix is not symmetric");
  }
}

Rational QForm::operator()(const Vec& v) const {
  if (v.size() != m_.size()) throw DimensionMismatch("quadratic form argument length");
  return dot(v, mat_vec(m_, v));
}

bool QForm::is_zero() const {
  for (const auto& row : m_)
    if (!carnot::is_zero(row)) return false;
  return true;
}

QForm QForm::restrict_to(const Mat& basis) const {
  Mat mb = mat_mul(basis, m_);
  Mat r(basis.size(), zeros(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) r[i][j] = dot(mb[i], basis[j]);
  return QForm(std::move(r));
}

Inertia signature(const QForm& q) {
  // Symmetric Gaussian (Lagrange) reduction on a working copy.
  Mat m = q.matrix();
  std::size_t n = m.size();
  Inertia out;
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && sgn(m[i][i]) != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // No usable diagonal entry: find an off-diagonal pair and mix.
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!done[j] && j != i && sgn(m[i][j]) != 0) {
            a = i;
            b = j;
            break;
          }
      }
      if (a == n) {
        out.zero += remaining;
        break;
      }
      // Row/column a += row/column b gives m[a][a] = 2 m[a][b] (m[b][b] = 0).
      for (std::size_t k = 0; k < n; ++k) m[a][k] += m[b][k];
      for (std::size_t k = 0; k < n; ++k) m[k][a] += m[k][b];
      p = a;
    }
    Rational d = m[p][p];
    if (sgn(d) > 0)
      ++out.pos;
    else
      ++out.neg;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == p || sgn(m[i][p]) == 0) continue;
      Rational f = m[i][p] / d;
      for (std::size_t k = 0; k < n; ++k) m[i][k] -= f * m[p][k];
    }
    for (std::size_t i = 0; i < n; ++i)
      if (i != p) {
        m[p][i] = 0;
        m[i][p] = 0;
      }
    done[p] = true;
    --remaining;
  }
  return out;
}

Subspace radical(const QForm& q) {
  return Subspace::span(q.dim(), kernel(q.matrix(), q.dim()));
}

}  // namespace carnot
