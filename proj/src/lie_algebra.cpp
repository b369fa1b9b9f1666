#include "carnot/lie_algebra.hpp"

#include <algorithm>
#include <set>

#include "carnot/errors.hpp"

namespace carnot {

namespace {

std::vector<std::size_t> support(const Vec& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.push_back(i);
  return s;
}

}  // namespace

GradedLieAlgebra::GradedLieAlgebra(const Presentation& p)
    : name_(p.name), layer_dims_(p.layers), names_(p.basis) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < layer_dims_.size(); ++k) {
    if (layer_dims_[k] == 0)
      throw Error("layer " + std::to_string(k + 1) + " is empty");
    total += layer_dims_[k];
  }
  if (total != names_.size())
    throw Error("layer dimensions sum to " + std::to_string(total) + " but the basis has " +
                std::to_string(names_.size()) + " elements");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty basis identifier");
    if (!seen.insert(n).second) throw Error("duplicate basis identifier \"" + n + "\"");
  }
  for (std::size_t k = 0; k < layer_dims_.size(); ++k)
    for (std::size_t c = 0; c < layer_dims_[k]; ++c) degree_.push_back(k + 1);

  const std::size_t n = dim();
  for (const auto& b : p.brackets) {
    if (b.left >= n || b.right >= n) throw Error("bracket index out of range");
    if (b.result.size() != n) throw DimensionMismatch("bracket result has wrong length");
    if (b.left == b.right) {
      if (!is_zero(b.result))
        throw Error("bracket [" + names_[b.left] + "," + names_[b.left] + "] must vanish");
      continue;
    }
    std::size_t i = std::min(b.left, b.right), j = std::max(b.left, b.right);
    std::size_t key = i * n + j;
    if (table_.count(key))
      throw Error("bracket [" + names_[i] + "," + names_[j] + "] given twice");
    std::size_t deg = degree_[i] + degree_[j];
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(b.result[c]) == 0) continue;
      if (degree_[c] != deg)
        throw GradingViolation(b.left, b.right,
                               "GradingViolation(" + names_[b.left] + "," + names_[b.right] +
                                   "): result is not in layer " + std::to_string(deg));
    }
    Sparse s;
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(b.result[c]) == 0) continue;
      s.emplace_back(c, b.left < b.right ? b.result[c] : Rational(-b.result[c]));
    }
    table_[key] = std::move(s);
    // Keep an explicit record of the pair even when zero.
    if (table_[key].empty()) table_.erase(key);
  }

  // Jacobi on basis triples i < j < k, lexicographic order.
  std::size_t s = step();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (degree_[i] + degree_[j] + degree_[k] > s) continue;
        Vec r = bracket(basis_vector(i), bracket_basis(j, k));
        r = add(r, bracket(basis_vector(j), bracket_basis(k, i)));
        r = add(r, bracket(basis_vector(k), bracket_basis(i, j)));
        if (!is_zero(r))
          throw JacobiViolation(i, j, k,
                                "JacobiViolation(" + names_[i] + "," + names_[j] + "," +
                                    names_[k] + "): residual " + format_vector(*this, r));
      }

  for (std::size_t k = 1; k < s; ++k) {
    Subspace next = bracket_span(*this, layer(*this, 1), layer(*this, k));
    if (next.dim() != layer_dims_[k]) {
      defect_ = k;
      break;
    }
  }
}

std::size_t GradedLieAlgebra::layer_begin(std::size_t k) const {
  std::size_t b = 0;
  for (std::size_t i = 1; i < k && i <= layer_dims_.size(); ++i) b += layer_dims_[i - 1];
  return std::min(b, dim());
}

std::size_t GradedLieAlgebra::layer_end(std::size_t k) const {
  if (k == 0 || k > layer_dims_.size()) return layer_begin(k);
  return layer_begin(k) + layer_dims_[k - 1];
}

std::optional<std::size_t> GradedLieAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

GradedLieAlgebra::Sparse GradedLieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  std::size_t a = std::min(i, j), b = std::max(i, j);
  auto it = table_.find(a * dim() + b);
  if (it == table_.end()) return {};
  if (i < j) return it->second;
  Sparse s = it->second;
  for (auto& [c, x] : s) x = -x;
  return s;
}

Vec GradedLieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec r = zeros(dim());
  for (const auto& [c, x] : basis_bracket(i, j)) r[c] = x;
  return r;
}

Vec GradedLieAlgebra::bracket(const Vec& v, const Vec& w) const {
  if (v.size() != dim() || w.size() != dim()) throw DimensionMismatch("bracket: vector length");
  Vec r = zeros(dim());
  auto sv = support(v), sw = support(w);
  for (auto i : sv)
    for (auto j : sw) {
      if (i == j) continue;
      std::size_t a = std::min(i, j), b = std::max(i, j);
      auto it = table_.find(a * dim() + b);
      if (it == table_.end()) continue;
      Rational f = v[i] * w[j];
      if (i > j) f = -f;
      for (const auto& [c, x] : it->second) r[c] += f * x;
    }
  return r;
}

void GradedLieAlgebra::require_stratified(const std::string& what) const {
  if (defect_)
    throw NotStratified(what + " requires a stratified algebra; V" + std::to_string(*defect_ + 1) +
                        " != [V1,V" + std::to_string(*defect_) + "]");
}

Presentation GradedLieAlgebra::presentation() const {
  Presentation p;
  p.name = name_;
  p.layers = layer_dims_;
  p.basis = names_;
  for (const auto& [key, s] : table_) {
    BracketEntry e;
    e.left = key / dim();
    e.right = key % dim();
    e.result = zeros(dim());
    for (const auto& [c, x] : s) e.result[c] = x;
    p.brackets.push_back(std::move(e));
  }
  return p;
}

bool GradedLieAlgebra::operator==(const GradedLieAlgebra& o) const {
  return name_ == o.name_ && layer_dims_ == o.layer_dims_ && names_ == o.names_ &&
         table_ == o.table_;
}

std::string format_vector(const GradedLieAlgebra& g, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Rational c = v[i];
    if (out.empty()) {
      if (c == -1)
        out += "-";
      else if (c != 1)
        out += to_string(c) + "*";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      Rational a = abs(c);
      if (a != 1) out += to_string(a) + "*";
    }
    out += g.basis_names()[i];
  }
  return out.empty() ? "0" : out;
}

Subspace layer(const GradedLieAlgebra& g, std::size_t k) {
  Mat rows;
  for (std::size_t i = g.layer_begin(k); i < g.layer_end(k); ++i) rows.push_back(unit(g.dim(), i));
  return Subspace::span(g.dim(), rows);
}

Subspace span_of(const GradedLieAlgebra& g, const Mat& vectors) {
  return Subspace::span(g.dim(), vectors);
}

Vec layer_component(const GradedLieAlgebra& g, const Vec& v, std::size_t k) {
  Vec r = zeros(g.dim());
  for (std::size_t i = g.layer_begin(k); i < g.layer_end(k); ++i) r[i] = v[i];
  return r;
}

std::optional<std::size_t> homogeneous_degree(const GradedLieAlgebra& g, const Vec& v) {
  std::optional<std::size_t> d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (d && *d != g.degree(i)) return std::nullopt;
    d = g.degree(i);
  }
  return d;
}

Subspace bracket_span(const GradedLieAlgebra& g, const Subspace& a, const Subspace& b) {
  Mat rows;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      Vec r = g.bracket(x, y);
      if (!is_zero(r)) rows.push_back(std::move(r));
    }
  return Subspace::span(g.dim(), rows);
}

Subspace centralizer(const GradedLieAlgebra& g, const Subspace& s) {
  // Linear conditions on v: coordinate c of [v, s_b] vanishes for all b, c.
  std::size_t n = g.dim();
  Mat sys;
  for (const auto& sb : s.basis()) {
    Mat cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = g.bracket(unit(n, i), sb);
    for (std::size_t c = 0; c < n; ++c) {
      Vec row(n);
      bool nz = false;
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = cols[i][c];
        nz = nz || sgn(row[i]) != 0;
      }
      if (nz) sys.push_back(std::move(row));
    }
  }
  return Subspace::span(n, kernel(sys, n));
}

CenterInfo center(const GradedLieAlgebra& g) {
  CenterInfo info{centralizer(g, Subspace::full(g.dim())), {}};
  for (std::size_t k = 1; k <= g.step(); ++k)
    info.layer_dims.push_back(intersect(info.center, layer(g, k)).dim());
  return info;
}

std::vector<Subspace> lower_central_series(const GradedLieAlgebra& g) {
  std::vector<Subspace> out{Subspace::full(g.dim())};
  Subspace all = Subspace::full(g.dim());
  while (!out.back().is_zero()) {
    Subspace next = bracket_span(g, all, out.back());
    if (next == out.back()) break;
    out.push_back(next);
  }
  return out;
}

Subspace derived(const GradedLieAlgebra& g) {
  Subspace all = Subspace::full(g.dim());
  return bracket_span(g, all, all);
}

TrimmedReport is_trimmed(const GradedLieAlgebra& g) {
  g.require_stratified("is_trimmed");
  auto c = center(g);
  return {c.center.dim() == 1, c.center};
}

bool is_homogeneous(const GradedLieAlgebra& g, const Subspace& s) {
  std::size_t total = 0;
  for (std::size_t k = 1; k <= g.step(); ++k) total += intersect(s, layer(g, k)).dim();
  return total == s.dim();
}

bool is_hom_ideal(const GradedLieAlgebra& g, const Subspace& s) {
  if (s.ambient() != g.dim()) throw DimensionMismatch("ideal ambient dimension");
  if (!is_homogeneous(g, s)) return false;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& b : s.basis())
      if (!s.contains(g.bracket(unit(g.dim(), i), b))) return false;
  return true;
}

bool is_subalgebra(const GradedLieAlgebra& g, const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(g.bracket(b[i], b[j]))) return false;
  return true;
}

Subspace ideal_generated(const GradedLieAlgebra& g, const Mat& vectors) {
  Subspace s = Subspace::span(g.dim(), vectors);
  Mat frontier = s.basis();
  while (!frontier.empty()) {
    Mat rows = s.basis();
    std::size_t before = s.dim();
    for (const auto& f : frontier)
      for (std::size_t i = 0; i < g.dim(); ++i) {
        Vec r = g.bracket(unit(g.dim(), i), f);
        if (!is_zero(r) && !s.contains(r)) rows.push_back(std::move(r));
      }
    Subspace next = Subspace::span(g.dim(), rows);
    if (next.dim() == before) break;
    frontier.clear();
    for (const auto& b : next.basis())
      if (!s.contains(b)) frontier.push_back(b);
    s = next;
  }
  return s;
}

Subspace lie_generated(const GradedLieAlgebra& g, const Mat& vectors) {
  Subspace s = Subspace::span(g.dim(), vectors);
  while (true) {
    Mat rows = s.basis();
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        Vec r = g.bracket(b[i], b[j]);
        if (!is_zero(r) && !s.contains(r)) rows.push_back(std::move(r));
      }
    if (rows.size() == s.dim()) return s;
    s = Subspace::span(g.dim(), rows);
  }
}

Vec Quotient::project(const Vec& v) const {
  Vec r = ideal.reduce(v);
  Vec out(complement.size());
  for (std::size_t a = 0; a < complement.size(); ++a) out[a] = r[complement[a]];
  return out;
}

Vec Quotient::lift(const Vec& q) const {
  Vec out = zeros(ideal.ambient());
  for (std::size_t a = 0; a < complement.size(); ++a) out[complement[a]] = q[a];
  return out;
}

Subspace Quotient::project(const Subspace& s) const {
  Mat rows;
  for (const auto& b : s.basis()) rows.push_back(project(b));
  return Subspace::span(complement.size(), rows);
}

Subspace Quotient::preimage(const Subspace& s) const {
  Mat rows = ideal.basis();
  for (const auto& b : s.basis()) rows.push_back(lift(b));
  return Subspace::span(ideal.ambient(), rows);
}

Quotient quotient(const GradedLieAlgebra& g, const Subspace& ideal, const std::string& name) {
  if (ideal.ambient() != g.dim()) throw DimensionMismatch("ideal ambient dimension");
  if (!is_homogeneous(g, ideal)) throw NotHomogeneous("subspace is not homogeneous");
  if (!is_hom_ideal(g, ideal)) throw NotAnIdeal("subspace is not an ideal");
  Quotient q;
  q.ideal = ideal;
  q.complement = ideal.free_columns();
  Presentation p;
  p.name = name.empty() ? g.name() + "/i" : name;
  for (std::size_t k = 1; k <= g.step(); ++k)
    p.layers.push_back(g.layer_dims()[k - 1] - intersect(ideal, layer(g, k)).dim());
  while (!p.layers.empty() && p.layers.back() == 0) p.layers.pop_back();
  for (auto c : q.complement) p.basis.push_back(g.basis_names()[c]);
  for (std::size_t a = 0; a < q.complement.size(); ++a)
    for (std::size_t b = a + 1; b < q.complement.size(); ++b) {
      Vec r = q.project(g.bracket_basis(q.complement[a], q.complement[b]));
      if (!is_zero(r)) p.brackets.push_back({a, b, std::move(r)});
    }
  q.algebra = GradedLieAlgebra(p);
  return q;
}

Product product(const GradedLieAlgebra& a, const GradedLieAlgebra& b, const std::string& name) {
  Product out;
  std::set<std::string> na(a.basis_names().begin(), a.basis_names().end());
  bool clash = false;
  for (const auto& n : b.basis_names()) clash = clash || na.count(n);
  Presentation p;
  p.name = name.empty() ? a.name() + "x" + b.name() : name;
  std::size_t s = std::max(a.step(), b.step());
  out.first.resize(a.dim());
  out.second.resize(b.dim());
  for (std::size_t k = 1; k <= s; ++k) {
    std::size_t d = 0;
    for (std::size_t i = a.layer_begin(k); i < a.layer_end(k); ++i, ++d) {
      out.first[i] = p.basis.size();
      p.basis.push_back(clash ? a.basis_names()[i] + "_1" : a.basis_names()[i]);
    }
    for (std::size_t i = b.layer_begin(k); i < b.layer_end(k); ++i, ++d) {
      out.second[i] = p.basis.size();
      p.basis.push_back(clash ? b.basis_names()[i] + "_2" : b.basis_names()[i]);
    }
    p.layers.push_back(d);
  }
  std::size_t n = p.basis.size();
  auto copy = [&](const GradedLieAlgebra& f, const std::vector<std::size_t>& pos) {
    for (std::size_t i = 0; i < f.dim(); ++i)
      for (std::size_t j = i + 1; j < f.dim(); ++j) {
        auto sp = f.basis_bracket(i, j);
        if (sp.empty()) continue;
        Vec r = zeros(n);
        for (const auto& [c, x] : sp) r[pos[c]] = x;
        p.brackets.push_back({pos[i], pos[j], std::move(r)});
      }
  };
  copy(a, out.first);
  copy(b, out.second);
  out.algebra = GradedLieAlgebra(p);
  return out;
}

Vec dilate(const GradedLieAlgebra& g, const Vec& v, const Rational& t) {
  Vec r = v;
  for (std::size_t i = 0; i < r.size(); ++i) {
    Rational f(1);
    for (std::size_t k = 0; k < g.degree(i); ++k) f *= t;
    r[i] *= f;
  }
  return r;
}

GradedLieAlgebra change_basis(const GradedLieAlgebra& g, const Mat& p, const std::string& name) {
  std::size_t n = g.dim();
  if (p.size() != n) throw DimensionMismatch("change_basis: matrix size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      if (sgn(p[i][a]) != 0 && g.degree(i) != g.degree(a))
        throw NotHomogeneous("change_basis: matrix mixes layers");
  Mat pinv = inverse(p);
  Mat cols = transpose(p, n);  // cols[a] = f_a in e coordinates
  Presentation pr = g.presentation();
  pr.name = name.empty() ? g.name() : name;
  pr.brackets.clear();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec r = g.bracket(cols[a], cols[b]);
      if (is_zero(r)) continue;
      pr.brackets.push_back({a, b, mat_vec(pinv, r)});
    }
  return GradedLieAlgebra(pr);
}

Subalgebra subalgebra(const GradedLieAlgebra& g, const Subspace& s, const std::string& name) {
  if (!is_homogeneous(g, s)) throw NotHomogeneous("subalgebra is not homogeneous");
  if (!is_subalgebra(g, s)) throw Error("subspace is not closed under brackets");
  Subalgebra out;
  Presentation p;
  p.name = name.empty() ? g.name() + "|sub" : name;
  for (std::size_t k = 1; k <= g.step(); ++k) {
    Subspace part = intersect(s, layer(g, k));
    if (part.dim() == 0) {
      p.layers.push_back(0);
      continue;
    }
    p.layers.push_back(part.dim());
    for (const auto& b : part.basis()) {
      out.embedding.push_back(b);
      // Name after the pivot basis vector when the row is a unit vector.
      std::size_t nz = 0, idx = 0;
      for (std::size_t c = 0; c < b.size(); ++c)
        if (sgn(b[c]) != 0) {
          ++nz;
          idx = c;
        }
      std::string nm = nz == 1 && b[idx] == 1 ? g.basis_names()[idx]
                                              : "u" + std::to_string(out.embedding.size());
      p.basis.push_back(nm);
    }
  }
  while (!p.layers.empty() && p.layers.back() == 0) p.layers.pop_back();
  // Interior empty layers cannot be represented.
  for (auto d : p.layers)
    if (d == 0) throw NotStratified("subalgebra has an empty interior layer");
  std::set<std::string> seen;
  for (auto& nm : p.basis)
    if (!seen.insert(nm).second) nm += "'";
  Subspace sp = Subspace::span(g.dim(), out.embedding);
  std::size_t m = out.embedding.size();
  Mat cols = transpose(out.embedding, g.dim());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec r = g.bracket(out.embedding[a], out.embedding[b]);
      if (is_zero(r)) continue;
      auto x = solve(cols, r, m);
      p.brackets.push_back({a, b, *x});
    }
  out.algebra = GradedLieAlgebra(p);
  return out;
}

Mat ad_images(const GradedLieAlgebra& g, const Vec& v, const Mat& domain) {
  Mat out;
  for (const auto& d : domain) out.push_back(g.bracket(v, d));
  return out;
}

Vec ad_power(const GradedLieAlgebra& g, const Vec& x, const Vec& y, std::size_t k) {
  Vec r = y;
  for (std::size_t i = 0; i < k && !is_zero(r); ++i) r = g.bracket(x, r);
  return r;
}

}  // namespace carnot
