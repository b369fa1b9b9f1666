#include "carnot/semigen.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "carnot/bch.hpp"
#include "carnot/errors.hpp"
#include "carnot/poly.hpp"

namespace carnot {

namespace {

Vec embed_v1(const GradedLieAlgebra& g, const Vec& a) {
  Vec v = zeros(g.dim());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i];
  return v;
}

Vec v1_part(const GradedLieAlgebra& g, const Vec& v) {
  return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(g.rank()));
}

Mat v1_basis(const GradedLieAlgebra& g) { return layer(g, 1).basis(); }

Subspace grow(const Subspace& e, const Mat& added) {
  Mat rows = e.basis();
  rows.insert(rows.end(), added.begin(), added.end());
  return Subspace::span(e.ambient(), rows);
}

Mat new_vectors(const Subspace& from, const Subspace& old) {
  Mat out;
  Subspace acc = old;
  for (const auto& b : from.basis())
    if (!acc.contains(b)) {
      out.push_back(b);
      acc = grow(acc, {b});
    }
  return out;
}

std::string functional_text(const Vec& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (sgn(f[i]) == 0) continue;
    Rational c = f[i];
    std::string var = "a" + std::to_string(i + 1);
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
    out += var;
  }
  return (out.empty() ? "0" : out) + " = 0";
}

std::string ideal_text(const GradedLieAlgebra& g, const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += ", ";
    out += format_vector(g, s.basis()[i]);
  }
  return out + "}";
}

}  // namespace

Subspace boundary(const GradedLieAlgebra& g, const HalfSpace& w) {
  if (w.lam.size() != g.rank())
    throw DimensionMismatch("covector has " + std::to_string(w.lam.size()) +
                            " entries but V1 has dimension " + std::to_string(g.rank()));
  if (is_zero(w.lam)) throw Error("covector must be nonzero");
  Mat ker = kernel(Mat{w.lam}, g.rank());
  Mat rows;
  for (const auto& k : ker) rows.push_back(embed_v1(g, k));
  return Subspace::span(g.dim(), rows);
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
    case Rule::R5: return "R5";
  }
  return "?";
}

Rule parse_rule(const std::string& s) {
  if (s == "R1") return Rule::R1;
  if (s == "R2") return Rule::R2;
  if (s == "R3") return Rule::R3;
  if (s == "R4") return Rule::R4;
  if (s == "R5") return Rule::R5;
  throw ParseError("unknown rule \"" + s + "\"");
}

EdgeApprox saturate_edge(const GradedLieAlgebra& g, const HalfSpace& w, const SaturationConfig& cfg) {
  g.require_stratified("saturate_edge");
  EdgeApprox out;
  out.boundary = boundary(g, w);
  Subspace E = out.boundary;
  const std::size_t n = g.dim();
  Subspace v1 = layer(g, 1), v2 = layer(g, 2);

  Mat gens = v1.basis();
  for (const auto& x : cfg.generators) {
    if (x.size() != n || !v1.contains(x)) throw NotHorizontal("R3 generator is not in V1");
    gens.push_back(x);
  }
  if (cfg.star_generators)
    for (const auto& x : star_subspace(g).basis()) gens.push_back(x);

  Subspace v2_center = intersect(v2, center(g).center);

  // X's with ad_Y^2 X in E, drawn from span(domain).
  auto r2_solutions = [&](const Vec& y, const Mat& domain) {
    Mat cols;
    for (const auto& d : domain) cols.push_back(E.reduce(ad_power(g, y, d, 2)));
    Mat ker = kernel(transpose(cols, n), domain.size());
    Mat xs;
    for (const auto& c : ker) {
      Vec x = zeros(n);
      for (std::size_t i = 0; i < c.size(); ++i) axpy(x, c[i], domain[i]);
      xs.push_back(std::move(x));
    }
    return xs;
  };

  while (true) {
    if (cfg.r1) {
      Subspace L = lie_generated(g, E.basis());
      if (L.dim() > E.dim()) {
        out.trace.push_back({Rule::R1, {}, new_vectors(L, E)});
        E = L;
        continue;
      }
    }
    bool grew = false;
    if (cfg.r2) {
      Mat ys = E.basis();
      for (const auto& y : ys) {
        Mat domain = cfg.r2_extended ? sum(v1, E).basis() : v1.basis();
        Mat xs = r2_solutions(y, domain);
        Mat inputs{y}, added;
        Subspace acc = E;
        for (const auto& x : xs) {
          Vec br = g.bracket(x, y);
          if (acc.contains(br)) continue;
          inputs.push_back(x);
          added.push_back(br);
          acc = grow(acc, {br});
        }
        if (added.empty()) continue;
        if (cfg.r2_extended) {
          Mat plain;
          for (const auto& x : r2_solutions(y, v1.basis())) plain.push_back(g.bracket(x, y));
          if (!grow(E, plain).contains(acc)) out.extended_difference = true;
        }
        out.trace.push_back({Rule::R2, inputs, added});
        E = acc;
        grew = true;
        break;
      }
      if (grew) continue;
    }
    if (cfg.r3) {
      for (std::size_t p = 0; p < gens.size() && !grew; ++p)
        for (std::size_t q = p + 1; q < gens.size() && !grew; ++q) {
          const Vec &x = gens[p], &y = gens[q];
          if (!is_zero(ad_power(g, x, y, 2)) || !is_zero(ad_power(g, y, x, 2))) continue;
          Vec br = g.bracket(x, y);
          if (E.contains(br)) continue;
          out.trace.push_back({Rule::R3, {x, y}, {br}});
          E = grow(E, {br});
          grew = true;
        }
      if (grew) continue;
    }
    if (cfg.r4 && !E.contains(v2_center)) {
      out.trace.push_back({Rule::R4, {}, new_vectors(v2_center, E)});
      E = grow(E, v2_center.basis());
      continue;
    }
    if (cfg.r5 && g.step() <= 4) {
      Subspace z = intersect(v2, E);
      Subspace ideal = ideal_generated(g, z.basis());
      if (!E.contains(ideal)) {
        out.trace.push_back({Rule::R5, z.basis(), new_vectors(ideal, E)});
        E = grow(E, ideal.basis());
        continue;
      }
    }
    break;
  }
  out.E = E;
  return out;
}

Mat diamond_terms(const GradedLieAlgebra& g, const Mat& basis) {
  Mat out;
  for (const auto& xi : basis)
    for (const auto& xj : basis) {
      Vec t = ad_power(g, xi, xj, 2);
      if (!is_zero(t)) out.push_back(t);
      Vec u = t;
      while (!is_zero(u)) {
        Vec d = ad_power(g, u, xi, 2);
        if (!is_zero(d)) out.push_back(d);
        u = g.bracket(xi, u);
      }
    }
  return out;
}

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "YES";
    case Answer::No: return "NO";
    case Answer::Unknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

struct StarForm {
  std::size_t generator;
  std::size_t coordinate;
  QForm form;
};

// Coordinate forms of Y -> ad_Y^2 X_j, as quadratic forms in V1 coordinates.
std::vector<StarForm> star_forms(const GradedLieAlgebra& g) {
  std::size_t d1 = g.rank(), n = g.dim();
  std::vector<StarForm> out;
  // inner[l][j] = [e_l, e_j]
  std::vector<Mat> inner(d1, Mat(d1));
  for (std::size_t l = 0; l < d1; ++l)
    for (std::size_t j = 0; j < d1; ++j) inner[l][j] = g.bracket_basis(l, j);
  for (std::size_t j = 0; j < d1; ++j) {
    // B[i][l] = [e_i, [e_l, e_j]]
    std::vector<Mat> B(d1, Mat(d1));
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t l = 0; l < d1; ++l) B[i][l] = g.bracket(unit(n, i), inner[l][j]);
    for (std::size_t c = 0; c < n; ++c) {
      Mat m(d1, zeros(d1));
      bool nz = false;
      for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t l = 0; l < d1; ++l) {
          m[i][l] = (B[i][l][c] + B[l][i][c]) / 2;
          nz = nz || sgn(m[i][l]) != 0;
        }
      if (nz) out.push_back({j, c, QForm(m)});
    }
  }
  return out;
}

// One pass of radical restriction. Returns true if U shrank.
bool radical_pass(const std::vector<StarForm>& forms, Subspace& U, std::vector<RadicalStep>* chain) {
  bool changed = false;
  for (const auto& f : forms) {
    if (U.is_zero()) break;
    QForm r = f.form.restrict_to(U.basis());
    if (r.is_zero()) continue;
    if (!signature(r).semidefinite()) continue;
    Subspace rad = radical(r);
    Mat rows = rad.basis().empty() ? Mat{} : mat_mul(rad.basis(), U.basis());
    Subspace next = Subspace::span(U.ambient(), rows);
    if (chain) {
      RadicalStep s;
      s.generator = f.generator;
      s.coordinate = f.coordinate;
      s.subspace_before = U.basis();
      s.subspace_after = next.basis();
      Subspace old_ann = Subspace::span(U.ambient(), U.annihilator());
      for (const auto& a : Subspace::span(U.ambient(), next.annihilator()).basis())
        if (!old_ann.contains(a)) {
          s.constraints.push_back(a);
          old_ann = grow(old_ann, {a});
        }
      chain->push_back(std::move(s));
    }
    U = next;
    changed = true;
  }
  return changed;
}

bool standard_basis_is_star(const GradedLieAlgebra& g) {
  std::size_t d1 = g.rank(), n = g.dim();
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      if (!is_zero(ad_power(g, unit(n, i), unit(n, j), 2))) return false;
  return true;
}

}  // namespace

StarReport check_type_star(const GradedLieAlgebra& g) {
  g.require_stratified("check_type_star");
  StarReport r;
  std::size_t d1 = g.rank();
  if (standard_basis_is_star(g)) {
    r.answer = Answer::Yes;
    r.basis = v1_basis(g);
    r.witness = "the V1 basis satisfies ad^2_{X_i}(V1) = 0";
    return r;
  }
  auto forms = star_forms(g);
  Subspace U = Subspace::full(d1);
  radical_pass(forms, U, &r.chain);
  if (U.dim() < d1) {
    r.answer = Answer::No;
    r.final_subspace = U.basis();
    std::string w = "radical chain forces ";
    bool first = true;
    for (const auto& s : r.chain)
      for (const auto& c : s.constraints) {
        if (!first) w += ", then ";
        w += functional_text(c);
        first = false;
      }
    w += ", then span dim " + std::to_string(U.dim()) + " < " + std::to_string(d1);
    r.witness = w;
    return r;
  }
  r.chain.clear();
  r.witness = "no nonzero semidefinite coordinate form; indefinite forms remain";
  r.notes.push_back("the set {Y : ad_Y^2(V1) = 0} was not bounded by radical restriction");
  return r;
}

bool verify_star_report(const GradedLieAlgebra& g, const StarReport& r, std::string* why) {
  auto bad = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  std::size_t d1 = g.rank(), n = g.dim();
  if (r.answer == Answer::Yes) {
    Subspace v1 = layer(g, 1);
    if (r.basis.size() != d1 || rank(r.basis, n) != d1) return bad("basis does not span V1");
    for (const auto& b : r.basis) {
      if (!v1.contains(b)) return bad("basis vector outside V1");
      for (std::size_t j = 0; j < d1; ++j)
        if (!is_zero(ad_power(g, b, unit(n, j), 2))) return bad("ad^2 of a basis vector is nonzero");
    }
    return true;
  }
  if (r.answer != Answer::No) return true;
  auto forms = star_forms(g);
  Subspace U = Subspace::full(d1);
  for (std::size_t k = 0; k < r.chain.size(); ++k) {
    const auto& s = r.chain[k];
    if (Subspace::span(d1, s.subspace_before) != U) return bad("chain step " + std::to_string(k) + " starts elsewhere");
    Mat m(d1, zeros(d1));
    std::vector<Mat> dummy;
    // Recompute the form from brackets.
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t l = 0; l < d1; ++l) {
        Rational a = g.bracket(unit(n, i), g.bracket_basis(l, s.generator))[s.coordinate];
        Rational b = g.bracket(unit(n, l), g.bracket_basis(i, s.generator))[s.coordinate];
        m[i][l] = (a + b) / 2;
      }
    QForm q = QForm(m).restrict_to(U.basis());
    if (q.is_zero()) return bad("chain step uses a form vanishing on the subspace");
    if (!signature(q).semidefinite()) return bad("chain step uses an indefinite form");
    Subspace rad = radical(q);
    Mat rows = rad.basis().empty() ? Mat{} : mat_mul(rad.basis(), U.basis());
    Subspace next = Subspace::span(d1, rows);
    if (Subspace::span(d1, s.subspace_after) != next) return bad("chain step radical mismatch");
    U = next;
  }
  if (U.dim() >= d1) return bad("final subspace is all of V1");
  if (Subspace::span(d1, r.final_subspace) != U) return bad("final subspace mismatch");
  return true;
}

Subspace star_subspace(const GradedLieAlgebra& g) {
  std::size_t d1 = g.rank();
  auto forms = star_forms(g);
  Subspace U = Subspace::full(d1);
  while (radical_pass(forms, U, nullptr)) {
  }
  Mat rows;
  for (const auto& b : U.basis()) rows.push_back(embed_v1(g, b));
  return Subspace::span(g.dim(), rows);
}

ProductQuotientCheck check_product_quotient(const GradedLieAlgebra& g, const ProductQuotientCert& c) {
  ProductQuotientCheck out;
  auto bad = [&](const std::string& m) {
    out.ok = false;
    out.failure = m;
    return out;
  };
  const std::size_t n = g.dim();
  if (c.factors.empty()) return bad("no factors");
  if (c.factors.size() != c.images.size()) return bad("factor and image counts differ");
  Mat all;
  std::vector<std::size_t> offset;
  for (std::size_t l = 0; l < c.factors.size(); ++l) {
    const auto& f = c.factors[l];
    const auto& im = c.images[l];
    if (!f.is_stratified()) return bad("factor " + std::to_string(l + 1) + " is not stratified");
    if (im.size() != f.dim()) return bad("factor " + std::to_string(l + 1) + " image count");
    for (std::size_t a = 0; a < f.dim(); ++a) {
      if (im[a].size() != n) return bad("image vector length");
      auto deg = homogeneous_degree(g, im[a]);
      if (deg && *deg != f.degree(a)) return bad("map does not preserve degrees");
    }
    auto phi = [&](const Vec& v) {
      Vec r = zeros(n);
      for (std::size_t a = 0; a < f.dim(); ++a)
        if (sgn(v[a]) != 0) axpy(r, v[a], im[a]);
      return r;
    };
    for (std::size_t a = 0; a < f.dim(); ++a)
      for (std::size_t b = a + 1; b < f.dim(); ++b)
        if (phi(f.bracket_basis(a, b)) != g.bracket(im[a], im[b]))
          return bad("factor " + std::to_string(l + 1) + " map is not a homomorphism at [" +
                     f.basis_names()[a] + "," + f.basis_names()[b] + "]");
    offset.push_back(all.size());
    all.insert(all.end(), im.begin(), im.end());
  }
  for (std::size_t l = 0; l < c.factors.size(); ++l)
    for (std::size_t m = l + 1; m < c.factors.size(); ++m)
      for (const auto& a : c.images[l])
        for (const auto& b : c.images[m])
          if (!is_zero(g.bracket(a, b))) return bad("images of different factors do not commute");
  if (rank(all, n) != n) return bad("map is not surjective");
  // Kernel in concatenated product coordinates.
  Mat ker = kernel(transpose(all, n), all.size());
  out.ideal = Subspace::span(all.size(), ker);
  for (std::size_t l = 0; l < c.factors.size(); ++l) {
    const auto& f = c.factors[l];
    Mat proj;
    for (const auto& k : out.ideal.basis())
      proj.push_back(Vec(k.begin() + static_cast<std::ptrdiff_t>(offset[l]),
                         k.begin() + static_cast<std::ptrdiff_t>(offset[l] + f.dim())));
    Subspace pl = Subspace::span(f.dim(), proj);
    std::size_t m1 = f.rank();
    for (std::size_t i = 0; i < m1; ++i)
      for (std::size_t j = 0; j < m1; ++j) {
        Vec xi = unit(f.dim(), i);
        Vec u = ad_power(f, xi, unit(f.dim(), j), 2);
        while (!is_zero(u)) {
          if (!pl.contains(u))
            return bad("factor " + std::to_string(l + 1) + ": ad^k_{" + f.basis_names()[i] + "} " +
                       f.basis_names()[j] + " is not in the projected ideal");
          if (!pl.contains(ad_power(f, u, xi, 2)))
            return bad("factor " + std::to_string(l + 1) + ": ad^2 term of " + f.basis_names()[i] +
                       " is not in the projected ideal");
          u = f.bracket(xi, u);
        }
      }
  }
  out.ok = true;
  return out;
}

std::optional<ProductQuotientCert> commuting_block_decomposition(const GradedLieAlgebra& g) {
  std::size_t d1 = g.rank();
  std::vector<std::size_t> parent(d1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = i + 1; j < d1; ++j)
      if (!g.basis_bracket(i, j).empty()) parent[find(j)] = find(i);
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<long> block_of(d1, -1);
  for (std::size_t i = 0; i < d1; ++i) {
    std::size_t r = find(i);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[r])].push_back(i);
  }
  if (blocks.size() < 2) return std::nullopt;
  ProductQuotientCert c;
  for (std::size_t l = 0; l < blocks.size(); ++l) {
    Mat gens;
    for (auto i : blocks[l]) gens.push_back(unit(g.dim(), i));
    Subspace h = lie_generated(g, gens);
    Subalgebra sub = subalgebra(g, h, g.name() + "_block" + std::to_string(l + 1));
    c.factors.push_back(sub.algebra);
    c.images.push_back(sub.embedding);
  }
  return c;
}

std::optional<Subspace> find_abelian_hyperplane(const GradedLieAlgebra& g) {
  std::size_t d1 = g.rank(), n = g.dim();
  if (d1 == 0) return std::nullopt;
  for (std::size_t p = 0; p < d1; ++p) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < d1; ++i)
      if (i != p) idx.push_back(i);
    std::size_t m = idx.size();
    Vec ep = unit(n, p);
    std::vector<Vec> ex(m);
    for (std::size_t i = 0; i < m; ++i) ex[i] = g.bracket(unit(n, idx[i]), ep);
    Mat sys;
    Vec rhs;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        Vec b = g.bracket_basis(idx[i], idx[j]);
        for (std::size_t c = 0; c < n; ++c) {
          Vec row = zeros(m);
          row[j] += ex[i][c];
          row[i] -= ex[j][c];
          if (is_zero(row) && sgn(b[c]) == 0) continue;
          sys.push_back(std::move(row));
          rhs.push_back(-b[c]);
        }
      }
    auto sol = sys.empty() ? std::optional<Vec>(zeros(m)) : solve(sys, rhs, m);
    if (!sol) continue;
    Mat rows;
    for (std::size_t i = 0; i < m; ++i) {
      Vec y = unit(n, idx[i]);
      axpy(y, (*sol)[i], ep);
      rows.push_back(y);
    }
    return Subspace::span(n, rows);
  }
  return std::nullopt;
}

DiamondReport check_type_diamond(const GradedLieAlgebra& g, const std::optional<ProductQuotientCert>& cert) {
  g.require_stratified("check_type_diamond");
  DiamondReport r;
  r.star = check_type_star(g);
  if (cert) {
    auto chk = check_product_quotient(g, *cert);
    if (!chk.ok) throw CertificateError("product-quotient certificate rejected: " + chk.failure);
    r.answer = Answer::Yes;
    r.reason = "product-quotient certificate";
    r.certificate = cert;
    return r;
  }
  if (g.step() <= 2) {
    r.answer = Answer::Yes;
    r.reason = "step <= 2";
    return r;
  }
  if (r.star.answer == Answer::Yes) {
    r.answer = Answer::Yes;
    r.reason = "type (star)";
    return r;
  }
  if (auto blocks = commuting_block_decomposition(g)) {
    auto chk = check_product_quotient(g, *blocks);
    if (chk.ok) {
      r.answer = Answer::Yes;
      r.reason = "commuting-block product quotient";
      r.certificate = blocks;
      return r;
    }
    r.notes.push_back("commuting-block decomposition fails: " + chk.failure);
  }
  r.abelian_hyperplane = find_abelian_hyperplane(g);
  if (r.abelian_hyperplane && r.star.answer == Answer::No) {
    r.answer = Answer::No;
    r.reason = "abelian hyperplane " + ideal_text(g, *r.abelian_hyperplane) + " and not of type (star)";
    return r;
  }
  r.answer = Answer::Unknown;
  r.reason = r.abelian_hyperplane ? "type (star) undecided" : "no abelian hyperplane; no certificate found";
  return r;
}

Subspace forced_ideal(const GradedLieAlgebra& g, const Subspace& ideal3) {
  if (g.step() != 3) throw Error("forced_ideal applies to step-3 algebras");
  Subspace v3 = layer(g, 3);
  if (!v3.contains(ideal3) || ideal3.dim() + 1 != v3.dim())
    throw Error("forced_ideal needs a hyperplane of V3");
  Subspace I = ideal3;
  while (true) {
    Quotient q = quotient(g, I);
    const auto& h = q.algebra;
    if (h.step() < 3) return I;
    Subspace c = center(h).center;
    Subspace low = intersect(c, sum(layer(h, 1), layer(h, 2)));
    if (low.is_zero()) return I;
    I = q.preimage(low);
  }
}

Vec engel_bad_covector(const GradedLieAlgebra& g, const Subspace& ideal, const Recognition& rec) {
  Quotient q = quotient(g, ideal);
  const auto& s = *rec.structure;
  Mat rows;
  for (const auto& y : s.Y) rows.push_back(v1_part(g, q.lift(y)));
  for (const auto& b : intersect(ideal, layer(g, 1)).basis()) rows.push_back(v1_part(g, b));
  Mat ann = kernel(rows, g.rank());
  if (ann.size() != 1) throw Error("bad half-space boundary is not a hyperplane");
  Vec lam = ann[0];
  if (sgn(dot(lam, v1_part(g, q.lift(s.X)))) < 0) lam = neg(lam);
  return lam;
}

namespace {

bool maps_to_bad(const GradedLieAlgebra& g, const Subspace& ideal, const Vec& lam, std::string* why) {
  auto bad = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  Quotient q = quotient(g, ideal);
  Recognition rec = recognize_engel(q.algebra);
  if (!rec.ok()) return bad("quotient is not of Engel type: " + to_string(rec.failure));
  Subspace dw = boundary(g, HalfSpace{lam});
  if (!dw.contains(intersect(ideal, layer(g, 1)))) return bad("ideal meets V1 outside the boundary");
  Subspace img = q.project(dw);
  const auto& s = *rec.structure;
  if (s.n >= 2) {
    if (img != s.abelian_hyperplane) return bad("boundary image is not the abelian hyperplane");
  } else {
    if (img.dim() != 1 || img == s.x_line) return bad("boundary image is the X-line");
  }
  return true;
}

void add_found(EngelSearch& out, const GradedLieAlgebra& g, const Subspace& ideal,
               const Recognition& rec, const std::string& layer_name) {
  for (const auto& f : out.found)
    if (f.ideal == ideal) return;
  EngelQuotientCert c;
  c.ideal = ideal;
  c.n = rec.structure->n;
  c.lambda = engel_bad_covector(g, ideal, rec);
  c.layer = layer_name;
  out.found.push_back(std::move(c));
}

bool full(const EngelSearch& s, const SearchOptions& opt) {
  return opt.max_results != 0 && s.found.size() >= opt.max_results;
}

struct Probe {
  Subspace ideal3;
  Subspace forced;
  Recognition rec;
};

Probe probe(const GradedLieAlgebra& g, const Subspace& ideal3) {
  Probe p{ideal3, forced_ideal(g, ideal3), {}};
  p.rec = recognize_engel(quotient(g, p.forced).algebra);
  return p;
}

void record(EngelSearch& out, const GradedLieAlgebra& g, const Probe& p, const std::string& layer_name) {
  out.examined.push_back({p.ideal3, p.forced, p.rec.failure});
  if (p.rec.ok()) add_found(out, g, p.forced, p.rec, layer_name);
}

// det of m0 + t m1, by interpolation at t = 0..k.
UPoly det_poly(const Mat& m0, const Mat& m1) {
  std::size_t k = m0.size();
  std::vector<Rational> ts, vs;
  for (std::size_t s = 0; s <= k; ++s) {
    Rational t(static_cast<long>(s));
    Mat m(k, zeros(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = m0[i][j] + t * m1[i][j];
    // Determinant by elimination.
    Rational det(1);
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && sgn(m[p][c]) == 0) ++p;
      if (p == k) {
        det = 0;
        break;
      }
      if (p != c) {
        std::swap(m[p], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (std::size_t i = c + 1; i < k; ++i) {
        if (sgn(m[i][c]) == 0) continue;
        Rational f = m[i][c] / m[c][c];
        for (std::size_t j = c; j < k; ++j) m[i][j] -= f * m[c][j];
      }
    }
    ts.push_back(t);
    vs.push_back(det);
  }
  UPoly out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    UPoly basis = UPoly::constant(Rational(1));
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (j == i) continue;
      basis = basis * UPoly(Vec{Rational(-ts[j] / (ts[i] - ts[j])), Rational(1 / (ts[i] - ts[j]))});
    }
    out = out + vs[i] * basis;
  }
  return out;
}

// gcd of the maximal minors of the matrix whose (i, c) entry is mu_t([e_i, f_c])
// for mu_t = (1, t) on V3; its roots are the parameters where V2 meets the
// center of g / ker(mu_t).
UPoly l2_polynomial(const GradedLieAlgebra& g, std::size_t* minors_used) {
  std::size_t d1 = g.rank(), d2 = g.layer_dims()[1];
  std::size_t z0 = g.layer_begin(3);
  std::size_t v2b = g.layer_begin(2);
  Mat a(d1, zeros(d2)), b(d1, zeros(d2));
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t c = 0; c < d2; ++c) {
      Vec br = g.bracket_basis(i, v2b + c);
      a[i][c] = br[z0];
      b[i][c] = br[z0 + 1];
    }
  *minors_used = 0;
  if (d1 < d2) return UPoly();
  UPoly acc;
  std::vector<bool> pick(d1, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d2), true);
  std::size_t budget = 256;
  do {
    Mat m0, m1;
    for (std::size_t i = 0; i < d1; ++i)
      if (pick[i]) {
        m0.push_back(a[i]);
        m1.push_back(b[i]);
      }
    acc = gcd(acc, det_poly(m0, m1));
    ++*minors_used;
    if (acc.degree() == 0) break;
  } while (--budget > 0 && std::prev_permutation(pick.begin(), pick.end()));
  return acc;
}

void search_step3(const GradedLieAlgebra& g, const SearchOptions& opt, EngelSearch& out, bool allow_reduction);

void search_l2(const GradedLieAlgebra& g, const SearchOptions& opt, EngelSearch& out) {
  std::size_t z0 = g.layer_begin(3), n = g.dim();
  auto hyper = [&](const Rational& t) {
    // ker of (1, t): spanned by -t e_{z0} + e_{z0+1}
    Vec v = zeros(n);
    v[z0] = -t;
    v[z0 + 1] = 1;
    return Subspace::span(n, {v});
  };
  std::vector<Rational> ts{Rational(0)};
  std::size_t minors = 0;
  UPoly p = l2_polynomial(g, &minors);
  if (p.degree() >= 1) {
    auto roots = rational_roots(p);
    std::size_t real = count_real_roots(p);
    out.notes.push_back("L2: minor gcd of degree " + std::to_string(p.degree()) + " with " +
                        std::to_string(real) + " real roots, " + std::to_string(roots.size()) +
                        " rational");
    for (const auto& r : roots) ts.push_back(r);
    std::vector<Rational> marks;
    for (const auto& [lo, hi] : isolate_real_roots(p)) {
      marks.push_back(lo);
      marks.push_back(hi);
    }
    std::sort(marks.begin(), marks.end());
    for (std::size_t i = 0; i + 1 < marks.size(); ++i) ts.push_back((marks[i] + marks[i + 1]) / 2);
    if (!marks.empty()) {
      ts.push_back(marks.front() - 1);
      ts.push_back(marks.back() + 1);
    }
  } else if (p.is_zero()) {
    out.notes.push_back("L2: V2 meets the center for every parameter");
  }
  for (long k : {1L, -1L, 2L, -2L}) ts.push_back(Rational(k));
  std::vector<Rational> uniq;
  for (const auto& t : ts)
    if (std::find(uniq.begin(), uniq.end(), t) == uniq.end()) uniq.push_back(t);
  record(out, g, probe(g, hyper(uniq[0])), "L2");
  if (full(out, opt)) return;
  record(out, g, probe(g, Subspace::span(n, {unit(n, z0)})), "L2");
  for (std::size_t i = 1; i < uniq.size() && !full(out, opt); ++i)
    record(out, g, probe(g, hyper(uniq[i])), "L2");
}

void search_reduction(const GradedLieAlgebra& g, const SearchOptions& opt, EngelSearch& out) {
  std::size_t d1 = g.rank(), n = g.dim();
  for (std::size_t size = 1; size + 2 <= d1 && !full(out, opt); ++size) {
    std::vector<bool> pick(d1, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      Mat gens;
      for (std::size_t i = 0; i < d1; ++i)
        if (pick[i]) gens.push_back(unit(n, i));
      Subspace J = ideal_generated(g, gens);
      Quotient q = quotient(g, J);
      if (q.algebra.step() != 3 || !q.algebra.is_stratified()) continue;
      EngelSearch sub;
      SearchOptions so = opt;
      so.max_results = opt.max_results == 0 ? 0 : opt.max_results - out.found.size();
      search_step3(q.algebra, so, sub, false);
      for (const auto& f : sub.found) {
        Subspace lifted = q.preimage(f.ideal);
        Recognition rec = recognize_engel(quotient(g, lifted).algebra);
        if (rec.ok()) add_found(out, g, lifted, rec, "V1-reduction/" + f.layer);
        if (full(out, opt)) return;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
}

void search_l3(const GradedLieAlgebra& g, const SearchOptions& opt, EngelSearch& out) {
  std::size_t n = g.dim(), z0 = g.layer_begin(3), d3 = g.layer_dims()[2];
  std::size_t count = opt.max_samples;
  std::vector<std::optional<Probe>> results(count);
  auto work = [&](std::size_t w, std::size_t workers) {
    for (std::size_t i = w; i < count; i += workers) {
      Rng rng = Rng::derive(opt.seed, i);
      Vec mu = zeros(d3);
      while (is_zero(mu))
        for (auto& x : mu) x = rng.uniform(-3, 3);
      Mat ker = kernel(Mat{mu}, d3);
      Mat rows;
      for (const auto& k : ker) {
        Vec v = zeros(n);
        for (std::size_t c = 0; c < d3; ++c) v[z0 + c] = k[c];
        rows.push_back(v);
      }
      results[i] = probe(g, Subspace::span(n, rows));
    }
  };
  std::size_t workers = std::max<std::size_t>(1, std::min(opt.threads, count));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < count && !full(out, opt); ++i) record(out, g, *results[i], "L3");
}

void search_step3(const GradedLieAlgebra& g, const SearchOptions& opt, EngelSearch& out, bool allow_reduction) {
  Recognition rec = recognize_engel(g);
  if (rec.ok()) {
    add_found(out, g, Subspace(g.dim()), rec, "L0");
    if (full(out, opt)) return;
  }
  std::size_t d3 = g.layer_dims()[2];
  if (d3 == 1) {
    record(out, g, probe(g, Subspace(g.dim())), "L1");
    out.exhaustive = true;
    return;
  }
  if (d3 == 2) {
    search_l2(g, opt, out);
    if (full(out, opt)) return;
  }
  if (allow_reduction && opt.v1_reduction) {
    search_reduction(g, opt, out);
    if (full(out, opt)) return;
  }
  search_l3(g, opt, out);
}

}  // namespace

EngelSearch find_engel_quotients(const GradedLieAlgebra& g, const SearchOptions& opt) {
  g.require_stratified("find_engel_quotients");
  EngelSearch out;
  if (g.step() < 3) {
    out.exhaustive = true;
    out.notes.push_back("step < 3: no quotient has step 3");
    return out;
  }
  if (g.step() > 3) {
    Mat rows;
    for (std::size_t i = g.layer_begin(4); i < g.dim(); ++i) rows.push_back(unit(g.dim(), i));
    Quotient q = quotient(g, Subspace::span(g.dim(), rows));
    EngelSearch sub;
    search_step3(q.algebra, opt, sub, true);
    out.exhaustive = sub.exhaustive;
    out.notes = sub.notes;
    out.notes.push_back("searched g / (V4 + ... + Vs)");
    for (const auto& c : sub.examined)
      out.examined.push_back({q.preimage(c.ideal3), q.preimage(c.forced_ideal), c.failure});
    for (const auto& f : sub.found) {
      Subspace lifted = q.preimage(f.ideal);
      Recognition rec = recognize_engel(quotient(g, lifted).algebra);
      if (rec.ok()) add_found(out, g, lifted, rec, f.layer);
    }
    return out;
  }
  search_step3(g, opt, out, true);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Semigenerated: return "SEMIGENERATED";
    case Verdict::NotSemigenerated: return "NOT_SEMIGENERATED";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

std::string to_string(CertKind k) {
  switch (k) {
    case CertKind::None: return "none";
    case CertKind::StepTwo: return "step-two";
    case CertKind::Saturation: return "saturation";
    case CertKind::Diamond: return "diamond";
    case CertKind::EngelQuotient: return "engel-quotient";
    case CertKind::EngelSearch: return "engel-search";
  }
  return "?";
}

namespace {

std::string engel_summary(const GradedLieAlgebra& g, const EngelQuotientCert& c) {
  return "Engel quotient (ideal = " + ideal_text(g, c.ideal) + ", n = " + std::to_string(c.n) + ")";
}

// Positive half-space conclusions available from E.
std::optional<SaturationCert> positive_conclusion(const GradedLieAlgebra& g, const Subspace& E,
                                                  const Vec& lam) {
  SaturationCert c;
  c.lambda = lam;
  std::size_t s = g.step();
  if (s <= 4 && E.contains(layer(g, 3))) {
    c.conclusion = "V3";
    return c;
  }
  if (s <= 4 && E.contains(layer(g, 2))) {
    c.conclusion = "V2";
    return c;
  }
  if (E.contains(derived(g))) {
    c.conclusion = "derived";
    return c;
  }
  std::vector<Mat> candidates{v1_basis(g)};
  Subspace dw = boundary(g, HalfSpace{lam});
  for (std::size_t p = 0; p < lam.size(); ++p)
    if (sgn(lam[p]) != 0) {
      Mat b{unit(g.dim(), p)};
      for (const auto& y : dw.basis()) b.push_back(y);
      candidates.push_back(b);
      break;
    }
  for (const auto& b : candidates) {
    bool ok = true;
    for (const auto& t : diamond_terms(g, b))
      if (!E.contains(t)) {
        ok = false;
        break;
      }
    if (ok) {
      c.conclusion = "diamond-basis";
      c.basis = b;
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace

Decision decide_halfspace(const GradedLieAlgebra& g, const HalfSpace& w, const SaturationConfig& cfg,
                          const SearchOptions& opt) {
  g.require_stratified("decide_halfspace");
  Decision d;
  d.lambda = w.lam;
  EdgeApprox e = saturate_edge(g, w, cfg);
  if (auto c = positive_conclusion(g, e.E, w.lam)) {
    c->trace = e.trace;
    d.verdict = Verdict::Semigenerated;
    d.kind = CertKind::Saturation;
    d.summary = "SEMIGENERATING; certificate: saturation (" + c->conclusion + " in E)";
    d.saturation = std::move(c);
    return d;
  }
  if (g.step() >= 3) {
    SearchOptions all = opt;
    all.max_results = 0;
    EngelSearch s = find_engel_quotients(g, all);
    for (const auto& f : s.found) {
      std::string why;
      if (maps_to_bad(g, f.ideal, w.lam, &why)) {
        EngelQuotientCert c = f;
        c.lambda = w.lam;
        d.verdict = Verdict::NotSemigenerated;
        d.kind = CertKind::EngelQuotient;
        d.summary = "NOT_SEMIGENERATING; certificate: " + engel_summary(g, c);
        d.engel = std::move(c);
        return d;
      }
    }
    d.notes.insert(d.notes.end(), s.notes.begin(), s.notes.end());
  }
  d.summary = "UNKNOWN; E has dimension " + std::to_string(e.E.dim()) + " and no Engel quotient maps W onto a bad half-space";
  return d;
}

Decision decide_semigenerated(const GradedLieAlgebra& g, const SearchOptions& opt,
                              const std::optional<ProductQuotientCert>& diamond_cert) {
  g.require_stratified("decide_semigenerated");
  Decision d;
  if (g.step() <= 2) {
    d.verdict = Verdict::Semigenerated;
    d.kind = CertKind::StepTwo;
    d.summary = "SEMIGENERATED; certificate: step <= 2";
    return d;
  }
  EngelSearch s = find_engel_quotients(g, opt);
  d.notes = s.notes;
  d.exhaustive = s.exhaustive;
  if (!s.found.empty()) {
    d.verdict = Verdict::NotSemigenerated;
    d.kind = CertKind::EngelQuotient;
    d.engel = s.found.front();
    d.summary = "NOT_SEMIGENERATED; certificate: " + engel_summary(g, *d.engel);
    return d;
  }
  DiamondReport dr = check_type_diamond(g, diamond_cert);
  if (dr.answer == Answer::Yes && dr.certificate) {
    d.verdict = Verdict::Semigenerated;
    d.kind = CertKind::Diamond;
    d.diamond = dr.certificate;
    auto chk = check_product_quotient(g, *dr.certificate);
    d.summary = "SEMIGENERATED; certificate: type (diamond) via " + dr.reason + " (" +
                std::to_string(dr.certificate->factors.size()) + " factors, ideal dim " +
                std::to_string(chk.ideal.dim()) + ")";
    return d;
  }
  if (dr.answer == Answer::Yes && dr.star.answer == Answer::Yes) {
    d.verdict = Verdict::Semigenerated;
    d.kind = CertKind::Diamond;
    d.saturation = SaturationCert{{}, {}, "star-basis", dr.star.basis};
    d.summary = "SEMIGENERATED; certificate: type (star) basis";
    return d;
  }
  if (g.step() == 3 && s.exhaustive) {
    d.verdict = Verdict::Semigenerated;
    d.kind = CertKind::EngelSearch;
    d.search = s.examined;
    d.summary = "SEMIGENERATED; certificate: exhaustive Engel-quotient search is empty (" +
                std::to_string(s.examined.size()) + " forced candidate" +
                (s.examined.size() == 1 ? "" : "s") + ")";
    return d;
  }
  d.summary = "UNKNOWN; no Engel quotient found (search " +
              std::string(s.exhaustive ? "exhaustive" : "not exhaustive") + "), type (diamond) " +
              to_string(dr.answer);
  return d;
}

VerifyResult verify_trace(const GradedLieAlgebra& g, const Vec& lambda, const std::vector<TraceStep>& trace,
                          Subspace* final_edge) {
  auto fail = [](std::size_t k, Rule r, const std::string& m) {
    return VerifyResult{false, "trace step " + std::to_string(k + 1) + " (" + to_string(r) + "): " + m};
  };
  const std::size_t n = g.dim();
  Subspace E = boundary(g, HalfSpace{lambda});
  Subspace v1 = layer(g, 1), v2 = layer(g, 2);
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const auto& st = trace[k];
    for (const auto& v : st.inputs)
      if (v.size() != n) return fail(k, st.rule, "input vector has wrong length");
    for (const auto& v : st.added)
      if (v.size() != n) return fail(k, st.rule, "added vector has wrong length");
    switch (st.rule) {
      case Rule::R1: {
        Subspace L = lie_generated(g, E.basis());
        for (const auto& v : st.added)
          if (!L.contains(v)) return fail(k, st.rule, "added vector is not in Lie<E>");
        break;
      }
      case Rule::R2: {
        if (st.inputs.empty()) return fail(k, st.rule, "missing Y");
        const Vec& y = st.inputs[0];
        if (!E.contains(y)) return fail(k, st.rule, "Y is not in E");
        if (st.added.size() + 1 != st.inputs.size()) return fail(k, st.rule, "input/added count mismatch");
        Subspace dom = sum(v1, E);
        for (std::size_t i = 1; i < st.inputs.size(); ++i) {
          const Vec& x = st.inputs[i];
          if (!dom.contains(x)) return fail(k, st.rule, "X is not horizontal");
          if (!E.contains(ad_power(g, y, x, 2))) return fail(k, st.rule, "ad_Y^2 X is not in E");
          if (st.added[i - 1] != g.bracket(x, y)) return fail(k, st.rule, "added vector is not [X,Y]");
        }
        break;
      }
      case Rule::R3: {
        if (st.inputs.size() != 2 || st.added.size() != 1) return fail(k, st.rule, "needs two inputs and one output");
        const Vec &x = st.inputs[0], &y = st.inputs[1];
        if (!v1.contains(x) || !v1.contains(y)) return fail(k, st.rule, "generator is not in V1");
        if (!is_zero(ad_power(g, x, y, 2)) || !is_zero(ad_power(g, y, x, 2)))
          return fail(k, st.rule, "ad_X^2 Y or ad_Y^2 X is nonzero");
        if (st.added[0] != g.bracket(x, y)) return fail(k, st.rule, "added vector is not [X,Y]");
        break;
      }
      case Rule::R4: {
        Subspace c = center(g).center;
        for (const auto& v : st.added)
          if (!v2.contains(v) || !c.contains(v)) return fail(k, st.rule, "added vector is not in V2 cap Z(g)");
        break;
      }
      case Rule::R5: {
        if (g.step() > 4) return fail(k, st.rule, "rule requires step <= 4");
        for (const auto& v : st.inputs)
          if (!v2.contains(v) || !E.contains(v)) return fail(k, st.rule, "input is not in V2 cap E");
        Subspace I = ideal_generated(g, st.inputs);
        for (const auto& v : st.added)
          if (!I.contains(v)) return fail(k, st.rule, "added vector is not in the generated ideal");
        break;
      }
    }
    E = grow(E, st.added);
  }
  if (final_edge) *final_edge = E;
  return {true, ""};
}

VerifyResult verify_certificate(const GradedLieAlgebra& g, const Decision& d) {
  auto fail = [](const std::string& m) { return VerifyResult{false, m}; };
  if (!g.is_stratified()) return fail("algebra is not stratified");
  switch (d.kind) {
    case CertKind::None:
      if (d.verdict != Verdict::Unknown) return fail("definite verdict without a certificate");
      return {true, ""};
    case CertKind::StepTwo:
      if (d.verdict != Verdict::Semigenerated) return fail("step-two certificate with a negative verdict");
      if (g.step() > 2) return fail("algebra has step " + std::to_string(g.step()));
      return {true, ""};
    case CertKind::Saturation: {
      if (d.verdict != Verdict::Semigenerated) return fail("saturation certificate with a non-positive verdict");
      if (!d.saturation) return fail("missing saturation data");
      const auto& c = *d.saturation;
      Subspace E;
      auto r = verify_trace(g, c.lambda, c.trace, &E);
      if (!r.ok) return r;
      if (c.conclusion == "derived") {
        if (!E.contains(derived(g))) return fail("[g,g] is not contained in E");
      } else if (c.conclusion == "V3" || c.conclusion == "V2") {
        if (g.step() > 4) return fail("layer criterion requires step <= 4");
        if (!E.contains(layer(g, c.conclusion == "V3" ? 3 : 2)))
          return fail(c.conclusion + " is not contained in E");
      } else if (c.conclusion == "diamond-basis") {
        if (c.basis.size() != g.rank() || rank(c.basis, g.dim()) != g.rank() ||
            !layer(g, 1).contains(Subspace::span(g.dim(), c.basis)))
          return fail("diamond basis is not a basis of V1");
        for (const auto& t : diamond_terms(g, c.basis))
          if (!E.contains(t)) return fail("a diamond term is not in E");
      } else {
        return fail("unknown conclusion \"" + c.conclusion + "\"");
      }
      return {true, ""};
    }
    case CertKind::Diamond: {
      if (d.verdict != Verdict::Semigenerated) return fail("diamond certificate with a non-positive verdict");
      if (d.diamond) {
        auto chk = check_product_quotient(g, *d.diamond);
        if (!chk.ok) return fail(chk.failure);
        return {true, ""};
      }
      if (d.saturation && d.saturation->conclusion == "star-basis") {
        StarReport r;
        r.answer = Answer::Yes;
        r.basis = d.saturation->basis;
        std::string why;
        if (!verify_star_report(g, r, &why)) return fail(why);
        return {true, ""};
      }
      return fail("missing diamond data");
    }
    case CertKind::EngelQuotient: {
      if (d.verdict != Verdict::NotSemigenerated) return fail("Engel quotient with a non-negative verdict");
      if (!d.engel) return fail("missing Engel quotient data");
      const auto& c = *d.engel;
      if (c.ideal.ambient() != g.dim()) return fail("ideal has the wrong ambient dimension");
      if (!is_hom_ideal(g, c.ideal)) return fail("subspace is not a homogeneous ideal");
      Recognition rec = recognize_engel(quotient(g, c.ideal).algebra);
      if (!rec.ok()) return fail("quotient is not of Engel type: " + to_string(rec.failure));
      if (rec.structure->n != c.n) return fail("quotient is En^" + std::to_string(rec.structure->n));
      std::string why;
      if (!maps_to_bad(g, c.ideal, c.lambda, &why)) return fail(why);
      return {true, ""};
    }
    case CertKind::EngelSearch: {
      if (d.verdict != Verdict::Semigenerated) return fail("search certificate with a non-positive verdict");
      if (g.step() != 3) return fail("search certificate needs step 3");
      if (g.layer_dims()[2] != 1) return fail("search is exhaustive only when dim V3 = 1");
      if (d.search.size() != 1) return fail("expected exactly one forced candidate");
      const auto& c = d.search[0];
      if (!c.ideal3.is_zero() || c.ideal3.ambient() != g.dim()) return fail("candidate must start from 0");
      Subspace f = forced_ideal(g, c.ideal3);
      if (f != c.forced_ideal) return fail("forced ideal does not replay");
      Recognition rec = recognize_engel(quotient(g, f).algebra);
      if (rec.ok()) return fail("forced quotient is of Engel type");
      if (rec.failure != c.failure) return fail("recognizer failure differs: " + to_string(rec.failure));
      return {true, ""};
    }
  }
  return fail("unknown certificate kind");
}

}  // namespace carnot
