#include "carnot/poly.hpp"

#include <algorithm>

#include "carnot/errors.hpp"

namespace carnot {

UPoly::UPoly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(Vec{c}); }

UPoly UPoly::monomial(const Rational& c, std::size_t deg) {
  Vec v = zeros(deg + 1);
  v[deg] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& t) const {
  Rational r(0);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  Vec d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::integral() const {
  if (c_.empty()) return UPoly();
  Vec d = zeros(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i] / static_cast<long>(i + 1);
  return UPoly(std::move(d));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  Vec r = zeros(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + Rational(-1) * b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  Vec r = zeros(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

UPoly operator*(const Rational& c, const UPoly& a) {
  Vec r = a.c_;
  for (auto& x : r) x *= c;
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  UPoly q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rational f = r.lead() / b.lead();
    auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    UPoly t = UPoly::monomial(f, shift);
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return Rational(1) / x.lead() * x;
}

UPoly squarefree(const UPoly& p) {
  if (p.degree() <= 0) return p;
  UPoly g = gcd(p, p.derivative());
  return divmod(p, g).first;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }
  return seq;
}

namespace {

std::size_t sign_changes(const std::vector<UPoly>& seq, const Rational& t) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sgn(p(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Cauchy bound: every real root has |t| < bound.
Rational root_bound(const UPoly& p) {
  Rational m(0);
  for (long i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(static_cast<std::size_t>(i)) / p.lead());
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace

std::size_t count_real_roots(const UPoly& p, const Rational& lo, const Rational& hi) {
  if (p.degree() <= 0) return 0;
  auto seq = sturm_sequence(squarefree(p));
  std::size_t a = sign_changes(seq, lo), b = sign_changes(seq, hi);
  return a > b ? a - b : 0;
}

std::size_t count_real_roots(const UPoly& p) {
  if (p.degree() <= 0) return 0;
  Rational b = root_bound(p);
  return count_real_roots(p, -b, b);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& p) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() <= 0) return out;
  UPoly sf = squarefree(p);
  auto seq = sturm_sequence(sf);
  Rational b = root_bound(p);
  std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    std::size_t a = sign_changes(seq, lo), c = sign_changes(seq, hi);
    std::size_t n = a > c ? a - c : 0;
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  // Clear denominators to get an integer polynomial.
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& c : p.coeffs()) ic.push_back(mpz_class(c * l));
  std::size_t low = 0;
  while (ic[low] == 0) ++low;
  if (low > 0) out.push_back(Rational(0));
  auto num = divisors(ic[low]);
  auto den = divisors(ic.back());
  for (const auto& a : num)
    for (const auto& b : den)
      for (int s : {1, -1}) {
        Rational r(s * a, b);
        r.canonicalize();
        if (sgn(p(r)) == 0 && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
  std::sort(out.begin(), out.end());
  return out;
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exps(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  MPoly p(nvars);
  Exps e(nvars, 0);
  e[i] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void MPoly::add_term(const Exps& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly d(n_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exps f = e;
    --f[var];
    d.add_term(f, c * static_cast<long>(e[var]));
  }
  return d;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("polynomial variable count");
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + Rational(-1) * b; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("polynomial variable count");
  MPoly r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exps e(a.n_);
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly operator*(const Rational& c, const MPoly& a) {
  MPoly r(a.n_);
  for (const auto& [e, x] : a.terms_) r.add_term(e, c * x);
  return r;
}

VectorField lie_bracket(const VectorField& a, const VectorField& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector field dimension");
  std::size_t n = a.size();
  VectorField out(n, MPoly(n));
  for (std::size_t i = 0; i < n; ++i) {
    MPoly s(n);
    for (std::size_t j = 0; j < n; ++j) {
      s = s + a[j] * b[i].derivative(j);
      s = s - b[j] * a[i].derivative(j);
    }
    out[i] = s;
  }
  return out;
}

}  // namespace carnot
