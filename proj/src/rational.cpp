#include "carnot/rational.hpp"

#include "carnot/errors.hpp"

namespace carnot {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  std::size_t slash = s.find('/');
  std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!all_digits(s, start, num_end) ||
      (slash != std::string::npos && !all_digits(s, slash + 1, s.size())))
    throw ParseError("malformed rational \"" + s + "\"");
  mpz_class num(s.substr(start, num_end - start), 10);
  mpz_class den(1);
  if (slash != std::string::npos) {
    den = mpz_class(s.substr(slash + 1), 10);
    if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
  }
  Rational q(num, den);
  q.canonicalize();
  if (start == 1) q = -q;
  return q;
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v = zeros(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("sub: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vec neg(const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

void axpy(Vec& y, const Rational& c, const Vec& x) {
  if (y.size() != x.size()) throw DimensionMismatch("axpy: length mismatch");
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += c * x[i];
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

}  // namespace carnot
