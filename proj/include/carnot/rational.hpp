#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace carnot {

using Rational = mpq_class;
using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
// Accepts -?[0-9]+(/[0-9]+)? with a nonzero denominator; result is reduced.
Rational parse_rational(const std::string& s);

std::string to_string(const Vec& v);

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
Vec neg(const Vec& v);
// y += c * x
void axpy(Vec& y, const Rational& c, const Vec& x);
Rational dot(const Vec& a, const Vec& b);

}  // namespace carnot
