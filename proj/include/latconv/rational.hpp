#pragma once

// Exact rational scalars and dense rational vectors.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace latconv {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using Vec = std::vector<Rational>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& v);
Vec negate(const Vec& v);
Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

/// Throws DimensionError unless both vectors have dimension n.
void require_dim(const Vec& v, std::size_t n, std::string_view what);

/// Positive multiple of v with coprime integer coordinates; zero stays zero.
Vec primitive(const Vec& v);

/// Like primitive(), additionally oriented so the first nonzero entry is positive.
Vec primitive_line(const Vec& v);

/// True iff a = t*b for some t > 0 (both nonzero).
bool same_direction(const Vec& a, const Vec& b);

/// If a = t*b with t >= 0, returns t (b nonzero).
bool positive_multiple(const Vec& a, const Vec& b, Rational& t);

int sign(const Rational& r);

/// Parses "p", "p/q" or "-p/q".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Vec& v);

/// Lexicographic order, used to make outputs canonical.
bool lex_less(const Vec& a, const Vec& b);

}  // namespace latconv
