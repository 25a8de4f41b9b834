#include "latconv/rational.hpp"

#include <algorithm>
#include <sstream>

namespace latconv {

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw DimensionError("dot: dimension mismatch " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rational& s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Vec negate(const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit(std::size_t n, std::size_t i) {
  Vec r = zeros(n);
  r.at(i) = 1;
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

void require_dim(const Vec& v, std::size_t n, std::string_view what) {
  if (v.size() != n) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(n) + ", got " +
                         std::to_string(v.size()));
  }
}

int sign(const Rational& r) { return r.sign(); }

Vec primitive(const Vec& v) {
  if (is_zero(v)) return v;
  Integer den_lcm = 1;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    den_lcm = boost::multiprecision::lcm(den_lcm, Integer(boost::multiprecision::denominator(x)));
  }
  std::vector<Integer> ints;
  ints.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Rational scaled = x * Rational(den_lcm);
    Integer n = boost::multiprecision::numerator(scaled);
    ints.push_back(n);
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(n));
  }
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / g);
  return r;
}

Vec primitive_line(const Vec& v) {
  Vec r = primitive(v);
  for (const auto& x : r) {
    if (x.is_zero()) continue;
    if (x.sign() < 0) r = negate(r);
    break;
  }
  return r;
}

bool positive_multiple(const Vec& a, const Vec& b, Rational& t) {
  if (a.size() != b.size()) return false;
  bool have = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i].is_zero()) {
      if (!a[i].is_zero()) return false;
      continue;
    }
    Rational q = a[i] / b[i];
    if (!have) {
      t = q;
      have = true;
    } else if (q != t) {
      return false;
    }
  }
  if (!have) return false;
  return t.sign() >= 0;
}

bool same_direction(const Vec& a, const Vec& b) {
  Rational t;
  return !is_zero(a) && positive_multiple(a, b, t) && t.sign() > 0;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s.c_str()));
    Integer num(s.substr(0, slash).c_str());
    Integer den(s.substr(slash + 1).c_str());
    if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].str();
  }
  os << ')';
  return os.str();
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace latconv
