#pragma once

#include <initializer_list>
#include <vector>

#include "latconv/rational.hpp"

namespace th {

inline latconv::Rational q(long p, long d = 1) { return latconv::Rational(p, d); }

inline latconv::Vec v(std::initializer_list<long> xs) {
  latconv::Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline latconv::Vec vq(std::initializer_list<latconv::Rational> xs) { return latconv::Vec(xs); }

}  // namespace th
