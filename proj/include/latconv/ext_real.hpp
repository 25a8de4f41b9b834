#pragma once

#include <compare>
#include <optional>
#include <string>

#include "latconv/rational.hpp"

namespace latconv {

/// An element of [-inf, +inf] with exact rational finite part.
class ExtReal {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtReal() : kind_(Kind::Finite), value_(0) {}
  ExtReal(const Rational& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT(implicit)
  ExtReal(long v) : kind_(Kind::Finite), value_(v) {}             // NOLINT(implicit)
  ExtReal(int v) : kind_(Kind::Finite), value_(v) {}              // NOLINT(implicit)

  static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
  static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Finite part; throws std::logic_error on an infinite value.
  const Rational& value() const;

  ExtReal operator-() const;

  /// Throws std::logic_error on (+inf) + (-inf).
  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
  friend ExtReal operator-(const ExtReal& a, const ExtReal& b) { return a + (-b); }

  /// Multiplication by a strictly positive rational.
  ExtReal scaled(const Rational& positive) const;

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

  /// "+inf", "-inf", or the rational in p/q form.
  std::string str() const;
  static ExtReal parse(const std::string& text);

 private:
  explicit ExtReal(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Rational value_;
};

inline const ExtReal& ext_max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }
inline const ExtReal& ext_min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const ExtReal& x);

}  // namespace latconv
