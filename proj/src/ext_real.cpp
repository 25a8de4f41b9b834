#include "latconv/ext_real.hpp"

#include <stdexcept>

namespace latconv {

const Rational& ExtReal::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("ExtReal::value on infinite value " + str());
  return value_;
}

ExtReal ExtReal::operator-() const {
  switch (kind_) {
    case Kind::NegInf:
      return pos_inf();
    case Kind::PosInf:
      return neg_inf();
    case Kind::Finite:
      break;
  }
  return ExtReal(Rational(-value_));
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw std::logic_error("ExtReal: (+inf) + (-inf) is undefined");
  }
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtReal::pos_inf();
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtReal::neg_inf();
  return ExtReal(Rational(a.value_ + b.value_));
}

ExtReal ExtReal::scaled(const Rational& positive) const {
  if (positive.sign() <= 0) throw std::invalid_argument("ExtReal::scaled needs a positive factor");
  if (!is_finite()) return *this;
  return ExtReal(Rational(value_ * positive));
}

bool operator==(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  auto rank = [](ExtReal::Kind k) {
    switch (k) {
      case ExtReal::Kind::NegInf:
        return 0;
      case ExtReal::Kind::Finite:
        return 1;
      case ExtReal::Kind::PosInf:
        return 2;
    }
    return 1;
  };
  if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
  if (!a.is_finite()) return std::strong_ordering::equal;
  int c = a.value_.compare(b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtReal::str() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "+inf";
    case Kind::Finite:
      break;
  }
  return value_.str();
}

ExtReal ExtReal::parse(const std::string& text) {
  if (text == "+inf" || text == "inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtReal(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const ExtReal& x) { return os << x.str(); }

}  // namespace latconv
