#include "troplift/ratfunc.hpp"

namespace troplift {

RatFunc::RatFunc(UPoly num, UPoly den) {
  if (den.is_zero())
    throw DomainError(DomainError::Kind::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly::constant(Rational(1));
    return;
  }
  UPoly g = gcd(num, den);
  num = num / g;
  den = den / g;
  Rational lc = den.lead();
  num_ = Rational(1) / lc * num;
  den_ = den.monic();
}

RatFunc RatFunc::t_power(unsigned k) {
  return RatFunc(UPoly::monomial(Rational(1), k), UPoly::constant(Rational(1)), Canonical{});
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    *this = RatFunc(num_ + o.num_, den_);
  } else {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  *this = RatFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DomainError(DomainError::Kind::DivisionByZero, "division by zero rational function");
  *this = RatFunc(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::string to_string(const RatFunc& r) {
  std::string n = to_string(r.numerator(), "t");
  if (r.denominator().degree() == 0) return n;
  return "(" + n + ")/(" + to_string(r.denominator(), "t") + ")";
}

}  // namespace troplift
