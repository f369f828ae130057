#pragma once

#include <string>

#include "troplift/upoly.hpp"

namespace troplift {

/// Rational function num/den in t over Q, den monic and coprime to num.
class RatFunc {
 public:
  RatFunc() : den_(UPoly::constant(Rational(1))) {}
  RatFunc(const Rational& c)  // NOLINT(google-explicit-constructor)
      : num_(UPoly::constant(c)), den_(UPoly::constant(Rational(1))) {}
  RatFunc(UPoly num, UPoly den);

  static RatFunc t_power(unsigned k);

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  RatFunc(UPoly num, UPoly den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}

  UPoly num_;
  UPoly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }

std::string to_string(const RatFunc& r);

}  // namespace troplift
