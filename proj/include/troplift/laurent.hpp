#pragma once

#include <map>
#include <string>

#include "troplift/extension.hpp"

namespace troplift {

/// Laurent polynomial sum c_k t^k with coefficients in Q or Q[a]/m.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(const ExtElement& c, long k);
  static Laurent constant(const ExtElement& c) { return monomial(c, 0); }

  const std::map<long, ExtElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Lowest exponent; the polynomial must be nonzero.
  long min_exp() const;
  long max_exp() const;
  ExtElement coeff(long k) const;

  /// Multiplies by t^k.
  Laurent shifted(long k) const;
  /// Substitutes t -> t^k (k >= 1).
  Laurent rescaled(long k) const;

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  /// Ascending powers, e.g. "t^2 - 2*t^4 + (a + 1)*t^5".
  std::string to_string(const std::string& var = "t") const;

 private:
  void add_term(long k, const ExtElement& c);

  std::map<long, ExtElement> terms_;
};

}  // namespace troplift
