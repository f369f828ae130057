#pragma once

#include <memory>
#include <string>
#include <vector>

#include "troplift/upoly.hpp"

namespace troplift {

/// A simple algebraic extension Q[a]/<m> with m monic irreducible.
/// Degree 1 (m = a) is the trivial context meaning "no extension".
class ExtContext {
 public:
  /// Makes m monic and certifies irreducibility; throws DomainError
  /// (Kind::Reducible) otherwise.
  static std::shared_ptr<const ExtContext> make(const UPoly& minpoly,
                                                std::string symbol = "a");
  static std::shared_ptr<const ExtContext> trivial();

  const UPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  bool is_trivial() const { return degree() == 1; }
  const std::string& symbol() const { return symbol_; }

  UPoly reduce(const UPoly& p) const { return p % minpoly_; }

 private:
  ExtContext(UPoly m, std::string symbol)
      : minpoly_(std::move(m)), symbol_(std::move(symbol)) {}

  UPoly minpoly_;
  std::string symbol_;
};

using ExtContextPtr = std::shared_ptr<const ExtContext>;

/// Element of Q[a]/<m>. A null context denotes a plain rational constant
/// that adopts the context of whatever it is combined with.
class ExtElement {
 public:
  ExtElement() = default;
  ExtElement(const Rational& q);  // NOLINT(google-explicit-constructor)
  ExtElement(const UPoly& rep, ExtContextPtr ctx);

  static ExtElement generator(ExtContextPtr ctx);

  const ExtContextPtr& context() const { return ctx_; }
  /// Coefficients of the reduced representative, constant term first.
  const std::vector<Rational>& coeffs() const { return rep_.coeffs(); }
  const UPoly& representative() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rational rational_value() const { return rep_.coeff(0); }

  ExtElement inverse() const;

  ExtElement& operator+=(const ExtElement& o);
  ExtElement& operator-=(const ExtElement& o);
  ExtElement& operator*=(const ExtElement& o);
  ExtElement& operator/=(const ExtElement& o);

  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(ExtElement a, const ExtElement& b) { return a *= b; }
  friend ExtElement operator/(ExtElement a, const ExtElement& b) { return a /= b; }
  ExtElement operator-() const;

  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.rep_ == b.rep_;
  }

 private:
  const ExtContextPtr& merge(const ExtElement& o);

  UPoly rep_;
  ExtContextPtr ctx_;
};

inline bool is_zero(const ExtElement& e) { return e.is_zero(); }

/// "1/2*a + 3" style rendering in the context's symbol.
std::string to_string(const ExtElement& e);

}  // namespace troplift
