#include "troplift/extension.hpp"

#include <stdexcept>

#include "troplift/factor.hpp"

namespace troplift {

std::shared_ptr<const ExtContext> ExtContext::make(const UPoly& minpoly,
                                                   std::string symbol) {
  if (minpoly.degree() < 1)
    throw DomainError(DomainError::Kind::Reducible,
                      "minimal polynomial must have positive degree");
  UPoly m = minpoly.monic();
  if (!is_irreducible(m))
    throw DomainError(DomainError::Kind::Reducible,
                      "minimal polynomial " + to_string(m, symbol) + " is reducible over Q");
  return std::shared_ptr<const ExtContext>(new ExtContext(std::move(m), std::move(symbol)));
}

std::shared_ptr<const ExtContext> ExtContext::trivial() {
  static const auto ctx =
      std::shared_ptr<const ExtContext>(new ExtContext(UPoly::linear(), "a"));
  return ctx;
}

ExtElement::ExtElement(const Rational& q) : rep_(UPoly::constant(q)) {}

ExtElement::ExtElement(const UPoly& rep, ExtContextPtr ctx) : ctx_(std::move(ctx)) {
  rep_ = ctx_ ? ctx_->reduce(rep) : rep;
  if (!ctx_ && rep_.degree() > 0)
    throw std::logic_error("non-constant ExtElement without a context");
}

ExtElement ExtElement::generator(ExtContextPtr ctx) {
  return ExtElement(UPoly::linear(), std::move(ctx));
}

const ExtContextPtr& ExtElement::merge(const ExtElement& o) {
  if (!ctx_) {
    ctx_ = o.ctx_;
  } else if (o.ctx_ && o.ctx_ != ctx_ && !(o.ctx_->minpoly() == ctx_->minpoly())) {
    throw std::logic_error("ExtElement operands from different extensions");
  }
  return ctx_;
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
  merge(o);
  rep_ = rep_ + o.rep_;
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
  merge(o);
  rep_ = rep_ - o.rep_;
  return *this;
}

ExtElement& ExtElement::operator*=(const ExtElement& o) {
  merge(o);
  rep_ = rep_ * o.rep_;
  if (ctx_) rep_ = ctx_->reduce(rep_);
  return *this;
}

ExtElement ExtElement::inverse() const {
  if (is_zero())
    throw DomainError(DomainError::Kind::DivisionByZero, "inverse of zero in extension field");
  if (!ctx_) return ExtElement(Rational(1) / rep_.coeff(0));
  auto eg = extended_gcd(rep_, ctx_->minpoly());
  // m irreducible, so the gcd is 1 and s*rep = 1 mod m.
  return ExtElement(eg.s, ctx_);
}

ExtElement& ExtElement::operator/=(const ExtElement& o) {
  merge(o);
  ExtElement inv = o;
  if (!inv.ctx_) inv.ctx_ = ctx_;
  return *this *= inv.inverse();
}

ExtElement ExtElement::operator-() const {
  ExtElement r = *this;
  r.rep_ = -r.rep_;
  return r;
}

std::string to_string(const ExtElement& e) {
  std::string sym = e.context() ? e.context()->symbol() : "a";
  return to_string(e.representative(), sym);
}

}  // namespace troplift
