#include "troplift/laurent.hpp"

#include <stdexcept>

#include "troplift/format.hpp"

namespace troplift {

Laurent Laurent::monomial(const ExtElement& c, long k) {
  Laurent l;
  l.add_term(k, c);
  return l;
}

void Laurent::add_term(long k, const ExtElement& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

long Laurent::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero Laurent polynomial");
  return terms_.begin()->first;
}

long Laurent::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

ExtElement Laurent::coeff(long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? ExtElement(Rational(0)) : it->second;
}

Laurent Laurent::shifted(long k) const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

Laurent Laurent::rescaled(long k) const {
  if (k < 1) throw std::invalid_argument("rescale factor must be positive");
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * k, c);
  return out;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string Laurent::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_)
    detail::append_term(out, troplift::to_string(c), e == 0 ? std::string() : detail::power(var, e));
  return out;
}

}  // namespace troplift
