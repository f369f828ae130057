#include "troplift/field.hpp"

#include <algorithm>

namespace troplift {

bool canonical_less(const Rational& a, const Rational& b) { return a < b; }

bool canonical_less(const ExtElement& a, const ExtElement& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::size_t n = std::max(ca.size(), cb.size());
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = i < ca.size() ? ca[i] : Rational(0);
    Rational y = i < cb.size() ? cb[i] : Rational(0);
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace troplift
