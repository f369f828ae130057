#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "troplift/errors.hpp"
#include "troplift/format.hpp"
#include "troplift/rational.hpp"

namespace troplift {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

namespace detail {
// Unqualified call so that is_zero overloads declared later are found by ADL.
template <class K>
bool coeff_is_zero(const K& c) {
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial over a field K, coefficients stored from the
/// constant term upward with trailing zeros trimmed.
template <class K>
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<K> coeffs)
      : coeffs_(std::move(coeffs)) {
    trim();
  }

  static UnivariatePolynomial constant(const K& c) {
    return UnivariatePolynomial(std::vector<K>{c});
  }
  static UnivariatePolynomial monomial(const K& c, std::size_t k) {
    std::vector<K> v(k + 1, K(0));
    v[k] = c;
    return UnivariatePolynomial(std::move(v));
  }
  /// The polynomial x (or x - root when given).
  static UnivariatePolynomial linear(const K& root = K(0)) {
    return UnivariatePolynomial(std::vector<K>{-root, K(1)});
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<K>& coeffs() const { return coeffs_; }
  K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }
  const K& lead() const { return coeffs_.back(); }

  UnivariatePolynomial monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / lead();
    std::vector<K> v(coeffs_);
    for (auto& c : v) c *= inv;
    return UnivariatePolynomial(std::move(v));
  }

  UnivariatePolynomial derivative() const {
    std::vector<K> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      v.push_back(coeffs_[i] * K(static_cast<long>(i)));
    return UnivariatePolynomial(std::move(v));
  }

  template <class V>
  V eval(const V& x) const {
    V acc = V(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + V(*it);
    return acc;
  }

  UnivariatePolynomial operator-() const {
    std::vector<K> v(coeffs_);
    for (auto& c : v) c = -c;
    return UnivariatePolynomial(std::move(v));
  }

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b) {
    std::vector<K> v(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return UnivariatePolynomial(std::move(v));
  }
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b) {
    return a + (-b);
  }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> v(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePolynomial(std::move(v));
  }
  friend UnivariatePolynomial operator*(const K& c, const UnivariatePolynomial& a) {
    std::vector<K> v(a.coeffs_);
    for (auto& x : v) x *= c;
    return UnivariatePolynomial(std::move(v));
  }
  friend bool operator==(const UnivariatePolynomial& a,
                         const UnivariatePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Euclidean division; throws DomainError on a zero divisor.
  static std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(
      const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (b.is_zero())
      throw DomainError(DomainError::Kind::DivisionByZero,
                        "polynomial division by zero");
    if (a.degree() < b.degree()) return {UnivariatePolynomial(), a};
    std::vector<K> r(a.coeffs_);
    std::vector<K> q(a.coeffs_.size() - b.coeffs_.size() + 1, K(0));
    K inv = K(1) / b.lead();
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
      K c = r[k + db] * inv;
      q[k] = c;
      if (detail::coeff_is_zero(c)) continue;
      for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * b.coeffs_[j];
    }
    r.resize(db);
    return {UnivariatePolynomial(std::move(q)), UnivariatePolynomial(std::move(r))};
  }

  friend UnivariatePolynomial operator%(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b) {
    return divmod(a, b).second;
  }
  friend UnivariatePolynomial operator/(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b) {
    return divmod(a, b).first;
  }

  /// Printed from the highest degree down, e.g. "x^2 - 2".
  template <class Printer>
  std::string to_string(const std::string& var, Printer print_coeff) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (detail::coeff_is_zero(coeffs_[i])) continue;
      detail::append_term(out, print_coeff(coeffs_[i]),
                          i == 0 ? std::string() : detail::power(var, static_cast<long>(i)));
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
};

/// Monic gcd (zero only when both inputs are zero).
template <class K>
UnivariatePolynomial<K> gcd(UnivariatePolynomial<K> a, UnivariatePolynomial<K> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class K>
struct ExtendedGcd {
  UnivariatePolynomial<K> g;  // monic
  UnivariatePolynomial<K> s;
  UnivariatePolynomial<K> t;  // s*a + t*b = g
};

template <class K>
ExtendedGcd<K> extended_gcd(const UnivariatePolynomial<K>& a,
                            const UnivariatePolynomial<K>& b) {
  using P = UnivariatePolynomial<K>;
  P r0 = a, r1 = b;
  P s0 = P::constant(K(1)), s1;
  P t0, t1 = P::constant(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = P::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    P s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    P t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = K(1) / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

using UPoly = UnivariatePolynomial<Rational>;

inline std::string to_string(const UPoly& p, const std::string& var = "x") {
  return p.to_string(var, [](const Rational& q) { return q.get_str(); });
}

}  // namespace troplift
