#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "troplift/monomial.hpp"
#include "troplift/rational.hpp"
#include "troplift/upoly.hpp"

namespace troplift {

template <class K>
struct Term {
  Monomial mono;
  K coeff;
};

/// Sparse polynomial over K in the slots t, x_1..x_n (and optionally the
/// extension symbol). Terms are kept in descending degrevlex order with no
/// zero coefficients and no repeated monomials, so equality is structural.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nslots) : nslots_(nslots) {}

  /// Builds from arbitrary terms: sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(std::size_t nslots, std::vector<Term<K>> terms) {
    Polynomial p(nslots);
    std::sort(terms.begin(), terms.end(), [](const Term<K>& a, const Term<K>& b) {
      return degrevlex_compare(a.mono, b.mono) == std::strong_ordering::greater;
    });
    for (auto& t : terms) {
      if (t.mono.size() != nslots) throw std::invalid_argument("monomial size mismatch");
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && detail::coeff_is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && detail::coeff_is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    return p;
  }

  /// Terms already strictly descending in degrevlex with nonzero coefficients.
  static Polynomial from_sorted(std::size_t nslots, std::vector<Term<K>> terms) {
    Polynomial p(nslots);
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial constant(std::size_t nslots, const K& c) {
    return term(Monomial(nslots), c);
  }
  static Polynomial term(Monomial m, const K& c) {
    Polynomial p(m.size());
    if (!detail::coeff_is_zero(c)) p.terms_.push_back({std::move(m), c});
    return p;
  }
  static Polynomial variable(std::size_t nslots, std::size_t slot) {
    Monomial m(nslots);
    m[slot] = 1;
    return term(std::move(m), K(1));
  }

  std::size_t nslots() const { return nslots_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  long total_degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  int degree_in(std::size_t slot) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[slot]);
    return d;
  }
  int min_degree_in(std::size_t slot) const {
    int d = terms_.empty() ? 0 : terms_.front().mono[slot];
    for (const auto& t : terms_) d = std::min(d, t.mono[slot]);
    return d;
  }
  bool involves(std::size_t slot) const {
    for (const auto& t : terms_)
      if (t.mono[slot]) return true;
    return false;
  }
  K constant_coeff() const {
    for (const auto& t : terms_)
      if (t.mono.is_one()) return t.coeff;
    return K(0);
  }
  K coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return K(0);
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, true);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Term<K>> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, K(s.coeff * t.coeff)});
    return from_terms(std::max(a.nslots_, b.nslots_), std::move(out));
  }
  friend Polynomial operator*(const K& c, const Polynomial& a) {
    if (detail::coeff_is_zero(c)) return Polynomial(a.nslots_);
    Polynomial r = a;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  Polynomial mul_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }
  Polynomial pow(unsigned k) const {
    Polynomial r = constant(nslots_, K(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono)) return false;
      if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
  }

  /// Scales so the first (degrevlex-leading) term has coefficient 1.
  Polynomial monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / terms_.front().coeff;
    return inv * *this;
  }

  /// Applies `f` to every coefficient, producing a polynomial over L.
  template <class L, class F>
  Polynomial<L> map_coeffs(F f) const {
    std::vector<Term<L>> out;
    for (const auto& t : terms_) out.push_back({t.mono, L(f(t.coeff))});
    return Polynomial<L>::from_terms(nslots_, std::move(out));
  }

  /// Rebuilds with every monomial transformed by `f` (terms re-sorted).
  template <class F>
  Polynomial map_monomials(std::size_t new_nslots, F f) const {
    std::vector<Term<K>> out;
    for (const auto& t : terms_) out.push_back({f(t.mono), t.coeff});
    return from_terms(new_nslots, std::move(out));
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool negate_b) {
    Polynomial r(std::max(a.nslots_, b.nslots_));
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      std::strong_ordering c = std::strong_ordering::equal;
      if (i == a.size()) c = std::strong_ordering::less;
      else if (j == b.size()) c = std::strong_ordering::greater;
      else c = degrevlex_compare(a.terms_[i].mono, b.terms_[j].mono);
      if (c == std::strong_ordering::greater) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c == std::strong_ordering::less) {
        r.terms_.push_back(b.terms_[j++]);
        if (negate_b) r.terms_.back().coeff = -r.terms_.back().coeff;
      } else {
        K s = negate_b ? K(a.terms_[i].coeff - b.terms_[j].coeff)
                       : K(a.terms_[i].coeff + b.terms_[j].coeff);
        if (!detail::coeff_is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t nslots_ = 0;
  std::vector<Term<K>> terms_;
};

using QPoly = Polynomial<Rational>;

}  // namespace troplift
