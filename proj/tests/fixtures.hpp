#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "troplift/parse.hpp"
#include "troplift/ring.hpp"
#include "troplift/stdbasis.hpp"

namespace troplift::testing {

inline Ideal ideal(std::vector<std::string> names, std::vector<std::string> gens) {
  Ideal I{RingCtx{std::move(names), 1, nullptr}, {}};
  for (const auto& g : gens) I.gens.push_back(parse_polynomial(g, I.ctx.names));
  return I;
}

inline QPoly poly(const std::string& text, const std::vector<std::string>& names) {
  return parse_polynomial(text, names);
}

inline WeightVector weight(const std::string& text) { return parse_weight(text); }

inline std::string str(const QPoly& p, const RingCtx& ctx) { return to_string(p, ctx.slot_names()); }

inline std::vector<std::string> strs(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.gens) out.push_back(str(g, I.ctx));
  return out;
}

// Zero-dimensional ideal of L[x, y] whose solution has valuation (1, 3/2).
inline Ideal worked_example() {
  return ideal({"x", "y"}, {"y^2 + 4*t^2*y - t^3 + 2*t^4 - t^5",
                            "(1 + t)*x - y - t - 3*t^2",
                            "x*y + (-t + t^2)*x + t^2 - t^4",
                            "x^2 - 2*t*x + t^2 - t^3"});
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  Rational rational(long range = 9, long den = 4) {
    return make_rational(integer(-range, range), integer(1, den));
  }
  Rational nonzero_rational(long range = 9, long den = 4) {
    Rational q;
    do q = rational(range, den);
    while (q == 0);
    return q;
  }
  UPoly upoly(int degree, long range = 9) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.push_back(make_rational(integer(-range, range)));
    c.push_back(make_rational(integer(1, range)) * (coin() ? 1 : -1));
    return UPoly(std::move(c));
  }
  // Random polynomial with `terms` terms over the given slots.
  QPoly poly(std::size_t nslots, int terms, int max_exp, long range = 5) {
    std::vector<Term<Rational>> out;
    for (int k = 0; k < terms; ++k) {
      Monomial m(nslots);
      for (std::size_t s = 0; s < nslots; ++s) m[s] = static_cast<int>(integer(0, max_exp));
      out.push_back({m, make_rational(integer(1, range)) * (coin() ? 1 : -1)});
    }
    return QPoly::from_terms(nslots, std::move(out));
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline WeightVector random_weight(Random& r, std::size_t n, long range = 2) {
  WeightVector w;
  for (std::size_t i = 0; i < n; ++i) w.entries.push_back(make_rational(r.integer(-range, range)));
  return w;
}

// Oracle: does some monomial of degree <= max_degree in the non-t slots lie in
// the ideal? Membership by normal form against a degrevlex basis.
inline bool contains_monomial_up_to(const Ideal& I, int max_degree) {
  const auto gens = I.with_minpoly();
  if (gens.empty()) return false;
  const std::size_t n = I.ctx.nslots();
  auto gb = standard_basis(std::span<const QPoly>(gens), MonomialOrder::degrevlex());
  std::span<const QPoly> basis(gb.generators);
  Monomial m(n);
  while (true) {
    QPoly mono = QPoly::from_terms(n, {{m, Rational(1)}});
    if (weak_normal_form(mono, basis, MonomialOrder::degrevlex()).nf.is_zero()) return true;
    std::size_t s = 1;
    for (; s < n; ++s) {
      m[s] += 1;
      if (m.degree() <= max_degree) break;
      m[s] = 0;
    }
    if (s == n) return false;
  }
}

}  // namespace troplift::testing

namespace troplift {

// gtest printer; slots are shown as t, x1, x2, ...
template <class K>
void PrintTo(const Polynomial<K>& p, std::ostream* os) {
  std::vector<std::string> names = {"t"};
  for (std::size_t i = 1; i < p.nslots(); ++i) names.push_back("x" + std::to_string(i));
  *os << to_string(p, names);
}

}  // namespace troplift
