#include "troplift/ring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "troplift/errors.hpp"
#include "troplift/stdbasis.hpp"

namespace troplift {

std::vector<std::string> RingCtx::slot_names() const {
  std::vector<std::string> out{"t"};
  out.insert(out.end(), names.begin(), names.end());
  if (embeds_ext()) out.push_back(ext->symbol());
  return out;
}

std::vector<QPoly> Ideal::with_minpoly() const {
  std::vector<QPoly> out = gens;
  if (ctx.embeds_ext()) out.push_back(minpoly_generator(ctx));
  return out;
}

WeightVector scaled(const WeightVector& w, const Rational& factor) {
  WeightVector out = w;
  for (auto& e : out.entries) e *= factor;
  return out;
}

Rational weighted_degree(const Monomial& m, const WeightVector& omega, long N) {
  Rational d = make_rational(-m[0], N);
  for (std::size_t i = 0; i < omega.size() && i + 1 < m.size(); ++i) d += omega[i] * m[i + 1];
  return d;
}

QPoly minpoly_generator(const RingCtx& ctx) {
  if (!ctx.embeds_ext()) throw std::logic_error("ring has no embedded extension");
  std::vector<Term<Rational>> terms;
  const auto& m = ctx.ext->minpoly();
  for (int k = 0; k <= m.degree(); ++k) {
    if (is_zero(m.coeff(k))) continue;
    Monomial mono(ctx.nslots());
    mono[ctx.ext_slot()] = k;
    terms.push_back({mono, m.coeff(k)});
  }
  return QPoly::from_terms(ctx.nslots(), std::move(terms));
}

QPoly substitute_t_power(const QPoly& f, long k) {
  if (k == 1) return f;
  return f.map_monomials(f.nslots(), [k](Monomial m) {
    m[0] = static_cast<int>(m[0] * k);
    return m;
  });
}

PsiClear psi_clear(std::span<const QPoly> gens, const WeightVector& omega) {
  PsiClear out;
  out.N = to_long(Rational(common_denominator(omega.entries)));
  for (const auto& g : gens) out.gens.push_back(substitute_t_power(g, out.N));
  for (const auto& w : omega.entries) out.omega.push_back(to_long(w * out.N));
  return out;
}

QPoly normalize_t(const QPoly& f) {
  if (f.is_zero()) return f;
  int shift = f.min_degree_in(0);
  if (shift == 0) return f;
  return f.map_monomials(f.nslots(), [shift](Monomial m) {
    m[0] -= shift;
    return m;
  });
}

namespace {

// Applies t^(sum_i shift_i * beta_i) to every term, then normalizes.
QPoly shift_t(const QPoly& f, std::span<const long> shift) {
  if (f.is_zero()) return f;
  std::vector<long> exps;
  long lo = std::numeric_limits<long>::max();
  for (const auto& term : f.terms()) {
    long e = term.mono[0];
    for (std::size_t i = 0; i < shift.size(); ++i) e += shift[i] * term.mono[i + 1];
    exps.push_back(e);
    lo = std::min(lo, e);
  }
  std::vector<Term<Rational>> out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    Monomial m = f.terms()[k].mono;
    m[0] = static_cast<int>(exps[k] - lo);
    out.push_back({m, f.terms()[k].coeff});
  }
  return QPoly::from_terms(f.nslots(), std::move(out));
}

}  // namespace

std::vector<QPoly> phi(std::span<const QPoly> gens, std::span<const long> omega) {
  std::vector<long> shift;
  for (long w : omega) shift.push_back(-w);
  std::vector<QPoly> out;
  for (const auto& g : gens) out.push_back(shift_t(g, shift));
  return out;
}

QPoly embed_element(const ExtElement& e, const RingCtx& ctx) {
  const std::size_t n = ctx.nslots();
  if (e.is_rational()) return QPoly::constant(n, e.rational_value());
  if (!ctx.embeds_ext() || !(ctx.ext->minpoly() == e.context()->minpoly()))
    throw std::logic_error("extension element outside the ring's extension");
  std::vector<Term<Rational>> terms;
  const auto& c = e.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (is_zero(c[k])) continue;
    Monomial m(n);
    m[ctx.ext_slot()] = static_cast<int>(k);
    terms.push_back({m, c[k]});
  }
  return QPoly::from_terms(n, std::move(terms));
}

QPoly reduce_ext(const QPoly& f, const RingCtx& ctx) {
  if (!ctx.embeds_ext()) return f;
  const std::size_t s = ctx.ext_slot();
  const int d = ctx.ext->degree();
  bool needed = false;
  for (const auto& term : f.terms())
    if (term.mono[s] >= d) needed = true;
  if (!needed) return f;
  std::map<std::vector<int>, UPoly> grouped;
  for (const auto& term : f.terms()) {
    Monomial rest = term.mono;
    int k = rest[s];
    rest[s] = 0;
    grouped[rest.exps] = grouped[rest.exps] + UPoly::monomial(term.coeff, k);
  }
  std::vector<Term<Rational>> out;
  for (auto& [rest, poly] : grouped) {
    UPoly r = ctx.ext->reduce(poly);
    for (int k = 0; k <= r.degree(); ++k) {
      if (is_zero(r.coeff(k))) continue;
      Monomial m(rest);
      m[s] = k;
      out.push_back({m, r.coeff(k)});
    }
  }
  return QPoly::from_terms(f.nslots(), std::move(out));
}

std::vector<QPoly> gamma(std::span<const QPoly> gens, std::span<const long> omega,
                         std::span<const ExtElement> u, const RingCtx& ctx) {
  const std::size_t n = ctx.nslots();
  if (omega.size() != ctx.nvars() || u.size() != ctx.nvars())
    throw std::invalid_argument("gamma: dimension mismatch");
  for (long w : omega)
    if (w > 0) throw DomainError("gamma requires a nonpositive weight vector");

  // Image of each variable: t^(-omega_i) (u_i + x_i).
  std::vector<QPoly> image;
  for (std::size_t i = 0; i < ctx.nvars(); ++i) {
    Monomial tp(n);
    tp[0] = static_cast<int>(-omega[i]);
    QPoly base = embed_element(u[i], ctx) + QPoly::variable(n, i + 1);
    image.push_back(base.mul_monomial(tp));
  }
  std::vector<QPoly> out;
  for (const auto& g : gens) {
    std::vector<std::vector<QPoly>> powers(ctx.nvars());
    auto power_of = [&](std::size_t i, int e) -> const QPoly& {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(QPoly::constant(n, Rational(1)));
      while (static_cast<int>(cache.size()) <= e)
        cache.push_back(reduce_ext(cache.back() * image[i], ctx));
      return cache[e];
    };
    QPoly acc(n);
    for (const auto& term : g.terms()) {
      Monomial rest(n);
      rest[0] = term.mono[0];
      if (ctx.embeds_ext()) rest[ctx.ext_slot()] = term.mono[ctx.ext_slot()];
      QPoly prod = QPoly::term(rest, term.coeff);
      for (std::size_t i = 0; i < ctx.nvars(); ++i)
        if (term.mono[i + 1]) prod = reduce_ext(prod * power_of(i, term.mono[i + 1]), ctx);
      acc = acc + prod;
    }
    out.push_back(normalize_t(reduce_ext(acc, ctx)));
  }
  return out;
}

QPoly remap_slots(const QPoly& f, std::span<const int> map, std::size_t new_nslots) {
  return f.map_monomials(new_nslots, [&](const Monomial& m) {
    Monomial r(new_nslots);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (map[i] >= 0) {
        r[map[i]] += m[i];
      } else if (m[i]) {
        throw std::invalid_argument("remap_slots: dropped slot is in use");
      }
    }
    return r;
  });
}

Polynomial<RatFunc> move_t_to_coefficients(const QPoly& f) {
  const std::size_t n = f.nslots() - 1;
  std::vector<Term<RatFunc>> out;
  for (const auto& term : f.terms()) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = term.mono[i + 1];
    out.push_back({m, RatFunc::t_power(term.mono[0]) * RatFunc(term.coeff)});
  }
  return Polynomial<RatFunc>::from_terms(n, std::move(out));
}

int dimension(const Ideal& ideal, CoeffDomain coeff) {
  const auto gens = ideal.with_minpoly();
  const std::size_t nv = ideal.ctx.nvars();
  if (coeff == CoeffDomain::RationalFunctions) {
    std::vector<Polynomial<RatFunc>> moved;
    for (const auto& g : gens) moved.push_back(move_t_to_coefficients(g));
    std::vector<bool> counted(ideal.ctx.nslots() - 1, false);
    for (std::size_t i = 0; i < nv; ++i) counted[i] = true;
    if (moved.empty()) return static_cast<int>(nv);
    return krull_dimension(std::span<const Polynomial<RatFunc>>(moved), counted);
  }
  for (const auto& g : gens)
    if (g.involves(0)) throw DomainError("dimension over Q needs t-free generators");
  std::vector<bool> counted(ideal.ctx.nslots(), false);
  for (std::size_t i = 0; i < nv; ++i) counted[i + 1] = true;
  if (gens.empty()) return static_cast<int>(nv);
  return krull_dimension(std::span<const QPoly>(gens), counted);
}

}  // namespace troplift
