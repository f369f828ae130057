#include "troplift/solver.hpp"

#include <algorithm>
#include <map>

#include "troplift/errors.hpp"
#include "troplift/factor.hpp"
#include "troplift/field.hpp"
#include "troplift/stdbasis.hpp"

namespace troplift {

namespace {

using EPoly = UnivariatePolynomial<ExtElement>;

struct Partial {
  std::vector<ExtElement> values;  // indexed by slot; only slots > current are set
  ExtContextPtr ext;               // null while everything is rational
};

// Lex-leading slot: the smallest slot involved (0 for constants).
std::size_t leading_slot(const QPoly& g) {
  for (std::size_t s = 0; s < g.nslots(); ++s)
    if (g.involves(s)) return s;
  return 0;
}

// g with slots > s replaced by their values, as a polynomial in slot s.
EPoly specialize(const QPoly& g, std::size_t s, const Partial& p) {
  std::map<int, ExtElement> by_degree;
  for (const auto& term : g.terms()) {
    ExtElement c = term.coeff;
    for (std::size_t j = s + 1; j < g.nslots(); ++j)
      for (int e = 0; e < term.mono[j]; ++e) c *= p.values[j];
    by_degree[term.mono[s]] += c;
  }
  std::vector<ExtElement> coeffs(by_degree.empty() ? 0 : by_degree.rbegin()->first + 1,
                                 ExtElement(Rational(0)));
  for (auto& [d, c] : by_degree) coeffs[d] = c;
  return EPoly(std::move(coeffs));
}

bool has_rational_coeffs(const EPoly& f) {
  for (const auto& c : f.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

UPoly to_rational(const EPoly& f) {
  std::vector<Rational> v;
  for (const auto& c : f.coeffs()) v.push_back(c.rational_value());
  return UPoly(std::move(v));
}

EPoly to_ext(const UPoly& f, const ExtContextPtr& ctx) {
  std::vector<ExtElement> v;
  for (const auto& c : f.coeffs()) v.push_back(ctx ? ExtElement(UPoly::constant(c), ctx) : ExtElement(c));
  return EPoly(std::move(v));
}

ExtElement linear_root(const EPoly& f) { return -(f.coeff(0) / f.coeff(1)); }

struct Branch {
  ExtElement value;
  ExtContextPtr ext;
};

// Roots of g (monic, degree >= 1) in the current field or in one new
// extension of Q.
std::vector<Branch> roots(const EPoly& g, const ExtContextPtr& ext, const ExtContextPtr& ambient) {
  if (g.degree() == 1) return {{linear_root(g), ext}};
  if (!has_rational_coeffs(g))
    throw DomainError(DomainError::Kind::NotShapePosition,
                      "not in shape position: nonlinear residual over the extension");
  std::vector<Branch> out;
  for (const auto& [h, mult] : factor_univariate(to_rational(g)).factors) {
    (void)mult;
    if (h.degree() == 1) {
      out.push_back({ExtElement(-h.coeff(0)), ext});
      continue;
    }
    if (!ext) {
      // Reuse the ring's extension when the factor is its minimal polynomial.
      ExtContextPtr fresh = ambient && ambient->minpoly() == h ? ambient : ExtContext::make(h);
      out.push_back({ExtElement::generator(fresh), fresh});
      continue;
    }
    if (!(h == ext->minpoly()))
      throw DomainError(DomainError::Kind::ExtensionTowerUnsupported,
                        "extension tower unsupported: " + to_string(h, ext->symbol()) +
                            " does not split over Q[" + ext->symbol() + "]");
    EPoly rest = to_ext(h, ext);
    ExtElement a = ExtElement::generator(ext);
    out.push_back({a, ext});
    rest = rest / EPoly({-a, ExtElement(Rational(1))});
    if (rest.degree() == 1) {
      out.push_back({linear_root(rest), ext});
    } else if (rest.degree() > 1) {
      throw DomainError(DomainError::Kind::ExtensionTowerUnsupported,
                        "extension tower unsupported: splitting " + to_string(h, ext->symbol()) +
                            " needs a second adjunction");
    }
  }
  return out;
}

}  // namespace

bool TorusZero::is_rational() const {
  for (const auto& c : coords)
    if (!c.is_rational()) return false;
  return true;
}

bool point_less(const std::vector<ExtElement>& a, const std::vector<ExtElement>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (canonical_less(a[i], b[i])) return true;
    if (canonical_less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

std::vector<TorusZero> torus_zeros(const Ideal& ideal) {
  const RingCtx& ctx = ideal.ctx;
  const auto gens = ideal.with_minpoly();
  for (const auto& g : gens)
    if (g.involves(0)) throw std::invalid_argument("torus_zeros expects t-free generators");
  const std::size_t n = ctx.nslots();
  auto gb = standard_basis(std::span<const QPoly>(gens), MonomialOrder::lex()).generators;

  std::vector<std::vector<QPoly>> by_slot(n);
  for (auto& g : gb) {
    std::size_t s = leading_slot(g);
    if (s == 0) throw DomainError(DomainError::Kind::NoTorusZero, "no torus zero: unit ideal");
    by_slot[s].push_back(g);
  }
  const ExtContextPtr ambient = ctx.embeds_ext() ? ctx.ext : nullptr;

  std::vector<Partial> partials{Partial{std::vector<ExtElement>(n), nullptr}};
  for (std::size_t s = n - 1; s >= 1; --s) {
    std::vector<Partial> next;
    for (const auto& p : partials) {
      EPoly g;
      for (const auto& f : by_slot[s]) g = gcd(g, specialize(f, s, p));
      if (g.is_zero())
        throw DomainError("ideal is not zero-dimensional");
      if (g.degree() == 0) continue;
      for (auto& b : roots(g, p.ext, ambient)) {
        Partial q = p;
        q.values[s] = b.value;
        q.ext = b.ext;
        next.push_back(std::move(q));
      }
    }
    partials = std::move(next);
  }

  std::vector<TorusZero> out;
  for (const auto& p : partials) {
    TorusZero z;
    z.coords.assign(p.values.begin() + 1, p.values.begin() + 1 + ctx.nvars());
    z.ext = p.ext ? p.ext : ExtContext::trivial();
    bool torus = std::none_of(z.coords.begin(), z.coords.end(),
                              [](const ExtElement& c) { return c.is_zero(); });
    if (torus) out.push_back(std::move(z));
  }
  if (out.empty() && !partials.empty())
    throw DomainError(DomainError::Kind::NoTorusZero, "no torus zero: every zero has a vanishing coordinate");
  std::sort(out.begin(), out.end(),
            [](const TorusZero& a, const TorusZero& b) { return point_less(a.coords, b.coords); });
  return out;
}

const TorusZero& pick_zero(std::span<const TorusZero> zeros, std::size_t branch) {
  if (zeros.empty()) throw DomainError(DomainError::Kind::NoTorusZero, "no torus zero to pick");
  std::vector<const TorusZero*> order;
  for (const auto& z : zeros) order.push_back(&z);
  std::stable_sort(order.begin(), order.end(), [](const TorusZero* a, const TorusZero* b) {
    if (a->is_rational() != b->is_rational()) return a->is_rational();
    return point_less(b->coords, a->coords);
  });
  if (branch >= order.size())
    throw DomainError("branch index " + std::to_string(branch) + " out of range (" +
                      std::to_string(order.size()) + " zeros)");
  return *order[branch];
}

}  // namespace troplift
