#include "troplift/stdbasis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace troplift {

namespace {

// Polynomial with terms sorted descending in the active order.
template <class K>
struct Ordered {
  std::vector<Term<K>> terms;
  long max_degree = 0;

  bool is_zero() const { return terms.empty(); }
  const Term<K>& lead() const { return terms.front(); }
  long ecart() const { return max_degree - lead().mono.degree(); }

  void refresh() {
    max_degree = 0;
    for (const auto& t : terms) max_degree = std::max(max_degree, t.mono.degree());
  }
};

template <class K>
Ordered<K> to_ordered(const Polynomial<K>& p, const MonomialOrder& ord) {
  Ordered<K> o;
  o.terms = p.terms();
  std::sort(o.terms.begin(), o.terms.end(), [&](const Term<K>& a, const Term<K>& b) {
    return ord.greater(a.mono, b.mono);
  });
  o.refresh();
  return o;
}

template <class K>
Polynomial<K> from_ordered(const Ordered<K>& o, std::size_t nslots) {
  return Polynomial<K>::from_terms(nslots, o.terms);
}

template <class K>
void make_monic(Ordered<K>& o) {
  if (o.is_zero()) return;
  K inv = K(1) / o.lead().coeff;
  for (auto& t : o.terms) t.coeff *= inv;
}

// h - c * m * g, all in `ord` order (multiplication by m preserves it).
template <class K>
Ordered<K> sub_scaled(const Ordered<K>& h, const K& c, const Monomial& m, const Ordered<K>& g,
                      const MonomialOrder& ord) {
  Ordered<K> r;
  r.terms.reserve(h.terms.size() + g.terms.size());
  std::size_t i = 0, j = 0;
  while (i < h.terms.size() || j < g.terms.size()) {
    if (j == g.terms.size()) {
      r.terms.push_back(h.terms[i++]);
      continue;
    }
    Monomial gm = g.terms[j].mono * m;
    std::strong_ordering cmp =
        i == h.terms.size() ? std::strong_ordering::less : ord.compare(h.terms[i].mono, gm);
    if (cmp == std::strong_ordering::greater) {
      r.terms.push_back(h.terms[i++]);
    } else if (cmp == std::strong_ordering::less) {
      r.terms.push_back({std::move(gm), K(-(c * g.terms[j].coeff))});
      ++j;
    } else {
      K s = h.terms[i].coeff - c * g.terms[j].coeff;
      if (!detail::coeff_is_zero(s)) r.terms.push_back({std::move(gm), std::move(s)});
      ++i;
      ++j;
    }
  }
  r.refresh();
  return r;
}

template <class K>
Ordered<K> spoly(const Ordered<K>& f, const Ordered<K>& g, const MonomialOrder& ord) {
  Monomial l = lcm(f.lead().mono, g.lead().mono);
  Monomial mf = l / f.lead().mono;
  Ordered<K> fs;
  for (const auto& t : f.terms) fs.terms.push_back({t.mono * mf, t.coeff});
  fs.refresh();
  K c = f.lead().coeff / g.lead().coeff;
  return sub_scaled(fs, c, l / g.lead().mono, g, ord);
}

// Mora normal form. Entries of `basis` are never modified; polynomials with
// larger ecart than their reducer are appended to a local copy of the
// reducer set. When `unit` is non-null it receives u with LM(u) = 1 and
// u*f - nf in <basis>.
template <class K>
Ordered<K> nf_mora(Ordered<K> h, const std::vector<Ordered<K>>& basis, const MonomialOrder& ord,
                   Ordered<K>* unit) {
  struct Extra {
    Ordered<K> poly;
    Ordered<K> unit;
  };
  std::vector<Extra> extra;
  Ordered<K> u;
  if (unit && !h.is_zero()) {
    u.terms.push_back({Monomial(h.lead().mono.size()), K(1)});
    u.refresh();
  }
  while (!h.is_zero()) {
    const Ordered<K>* best = nullptr;
    const Ordered<K>* best_unit = nullptr;
    long best_ecart = 0;
    for (const auto& g : basis) {
      if (!g.lead().mono.divides(h.lead().mono)) continue;
      if (!best || g.ecart() < best_ecart) {
        best = &g;
        best_unit = nullptr;
        best_ecart = g.ecart();
      }
    }
    for (const auto& e : extra) {
      if (!e.poly.lead().mono.divides(h.lead().mono)) continue;
      if (!best || e.poly.ecart() < best_ecart) {
        best = &e.poly;
        best_unit = &e.unit;
        best_ecart = e.poly.ecart();
      }
    }
    if (!best) break;
    Ordered<K> reducer = *best;
    Ordered<K> reducer_unit = best_unit ? *best_unit : Ordered<K>{};
    if (best_ecart > h.ecart()) extra.push_back({h, u});
    Monomial m = h.lead().mono / reducer.lead().mono;
    K c = h.lead().coeff / reducer.lead().coeff;
    if (unit && !reducer_unit.is_zero()) u = sub_scaled(u, c, m, reducer_unit, ord);
    h = sub_scaled(h, c, m, reducer, ord);
  }
  if (unit) *unit = std::move(u);
  return h;
}

// Top reduction followed by tail reduction (global orders).
template <class K>
Ordered<K> nf_full(Ordered<K> h, const std::vector<Ordered<K>>& basis, const MonomialOrder& ord) {
  Ordered<K> r;
  while (!h.is_zero()) {
    const Ordered<K>* red = nullptr;
    for (const auto& g : basis)
      if (g.lead().mono.divides(h.lead().mono)) {
        red = &g;
        break;
      }
    if (!red) {
      r.terms.push_back(h.terms.front());
      h.terms.erase(h.terms.begin());
      continue;
    }
    K c = h.lead().coeff / red->lead().coeff;
    h = sub_scaled(h, c, h.lead().mono / red->lead().mono, *red, ord);
  }
  r.refresh();
  return r;
}

template <class K>
Ordered<K> nf_top(Ordered<K> h, const std::vector<Ordered<K>>& basis, const MonomialOrder& ord) {
  while (!h.is_zero()) {
    const Ordered<K>* red = nullptr;
    for (const auto& g : basis)
      if (g.lead().mono.divides(h.lead().mono)) {
        red = &g;
        break;
      }
    if (!red) break;
    K c = h.lead().coeff / red->lead().coeff;
    h = sub_scaled(h, c, h.lead().mono / red->lead().mono, *red, ord);
  }
  return h;
}

template <class K>
Ordered<K> reduce(const Ordered<K>& h, const std::vector<Ordered<K>>& basis,
                  const MonomialOrder& ord) {
  return ord.is_global() ? nf_top(h, basis, ord) : nf_mora<K>(h, basis, ord, nullptr);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  long degree;
  std::size_t id;
};

template <class K>
std::vector<Ordered<K>> buchberger(std::vector<Ordered<K>> input, const MonomialOrder& ord) {
  std::vector<Ordered<K>> basis;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t next_id = 0;

  auto add = [&](Ordered<K> h) {
    make_monic(h);
    std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (ord.is_global() && basis[i].lead().mono.coprime(h.lead().mono)) continue;
      Monomial l = lcm(basis[i].lead().mono, h.lead().mono);
      long d = l.degree();
      pairs.push_back({i, k, std::move(l), d, next_id++});
      pending.insert({i, k});
    }
    basis.push_back(std::move(h));
  };

  for (auto& g : input) {
    if (g.is_zero()) continue;
    Ordered<K> h = reduce(g, basis, ord);
    if (!h.is_zero()) add(std::move(h));
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return a.degree != b.degree ? a.degree < b.degree : a.id < b.id;
    });
    Pair p = std::move(*it);
    pairs.erase(it);
    pending.erase({p.i, p.j});

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].lead().mono.divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
    }
    if (chain) continue;

    Ordered<K> h = reduce(spoly(basis[p.i], basis[p.j], ord), basis, ord);
    if (!h.is_zero()) add(std::move(h));
  }
  return basis;
}

// Drops elements whose leading monomial is divisible by another's (the
// earlier element wins on ties).
template <class K>
std::vector<Ordered<K>> minimize(std::vector<Ordered<K>> basis) {
  std::vector<Ordered<K>> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = basis[j].lead().mono;
      const auto& b = basis[i].lead().mono;
      if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(basis[i]);
  }
  return out;
}

}  // namespace

template <class K>
const Term<K>& leading_term(const Polynomial<K>& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw std::invalid_argument("leading term of zero polynomial");
  const Term<K>* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (ord.greater(t.mono, best->mono)) best = &t;
  return *best;
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g,
                           const MonomialOrder& ord) {
  return from_ordered(spoly(to_ordered(f, ord), to_ordered(g, ord), ord), f.nslots());
}

template <class K>
StdBasis<K> standard_basis(std::span<const Polynomial<K>> gens, const MonomialOrder& ord) {
  StdBasis<K> out;
  out.order = ord;
  if (gens.empty()) return out;
  std::size_t nslots = gens.front().nslots();
  std::vector<Ordered<K>> input;
  for (const auto& g : gens) {
    if (g.nslots() != nslots) throw std::invalid_argument("generators from different rings");
    if (!g.is_zero()) input.push_back(to_ordered(g, ord));
  }
  auto basis = minimize(buchberger(std::move(input), ord));
  if (ord.is_global()) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Ordered<K>> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      Ordered<K> tail;
      tail.terms.assign(basis[i].terms.begin() + 1, basis[i].terms.end());
      tail.refresh();
      Ordered<K> r = nf_full(tail, others, ord);
      r.terms.insert(r.terms.begin(), basis[i].lead());
      r.refresh();
      basis[i] = std::move(r);
    }
    out.reduced = true;
  }
  std::sort(basis.begin(), basis.end(), [&](const Ordered<K>& a, const Ordered<K>& b) {
    return ord.greater(a.lead().mono, b.lead().mono);
  });
  for (const auto& b : basis) out.generators.push_back(from_ordered(b, nslots));
  return out;
}

template <class K>
WeakNormalForm<K> weak_normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> basis,
                                   const MonomialOrder& ord) {
  std::vector<Ordered<K>> b;
  for (const auto& g : basis)
    if (!g.is_zero()) b.push_back(to_ordered(g, ord));
  Ordered<K> h = to_ordered(f, ord);
  WeakNormalForm<K> out;
  if (ord.is_global()) {
    out.nf = from_ordered(nf_full(h, b, ord), f.nslots());
    out.unit = Polynomial<K>::constant(f.nslots(), K(1));
    return out;
  }
  Ordered<K> unit;
  Ordered<K> r = nf_mora(h, b, ord, &unit);
  out.nf = from_ordered(r, f.nslots());
  out.unit = unit.is_zero() ? Polynomial<K>::constant(f.nslots(), K(1))
                            : from_ordered(unit, f.nslots());
  return out;
}

template <class K>
bool satisfies_buchberger_criterion(const StdBasis<K>& basis) {
  const auto& g = basis.generators;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      auto s = s_polynomial(g[i], g[j], basis.order);
      if (!weak_normal_form(s, std::span<const Polynomial<K>>(g), basis.order).nf.is_zero())
        return false;
    }
  return true;
}

template <class K>
bool is_member(const Polynomial<K>& f, std::span<const Polynomial<K>> gens) {
  if (f.is_zero()) return true;
  auto gb = standard_basis(gens, MonomialOrder::degrevlex());
  return weak_normal_form(f, std::span<const Polynomial<K>>(gb.generators), gb.order).nf.is_zero();
}

template <class K>
std::vector<Polynomial<K>> eliminate(std::span<const Polynomial<K>> gens,
                                     const std::vector<bool>& drop) {
  if (gens.empty()) return {};
  auto gb = standard_basis(gens, MonomialOrder::block(drop));
  std::vector<Polynomial<K>> out;
  for (auto& g : gb.generators) {
    bool keep = true;
    for (std::size_t s = 0; s < drop.size(); ++s)
      if (drop[s] && g.involves(s)) keep = false;
    if (keep) out.push_back(std::move(g));
  }
  return out;
}

template <class K>
std::vector<Polynomial<K>> saturate(std::span<const Polynomial<K>> gens, std::size_t slot) {
  if (gens.empty()) return {};
  auto gb = standard_basis(gens, MonomialOrder::degrevlex());
  if (gb.generators.empty()) return {};
  const std::size_t n = gb.generators.front().nslots();
  if (slot >= n) throw std::invalid_argument("saturation slot out of range");

  // Homogenize with an extra slot h; reorder so that the saturating
  // variable is the last (smallest) one for degrevlex.
  std::vector<std::size_t> pos(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (i != slot) pos[i] = next++;
  const std::size_t h_slot = next;  // n - 1
  pos[slot] = n;
  std::vector<Polynomial<K>> homog;
  for (const auto& g : gb.generators) {
    long d = g.total_degree();
    homog.push_back(g.map_monomials(n + 1, [&](const Monomial& m) {
      Monomial r(n + 1);
      for (std::size_t i = 0; i < n; ++i) r[pos[i]] = m[i];
      r[h_slot] = static_cast<int>(d - m.degree());
      return r;
    }));
  }
  auto hb = standard_basis(std::span<const Polynomial<K>>(homog), MonomialOrder::degrevlex());
  std::vector<Polynomial<K>> back;
  for (const auto& g : hb.generators) {
    int vmin = g.min_degree_in(n);
    back.push_back(g.map_monomials(n, [&](const Monomial& m) {
      Monomial r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = m[pos[i]];
      r[slot] -= vmin;
      return r;
    }));
  }
  return standard_basis(std::span<const Polynomial<K>>(back), MonomialOrder::degrevlex()).generators;
}

int independent_set_dimension(std::span<const Monomial> leads, const std::vector<bool>& counted) {
  for (const auto& m : leads)
    if (m.is_one()) return -1;
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < counted.size(); ++i)
    if (counted[i]) slots.push_back(i);
  if (slots.size() > 20) throw std::invalid_argument("too many variables for dimension");
  int best = 0;
  const unsigned long total = 1UL << slots.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    int size = __builtin_popcountl(mask);
    if (size <= best) continue;
    std::vector<bool> in(counted.size(), false);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1UL) in[slots[k]] = true;
    bool independent = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (std::size_t s = 0; s < m.size(); ++s)
        if (m[s] && !in[s]) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

template <class K>
int krull_dimension(std::span<const Polynomial<K>> gens, const std::vector<bool>& counted) {
  int nvars = static_cast<int>(std::count(counted.begin(), counted.end(), true));
  auto gb = standard_basis(gens, MonomialOrder::degrevlex());
  if (gb.generators.empty()) return nvars;
  std::vector<Monomial> leads;
  for (const auto& g : gb.generators) leads.push_back(leading_term(g, gb.order).mono);
  return independent_set_dimension(leads, counted);
}

std::vector<QPoly> saturate_t(std::span<const QPoly> gens) { return saturate(gens, 0); }

std::vector<QPoly> saturate_monomial(std::span<const QPoly> gens, const std::vector<bool>& slots) {
  std::vector<QPoly> cur(gens.begin(), gens.end());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (!slots[s]) continue;
    cur = saturate(std::span<const QPoly>(cur), s);
    if (cur.size() == 1 && cur.front().size() == 1 && cur.front().terms().front().mono.is_one())
      break;
  }
  return cur;
}

#define TROPLIFT_INSTANTIATE(K)                                                                  \
  template const Term<K>& leading_term(const Polynomial<K>&, const MonomialOrder&);             \
  template Polynomial<K> s_polynomial(const Polynomial<K>&, const Polynomial<K>&,                \
                                      const MonomialOrder&);                                     \
  template StdBasis<K> standard_basis(std::span<const Polynomial<K>>, const MonomialOrder&);     \
  template WeakNormalForm<K> weak_normal_form(const Polynomial<K>&,                              \
                                              std::span<const Polynomial<K>>,                    \
                                              const MonomialOrder&);                             \
  template bool satisfies_buchberger_criterion(const StdBasis<K>&);                              \
  template bool is_member(const Polynomial<K>&, std::span<const Polynomial<K>>);                 \
  template std::vector<Polynomial<K>> eliminate(std::span<const Polynomial<K>>,                  \
                                                const std::vector<bool>&);                       \
  template std::vector<Polynomial<K>> saturate(std::span<const Polynomial<K>>, std::size_t);     \
  template int krull_dimension(std::span<const Polynomial<K>>, const std::vector<bool>&);

TROPLIFT_INSTANTIATE(Rational)
TROPLIFT_INSTANTIATE(RatFunc)
TROPLIFT_INSTANTIATE(ExtElement)

#undef TROPLIFT_INSTANTIATE

}  // namespace troplift
