#include "troplift/lift.hpp"

#include <algorithm>
#include <random>

#include "troplift/errors.hpp"
#include "troplift/solver.hpp"
#include "troplift/stdbasis.hpp"
#include "troplift/tinitial.hpp"
#include "troplift/tropcurve.hpp"

namespace troplift {

namespace {

// Appends the extension slot to every generator.
Ideal embed_extension(const Ideal& ideal, const ExtContextPtr& ext) {
  Ideal out{ideal.ctx, {}};
  out.ctx.ext = ext;
  std::vector<int> map(ideal.ctx.nslots());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
  for (const auto& g : ideal.gens) out.gens.push_back(remap_slots(g, map, out.ctx.nslots()));
  return out;
}

// Removes variable `var` (0-based) from a ring whose generators no longer
// involve it.
Ideal drop_variable(const Ideal& ideal, std::size_t var) {
  Ideal out{ideal.ctx, {}};
  out.ctx.names.erase(out.ctx.names.begin() + static_cast<long>(var));
  std::vector<int> map(ideal.ctx.nslots());
  for (std::size_t s = 0; s < map.size(); ++s)
    map[s] = s < var + 1 ? static_cast<int>(s) : s == var + 1 ? -1 : static_cast<int>(s) - 1;
  for (const auto& g : ideal.gens) out.gens.push_back(remap_slots(g, map, out.ctx.nslots()));
  return out;
}

bool only_extension(const QPoly& g, const RingCtx& ctx) {
  if (!ctx.embeds_ext()) return false;
  for (std::size_t s = 0; s < ctx.ext_slot(); ++s)
    if (g.involves(s)) return false;
  return true;
}

// Constant term with respect to t and x, reduced modulo m.
bool vanishes_at_origin(const QPoly& g, const RingCtx& ctx) {
  if (!ctx.embeds_ext()) return is_zero(g.constant_coeff());
  std::vector<Rational> c;
  for (const auto& term : g.terms()) {
    bool in_origin = true;
    for (std::size_t s = 0; s < ctx.ext_slot(); ++s)
      if (term.mono[s]) in_origin = false;
    if (!in_origin) continue;
    std::size_t k = term.mono[ctx.ext_slot()];
    if (c.size() <= k) c.resize(k + 1, Rational(0));
    c[k] += term.coeff;
  }
  return ctx.ext->reduce(UPoly(std::move(c))).is_zero();
}

ExtElement coefficient_in(const ExtElement& e, const ExtContextPtr& ext) {
  if (e.is_rational()) return e;
  return ExtElement(e.representative(), ext);
}

struct Level {
  long N;  // t-denominator of the returned coordinates
  std::vector<Laurent> coords;
  ExtContextPtr ext;
  bool exact;
};

Level zdl_level(int m, Ideal ideal, const WeightVector& omega, std::size_t branch, LiftTrace& trace) {
  const std::size_t n = ideal.ctx.nvars();
  if (omega.size() != n) throw std::invalid_argument("weight vector length mismatch");
  LevelRecord record{omega, {}, ideal.ctx.names};

  // Psi_N: make omega integral in the units of the ring's t.
  PsiClear psi = psi_clear(ideal.gens, scaled(omega, Rational(ideal.ctx.N)));
  ideal.gens = psi.gens;
  ideal.ctx.N *= psi.N;
  std::vector<long> w = psi.omega;

  // Phi: move positive weights to the origin.
  std::vector<long> stashed;
  if (std::any_of(w.begin(), w.end(), [](long v) { return v > 0; })) {
    ideal.gens = phi(ideal.gens, w);
    stashed = w;
    std::fill(w.begin(), w.end(), 0);
  }
  WeightVector w_user;
  for (long v : w) w_user.entries.push_back(make_rational(v, ideal.ctx.N));

  Ideal tin = t_initial_ideal(ideal, w_user);
  if (!is_monomial_free(tin))
    throw DomainError(DomainError::Kind::NotInTropicalVariety,
                      "omega not in tropical variety: the t-initial ideal contains a monomial");
  auto zeros = torus_zeros(tin);
  TorusZero u = pick_zero(zeros, branch);
  record.u = u.coords;
  trace.levels.push_back(record);

  ExtContextPtr ext = ideal.ctx.embeds_ext() ? ideal.ctx.ext : ExtContext::trivial();
  if (!u.ext->is_trivial() && !ideal.ctx.embeds_ext()) {
    ideal = embed_extension(ideal, u.ext);
    ext = u.ext;
  }
  for (auto& c : u.coords) c = coefficient_in(c, ext->is_trivial() ? nullptr : ext);

  auto assemble = [&](long n_child, const std::vector<std::optional<Laurent>>& child, bool exact) {
    Level out{ideal.ctx.N * n_child, {}, ext, exact};
    for (std::size_t i = 0; i < n; ++i) {
      Laurent p = Laurent::constant(u.coords[i]);
      if (child[i]) p = p + *child[i];
      p = p.shifted(-w[i] * n_child);
      if (!stashed.empty()) p = p.shifted(-stashed[i] * n_child);
      out.coords.push_back(std::move(p));
    }
    return out;
  };

  std::vector<std::optional<Laurent>> none(n);
  if (m == 1) return assemble(1, none, false);

  Ideal g{ideal.ctx, gamma(ideal.gens, w, u.coords, ideal.ctx)};
  // x_i is finished when (<G, x_i> : t^inf) vanishes at the origin; it is then
  // eliminated. position[i] is the index of original variable i in the
  // current ring, or -1 once dropped.
  std::vector<int> position(n);
  for (std::size_t i = 0; i < n; ++i) position[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t slot = static_cast<std::size_t>(position[i]) + 1;
    std::vector<QPoly> with_x = g.with_minpoly();
    with_x.push_back(QPoly::variable(g.ctx.nslots(), slot));
    auto sat = saturate_t(std::span<const QPoly>(with_x));
    bool inside = std::all_of(sat.begin(), sat.end(),
                              [&](const QPoly& f) { return vanishes_at_origin(f, g.ctx); });
    if (!inside) continue;
    std::vector<bool> drop(g.ctx.nslots(), false);
    drop[slot] = true;
    Ideal reduced{g.ctx, {}};
    for (auto& f : eliminate(std::span<const QPoly>(sat), drop))
      if (!only_extension(f, g.ctx)) reduced.gens.push_back(std::move(f));
    g = drop_variable(reduced, slot - 1);
    position[i] = -1;
    for (std::size_t j = i + 1; j < n; ++j) --position[j];
  }

  if (g.ctx.nvars() == 0) return assemble(1, none, true);

  auto ray = negative_ray(g);
  if (!ray)
    throw DomainError(DomainError::Kind::NoNegativeRay,
                      "no negative ray found in the tropical variety of the transformed ideal");
  Level child = zdl_level(m - 1, g, *ray, 0, trace);
  const long n_child = child.N / ideal.ctx.N;
  if (child.ext && !child.ext->is_trivial()) {
    if (!ext->is_trivial() && !(ext->minpoly() == child.ext->minpoly()))
      throw DomainError(DomainError::Kind::ExtensionTowerUnsupported, "extension tower unsupported");
    ext = child.ext;
    for (auto& c : u.coords) c = coefficient_in(c, ext);
  }
  std::vector<std::optional<Laurent>> sub(n);
  for (std::size_t i = 0; i < n; ++i)
    if (position[i] >= 0) sub[i] = child.coords[position[i]];
  return assemble(n_child, sub, child.exact);
}

}  // namespace

ZdlResult zdl(int m, const Ideal& ideal, const WeightVector& omega, std::size_t branch) {
  if (m < 1) throw std::invalid_argument("zdl: m must be positive");
  ZdlResult out;
  Level top = zdl_level(m, ideal, omega, branch, out.trace);
  out.point = TruncatedPoint{top.N, std::move(top.coords), top.ext, top.exact};
  return out;
}

LinearFormSpec make_linear_form(std::vector<Integer> coeffs, const WeightVector& omega,
                                const RingCtx& ctx) {
  const std::size_t n = ctx.nvars();
  if (coeffs.size() != n + 1 || omega.size() != n)
    throw std::invalid_argument("linear form: dimension mismatch");
  std::vector<long> w;
  for (const auto& v : omega.entries) w.push_back(to_long(v * ctx.N));
  long clear = 0;
  for (long v : w) clear = std::max(clear, -v);
  std::vector<Term<Rational>> terms;
  Monomial m0(ctx.nslots());
  m0[0] = static_cast<int>(clear);
  terms.push_back({m0, Rational(coeffs[0])});
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m(ctx.nslots());
    m[0] = static_cast<int>(w[i] + clear);
    m[i + 1] = 1;
    terms.push_back({m, Rational(coeffs[i + 1])});
  }
  return {std::move(coeffs), omega, QPoly::from_terms(ctx.nslots(), std::move(terms))};
}

RdzResult rdz(const Ideal& prime, const WeightVector& omega, std::uint64_t seed, long coeff_range,
              int max_attempts) {
  RdzResult out{prime, {}, 0};
  const int d = dimension(prime, CoeffDomain::RationalFunctions);
  if (d < 0) throw DomainError("rdz: the input is the unit ideal");
  if (d == 0) return out;

  // Clear denominators so that t^(omega_i) is an integral power of the ring's t.
  PsiClear psi = psi_clear(prime.gens, scaled(omega, Rational(prime.ctx.N)));
  Ideal base{prime.ctx, psi.gens};
  base.ctx.N *= psi.N;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-coeff_range, coeff_range);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    Ideal j = base;
    std::vector<LinearFormSpec> forms;
    for (int k = 0; k < d; ++k) {
      std::vector<Integer> a;
      for (std::size_t i = 0; i <= prime.ctx.nvars(); ++i) a.emplace_back(dist(rng));
      forms.push_back(make_linear_form(std::move(a), omega, base.ctx));
      j.gens.push_back(forms.back().cleared);
    }
    if (dimension(j, CoeffDomain::RationalFunctions) == 0 && trop_contains(j, omega))
      return {std::move(j), std::move(forms), attempt};
  }
  throw DomainError(DomainError::Kind::IterationCapExceeded,
                    "rdz: no suitable random linear forms after " + std::to_string(max_attempts) +
                        " attempts (the reduction is probabilistic; try another seed)");
}

std::vector<ResidualOrder> verify(const TruncatedPoint& point, const Ideal& original) {
  const RingCtx& ctx = original.ctx;
  if (point.coords.size() != ctx.nvars()) throw std::invalid_argument("verify: dimension mismatch");
  if (point.N % ctx.N != 0) throw std::invalid_argument("verify: incompatible t-denominators");
  // The ring's t is s^(N_p / N) where s = t_user^(1/N_p).
  const long t_step = point.N / ctx.N;
  std::vector<ResidualOrder> out;
  for (const auto& f : original.gens) {
    Laurent acc;
    for (const auto& term : f.terms()) {
      Laurent prod = Laurent::monomial(term.coeff, term.mono[0] * t_step);
      for (std::size_t i = 0; i < ctx.nvars(); ++i)
        for (int e = 0; e < term.mono[i + 1]; ++e) prod = prod * point.coords[i];
      if (ctx.embeds_ext())
        for (int e = 0; e < term.mono[ctx.ext_slot()]; ++e)
          prod = prod * Laurent::constant(ExtElement::generator(ctx.ext));
      acc = acc + prod;
    }
    if (acc.is_zero()) out.emplace_back(std::nullopt);
    else out.emplace_back(make_rational(acc.min_exp(), point.N));
  }
  return out;
}

LiftResult lift_point(int m, const Ideal& ideal, const WeightVector& omega, std::uint64_t seed,
                      std::size_t branch) {
  if (!trop_contains(ideal, omega))
    throw DomainError(DomainError::Kind::NotInTropicalVariety, "omega not in tropical variety");
  LiftResult out;
  RdzResult reduced = rdz(ideal, omega, seed);
  out.used = reduced.ideal;
  out.forms = std::move(reduced.forms);
  ZdlResult z = zdl(m, out.used, omega, branch);
  out.point = std::move(z.point);
  out.trace = std::move(z.trace);
  out.residuals = verify(out.point, ideal);
  return out;
}

}  // namespace troplift
