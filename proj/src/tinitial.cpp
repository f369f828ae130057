#include "troplift/tinitial.hpp"

#include <algorithm>
#include <stdexcept>

#include "troplift/stdbasis.hpp"

namespace troplift {

Rational ord_w(const QPoly& f, const WeightVector& omega, long N) {
  if (f.is_zero()) throw std::invalid_argument("ord_w of the zero polynomial");
  Rational best = weighted_degree(f.terms().front().mono, omega, N);
  for (const auto& term : f.terms()) best = std::max(best, Rational(weighted_degree(term.mono, omega, N)));
  return best;
}

QPoly initial_form(const QPoly& f, const WeightVector& omega, long N) {
  if (f.is_zero()) return f;
  Rational top = ord_w(f, omega, N);
  std::vector<Term<Rational>> out;
  for (const auto& term : f.terms())
    if (weighted_degree(term.mono, omega, N) == top) out.push_back(term);
  return QPoly::from_sorted(f.nslots(), std::move(out));
}

QPoly t_initial_form(const QPoly& f, const WeightVector& omega, long N) {
  return initial_form(f, omega, N).map_monomials(f.nslots(), [](Monomial m) {
    m[0] = 0;
    return m;
  });
}

Ideal t_initial_ideal(const Ideal& ideal, const WeightVector& omega, MonomialOrder::Tie tie) {
  if (omega.size() != ideal.ctx.nvars()) throw std::invalid_argument("weight vector length mismatch");
  Ideal out{ideal.ctx, {}};
  const auto gens = ideal.with_minpoly();
  if (gens.empty()) return out;

  PsiClear psi = psi_clear(gens, scaled(omega, Rational(ideal.ctx.N)));
  // Positive weights are moved into the generators (x_i -> t^-w_i x_i) so the
  // engine only sees nonpositive x-weights; t is a unit over the Puiseux
  // field, so the t-initial ideal is unchanged.
  std::vector<long> positive, local;
  for (long w : psi.omega) {
    positive.push_back(std::max(w, 0L));
    local.push_back(std::min(w, 0L));
  }
  std::vector<QPoly> shifted = phi(psi.gens, positive);
  std::vector<long> order_omega = local;
  if (ideal.ctx.embeds_ext()) order_omega.push_back(0);
  auto sb = standard_basis(std::span<const QPoly>(shifted),
                           MonomialOrder::weighted_mixed(order_omega, tie));

  WeightVector integral;
  for (long w : local) integral.entries.push_back(Rational(w));
  std::vector<QPoly> forms;
  for (const auto& g : sb.generators) forms.push_back(t_initial_form(g, integral));
  auto gb = standard_basis(std::span<const QPoly>(forms), MonomialOrder::degrevlex());

  for (auto& g : gb.generators) {
    bool only_ext = ideal.ctx.embeds_ext() && !g.involves(0);
    for (std::size_t i = 1; only_ext && i <= ideal.ctx.nvars(); ++i)
      if (g.involves(i)) only_ext = false;
    // The minimal polynomial is irreducible, so it is the only such element.
    if (only_ext && g.degree_in(ideal.ctx.ext_slot()) == ideal.ctx.ext->degree()) continue;
    out.gens.push_back(std::move(g));
  }
  return out;
}

bool is_monomial_free(const Ideal& ideal) {
  const auto gens = ideal.with_minpoly();
  if (gens.empty()) return true;
  std::vector<bool> slots(ideal.ctx.nslots(), true);
  slots[0] = false;
  auto sat = saturate_monomial(std::span<const QPoly>(gens), slots);
  for (const auto& g : sat)
    if (g.size() == 1 && g.terms().front().mono.is_one()) return false;
  return true;
}

bool trop_contains(const Ideal& ideal, const WeightVector& omega) {
  return is_monomial_free(t_initial_ideal(ideal, omega));
}

}  // namespace troplift
