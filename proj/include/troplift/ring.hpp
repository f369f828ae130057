#pragma once

#include <span>
#include <string>
#include <vector>

#include "troplift/extension.hpp"
#include "troplift/format.hpp"
#include "troplift/polynomial.hpp"
#include "troplift/ratfunc.hpp"

namespace troplift {

/// Ambient ring K[t, x_1..x_n]. The ring variable t stands for t_user^(1/N).
/// When `ext` is a nontrivial extension its symbol is embedded as one extra
/// trailing slot and the minimal polynomial is an implicit generator.
struct RingCtx {
  std::vector<std::string> names;
  long N = 1;
  ExtContextPtr ext;

  std::size_t nvars() const { return names.size(); }
  bool embeds_ext() const { return ext && !ext->is_trivial(); }
  std::size_t nslots() const { return 1 + nvars() + (embeds_ext() ? 1 : 0); }
  std::size_t ext_slot() const { return 1 + nvars(); }
  /// "t", the variable names, then the extension symbol if embedded.
  std::vector<std::string> slot_names() const;
};

enum class CoeffDomain { Rationals, RationalFunctions };

struct Ideal {
  RingCtx ctx;
  std::vector<QPoly> gens;

  /// The generators followed by m(a) when an extension is embedded.
  std::vector<QPoly> with_minpoly() const;
};

/// omega in Q^n; the t-weight is implicitly -1.
struct WeightVector {
  std::vector<Rational> entries;

  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> e) : entries(std::move(e)) {}

  std::size_t size() const { return entries.size(); }
  const Rational& operator[](std::size_t i) const { return entries[i]; }
  bool operator==(const WeightVector&) const = default;
};

WeightVector scaled(const WeightVector& w, const Rational& factor);

/// -t_exp/N + omega . x_exps. Slots past omega (the extension symbol) weigh 0.
Rational weighted_degree(const Monomial& m, const WeightVector& omega, long N = 1);

/// m(a) placed in slot `ctx.ext_slot()`.
QPoly minpoly_generator(const RingCtx& ctx);

struct PsiClear {
  long N = 1;
  std::vector<QPoly> gens;
  std::vector<long> omega;
};

/// N = lcm of the denominators of omega; applies t -> t^N and returns N*omega.
PsiClear psi_clear(std::span<const QPoly> gens, const WeightVector& omega);

QPoly substitute_t_power(const QPoly& f, long k);

/// Divides by the largest power of t dividing every term.
QPoly normalize_t(const QPoly& f);

/// x_i -> t^(-omega_i) x_i followed by t-normalization.
std::vector<QPoly> phi(std::span<const QPoly> gens, std::span<const long> omega);

/// x_i -> t^(-omega_i) (u_i + x_i) followed by t-normalization. Requires
/// omega <= 0. Coordinates of u living in an extension are written in the
/// extension slot of `ctx` (which must embed that extension).
std::vector<QPoly> gamma(std::span<const QPoly> gens, std::span<const long> omega,
                         std::span<const ExtElement> u, const RingCtx& ctx);

/// Reduces the extension-slot degree below deg m.
QPoly reduce_ext(const QPoly& f, const RingCtx& ctx);

/// Rebuilds f with slot i moved to slot map[i] (or removed when map[i] < 0).
QPoly remap_slots(const QPoly& f, std::span<const int> map, std::size_t new_nslots);

/// Moves t into the coefficients: a polynomial over Q(t) in the remaining slots.
Polynomial<RatFunc> move_t_to_coefficients(const QPoly& f);

/// Krull dimension of <gens> in K[x] (-1 for the unit ideal). Over Q(t) the
/// variable t becomes a coefficient; over Q the generators must be t-free.
int dimension(const Ideal& ideal, CoeffDomain coeff);

/// Converts an element of Q[a]/m into a polynomial in the extension slot.
QPoly embed_element(const ExtElement& e, const RingCtx& ctx);

template <class K>
std::string to_string(const Polynomial<K>& p, const std::vector<std::string>& slot_names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& term : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < term.mono.size(); ++i) {
      if (!term.mono[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += detail::power(slot_names.at(i), term.mono[i]);
    }
    detail::append_term(out, to_string(term.coeff), mono);
  }
  return out;
}

}  // namespace troplift
