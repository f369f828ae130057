#pragma once

#include <span>
#include <vector>

#include "troplift/extension.hpp"
#include "troplift/monomial.hpp"
#include "troplift/polynomial.hpp"
#include "troplift/ratfunc.hpp"

namespace troplift {

template <class K>
struct StdBasis {
  std::vector<Polynomial<K>> generators;  // monic w.r.t. `order`
  MonomialOrder order;
  bool reduced = false;  // tails fully reduced (global orders only)
};

template <class K>
struct WeakNormalForm {
  Polynomial<K> nf;
  /// u with leading monomial 1 such that u*f - nf lies in the ideal of G.
  Polynomial<K> unit;
};

template <class K>
const Term<K>& leading_term(const Polynomial<K>& p, const MonomialOrder& ord);

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g,
                           const MonomialOrder& ord);

/// Standard basis of the ideal generated by `gens` in the localization
/// determined by `ord` (the polynomial ring itself for global orders).
/// Mixed orders use Mora's ecart-driven weak normal form; global orders use
/// Buchberger division and return the reduced Groebner basis. Pairs are
/// chosen by the normal strategy with insertion-index tie-break.
template <class K>
StdBasis<K> standard_basis(std::span<const Polynomial<K>> gens, const MonomialOrder& ord);

/// Mora weak normal form (full normal form for global orders, unit = 1).
template <class K>
WeakNormalForm<K> weak_normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> basis,
                                   const MonomialOrder& ord);

/// True when every S-polynomial of the basis weak-reduces to zero.
template <class K>
bool satisfies_buchberger_criterion(const StdBasis<K>& basis);

/// Ideal membership in the polynomial ring (global Groebner basis).
template <class K>
bool is_member(const Polynomial<K>& f, std::span<const Polynomial<K>> gens);

/// Generators of <gens> intersected with the subring omitting the flagged
/// slots (reduced Groebner basis under a block elimination order).
template <class K>
std::vector<Polynomial<K>> eliminate(std::span<const Polynomial<K>> gens,
                                     const std::vector<bool>& drop);

/// <gens> : v^infinity for the variable in `slot`, as a reduced degrevlex
/// Groebner basis.
template <class K>
std::vector<Polynomial<K>> saturate(std::span<const Polynomial<K>> gens, std::size_t slot);

/// Krull dimension via maximal independent sets of the leading ideal of a
/// degrevlex Groebner basis, counting only the flagged slots; -1 for <1>.
template <class K>
int krull_dimension(std::span<const Polynomial<K>> gens, const std::vector<bool>& counted);

/// Independent-set dimension computed from an explicit leading-monomial
/// list (shared with tests as the combinatorial step).
int independent_set_dimension(std::span<const Monomial> leads, const std::vector<bool>& counted);

/// I : t^infinity.
std::vector<QPoly> saturate_t(std::span<const QPoly> gens);

/// I : (product of the flagged slots)^infinity by successive saturation.
std::vector<QPoly> saturate_monomial(std::span<const QPoly> gens, const std::vector<bool>& slots);

}  // namespace troplift
