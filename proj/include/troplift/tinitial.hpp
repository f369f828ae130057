#pragma once

#include "troplift/ring.hpp"

namespace troplift {

/// Maximal weighted degree over the terms of f (t weighs -1/N).
Rational ord_w(const QPoly& f, const WeightVector& omega, long N = 1);

/// Sum of the terms of f attaining ord_w; in_w(0) = 0.
QPoly initial_form(const QPoly& f, const WeightVector& omega, long N = 1);

/// initial_form with t set to 1.
QPoly t_initial_form(const QPoly& f, const WeightVector& omega, long N = 1);

/// tin_omega(I) as a reduced degrevlex Groebner basis in K[x]. omega is in
/// the user's units; the ring's N is taken into account. The minimal
/// polynomial of an embedded extension stays implicit in the result.
Ideal t_initial_ideal(const Ideal& ideal, const WeightVector& omega,
                      MonomialOrder::Tie tie = MonomialOrder::Tie::DegRevLex);

/// True iff the ideal of K[x] contains no monomial (in x and, when
/// embedded, the extension symbol).
bool is_monomial_free(const Ideal& ideal);

/// omega in Trop(I).
bool trop_contains(const Ideal& ideal, const WeightVector& omega);

}  // namespace troplift
