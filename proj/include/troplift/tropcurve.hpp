#pragma once

#include <optional>
#include <vector>

#include "troplift/ring.hpp"

namespace troplift {

/// Negative slopes of the lower hull of {(x-exponent, t-exponent)} of a
/// polynomial in t and the single x-variable in `slot`; sorted descending.
/// These are the omega < 0 at which the t-initial form is not a monomial.
std::vector<Rational> newton_candidates(const QPoly& g, std::size_t slot);

/// Per-variable candidate lists (sorted descending, no duplicates).
struct RayCandidateSet {
  std::vector<std::vector<Rational>> per_variable;
};

/// Candidates from the coordinate eliminants <I> cap K[t, x_i]. Throws
/// DomainError(NotCurveType) when an eliminant is zero.
RayCandidateSet ray_candidates(const Ideal& ideal);

/// First omega in the lexicographic enumeration of the candidate product
/// that lies in Trop(I), in the user's units; nullopt when none does.
/// `skip` passes over that many valid rays first.
std::optional<WeightVector> negative_ray(const Ideal& ideal, std::size_t skip = 0);

}  // namespace troplift
