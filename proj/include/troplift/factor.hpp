#pragma once

#include <utility>
#include <vector>

#include "troplift/upoly.hpp"

namespace troplift {

/// Largest degree accepted by factor_univariate.
inline constexpr int kMaxFactorDegree = 32;

struct Factorization {
  /// Leading coefficient of the input; the factors are monic.
  Rational content;
  /// Irreducible monic factors with multiplicities, sorted by degree and then
  /// by coefficient sequence (constant term first).
  std::vector<std::pair<UPoly, int>> factors;

  UPoly expand() const;
};

/// Factors a nonzero polynomial into irreducibles over Q.
///
/// Squarefree decomposition, then rational roots, then a modular
/// factorization (distinct/equal degree over F_p) lifted p-adically by
/// Hensel lifting with exhaustive recombination. Throws DomainError for the
/// zero polynomial or a degree above kMaxFactorDegree.
Factorization factor_univariate(const UPoly& p);

/// Squarefree decomposition of a monic polynomial: pairs (s_i, i) with
/// p = prod s_i^i, each s_i squarefree, monic, pairwise coprime.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

bool is_irreducible(const UPoly& p);

/// Strict ordering used for deterministic factor lists.
bool factor_less(const UPoly& a, const UPoly& b);

}  // namespace troplift
