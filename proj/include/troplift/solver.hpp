#pragma once

#include <span>
#include <vector>

#include "troplift/ring.hpp"

namespace troplift {

/// A zero u in (K*)^n. `ext` is the field the coordinates live in (the
/// trivial context when all coordinates are rational).
struct TorusZero {
  std::vector<ExtElement> coords;
  ExtContextPtr ext;

  bool is_rational() const;
};

/// All zeros with nonzero coordinates of a zero-dimensional ideal of K[x]
/// (K = Q or the ring's embedded extension), sorted coordinate-wise by
/// canonical_less. At most one algebraic extension is adjoined.
std::vector<TorusZero> torus_zeros(const Ideal& ideal);

/// Deterministic choice among torus zeros: rational points before points
/// needing an extension, and within each group the canonically largest
/// first. `branch` selects the k-th point of that preference order.
const TorusZero& pick_zero(std::span<const TorusZero> zeros, std::size_t branch = 0);

/// Coordinate-wise canonical_less.
bool point_less(const std::vector<ExtElement>& a, const std::vector<ExtElement>& b);

}  // namespace troplift
