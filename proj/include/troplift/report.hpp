#pragma once

#include <string>
#include <vector>

#include "troplift/lift.hpp"
#include "troplift/ring.hpp"

namespace troplift {

/// "ideal: g1, g2" with generators in canonical order ("ideal: 0" if empty).
std::string format_ideal(const Ideal& ideal);

std::string format_residual(const ResidualOrder& r);

/// Human-readable lift report; `names` are the user's variable names.
std::string lift_text(const LiftResult& result, const std::vector<std::string>& names);

/// JSON lift report:
///   {"N", "point": [{"var", "terms": [{"coeff", "t_exp"}]}],
///    "extension": {"minpoly"}, "trace": [{"omega", "u", "vars"}],
///    "residual_orders"}
/// t_exp is the exponent of the user's t (k/N for the stored t^(k/N)).
std::string lift_json(const LiftResult& result, const std::vector<std::string>& names);

std::string ideal_json(const Ideal& ideal);

std::string rdz_text(const RdzResult& result);
std::string rdz_json(const RdzResult& result);

}  // namespace troplift
