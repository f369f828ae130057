#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "troplift/ring.hpp"

namespace troplift {

/// Contents of an ideal file:
///
///   vars: x, y            # t is reserved
///   gens:
///     t*x + y;
///     x + t;
///   omega: 1, -1
///   order: 3
///   seed: 42
struct ProblemInput {
  RingCtx ctx;
  std::vector<QPoly> gens;
  std::optional<WeightVector> omega;
  std::optional<int> order;
  std::optional<std::uint64_t> seed;
};

ProblemInput parse_input(std::string_view text);

/// One polynomial over t and `names` (slot layout t, names...).
QPoly parse_polynomial(std::string_view text, const std::vector<std::string>& names);

/// Comma-separated rationals, e.g. "-1, -3/2".
WeightVector parse_weight(std::string_view text);

}  // namespace troplift
