#include "troplift/tropcurve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "troplift/errors.hpp"
#include "troplift/stdbasis.hpp"
#include "troplift/tinitial.hpp"

namespace troplift {

std::vector<Rational> newton_candidates(const QPoly& g, std::size_t slot) {
  if (g.is_zero()) throw std::invalid_argument("newton_candidates of zero");
  // Lowest t-exponent for each x-exponent.
  std::map<int, int> lowest;
  for (const auto& term : g.terms()) {
    for (std::size_t s = 1; s < term.mono.size(); ++s)
      if (s != slot && term.mono[s]) throw std::invalid_argument("newton_candidates: more than one x-variable");
    auto [it, fresh] = lowest.emplace(term.mono[slot], term.mono[0]);
    if (!fresh) it->second = std::min(it->second, term.mono[0]);
  }
  // Lower convex hull by monotone chain over increasing x-exponent.
  std::vector<std::pair<long, long>> hull;
  for (auto [b, a] : lowest) {
    while (hull.size() >= 2) {
      auto [b1, a1] = hull[hull.size() - 2];
      auto [b2, a2] = hull.back();
      // Drop the middle point unless it lies strictly below the chord.
      if ((a2 - a1) * (b - b1) >= (a - a1) * (b2 - b1)) hull.pop_back();
      else break;
    }
    hull.emplace_back(b, a);
  }
  std::vector<Rational> out;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    auto [b1, a1] = hull[k];
    auto [b2, a2] = hull[k + 1];
    // t^a1 x^b1 and t^a2 x^b2 balance when -a1 + w b1 = -a2 + w b2.
    Rational w = make_rational(a2 - a1, b2 - b1);
    if (w < 0) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RayCandidateSet ray_candidates(const Ideal& ideal) {
  const RingCtx& ctx = ideal.ctx;
  const auto gens = ideal.with_minpoly();
  RayCandidateSet out;
  for (std::size_t i = 1; i <= ctx.nvars(); ++i) {
    std::vector<bool> drop(ctx.nslots(), true);
    drop[0] = false;
    drop[i] = false;
    auto elim = eliminate(std::span<const QPoly>(gens), drop);
    if (elim.empty())
      throw DomainError(DomainError::Kind::NotCurveType,
                        "zero eliminant in " + ctx.names[i - 1] + ": ideal is not curve-type over this coordinate");
    std::vector<Rational> common;
    bool first = true;
    for (const auto& g : elim) {
      auto c = newton_candidates(g, i);
      if (first) {
        common = std::move(c);
        first = false;
      } else {
        std::vector<Rational> both;
        std::set_intersection(common.begin(), common.end(), c.begin(), c.end(),
                              std::back_inserter(both), std::greater<>());
        common = std::move(both);
      }
    }
    out.per_variable.push_back(std::move(common));
  }
  return out;
}

std::optional<WeightVector> negative_ray(const Ideal& ideal, std::size_t skip) {
  RayCandidateSet cands = ray_candidates(ideal);
  const std::size_t n = cands.per_variable.size();
  for (const auto& list : cands.per_variable)
    if (list.empty()) return std::nullopt;
  // Candidates are in ring units (t = t_user^(1/N)).
  const Rational to_user = make_rational(1, ideal.ctx.N);
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    WeightVector w;
    for (std::size_t i = 0; i < n; ++i) w.entries.push_back(cands.per_variable[i][idx[i]] * to_user);
    if (trop_contains(ideal, w)) {
      if (skip == 0) return w;
      --skip;
    }
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++idx[k] < cands.per_variable[k].size()) break;
      idx[k] = 0;
      if (k == 0) return std::nullopt;
    }
    if (n == 0) return std::nullopt;
  }
}

}  // namespace troplift
