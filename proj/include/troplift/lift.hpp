#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "troplift/laurent.hpp"
#include "troplift/ring.hpp"

namespace troplift {

/// p(t^(1/N)) with p a vector of Laurent polynomials in t.
struct TruncatedPoint {
  long N = 1;
  std::vector<Laurent> coords;
  ExtContextPtr ext;   // field of the coefficients (trivial when rational)
  bool exact = false;  // the recursion eliminated every variable
};

struct LevelRecord {
  WeightVector omega;             // in the input's t units
  std::vector<ExtElement> u;      // zero of the t-initial ideal
  std::vector<std::string> vars;  // variables present at this level
};

struct LiftTrace {
  std::vector<LevelRecord> levels;
};

struct ZdlResult {
  TruncatedPoint point;
  LiftTrace trace;
};

/// Zero-dimensional lifting: m recursion levels of a Puiseux expansion of
/// a point of V(I) with -val = omega. `branch` picks the k-th zero of the
/// first t-initial ideal.
ZdlResult zdl(int m, const Ideal& ideal, const WeightVector& omega, std::size_t branch = 0);

/// f = a_0 + sum a_i t^(omega_i) x_i, scaled by a power of t so that it is
/// a polynomial in the ring of `ctx` (omega * ctx.N must be integral).
struct LinearFormSpec {
  std::vector<Integer> coeffs;  // a_0, a_1, ..., a_n
  WeightVector omega;
  QPoly cleared;
};

LinearFormSpec make_linear_form(std::vector<Integer> coeffs, const WeightVector& omega,
                                const RingCtx& ctx);

struct RdzResult {
  Ideal ideal;
  std::vector<LinearFormSpec> forms;
  int attempts = 0;
};

inline constexpr long kDefaultCoeffRange = 999;
inline constexpr int kDefaultRdzAttempts = 100;

/// Reduction to dimension zero: adds dim(P) random scaled linear forms until
/// the result is zero-dimensional with omega in its tropical variety. P is
/// assumed prime.
RdzResult rdz(const Ideal& prime, const WeightVector& omega, std::uint64_t seed,
              long coeff_range = kDefaultCoeffRange, int max_attempts = kDefaultRdzAttempts);

/// t-order of the residual (user units); nullopt when it vanishes.
using ResidualOrder = std::optional<Rational>;

std::vector<ResidualOrder> verify(const TruncatedPoint& point, const Ideal& original);

struct LiftResult {
  TruncatedPoint point;
  LiftTrace trace;
  std::vector<ResidualOrder> residuals;
  Ideal used;  // the ideal zdl ran on
  std::vector<LinearFormSpec> forms;
};

LiftResult lift_point(int m, const Ideal& ideal, const WeightVector& omega, std::uint64_t seed,
                      std::size_t branch = 0);

}  // namespace troplift
