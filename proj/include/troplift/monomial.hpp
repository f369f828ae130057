#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

namespace troplift {

/// Exponent vector t^e[0] * x_1^e[1] * ... ; slot 0 is always t. When an
/// algebraic extension is embedded its symbol occupies the last slot.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nslots) : exps(nslots, 0) {}
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  std::size_t size() const { return exps.size(); }
  int operator[](std::size_t i) const { return exps[i]; }
  int& operator[](std::size_t i) { return exps[i]; }

  int t_exp() const { return exps[0]; }
  long degree() const {
    long d = 0;
    for (int e : exps) d += e;
    return d;
  }
  bool is_one() const {
    for (int e : exps)
      if (e) return false;
    return true;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > o.exps[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] && o.exps[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
    return r;
  }
  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= b.exps[i];
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded reverse lexicographic comparison over all slots (last slot is the
/// smallest variable). This is the canonical storage order of Polynomial.
std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b);

/// Monomial orderings used by the standard-basis engine.
///
/// WeightedMixed compares -t_exp + omega . x first and breaks ties by
/// degrevlex on the x slots alone; because 1 > t it is not a well-ordering
/// and requires Mora's normal form. The other kinds are global.
class MonomialOrder {
 public:
  enum class Kind { WeightedMixed, DegRevLex, Lex, Block };
  /// Global order on the x slots used to break weight ties.
  enum class Tie { DegRevLex, Lex };

  static MonomialOrder weighted_mixed(std::vector<long> omega, Tie tie = Tie::DegRevLex);
  static MonomialOrder degrevlex();
  static MonomialOrder lex();
  /// Elimination order: degrevlex on the slots flagged in `eliminate`
  /// (which dominate), then degrevlex on the rest.
  static MonomialOrder block(std::vector<bool> eliminate);

  Kind kind() const { return kind_; }
  Tie tie() const { return tie_; }
  bool is_global() const { return kind_ != Kind::WeightedMixed; }
  const std::vector<long>& omega() const { return omega_; }
  const std::vector<bool>& eliminated() const { return eliminate_; }

  /// -t_exp + omega . x (WeightedMixed only).
  long weight(const Monomial& m) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

 private:
  Kind kind_ = Kind::DegRevLex;
  Tie tie_ = Tie::DegRevLex;
  std::vector<long> omega_;
  std::vector<bool> eliminate_;
};

}  // namespace troplift
