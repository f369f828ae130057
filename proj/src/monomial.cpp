#include "troplift/monomial.hpp"

#include <stdexcept>

namespace troplift {

namespace {

// Reverse lexicographic tie-break on slots [begin, end): the monomial with
// the smaller exponent in the last differing slot is greater.
std::strong_ordering revlex(const Monomial& a, const Monomial& b, std::size_t begin,
                            std::size_t end) {
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

long partial_degree(const Monomial& m, std::size_t begin, std::size_t end) {
  long d = 0;
  for (std::size_t i = begin; i < end; ++i) d += m[i];
  return d;
}

}  // namespace

std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b) {
  long da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  return revlex(a, b, 0, a.size());
}

MonomialOrder MonomialOrder::weighted_mixed(std::vector<long> omega, Tie tie) {
  MonomialOrder o;
  o.kind_ = Kind::WeightedMixed;
  o.tie_ = tie;
  o.omega_ = std::move(omega);
  return o;
}

MonomialOrder MonomialOrder::degrevlex() { return MonomialOrder{}; }

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::block(std::vector<bool> eliminate) {
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.eliminate_ = std::move(eliminate);
  return o;
}

long MonomialOrder::weight(const Monomial& m) const {
  if (omega_.size() + 1 != m.size()) throw std::invalid_argument("weight vector length mismatch");
  long w = -static_cast<long>(m[0]);
  for (std::size_t i = 0; i < omega_.size(); ++i) w += omega_[i] * m[i + 1];
  return w;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("monomial dimension mismatch");
  switch (kind_) {
    case Kind::DegRevLex:
      return degrevlex_compare(a, b);
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::WeightedMixed: {
      long wa = weight(a), wb = weight(b);
      if (wa != wb) return wa <=> wb;
      if (tie_ == Tie::Lex) {
        for (std::size_t i = 1; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return b[0] <=> a[0];
      }
      long da = partial_degree(a, 1, a.size()), db = partial_degree(b, 1, b.size());
      if (da != db) return da <=> db;
      auto c = revlex(a, b, 1, a.size());
      if (c != std::strong_ordering::equal) return c;
      // Equal weight and equal x-part force equal t exponents.
      return b[0] <=> a[0];
    }
    case Kind::Block: {
      if (eliminate_.size() != a.size()) throw std::invalid_argument("block mask size mismatch");
      long ea = 0, eb = 0;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (eliminate_[i]) {
          ea += a[i];
          eb += b[i];
        }
      if (ea != eb) return ea <=> eb;
      for (std::size_t i = a.size(); i-- > 0;)
        if (eliminate_[i] && a[i] != b[i])
          return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
      long ra = a.degree() - ea, rb = b.degree() - eb;
      if (ra != rb) return ra <=> rb;
      for (std::size_t i = a.size(); i-- > 0;)
        if (!eliminate_[i] && a[i] != b[i])
          return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace troplift
