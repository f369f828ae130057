#include "troplift/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>

namespace troplift {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // constant term first, trimmed

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p < 2^31.

struct Fp {
  u64 p;

  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  static int deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

  ModPoly add(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    trim(r);
    return r;
  }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }

  ModPoly scale(const ModPoly& a, u64 c) const {
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c);
    trim(r);
    return r;
  }

  std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
    int db = deg(b);
    if (deg(a) < db) return {{}, a};
    ModPoly q(a.size() - b.size() + 1, 0);
    u64 inv_lc = inv(b.back());
    for (int k = deg(a) - db; k >= 0; --k) {
      u64 c = mul(a[k + db], inv_lc);
      q[k] = c;
      if (!c) continue;
      for (int j = 0; j <= db; ++j) a[k + j] = sub(a[k + j], mul(c, b[j]));
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
  }

  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }

  ModPoly monic(const ModPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }

  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s*a + t*b = 1 for coprime a, b.
  void xgcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      ModPoly s2 = sub(s0, mul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      ModPoly t2 = sub(t0, mul(q, t1));
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 c = inv(r0.back());
    s = scale(s0, c);
    t = scale(t0, c);
  }

  ModPoly derivative(const ModPoly& a) const {
    ModPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mul(a[i], i % p));
    trim(r);
    return r;
  }

  ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
    ModPoly r{1};
    base = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }
};

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial over F_p, p odd.
std::vector<ModPoly> factor_mod_p(const Fp& F, ModPoly f, std::mt19937_64& rng) {
  std::vector<std::pair<ModPoly, int>> dd;
  ModPoly x{0, 1};
  ModPoly h = x;
  Integer pz(static_cast<unsigned long>(F.p));
  for (int d = 1; 2 * d <= Fp::deg(f); ++d) {
    h = F.powmod(h, pz, f);
    ModPoly g = F.gcd(F.sub(h, x), f);
    if (Fp::deg(g) > 0) {
      dd.emplace_back(g, d);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (Fp::deg(f) > 0) dd.emplace_back(f, Fp::deg(f));

  std::vector<ModPoly> out;
  for (auto& [g, d] : dd) {
    std::vector<ModPoly> stack{g};
    Integer pd;
    mpz_pow_ui(pd.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(d));
    Integer e = (pd - 1) / 2;
    while (!stack.empty()) {
      ModPoly q = std::move(stack.back());
      stack.pop_back();
      if (Fp::deg(q) == d) {
        out.push_back(q);
        continue;
      }
      while (true) {
        ModPoly a(Fp::deg(q));
        for (auto& c : a) c = rng() % F.p;
        Fp::trim(a);
        if (Fp::deg(a) < 1) continue;
        ModPoly b = F.sub(F.powmod(a, e, q), ModPoly{1});
        ModPoly c = F.gcd(b, q);
        if (Fp::deg(c) > 0 && Fp::deg(c) < Fp::deg(q)) {
          stack.push_back(F.divmod(q, c).first);
          stack.push_back(c);
          break;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials (constant term first).

using ZPoly = std::vector<Integer>;

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer mods(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Symmetric residue in (-m/2, m/2].
Integer symmetric(const Integer& a, const Integer& m) {
  Integer r = mods(a, m);
  if (2 * r > m) r -= m;
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) c = mods(c, m);
  trim(r);
  return r;
}

ModPoly reduce(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  Integer pz(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mods(a[i], pz).get_ui();
  Fp::trim(r);
  return r;
}

ZPoly lift_up(const ModPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

// Lifts f = g*h (mod p), g monic, lc(h) = lc(f), to the same identity modulo
// p^k by linear p-adic Hensel steps. All outputs are reduced mod p^k.
void hensel_pair(const Fp& F, const ZPoly& f, const ModPoly& g0, const ModPoly& h0,
                 unsigned k, ZPoly& g, ZPoly& h) {
  Integer p(static_cast<unsigned long>(F.p));
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
  ModPoly s, t;
  F.xgcd(g0, h0, s, t);
  g = lift_up(g0);
  h = lift_up(h0);
  h.back() = mods(f.back(), pk);
  Integer pj = p;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly gh = zmul(g, h, pk);
    ZPoly e(std::max(f.size(), gh.size()), Integer(0));
    for (std::size_t i = 0; i < f.size(); ++i) e[i] += f[i];
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& c : e) c = mods(c, pk) / pj;  // exact: f = gh mod p^j
    ModPoly em = reduce(e, F.p);
    auto [q, dg] = F.divmod(F.mul(t, em), g0);
    ModPoly dh = F.add(F.mul(s, em), F.mul(q, h0));
    auto add_scaled = [&](ZPoly& dst, const ModPoly& d) {
      if (dst.size() < d.size()) dst.resize(d.size(), Integer(0));
      for (std::size_t i = 0; i < d.size(); ++i)
        dst[i] = mods(dst[i] + pj * Integer(static_cast<unsigned long>(d[i])), pk);
      trim(dst);
    };
    add_scaled(g, dg);
    add_scaled(h, dh);
    pj *= p;
  }
}

// Lifts the monic modular factors of f/lc(f) to monic factors mod p^k.
std::vector<ZPoly> hensel_lift(const Fp& F, const ZPoly& f, const std::vector<ModPoly>& factors,
                               unsigned k) {
  Integer p(static_cast<unsigned long>(F.p));
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
  std::vector<ZPoly> out;
  ZPoly cur = f;
  for (auto& c : cur) c = mods(c, pk);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ModPoly rest{reduce(ZPoly{cur.back()}, F.p)};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = F.mul(rest, factors[j]);
    ZPoly g, h;
    hensel_pair(F, cur, factors[i], rest, k, g, h);
    out.push_back(std::move(g));
    cur = std::move(h);
  }
  // Last factor: cur / lc(cur) mod p^k.
  Integer inv;
  mpz_invert(inv.get_mpz_t(), cur.back().get_mpz_t(), pk.get_mpz_t());
  for (auto& c : cur) c = mods(c * inv, pk);
  out.push_back(std::move(cur));
  return out;
}

UPoly to_upoly(const ZPoly& f) {
  std::vector<Rational> v(f.begin(), f.end());
  return UPoly(std::move(v));
}

// Scales a rational polynomial to a primitive integer polynomial with
// positive leading coefficient.
ZPoly primitive_integer(const UPoly& f) {
  Integer den = common_denominator(f.coeffs());
  ZPoly z;
  for (const auto& c : f.coeffs()) z.push_back(Rational(c * den).get_num());
  Integer g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0)
    for (auto& c : z) c /= g;
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Zassenhaus factorization of a primitive squarefree integer polynomial
// of degree >= 2. Returns primitive integer factors.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  std::mt19937_64 rng(0x5eed);

  // Pick the prime (among a few admissible ones) with the fewest factors.
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (u64 p = 101; tried < 5; p += 2) {
    if (!is_prime(p)) continue;
    Fp F{p};
    ModPoly fm = reduce(f, p);
    if (Fp::deg(fm) != n) continue;
    ModPoly monic = F.monic(fm);
    if (Fp::deg(F.gcd(monic, F.derivative(monic))) > 0) continue;
    ++tried;
    auto facs = factor_mod_p(F, monic, rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best.size() <= 1) return {f};

  // Mignotte-style bound on coefficients of any factor, times lc, times 2.
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = maxc;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n + 1));
  Integer root;
  mpz_sqrt(root.get_mpz_t(), Integer(n + 1).get_mpz_t());
  bound *= (root + 1) * abs(f.back());
  Fp F{best_p};
  Integer pz(static_cast<unsigned long>(best_p));
  Integer pk = pz;
  unsigned k = 1;
  while (pk <= bound) {
    pk *= pz;
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_lift(F, f, best, k);

  std::vector<ZPoly> result;
  ZPoly cur = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly g{cur.back()};
      for (auto i : idx) g = zmul(g, lifted[i], pk);
      for (auto& c : g) c = symmetric(c, pk);
      trim(g);
      ZPoly gp = primitive_integer(to_upoly(g));
      auto [q, r] = UPoly::divmod(to_upoly(cur), to_upoly(gp));
      bool integral = r.is_zero() &&
                      std::all_of(q.coeffs().begin(), q.coeffs().end(),
                                  [](const Rational& c) { return is_integer(c); });
      if (integral) {
        result.push_back(gp);
        cur = primitive_integer(q);
        for (std::size_t j = s; j-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[j]));
        found = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t i = s;
      while (i-- > 0) {
        if (idx[i] < lifted.size() - s + i) break;
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (cur.size() > 1) result.push_back(cur);
  return result;
}

// Prime factorization by trial division; empty when |n| exceeds the limit.
std::vector<Integer> divisors(const Integer& n) {
  Integer m = abs(n);
  std::vector<std::pair<Integer, int>> primes;
  for (Integer d = 2; d * d <= m; ++d) {
    if (d > 1000000) return {};
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) primes.emplace_back(d, e);
  }
  if (m > 1) primes.emplace_back(m, 1);
  std::vector<Integer> out{1};
  for (auto& [p, e] : primes) {
    std::size_t sz = out.size();
    Integer pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= p;
      for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

// Rational roots of a primitive integer polynomial with nonzero constant
// term; nullopt when the end coefficients are too large to enumerate.
std::optional<std::vector<Rational>> rational_roots(const ZPoly& f) {
  const Integer limit("1000000000000");
  if (abs(f.front()) > limit || abs(f.back()) > limit) return std::nullopt;
  auto num = divisors(f.front());
  auto den = divisors(f.back());
  if (num.empty() || den.empty()) return std::nullopt;
  std::vector<Rational> roots;
  UPoly fq = to_upoly(f);
  for (const auto& a : num) {
    for (const auto& b : den) {
      for (int sign : {1, -1}) {
        Rational r(a * sign, b);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (is_zero(fq.eval(r))) roots.push_back(r);
      }
    }
  }
  return roots;
}

// Irreducible monic factors of a monic squarefree polynomial.
std::vector<UPoly> factor_squarefree(const UPoly& f) {
  if (f.degree() <= 1) return f.degree() == 1 ? std::vector<UPoly>{f} : std::vector<UPoly>{};
  std::vector<UPoly> out;
  UPoly rest = f;
  if (is_zero(rest.coeff(0))) {
    out.push_back(UPoly::linear());
    rest = rest / UPoly::linear();
  }
  bool roots_complete = false;
  if (rest.degree() >= 1) {
    if (auto roots = rational_roots(primitive_integer(rest))) {
      roots_complete = true;
      for (const auto& r : *roots) {
        out.push_back(UPoly::linear(r));
        rest = rest / UPoly::linear(r);
      }
    }
  }
  if (rest.degree() <= 0) return out;
  // Without rational roots, degree <= 3 means irreducible.
  if (rest.degree() == 1 || (roots_complete && rest.degree() <= 3)) {
    out.push_back(rest.monic());
  } else {
    for (const auto& z : zassenhaus(primitive_integer(rest))) out.push_back(to_upoly(z).monic());
  }
  return out;
}

}  // namespace

bool factor_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  // Yun's algorithm.
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = p.monic();
  if (f.degree() < 1) return out;
  UPoly df = f.derivative();
  UPoly a = gcd(f, df);
  UPoly b = f / a;
  UPoly c = df / a;
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Factorization factor_univariate(const UPoly& p) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  if (p.degree() > kMaxFactorDegree)
    throw DomainError(DomainError::Kind::DegreeCapExceeded,
                      "factorization degree " + std::to_string(p.degree()) + " exceeds cap " +
                          std::to_string(kMaxFactorDegree));
  Factorization out;
  out.content = p.lead();
  for (const auto& [s, mult] : squarefree_decomposition(p))
    for (auto& q : factor_squarefree(s)) out.factors.emplace_back(std::move(q), mult);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (factor_less(x.first, y.first)) return true;
    if (factor_less(y.first, x.first)) return false;
    return x.second < y.second;
  });
  return out;
}

UPoly Factorization::expand() const {
  UPoly r = UPoly::constant(content);
  for (const auto& [f, k] : factors)
    for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

bool is_irreducible(const UPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor_univariate(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace troplift
