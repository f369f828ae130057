#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "troplift/stdbasis.hpp"
#include "troplift/tinitial.hpp"

namespace troplift {
namespace {

using testing::contains_monomial_up_to;
using testing::ideal;
using testing::poly;
using testing::Random;
using testing::random_weight;
using testing::strs;
using testing::weight;

const std::vector<std::string> kXY = {"x", "y"};

std::vector<long> as_longs(const WeightVector& w) {
  std::vector<long> out;
  for (const auto& e : w.entries) out.push_back(e.get_num().get_si());
  return out;
}

bool same_ideal(const std::vector<QPoly>& a, const std::vector<QPoly>& b) {
  for (const auto& f : a)
    if (!is_member(f, std::span<const QPoly>(b))) return false;
  for (const auto& f : b)
    if (!is_member(f, std::span<const QPoly>(a))) return false;
  return true;
}

TEST(OrdW, Examples) {
  // Ring variable t stands for t_user^(1/2) so the t^(3/2) term is integral.
  QPoly f = poly("(2*t^2 + t^3 + t^4)*x^2 + (-3*t^6 + 2*t^8)*y^2 + t^10*x*y^2 + (t^2 + 3*t^4)*x^7*y^2", kXY);
  WeightVector w = weight("-2, -1");
  EXPECT_EQ(ord_w(f, w, 2), Rational(-5));
  EXPECT_EQ(ord_w(poly("1", kXY), w), Rational(0));
  EXPECT_EQ(ord_w(poly("t^3", kXY), weight("4, 7")), Rational(-3));
  EXPECT_THROW(ord_w(QPoly(3), w), std::invalid_argument);
}

TEST(InitialForm, Examples) {
  QPoly f = poly("(2*t^2 + t^3 + t^4)*x^2 + (-3*t^6 + 2*t^8)*y^2 + t^10*x*y^2 + (t^2 + 3*t^4)*x^7*y^2", kXY);
  WeightVector w = weight("-2, -1");
  // 2*t*x^2 - 3*t^3*y^2 in the user's t.
  EXPECT_EQ(initial_form(f, w, 2), substitute_t_power(poly("2*t*x^2 - 3*t^3*y^2", kXY), 2));
  EXPECT_EQ(t_initial_form(f, w, 2), poly("2*x^2 - 3*y^2", kXY));
  EXPECT_EQ(t_initial_form(poly("t*x + y", kXY), weight("1, -1")), poly("x", kXY));
  EXPECT_EQ(t_initial_form(poly("t^5", kXY), w), poly("1", kXY));
  EXPECT_TRUE(initial_form(QPoly(3), w).is_zero());
}

TEST(TInitialIdeal, TwoGeneratorExample) {
  Ideal I = ideal(kXY, {"t*x + y", "x + t"});
  Ideal tin = t_initial_ideal(I, weight("1, -1"));
  EXPECT_EQ(strs(tin), (std::vector<std::string>{"x", "y"}));
  EXPECT_FALSE(trop_contains(I, weight("1, -1")));
}

TEST(TInitialIdeal, WorkedExample) {
  Ideal tin = t_initial_ideal(testing::worked_example(), weight("-1, -3/2"));
  EXPECT_EQ(strs(tin), (std::vector<std::string>{"y^2 - 1", "x - 1"}));
  EXPECT_TRUE(is_monomial_free(tin));
  EXPECT_EQ(dimension(tin, CoeffDomain::Rationals), 0);
  EXPECT_EQ(dimension(testing::worked_example(), CoeffDomain::RationalFunctions), 0);
}

TEST(TInitialIdeal, TrivialCases) {
  Ideal line = ideal(kXY, {"x + y + 1"});
  EXPECT_EQ(strs(t_initial_ideal(line, weight("0, 0"))), (std::vector<std::string>{"x + y + 1"}));
  EXPECT_TRUE(t_initial_ideal(ideal(kXY, {}), weight("0, 0")).gens.empty());
  EXPECT_THROW(t_initial_ideal(line, weight("0")), std::invalid_argument);
}

TEST(MonomialFree, Examples) {
  EXPECT_FALSE(is_monomial_free(ideal(kXY, {"x", "y"})));
  EXPECT_TRUE(is_monomial_free(ideal(kXY, {"y^2 - 1", "x - 1"})));
  Ideal cusp = ideal(kXY, {"x^2*y - x*y^2"});
  EXPECT_TRUE(is_monomial_free(cusp));
  EXPECT_FALSE(contains_monomial_up_to(cusp, 6));
  Ideal pinched = ideal(kXY, {"x*y + x^2", "y^2 + x*y", "x^3 - 1 + y"});
  EXPECT_EQ(is_monomial_free(pinched), !contains_monomial_up_to(pinched, 6));
  Ideal hidden = ideal(kXY, {"x*y - x", "y^2 - y + x"});
  EXPECT_FALSE(is_monomial_free(hidden));
  EXPECT_TRUE(contains_monomial_up_to(hidden, 6));
}

TEST(TropContains, TropicalLine) {
  Ideal line = ideal(kXY, {"x + y + 1"});
  EXPECT_TRUE(trop_contains(line, weight("2, 2")));
  EXPECT_TRUE(trop_contains(line, weight("0, -1")));
  EXPECT_TRUE(trop_contains(line, weight("0, -3")));
  EXPECT_TRUE(trop_contains(line, weight("-1, 0")));
  EXPECT_FALSE(trop_contains(line, weight("1, 2")));
  EXPECT_FALSE(trop_contains(line, weight("-1, -1")));
  EXPECT_TRUE(trop_contains(ideal({"x"}, {"x - t"}), weight("-1")));
  EXPECT_FALSE(trop_contains(ideal({"x"}, {"x - t"}), weight("-2")));
}

TEST(TropContains, ExtensionEmbedding) {
  auto k = ExtContext::make(UPoly({Rational(-2), Rational(0), Rational(1)}));
  RingCtx ctx{kXY, 1, k};
  const std::vector<std::string> slots = {"x", "y", "a"};
  Ideal I{ctx, {poly("x - a*t", slots), poly("y - t^2 - a*t^3", slots)}};
  for (const char* w : {"-1, -2", "-1, -1", "0, -2", "-2, -2"}) {
    Ideal tin = t_initial_ideal(I, weight(w));
    bool expected = !contains_monomial_up_to(tin, 6);
    EXPECT_EQ(trop_contains(I, weight(w)), expected) << w;
  }
  EXPECT_TRUE(trop_contains(I, weight("-1, -2")));
  EXPECT_FALSE(trop_contains(I, weight("-1, -1")));
}

TEST(TInitialForm, Multiplicativity) {
  Random r(31);
  for (int trial = 0; trial < 200; ++trial) {
    QPoly f = r.poly(3, 4, 3), g = r.poly(3, 4, 3);
    if (f.is_zero() || g.is_zero()) continue;
    WeightVector w = random_weight(r, 2, 3);
    long N = r.integer(1, 3);
    EXPECT_EQ(t_initial_form(f * g, w, N), t_initial_form(f, w, N) * t_initial_form(g, w, N));
  }
}

TEST(TInitialForm, PhiCompatibility) {
  Random r(32);
  for (int trial = 0; trial < 200; ++trial) {
    QPoly f = r.poly(3, 4, 3);
    if (f.is_zero()) continue;
    WeightVector w = random_weight(r, 2, 3);
    QPoly shifted = phi(std::span<const QPoly>(&f, 1), as_longs(w))[0];
    EXPECT_EQ(t_initial_form(f, w), t_initial_form(shifted, weight("0, 0")));
  }
}

TEST(TInitialIdeal, PhiCompatibility) {
  Random r(33);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<QPoly> gens = {r.poly(3, 3, 2), r.poly(3, 2, 2)};
    WeightVector w = random_weight(r, 2);
    Ideal I{RingCtx{kXY, 1, nullptr}, gens};
    Ideal J{RingCtx{kXY, 1, nullptr}, phi(std::span<const QPoly>(gens), as_longs(w))};
    EXPECT_EQ(t_initial_ideal(I, w).gens, t_initial_ideal(J, weight("0, 0")).gens);
  }
}

TEST(TInitialIdeal, TieBreakIndependence) {
  Random r(34);
  for (int trial = 0; trial < 100; ++trial) {
    Ideal I{RingCtx{kXY, 1, nullptr}, {r.poly(3, 3, 2), r.poly(3, 2, 2)}};
    WeightVector w = random_weight(r, 2);
    auto a = t_initial_ideal(I, w, MonomialOrder::Tie::DegRevLex).gens;
    auto b = t_initial_ideal(I, w, MonomialOrder::Tie::Lex).gens;
    EXPECT_TRUE(same_ideal(a, b));
  }
}

TEST(TropContains, AntiMonotoneOnNestedIdeals) {
  Random r(35);
  int implications = 0;
  for (int trial = 0; trial < 100; ++trial) {
    QPoly g1 = r.poly(3, 3, 2), g2 = r.poly(3, 2, 2), h = r.poly(3, 2, 1);
    WeightVector w = random_weight(r, 2);
    Ideal small{RingCtx{kXY, 1, nullptr}, {g1 * h}};
    Ideal big{RingCtx{kXY, 1, nullptr}, {g1, g2}};
    if (trop_contains(big, w)) {
      EXPECT_TRUE(trop_contains(small, w));
      ++implications;
    }
  }
  EXPECT_GT(implications, 0);
}

// I1 cap I2 = (s*I1 + (1 - s)*I2) cap K[t, x], with s in an extra trailing slot.
std::vector<QPoly> intersect(const std::vector<QPoly>& a, const std::vector<QPoly>& b) {
  const std::vector<int> up = {0, 1, 2};
  const std::vector<int> down = {0, 1, 2, -1};
  Monomial s(4);
  s[3] = 1;
  QPoly sv = QPoly::from_terms(4, {{s, Rational(1)}});
  QPoly one_minus = QPoly::constant(4, Rational(1)) - sv;
  std::vector<QPoly> gens;
  for (const auto& f : a) gens.push_back(sv * remap_slots(f, up, 4));
  for (const auto& f : b) gens.push_back(one_minus * remap_slots(f, up, 4));
  std::vector<QPoly> out;
  for (const auto& g : eliminate(std::span<const QPoly>(gens), {false, false, false, true}))
    out.push_back(remap_slots(g, down, 3));
  return out;
}

TEST(TropContains, UnionOverIntersection) {
  Random r(36);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<QPoly> a = {r.poly(3, 2, 2)}, b = {r.poly(3, 2, 2), r.poly(3, 2, 1)};
    WeightVector w = random_weight(r, 2);
    auto cap = intersect(a, b);
    for (const auto& g : cap) {
      EXPECT_TRUE(is_member(g, std::span<const QPoly>(a)));
      EXPECT_TRUE(is_member(g, std::span<const QPoly>(b)));
    }
    RingCtx ctx{kXY, 1, nullptr};
    bool lhs = trop_contains(Ideal{ctx, cap}, w);
    bool rhs = trop_contains(Ideal{ctx, a}, w) || trop_contains(Ideal{ctx, b}, w);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(MonomialFree, AgreesWithBruteForceOnZeroDimensionalTin) {
  Random r(37);
  int accepted = 0, free_cases = 0, attempts = 0;
  auto term = [&](const char* x_part) {
    return "(" + std::to_string(r.integer(1, 5) * (r.coin() ? 1 : -1)) + ")*t^" +
           std::to_string(r.integer(0, 3)) + x_part;
  };
  while (accepted < 100 && attempts < 3000) {
    ++attempts;
    Ideal J = ideal(kXY, {term("*x^2") + " + " + term("*x") + " + " + term(""),
                          term("*y") + " + " + term("*x") + " + " + term("")});
    WeightVector w = random_weight(r, 2, 3);
    Ideal tin = t_initial_ideal(J, w);
    if (dimension(tin, CoeffDomain::Rationals) != 0) continue;
    ++accepted;
    bool is_free = is_monomial_free(tin);
    free_cases += is_free;
    EXPECT_EQ(is_free, !contains_monomial_up_to(tin, 6)) << testing::str(J.gens[0], J.ctx);
  }
  EXPECT_EQ(accepted, 100);
  EXPECT_GT(free_cases, 0);
  EXPECT_LT(free_cases, accepted);
}

}  // namespace
}  // namespace troplift
