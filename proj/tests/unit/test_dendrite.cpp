#include <gtest/gtest.h>

#include <random>

#include "chaoslab/dendrite.hpp"

using namespace chaoslab;
using namespace chaoslab::dendrite;

namespace {

// m_0 = 1, m_{i+1} = 2^i l_i, L_i = (l_{i-1} + 1) m_i, l_i = l_{i-1} + L_i
struct Recurrence {
  std::vector<std::uint64_t> m, L, l;
  explicit Recurrence(unsigned depth) {
    std::uint64_t prev_l = 0;
    m.push_back(1);
    for (unsigned i = 0; i <= depth; ++i) {
      if (i > 0) m.push_back((std::uint64_t{1} << (i - 1)) * l[i - 1]);
      L.push_back((prev_l + 1) * m[i]);
      l.push_back(prev_l + L[i]);
      prev_l = l[i];
    }
  }
};

// level and index of the top orbit after s steps from (1/2, 1): even levels
// walk rightwards, odd levels leftwards
std::pair<unsigned, std::uint64_t> top_itinerary(const Recurrence& r, std::uint64_t s) {
  unsigned n = 0;
  while (s >= r.l[n]) ++n;
  std::uint64_t o = s - (n == 0 ? 0 : r.l[n - 1]);
  return {n, n % 2 == 0 ? o + 1 : r.L[n] - o};
}

DPoint random_point(std::mt19937_64& rng, const Grid& g) {
  if (rng() % 3 == 0) {
    std::uint64_t den = 1 + rng() % 64;
    return Base{ratio(rng() % (den + 1), den)};
  }
  unsigned n = rng() % 4;
  std::uint64_t k = 1 + rng() % g.params().L[n];
  std::uint64_t den = 1 + rng() % 16;
  return spike(g, n, k, ratio(rng() % (den + 1), den) * pow2_neg(n));
}

}  // namespace

TEST(Dendrite, MinimalMultipliersFollowTheRecurrence) {
  Recurrence r(5);
  auto p = GridParams::minimal();
  EXPECT_EQ(p.m, r.m);
  EXPECT_EQ(p.L, r.L);
  EXPECT_EQ(p.l, r.l);
  EXPECT_EQ(p.l[3], 3051u);
  EXPECT_EQ(p.m[4], 24408u);
  EXPECT_THROW(GridParams::with_multipliers({1, 1, 5}), InvalidArgument);
  EXPECT_THROW(GridParams::minimal(6), InvalidArgument);
}

TEST(Dendrite, GridIsUniform) {
  Grid g;
  const auto& p = g.params();
  for (unsigned n = 0; n <= 3; ++n) {
    const auto& x = g.merged(n);
    ASSERT_EQ(x.size(), p.l[n] + 2);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(x[i], ratio(i, p.l[n] + 1)) << n << " " << i;
    EXPECT_EQ(g.level_points(n).size(), p.L[n]);
  }
  EXPECT_EQ(g.level_points(1), (std::vector<Rational>{Rational(1, 4), Rational(3, 4)}));
  EXPECT_EQ(g.z(0, 1), Rational(1, 2));
  // the lazy level lands on the finer uniform grid near the left end
  for (std::uint64_t k = 1; k <= 24; ++k) EXPECT_EQ(g.z(4, k), ratio(k, p.l[4] + 1)) << k;
  EXPECT_THROW(g.z(5, 1), BudgetExceeded);
}

TEST(Dendrite, TopOrbitItinerary) {
  Grid g;
  Recurrence r(5);
  DPoint p = top(g, 0, 1);
  for (std::uint64_t s = 0; s <= 3051; ++s) {
    auto [n, k] = top_itinerary(r, s);
    ASSERT_TRUE(std::holds_alternative<Spike>(p)) << s;
    const auto& sp = std::get<Spike>(p);
    ASSERT_EQ(sp.n, n) << s;
    ASSERT_EQ(sp.k, k) << s;
    ASSERT_EQ(sp.y, pow2_neg(n)) << s;
    p = apply_f(p, g);
  }
}

TEST(Dendrite, MapIsContinuousAtTheThresholds) {
  Grid g;
  for (unsigned n = 0; n <= 3; ++n) {
    for (std::uint64_t k : {std::uint64_t{1}, g.params().L[n]}) {
      auto [n2, k2] = next_foot(g, n, k);
      auto at_upper = apply_f(spike(g, n, k, 3 * pow2_neg(n + 2)), g);
      EXPECT_EQ(at_upper, DPoint(Base{g.z(n2, k2)})) << n << " " << k;
      auto at_lower = apply_f(spike(g, n, k, pow2_neg(n + 1)), g);
      EXPECT_EQ(at_lower, DPoint(Base{g.z(n, k)}));
      auto below = apply_f(spike(g, n, k, pow2_neg(n + 3)), g);
      EXPECT_EQ(below, DPoint(Base{g.z(n, k)}));
    }
  }
  EXPECT_EQ(phi(0, 1), 1);
  EXPECT_EQ(phi(2, Rational(3, 16)), 0);
  EXPECT_EQ(apply_f(Base{Rational(1, 3)}, g), DPoint(Base{Rational(1, 3)}));
}

TEST(Dendrite, ArclengthMetric) {
  Grid g;
  std::mt19937_64 rng(12);
  for (int t = 0; t < 2000; ++t) {
    auto a = random_point(rng, g), b = random_point(rng, g), c = random_point(rng, g);
    EXPECT_LE(dist_d(a, c), dist_d(a, b) + dist_d(b, c));
    EXPECT_EQ(dist_d(a, b), dist_d(b, a));
    EXPECT_EQ(dist_d(a, a), 0);
  }
  // along the base, then up the spike
  auto ca = coords(top(g, 1, 2));
  EXPECT_EQ(ca[0], Rational(3, 4));
  EXPECT_EQ(dist_d(Base{Rational(1)}, top(g, 1, 2)), Rational(1, 4) + Rational(1, 2));
}

TEST(Dendrite, WnBound) {
  Grid g;
  for (unsigned n = 0; n <= 2; ++n) {
    auto c = wn_certificate(n, g);
    EXPECT_TRUE(c.pass) << n;
    EXPECT_EQ(c.bound, ratio(1, g.params().l[n] + 1) + pow2_neg(n));
    EXPECT_LE(c.max_dist, c.bound);
    // even levels hand over to a leftward walk that starts next to (1,0)
    EXPECT_EQ(c.corner, DPoint(Base{Rational(n % 2 == 0 ? 1 : 0)})) << n;
  }
}

TEST(Dendrite, Dc1CountsAgainstDirectSimulation) {
  Grid g;
  auto rows = dc1_certificate({2, 3}, Base{Rational(1)}, g);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& r : rows) {
    DPoint p = top(g, 0, 1);
    std::uint64_t half = 0, within = 0;
    for (std::uint64_t i = 0; i < r.horizon; ++i) {
      auto d = dist_d(p, Base{Rational(1)});
      half += d < Rational(1, 2);
      within += d < r.w;
      p = apply_f(p, g);
    }
    EXPECT_EQ(r.within_half, half) << r.n;
    EXPECT_EQ(r.within_w, within) << r.n;
  }
  EXPECT_EQ(rows[0].horizon, 135u);
  EXPECT_EQ(rows[1].horizon, 27459u);
  EXPECT_TRUE(rows[0].near);
  EXPECT_FALSE(rows[1].near);
}

TEST(Dendrite, Asymptotics) {
  Grid g;
  auto a = top(g, 0, 1);
  auto r = asymptotics_check(a, apply_f(a, g), Rational(1, 4), 5000, g);
  EXPECT_EQ(r.status, AsymptoticStatus::asymptotic);
  ASSERT_TRUE(r.s.has_value());
  auto low = asymptotics_check(a, spike(g, 0, 1, Rational(1, 2)), Rational(1, 4), 100, g);
  EXPECT_EQ(low.status, AsymptoticStatus::eventually_fixed);
  EXPECT_EQ(low.fixed_at, 1u);
}

TEST(Dendrite, NoInfiniteLyTriple) {
  Grid g;
  auto triples = sample_triples(30, 3, g);
  for (const auto& r : no_infinite_ly_certificate(triples, 4096, g)) {
    EXPECT_TRUE(r.pass);
    ASSERT_TRUE(r.witness.has_value());
  }
}
