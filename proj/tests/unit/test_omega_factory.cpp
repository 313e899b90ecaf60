#include <gtest/gtest.h>

#include <set>

#include "chaoslab/omega_factory.hpp"

using namespace chaoslab;
using namespace chaoslab::omega;

TEST(OmegaFactory, TwoMemberSchedule) {
  ColumnPatternFamily f(2);
  EXPECT_EQ(words::to_string(f.member(1).prefix(9)), "110110110");
  EXPECT_EQ(words::to_string(f.member(2).prefix(9)), "101101101");
  EXPECT_EQ(f.column_of({1}), 2u);
}

TEST(OmegaFactory, EveryPatternOncePerPeriod) {
  for (unsigned n = 2; n <= 5; ++n) {
    ColumnPatternFamily f(n);
    std::set<Subset> seen;
    for (std::uint64_t j = 1; j <= f.period(); ++j) {
      Subset from_bits;
      for (unsigned i = 1; i <= n; ++i) {
        if (f.bit(i, j)) from_bits.insert(i);
      }
      EXPECT_EQ(from_bits, f.column(j));
      EXPECT_FALSE(from_bits.empty());
      seen.insert(from_bits);
      // the schedule repeats
      for (unsigned i = 1; i <= n; ++i) EXPECT_EQ(f.bit(i, j), f.bit(i, j + f.period()));
    }
    EXPECT_EQ(seen.size(), (std::size_t{1} << n) - 1);
  }
  EXPECT_EQ(ColumnPatternFamily(3).column(ColumnPatternFamily(3).column_of({1, 3})), (Subset{1, 3}));
}

TEST(OmegaFactory, QSetIsUnionOfSelectedParts) {
  auto d = spacing::ThickDecomposition::build(words::IntegerSet::naturals(), 3, 300);
  auto q = q_set(SymbolStream::from_prefix(words::word_from_string("101")), d);
  for (std::uint64_t m = 1; m <= 300; ++m) EXPECT_EQ(q.contains(m), d.in_part(m, 1) || d.in_part(m, 3)) << m;
  EXPECT_TRUE(words::is_thick(q, 4, 300).has_value());
}

TEST(OmegaFactory, GammaMembersLiveInTheirShifts) {
  auto g = build_gamma(2, words::IntegerSet::p_star(), 3, 6, 20000);
  ASSERT_EQ(g.members.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    auto w = g.members[i].prefix(20000);
    EXPECT_TRUE(spacing::is_member(w, g.q_sets[i]));
    EXPECT_TRUE(spacing::is_member(w, words::IntegerSet::p_star()));
  }
}

TEST(OmegaFactory, MembersOverNaturalsDiffer) {
  // y^(2) may not use the part holding distances 4..7, y^(1) may
  auto g = build_gamma(2, words::IntegerSet::naturals(), 3, 8, 5000);
  EXPECT_NE(g.members[0].prefix(5000), g.members[1].prefix(5000));
  EXPECT_FALSE(g.q_sets[1].contains(5));
  EXPECT_TRUE(g.q_sets[0].contains(5));
}

TEST(OmegaFactory, CertificatesForTwoMembers) {
  CertificateParams cp;
  auto g = build_gamma(2, words::IntegerSet::p_star(), 3, cp.word_budget, cp.prefix_len);
  for (const Subset& s : {Subset{1, 2}, Subset{1}, Subset{2}}) {
    auto c = scramble_certificate(g, s, cp);
    EXPECT_TRUE(c.realizable);
    EXPECT_TRUE(c.clause_a && c.clause_b && c.clause_c) << to_string(s) << " " << c.failure.value_or("");
    EXPECT_EQ(c.verdict, Verdict::pass);
  }
}

TEST(OmegaFactory, ColumnsBeyondThePartsAreNotRealizable) {
  CertificateParams cp;
  cp.prefix_len = 20000;
  auto g = build_gamma(3, words::IntegerSet::p_star(), 3, 6, cp.prefix_len);
  auto c = scramble_certificate(g, {1}, cp);
  EXPECT_FALSE(c.realizable);
  EXPECT_EQ(c.verdict, Verdict::inconclusive);
  EXPECT_EQ(to_string(Subset{1, 3}), "{1,3}");
}
