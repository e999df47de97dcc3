#include <gtest/gtest.h>

#include "pinch/errors.hpp"
#include "pinch/gapset.hpp"
#include "pinch/membership.hpp"

using namespace pinch;

using Vs = std::vector<ExponentVector>;

TEST(ClosedForm, Examples) {
  auto f = gap_set_closed_form(single_pinch(3, 3, ExponentVector{1, 1, 1}));
  EXPECT_EQ(f.form(), GapForm::Finite);
  EXPECT_EQ(f.finite_members(), Vs{ExponentVector({1, 1, 1})});

  auto oo = gap_set_closed_form(single_pinch(2, 2, ExponentVector{1, 1}));
  EXPECT_EQ(oo.form(), GapForm::OddOddFamily);
  EXPECT_EQ(oo.axes(), std::make_pair(std::size_t{0}, std::size_t{1}));

  auto line = gap_set_closed_form(single_pinch(2, 4, ExponentVector{3, 1}));
  EXPECT_EQ(line.form(), GapForm::LineFamily);
  EXPECT_EQ(line.materialize(12), (Vs{{3, 1}, {7, 1}, {11, 1}}));

  auto normal = gap_set_closed_form(single_pinch(2, 4, ExponentVector{4, 0}));
  EXPECT_TRUE(normal.empty());
}

TEST(ClosedForm, HonorsUserCoordinates) {
  auto swapped = gap_set_closed_form(single_pinch(2, 4, ExponentVector{1, 3}));
  EXPECT_EQ(swapped.form(), GapForm::LineFamily);
  EXPECT_EQ(swapped.materialize(8), (Vs{{1, 3}, {1, 7}}));
  auto embedded = gap_set_closed_form(single_pinch(4, 2, ExponentVector{0, 1, 0, 1}));
  EXPECT_EQ(embedded.form(), GapForm::OddOddFamily);
  EXPECT_TRUE(embedded.contains(ExponentVector({0, 3, 0, 5})));
  EXPECT_FALSE(embedded.contains(ExponentVector({1, 1, 0, 0})));
  EXPECT_EQ(embedded.describe(), "odd-odd in axes (2,4)");
}

TEST(ClosedForm, RejectsNonSinglePinch) {
  EXPECT_THROW(gap_set_closed_form(full_veronese(2, 4)), SpecError);
  EXPECT_THROW(gap_set_closed_form(pinch_spec(3, 3, {ExponentVector{1, 1, 1}}, true)), SpecError);
}

TEST(Bruteforce, Examples) {
  EXPECT_EQ(gap_set_bruteforce(single_pinch(2, 4, ExponentVector{2, 2}), 10), Vs{ExponentVector({2, 2})});
  Vs odd{{1, 1}, {1, 3}, {1, 5}, {1, 7}, {3, 1}, {3, 3}, {3, 5}, {5, 1}, {5, 3}, {7, 1}};
  EXPECT_EQ(gap_set_bruteforce(single_pinch(2, 2, ExponentVector{1, 1}), 4), odd);
  EXPECT_TRUE(gap_set_bruteforce(full_veronese(2, 4), 8).empty());
  EXPECT_THROW(gap_set_bruteforce(full_veronese(2, 4), 0), SpecError);
}

TEST(Bruteforce, NormalCaseHasNoGapsInsideTheCone) {
  // x^4 itself is not in the pinched semigroup but lies outside its cone.
  auto spec = single_pinch(2, 4, ExponentVector{4, 0});
  EXPECT_FALSE(is_member(ExponentVector({4, 0}), spec));
  EXPECT_TRUE(gap_set_bruteforce(spec, 8).empty());
}

TEST(Equivalence, Examples) {
  EXPECT_TRUE(verify_gap_equivalence(single_pinch(3, 3, ExponentVector{1, 1, 1}), 6).equal);
  EXPECT_TRUE(verify_gap_equivalence(single_pinch(2, 5, ExponentVector{4, 1}), 8).equal);
  EXPECT_TRUE(verify_gap_equivalence(single_pinch(4, 2, ExponentVector{1, 1, 0, 0}), 5).equal);
  EXPECT_THROW(verify_gap_equivalence(full_veronese(2, 3), 4), SpecError);
}

TEST(Equivalence, SmallSweep) {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (Coord d = 2; d <= 4; ++d) {
      for (const auto& m : veronese_generators(n, d).members) {
        auto c = verify_gap_equivalence(single_pinch(n, d, m), 5);
        EXPECT_TRUE(c.equal) << n << " " << d << " " << m.to_string();
      }
    }
  }
}

TEST(GapSet, NeverContainsMembers) {
  for (Coord d = 2; d <= 4; ++d) {
    for (const auto& m : veronese_generators(3, d).members) {
      auto spec = single_pinch(3, d, m);
      auto gaps = gap_set_closed_form(spec);
      MembershipOracle oracle(spec);
      for (const auto& v : gaps.materialize(6 * d)) EXPECT_FALSE(oracle.is_member(v)) << v.to_string();
    }
  }
}

TEST(Multipinch, BoundAndGapSet) {
  EXPECT_EQ(multipinch_coordinate_bound(3, 3), 12);
  EXPECT_EQ(multipinch_coordinate_bound(2, 4), 12);
  auto s = pinch_spec(3, 3, {ExponentVector{1, 1, 1}}, true);
  EXPECT_EQ(multipinch_gap_set(s), Vs{ExponentVector({1, 1, 1})});
  EXPECT_TRUE(multipinch_gaps_beyond_bound(s, 24).empty());
  EXPECT_THROW(multipinch_gap_set(pinch_spec(2, 3, {ExponentVector{1, 2}})), SpecError);
}

TEST(Multipinch, GapsAgreeWithMembership) {
  auto s = pinch_spec(3, 4, {ExponentVector{2, 1, 1}, ExponentVector{1, 2, 1}, ExponentVector{1, 1, 2}});
  auto gaps = multipinch_gap_set(s);
  ASSERT_FALSE(gaps.empty());
  MembershipOracle oracle(s);
  for (const auto& g : gaps) EXPECT_FALSE(oracle.is_member(g));
  for (const auto& g : gaps) EXPECT_LT(g.max(), multipinch_coordinate_bound(3, 4));
  EXPECT_TRUE(multipinch_gaps_beyond_bound(s, 2 * multipinch_coordinate_bound(3, 4)).empty());
}

TEST(Cokernel, Models) {
  auto m = cokernel_model(single_pinch(2, 4, ExponentVector{4, 0}));
  EXPECT_TRUE(m.gap.empty());
  EXPECT_FALSE(m.principal_generator.has_value());

  auto p = cokernel_model(single_pinch(2, 4, ExponentVector{3, 1}));
  EXPECT_EQ(p.principal_generator, ExponentVector({3, 1}));
  EXPECT_TRUE(p.gap.contains(*p.principal_generator));

  auto mp = cokernel_model(pinch_spec(3, 3, {ExponentVector{1, 1, 1}}, true));
  EXPECT_FALSE(mp.principal_generator.has_value());
  EXPECT_EQ(mp.gap.finite_members(), Vs{ExponentVector({1, 1, 1})});
}

TEST(Cokernel, PrincipalUpToTruncation) {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (Coord d = 2; d <= 4; ++d) {
      for (const auto& m : veronese_generators(n, d).members) {
        if (m.max() == d) continue;
        auto model = cokernel_model(single_pinch(n, d, m));
        EXPECT_TRUE(principality_violations(model, 6 * d).empty()) << m.to_string();
      }
    }
  }
}
