#include <gtest/gtest.h>

#include "fte_table.hpp"
#include "pinch/charp.hpp"
#include "pinch/cli.hpp"
#include "pinch/errors.hpp"
#include "pinch/membership.hpp"

using namespace pinch;

TEST(Characteristic, Validation) {
  EXPECT_EQ(Characteristic(2).value(), 2);
  EXPECT_EQ(Characteristic(9973).value(), 9973);
  EXPECT_THROW(Characteristic(1), SpecError);
  EXPECT_THROW(Characteristic(9), SpecError);
  EXPECT_THROW(Characteristic(10007), SpecError);
  EXPECT_THROW(Characteristic(-3), SpecError);
}

TEST(CeilLog, Values) {
  EXPECT_EQ(ceil_log(12, 2), 4);
  EXPECT_EQ(ceil_log(12, 3), 3);
  EXPECT_EQ(ceil_log(16, 2), 4);
  EXPECT_EQ(ceil_log(1, 5), 0);
}

TEST(FrobeniusTrace, Examples) {
  Characteristic p5(5), p3(3), p2(2);
  auto t1 = frobenius_on_cokernel(cokernel_model(single_pinch(3, 3, ExponentVector{1, 1, 1})), p5, 18);
  ASSERT_EQ(t1.steps.size(), 1u);
  EXPECT_EQ(t1.steps[0].image, ExponentVector({5, 5, 5}));
  EXPECT_TRUE(t1.steps[0].killed);
  EXPECT_EQ(t1.nilpotency_index, 1);

  auto t2 = frobenius_on_cokernel(cokernel_model(single_pinch(2, 4, ExponentVector{3, 1})), p3, 24);
  EXPECT_EQ(t2.steps.front().source, ExponentVector({3, 1}));
  EXPECT_EQ(t2.steps.front().image, ExponentVector({9, 3}));
  EXPECT_TRUE(t2.all_killed());

  auto odd = cokernel_model(single_pinch(2, 2, ExponentVector{1, 1}));
  auto t3 = frobenius_on_cokernel(odd, p3, 12);
  EXPECT_EQ(t3.steps.front().image, ExponentVector({3, 3}));
  EXPECT_FALSE(t3.steps.front().killed);
  EXPECT_TRUE(t3.all_persist());
  EXPECT_EQ(t3.family, FamilyVerdict::PersistsForever);
  EXPECT_FALSE(t3.nilpotency_index.has_value());

  auto t4 = frobenius_on_cokernel(odd, p2, 12);
  bool saw = false;
  for (const auto& s : t4.steps) {
    if (s.source == ExponentVector({3, 5})) {
      saw = true;
      EXPECT_EQ(s.image, ExponentVector({6, 10}));
      EXPECT_TRUE(s.killed);
    }
  }
  EXPECT_TRUE(saw);
  EXPECT_EQ(t4.nilpotency_index, 1);
}

TEST(FrobeniusTrace, EmptyCokernelRejected) {
  EXPECT_THROW(frobenius_on_cokernel(cokernel_model(single_pinch(2, 4, ExponentVector{4, 0})), Characteristic(2), 8),
               SpecError);
}

TEST(FrobeniusTrace, ImagesAreMembersOrGaps) {
  for (int p : {2, 3, 5, 7}) {
    for (std::size_t n = 2; n <= 3; ++n) {
      for (Coord d = 2; d <= 4; ++d) {
        for (const auto& m : veronese_generators(n, d).members) {
          if (m.max() == d) continue;
          auto ck = cokernel_model(single_pinch(n, d, m));
          auto tr = frobenius_on_cokernel(ck, Characteristic(p), 6 * d);
          MembershipOracle oracle(ck.spec);
          for (const auto& s : tr.steps) {
            EXPECT_EQ(s.image, s.source.scaled(p));
            EXPECT_EQ(s.killed, oracle.is_member(s.image));
            EXPECT_NE(s.killed, ck.gap.contains(s.image));
          }
          // Index 1 from the family analysis must show up numerically.
          if (tr.family == FamilyVerdict::KilledInOneStep) EXPECT_TRUE(tr.all_killed());
        }
      }
    }
  }
}

TEST(FrobeniusTrace, ParityDichotomy) {
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<Coord> c(n, 0);
    c[0] = c[1] = 1;
    auto ck = cokernel_model(single_pinch(n, 2, ExponentVector(c)));
    EXPECT_EQ(frobenius_on_cokernel(ck, Characteristic(2), 12).nilpotency_index, 1);
    for (int p : {3, 5, 7}) EXPECT_TRUE(frobenius_on_cokernel(ck, Characteristic(p), 12).all_persist());
  }
}

TEST(FSingularity, Examples) {
  auto a = f_singularity(single_pinch(3, 3, ExponentVector{1, 1, 1}), Characteristic(7));
  EXPECT_EQ(a.ftype, FType::FNilpotent);
  auto b = f_singularity(single_pinch(3, 2, ExponentVector{1, 1, 0}), Characteristic(3));
  EXPECT_EQ(b.ftype, FType::FInjective);
  EXPECT_EQ(b.f_pure, Tristate::Yes);
  auto c = f_singularity(single_pinch(4, 2, ExponentVector{1, 1, 0, 0}), Characteristic(5));
  EXPECT_EQ(c.ftype, FType::FInjective);
  EXPECT_EQ(c.f_pure, Tristate::Unknown);
  auto d = f_singularity(single_pinch(2, 4, ExponentVector{4, 0}), Characteristic(2));
  EXPECT_EQ(d.ftype, FType::FRegular);
  EXPECT_EQ(d.f_pure, Tristate::Yes);
  EXPECT_EQ(f_singularity(single_pinch(2, 2, ExponentVector{1, 1}), Characteristic(2)).ftype, FType::Regular);
  EXPECT_EQ(f_singularity(single_pinch(3, 2, ExponentVector{1, 1, 0}), Characteristic(2)).ftype, FType::FNilpotent);
  EXPECT_EQ(f_singularity(pinch_spec(3, 3, {ExponentVector{1, 1, 1}}, true), Characteristic(3)).ftype,
            FType::FNilpotent);
}

TEST(Hsl, Examples) {
  for (int p : {2, 3, 5}) EXPECT_EQ(hsl(single_pinch(2, 4, ExponentVector{4, 0}), Characteristic(p)).value, 0);
  EXPECT_EQ(hsl(single_pinch(2, 4, ExponentVector{2, 2}), Characteristic(3)).value, 1);
  EXPECT_EQ(hsl(single_pinch(3, 2, ExponentVector{1, 1, 0}), Characteristic(2)).value, 1);
}

TEST(Hsl, ZeroExactlyForInjectiveTypes) {
  for (int p : {2, 3}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (Coord d = 2; d <= 4; ++d) {
        for (const auto& m : veronese_generators(n, d).members) {
          auto r = f_singularity(single_pinch(n, d, m), Characteristic(p));
          const bool injective = r.ftype != FType::FNilpotent;
          EXPECT_EQ(r.hsl.value == 0, injective);
          EXPECT_LE(r.hsl.value, 1);
          if (r.fte.kind == FteValue::Kind::Exact && r.fte.value == 0) {
            EXPECT_EQ(r.fte.rationale, "every parameter ideal Frobenius closed");
          }
        }
      }
    }
  }
}

TEST(Fte, HandTable) {
  for (const auto& c : fte_table()) {
    auto v = fte(c.spec, Characteristic(c.p));
    SCOPED_TRACE(c.spec.describe() + " p=" + std::to_string(c.p));
    EXPECT_EQ(v.kind, c.kind);
    if (c.kind != FteValue::Kind::Unknown) EXPECT_EQ(v.value, c.value);
  }
}

TEST(MultipinchIndex, Examples) {
  EXPECT_EQ(multipinch_nilpotency_index(pinch_spec(3, 3, {ExponentVector{1, 1, 1}}, true), Characteristic(2)), 1);
  // (1,2) has max d-1, so it is a single pinch; 2*(1,2) = (0,3)+(2,1) is killed.
  EXPECT_THROW(multipinch_nilpotency_index(pinch_spec(2, 3, {ExponentVector{1, 2}}), Characteristic(2)), SpecError);
  auto tr = frobenius_on_cokernel(cokernel_model(single_pinch(2, 3, ExponentVector{1, 2})), Characteristic(2), 18);
  EXPECT_EQ(tr.steps.front().image, ExponentVector({2, 4}));
  EXPECT_TRUE(tr.steps.front().killed);

  auto all6 = pinch_spec(3, 4, multipinch_candidates(3, 4));
  EXPECT_FALSE(is_member(ExponentVector({4, 2, 2}), all6));
  EXPECT_EQ(multipinch_nilpotency_index(all6, Characteristic(2)), 2);
}

TEST(MultipinchIndex, NeverExceedsTheBound) {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (Coord d = 3; d <= 4; ++d) {
      for (const auto& removed : cli::multipinch_removal_sets(n, d)) {
        auto spec = pinch_spec(n, d, removed, true);
        for (int p : {2, 3, 5}) {
          int idx = multipinch_nilpotency_index(spec, Characteristic(p));
          EXPECT_GE(idx, 1);
          EXPECT_LE(idx, ceil_log(multipinch_coordinate_bound(n, d), p));
        }
      }
    }
  }
}
