#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "pinch/errors.hpp"
#include "pinch/membership.hpp"

using namespace pinch;

namespace {

// Independent oracle: all sums of exactly t generators, by plain set
// iteration with no memo and no bitmaps.
std::set<ExponentVector> sums_of(const SemigroupSpec& spec, int t) {
  std::set<ExponentVector> layer{ExponentVector::zero(spec.n())};
  for (int i = 0; i < t; ++i) {
    std::set<ExponentVector> next;
    for (const auto& a : layer) {
      for (const auto& g : spec.generators()) next.insert(a + g);
    }
    layer = std::move(next);
  }
  return layer;
}

std::vector<SemigroupSpec> sample_specs() {
  std::vector<SemigroupSpec> out;
  for (std::size_t n = 2; n <= 3; ++n) {
    for (Coord d = 2; d <= 4; ++d) {
      out.push_back(full_veronese(n, d));
      for (const auto& m : veronese_generators(n, d).members) out.push_back(single_pinch(n, d, m));
    }
  }
  out.push_back(pinch_spec(3, 4, {ExponentVector{2, 1, 1}, ExponentVector{1, 1, 2}}));
  return out;
}

}  // namespace

TEST(IsMember, Examples) {
  auto p22 = single_pinch(2, 4, ExponentVector{2, 2});
  auto p31 = single_pinch(2, 4, ExponentVector{3, 1});
  EXPECT_TRUE(is_member(ExponentVector({3, 1}), p22));
  EXPECT_FALSE(is_member(ExponentVector({2, 2}), p22));
  EXPECT_FALSE(is_member(ExponentVector({7, 1}), p31));
  EXPECT_TRUE(is_member(ExponentVector({6, 2}), p31));
}

TEST(IsMember, EdgeInputs) {
  auto s = single_pinch(2, 4, ExponentVector{2, 2});
  EXPECT_TRUE(is_member(ExponentVector({0, 0}), s));
  EXPECT_FALSE(is_member(ExponentVector({1, 2}), s));       // degree not a multiple of d
  EXPECT_FALSE(is_member(ExponentVector({4, 0, 0}), s));    // wrong arity
}

TEST(Decompose, Examples) {
  auto d = decompose(ExponentVector({6, 2}), single_pinch(2, 4, ExponentVector{3, 1}));
  ASSERT_TRUE(d.has_value());
  std::vector<ExponentVector> expect{{4, 0}, {2, 2}};
  EXPECT_EQ(d->parts, expect);
  EXPECT_EQ(d->target, ExponentVector({6, 2}));

  EXPECT_FALSE(decompose(ExponentVector({1, 1, 1}), single_pinch(3, 3, ExponentVector{1, 1, 1})).has_value());
  EXPECT_FALSE(decompose(ExponentVector({3, 3}), single_pinch(2, 2, ExponentVector{1, 1})).has_value());
}

TEST(LayerMembers, Examples) {
  auto s = single_pinch(2, 2, ExponentVector{1, 1});
  EXPECT_EQ(layer_members(s, 0), std::vector<ExponentVector>{ExponentVector::zero(2)});
  EXPECT_EQ(layer_members(s, 1), s.generators());
  std::vector<ExponentVector> expect{{0, 4}, {2, 2}, {4, 0}};
  EXPECT_EQ(layer_members(s, 2), expect);
}

TEST(Membership, ConsistentWithIndependentLayers) {
  for (const auto& spec : sample_specs()) {
    MembershipOracle oracle(spec);
    for (int t = 0; t <= 8; ++t) {
      if (spec.n() == 3 && t > 6) break;  // keeps the set oracle quick
      auto truth = sums_of(spec, t);
      auto dense = layer_members(spec, t);
      EXPECT_EQ(std::vector<ExponentVector>(truth.begin(), truth.end()), dense) << spec.describe() << " t=" << t;
      for (const auto& e : compositions(t * spec.d(), spec.n())) {
        EXPECT_EQ(oracle.is_member(e), truth.count(e) == 1) << spec.describe() << " e=" << e.to_string();
      }
    }
  }
}

TEST(Membership, ClosedUnderAddition) {
  for (const auto& spec : sample_specs()) {
    std::vector<ExponentVector> members;
    for (int t = 1; t <= 3; ++t) {
      for (auto& v : layer_members(spec, t)) members.push_back(std::move(v));
    }
    MembershipOracle oracle(spec);
    for (std::size_t i = 0; i < members.size(); i += 3) {
      for (std::size_t j = 0; j < members.size(); j += 5) {
        EXPECT_TRUE(oracle.is_member(members[i] + members[j]));
      }
    }
  }
}

TEST(Membership, FullVeroneseIsEveryDegreeMultiple) {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (Coord d = 2; d <= 4; ++d) {
      MembershipOracle oracle(full_veronese(n, d));
      const Coord side = 4 * d + 1;
      std::vector<Coord> c(n, 0);
      while (true) {
        ExponentVector e(c);
        EXPECT_EQ(oracle.is_member(e), e.degree() % d == 0) << e.to_string();
        std::size_t k = 0;
        while (k < n && ++c[k] == side) c[k++] = 0;
        if (k == n) break;
      }
    }
  }
}

TEST(Membership, WitnessesAreSound) {
  for (const auto& spec : sample_specs()) {
    MembershipOracle oracle(spec);
    std::set<ExponentVector> gens(spec.generators().begin(), spec.generators().end());
    for (int t = 0; t <= 4; ++t) {
      for (const auto& e : compositions(t * spec.d(), spec.n())) {
        auto w = oracle.decompose(e);
        ASSERT_EQ(w.has_value(), oracle.is_member(e));
        if (!w) continue;
        EXPECT_EQ(static_cast<int>(w->parts.size()), t);
        ExponentVector sum = ExponentVector::zero(spec.n());
        for (const auto& g : w->parts) {
          EXPECT_TRUE(gens.count(g)) << g.to_string();
          sum = sum + g;
        }
        EXPECT_EQ(sum, e);
      }
    }
  }
}

TEST(Membership, DeterministicAcrossOracles) {
  auto spec = single_pinch(3, 3, ExponentVector{1, 1, 1});
  MembershipOracle a(spec), b(spec);
  for (const auto& e : compositions(12, 3)) {
    auto wa = a.decompose(e);
    auto wb = b.decompose(e);
    ASSERT_EQ(wa.has_value(), wb.has_value());
    if (wa) EXPECT_EQ(wa->parts, wb->parts);
  }
}

TEST(Membership, CapOverflowIsExplicit) {
  MembershipOracle tiny(single_pinch(3, 3, ExponentVector{1, 1, 1}), 4);
  EXPECT_THROW(tiny.is_member(ExponentVector({10, 10, 10})), ResourceError);
}

TEST(Membership, CapFromEnvironment) {
  ::setenv("PINCHVER_MEMO_CAP", "1234", 1);
  EXPECT_EQ(default_memo_cap(), 1234u);
  ::setenv("PINCHVER_MEMO_CAP", "junk", 1);
  EXPECT_EQ(default_memo_cap(), kDefaultMemoCap);
  ::unsetenv("PINCHVER_MEMO_CAP");
  EXPECT_EQ(default_memo_cap(), kDefaultMemoCap);
}
