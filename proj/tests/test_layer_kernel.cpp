#include <gtest/gtest.h>

#include <set>

#include "pinch/errors.hpp"
#include "pinch/layer_kernel.hpp"

using namespace pinch;

TEST(CompositionRanker, IsABijectionOntoItsRange) {
  for (std::size_t parts = 2; parts <= 4; ++parts) {
    for (Coord total = 0; total <= 9; ++total) {
      CompositionRanker r(parts, total);
      auto all = compositions(total, parts);
      ASSERT_EQ(r.size(), all.size());
      std::set<std::uint64_t> seen;
      for (const auto& c : all) {
        auto k = r.rank(c.coords().data());
        EXPECT_LT(k, r.size());
        seen.insert(k);
      }
      EXPECT_EQ(seen.size(), all.size());
    }
  }
}

namespace {

void expect_same(const LayerTable& a, const LayerTable& b) {
  ASSERT_EQ(a.max_layer(), b.max_layer());
  for (int t = 0; t <= a.max_layer(); ++t) {
    EXPECT_EQ(a.members(t), b.members(t)) << "t=" << t;
    EXPECT_EQ(a.non_members(t), b.non_members(t)) << "t=" << t;
    EXPECT_EQ(a.member_count(t), b.member_count(t));
  }
}

}  // namespace

TEST(LayerKernel, ParallelMatchesSerialReference) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (Coord d = 2; d <= 4; ++d) {
      const int t_max = n == 4 ? 4 : 6;
      expect_same(build_layers_parallel(full_veronese(n, d), t_max), build_layers_serial(full_veronese(n, d), t_max));
      for (const auto& m : veronese_generators(n, d).members) {
        auto spec = single_pinch(n, d, m);
        expect_same(build_layers_parallel(spec, t_max), build_layers_serial(spec, t_max));
      }
    }
  }
}

TEST(LayerKernel, BoxedParallelMatchesSerial) {
  auto spec = pinch_spec(3, 4, {ExponentVector{2, 1, 1}, ExponentVector{1, 2, 1}, ExponentVector{1, 1, 2}});
  expect_same(build_layers_parallel(spec, 5, 7), build_layers_serial(spec, 5, 7));
  auto table = build_layers_parallel(spec, 5, 7);
  for (int t = 0; t <= 5; ++t) {
    for (const auto& v : table.members(t)) EXPECT_LT(v.max(), 7);
  }
}

TEST(LayerKernel, ContainsAndBox) {
  auto spec = single_pinch(2, 4, ExponentVector{2, 2});
  auto table = build_layers_parallel(spec, 3);
  EXPECT_TRUE(table.contains(ExponentVector({3, 1})));
  EXPECT_FALSE(table.contains(ExponentVector({2, 2})));
  EXPECT_TRUE(table.contains(ExponentVector({4, 4})));
  EXPECT_FALSE(table.contains(ExponentVector({1, 0})));    // off-layer
  EXPECT_FALSE(table.contains(ExponentVector({20, 0})));   // beyond t_max
  EXPECT_EQ(table.non_members(1), std::vector<ExponentVector>{ExponentVector({2, 2})});
  EXPECT_TRUE(table.non_members(2).empty());
}

TEST(LayerKernel, CapIsEnforced) {
  EXPECT_THROW(build_layers_parallel(full_veronese(4, 5), 10, 0, 100), ResourceError);
}
