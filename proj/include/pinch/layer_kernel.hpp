#pragma once

#include <cstdint>
#include <vector>

#include "pinch/lattice.hpp"

namespace pinch {

/// Ranks compositions of a fixed total into n parts onto [0, C(total+n-1, n-1))
/// via the combinatorial number system on stars-and-bars positions.
class CompositionRanker {
 public:
  CompositionRanker(std::size_t parts, Coord total);

  std::uint64_t size() const { return size_; }
  std::uint64_t rank(const Coord* coords) const;

 private:
  std::size_t parts_;
  Coord total_;
  std::uint64_t size_;
  // binom_[k][m] = C(m, k) for k < parts, m <= total + parts - 1.
  std::vector<std::vector<std::uint64_t>> binom_;
};

/// Dense membership tables for layers 0..t_max of a semigroup generated in
/// degree d, optionally restricted to the box [0, box_side)^n.
///
/// Points of the box that are members of a layer are exactly the sums of
/// in-box members of the previous layer with a generator, because the box
/// is closed under subtraction.
class LayerTable {
 public:
  std::size_t n() const { return n_; }
  Coord d() const { return d_; }
  int max_layer() const { return static_cast<int>(layers_.size()) - 1; }
  Coord box_side() const { return box_side_; }

  bool in_box(const ExponentVector& e) const;

  // e must be in the box with degree t*d for some t <= max_layer; other
  // points answer false.
  bool contains(const ExponentVector& e) const;

  std::vector<ExponentVector> members(int t) const;
  // Points of A_{n,d} at layer t (inside the box) that are not members.
  std::vector<ExponentVector> non_members(int t) const;

  std::uint64_t member_count(int t) const;

 private:
  friend LayerTable build_layers_parallel(const SemigroupSpec&, int, Coord, std::size_t);
  friend LayerTable build_layers_serial(const SemigroupSpec&, int, Coord);

  std::vector<ExponentVector> collect(int t, bool want_member) const;

  std::size_t n_ = 0;
  Coord d_ = 0;
  Coord box_side_ = 0;
  std::vector<CompositionRanker> rankers_;
  std::vector<std::vector<std::uint8_t>> layers_;
};

/// OpenMP kernel: each layer is filled by a parallel pull over the box
/// points of that degree (e is a member iff e - g is in the previous layer
/// for some generator g). `box_side` 0 means unbounded. Throws ResourceError
/// if the total table size would exceed `entry_cap`.
LayerTable build_layers_parallel(const SemigroupSpec& spec, int t_max, Coord box_side = 0,
                                 std::size_t entry_cap = 0);

/// Serial reference: each layer is the deduplicated set of sums of the
/// previous layer with every generator. Kept for testing and benchmarks.
LayerTable build_layers_serial(const SemigroupSpec& spec, int t_max, Coord box_side = 0);

}  // namespace pinch
