#include "pinch/layer_kernel.hpp"

#include <omp.h>

#include <algorithm>
#include <set>

#include "pinch/errors.hpp"
#include "pinch/membership.hpp"

namespace pinch {

CompositionRanker::CompositionRanker(std::size_t parts, Coord total)
    : parts_(parts), total_(total), binom_(parts) {
  const auto top = static_cast<std::uint64_t>(total) + parts - 1;
  for (std::size_t k = 0; k < parts; ++k) {
    binom_[k].resize(top + 1);
    for (std::uint64_t m = 0; m <= top; ++m) binom_[k][m] = binomial(m, k);
  }
  size_ = binomial(top, parts - 1);
}

std::uint64_t CompositionRanker::rank(const Coord* coords) const {
  std::uint64_t r = 0;
  std::uint64_t prefix = 0;
  for (std::size_t k = 1; k < parts_; ++k) {
    prefix += static_cast<std::uint64_t>(coords[k - 1]);
    r += binom_[k][prefix + k - 1];
  }
  return r;
}

bool LayerTable::in_box(const ExponentVector& e) const {
  if (e.size() != n_) return false;
  if (box_side_ == 0) return true;
  return std::all_of(e.coords().begin(), e.coords().end(), [&](Coord c) { return c < box_side_; });
}

bool LayerTable::contains(const ExponentVector& e) const {
  if (!in_box(e)) return false;
  Coord deg = e.degree();
  if (deg % d_ != 0) return false;
  Coord t = deg / d_;
  if (t > max_layer()) return false;
  return layers_[t][rankers_[t].rank(e.coords().data())] != 0;
}

std::uint64_t LayerTable::member_count(int t) const {
  return static_cast<std::uint64_t>(std::count(layers_.at(t).begin(), layers_.at(t).end(), 1));
}

std::vector<ExponentVector> LayerTable::collect(int t, bool want_member) const {
  std::vector<ExponentVector> out;
  const auto& layer = layers_.at(t);
  for (auto& e : compositions(static_cast<Coord>(t) * d_, n_)) {
    if (!in_box(e)) continue;
    bool member = layer[rankers_[t].rank(e.coords().data())] != 0;
    if (member == want_member) out.push_back(std::move(e));
  }
  return out;
}

std::vector<ExponentVector> LayerTable::members(int t) const { return collect(t, true); }

std::vector<ExponentVector> LayerTable::non_members(int t) const { return collect(t, false); }

namespace {

// Visits every composition of `total` into n parts with each part < side
// (side 0: unbounded) whose first coordinate is `first`.
template <class Visit>
void for_each_box_composition(std::size_t n, Coord total, Coord side, Coord first,
                              std::vector<Coord>& buf, Visit&& visit) {
  buf[0] = first;
  const Coord cap = side == 0 ? total : side - 1;
  auto rec = [&](auto&& self, std::size_t pos, Coord left) -> void {
    if (pos + 1 == n) {
      if (left > cap) return;
      buf[pos] = left;
      visit(buf);
      return;
    }
    // The remaining n-1-pos parts can absorb at most cap each.
    const Coord rest_cap = cap * static_cast<Coord>(n - 1 - pos);
    const Coord lo = std::max<Coord>(0, left - rest_cap);
    const Coord hi = std::min(left, cap);
    for (Coord v = lo; v <= hi; ++v) {
      buf[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 1, total - first);
}

void check_budget(const SemigroupSpec& spec, int t_max, std::size_t cap) {
  std::uint64_t total = 0;
  for (int t = 0; t <= t_max; ++t) {
    total += binomial(static_cast<std::uint64_t>(t) * spec.d() + spec.n() - 1, spec.n() - 1);
    if (total > cap) {
      throw ResourceError("layer table for " + spec.describe() + " up to layer " +
                          std::to_string(t_max) + " exceeds the entry cap of " +
                          std::to_string(cap));
    }
  }
}

}  // namespace

LayerTable build_layers_parallel(const SemigroupSpec& spec, int t_max, Coord box_side,
                                 std::size_t entry_cap) {
  if (t_max < 0) throw SpecError("layer bound must be >= 0");
  check_budget(spec, t_max, entry_cap == 0 ? default_memo_cap() : entry_cap);

  const std::size_t n = spec.n();
  const Coord d = spec.d();
  const auto& gens = spec.generators();
  const std::size_t ng = gens.size();
  std::vector<Coord> flat_gens;
  flat_gens.reserve(ng * n);
  for (const auto& g : gens) flat_gens.insert(flat_gens.end(), g.coords().begin(), g.coords().end());

  LayerTable table;
  table.n_ = n;
  table.d_ = d;
  table.box_side_ = box_side;
  table.rankers_.emplace_back(n, 0);
  table.layers_.emplace_back(1, 1);

  for (int t = 1; t <= t_max; ++t) {
    const Coord total = static_cast<Coord>(t) * d;
    table.rankers_.emplace_back(n, total);
    const CompositionRanker& ranker = table.rankers_.back();
    const CompositionRanker& prev_ranker = table.rankers_[t - 1];
    table.layers_.emplace_back(ranker.size(), 0);
    std::uint8_t* layer = table.layers_.back().data();
    const std::uint8_t* prev = table.layers_[t - 1].data();
    const Coord first_hi = box_side == 0 ? total : std::min(total, box_side - 1);

#pragma omp parallel
    {
      std::vector<Coord> buf(n), diff(n);
#pragma omp for schedule(dynamic, 1)
      for (Coord first = 0; first <= first_hi; ++first) {
        for_each_box_composition(n, total, box_side, first, buf, [&](const std::vector<Coord>& e) {
          for (std::size_t gi = 0; gi < ng; ++gi) {
            const Coord* g = flat_gens.data() + gi * n;
            bool fits = true;
            for (std::size_t k = 0; k < n; ++k) {
              diff[k] = e[k] - g[k];
              if (diff[k] < 0) {
                fits = false;
                break;
              }
            }
            if (fits && prev[prev_ranker.rank(diff.data())]) {
              layer[ranker.rank(e.data())] = 1;
              return;
            }
          }
        });
      }
    }
  }
  return table;
}

LayerTable build_layers_serial(const SemigroupSpec& spec, int t_max, Coord box_side) {
  if (t_max < 0) throw SpecError("layer bound must be >= 0");
  const std::size_t n = spec.n();
  LayerTable table;
  table.n_ = n;
  table.d_ = spec.d();
  table.box_side_ = box_side;

  std::set<ExponentVector> current{ExponentVector::zero(n)};
  for (int t = 0; t <= t_max; ++t) {
    if (t > 0) {
      std::set<ExponentVector> next;
      for (const auto& u : current) {
        for (const auto& g : spec.generators()) {
          ExponentVector s = u + g;
          if (table.in_box(s)) next.insert(std::move(s));
        }
      }
      current = std::move(next);
    }
    table.rankers_.emplace_back(n, static_cast<Coord>(t) * spec.d());
    table.layers_.emplace_back(table.rankers_.back().size(), 0);
    for (const auto& e : current) table.layers_.back()[table.rankers_.back().rank(e.coords().data())] = 1;
  }
  return table;
}

}  // namespace pinch
