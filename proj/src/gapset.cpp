#include "pinch/gapset.hpp"

#include <algorithm>

#include "pinch/errors.hpp"
#include "pinch/layer_kernel.hpp"
#include "pinch/membership.hpp"

namespace pinch {

const char* to_string(GapForm form) {
  switch (form) {
    case GapForm::Finite: return "finite";
    case GapForm::LineFamily: return "line";
    case GapForm::OddOddFamily: return "odd-odd";
  }
  return "?";
}

GapSet GapSet::finite(std::size_t n, Coord d, std::vector<ExponentVector> members) {
  GapSet g;
  g.form_ = GapForm::Finite;
  g.n_ = n;
  g.d_ = d;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  g.finite_ = std::move(members);
  return g;
}

GapSet GapSet::line(std::size_t n, Coord d, std::size_t big_axis, std::size_t one_axis) {
  if (big_axis == one_axis || big_axis >= n || one_axis >= n) throw SpecError("bad line family axes");
  GapSet g;
  g.form_ = GapForm::LineFamily;
  g.n_ = n;
  g.d_ = d;
  g.axis_a_ = big_axis;
  g.axis_b_ = one_axis;
  return g;
}

GapSet GapSet::odd_odd(std::size_t n, std::size_t axis_a, std::size_t axis_b) {
  if (axis_a == axis_b || axis_a >= n || axis_b >= n) throw SpecError("bad odd-odd family axes");
  GapSet g;
  g.form_ = GapForm::OddOddFamily;
  g.n_ = n;
  g.d_ = 2;
  g.axis_a_ = std::min(axis_a, axis_b);
  g.axis_b_ = std::max(axis_a, axis_b);
  return g;
}

namespace {

bool zero_off_axes(const ExponentVector& v, std::size_t a, std::size_t b) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k != a && k != b && v[k] != 0) return false;
  }
  return true;
}

}  // namespace

bool GapSet::contains(const ExponentVector& v) const {
  if (v.size() != n_) return false;
  switch (form_) {
    case GapForm::Finite:
      return std::binary_search(finite_.begin(), finite_.end(), v);
    case GapForm::LineFamily:
      return zero_off_axes(v, axis_a_, axis_b_) && v[axis_b_] == 1 && v[axis_a_] >= d_ - 1 &&
             (v[axis_a_] + 1) % d_ == 0;
    case GapForm::OddOddFamily:
      return zero_off_axes(v, axis_a_, axis_b_) && v[axis_a_] % 2 == 1 && v[axis_b_] % 2 == 1;
  }
  return false;
}

std::vector<ExponentVector> GapSet::materialize(Coord max_degree) const {
  std::vector<ExponentVector> out;
  auto on_axes = [&](Coord a, Coord b) {
    std::vector<Coord> c(n_, 0);
    c[axis_a_] = a;
    c[axis_b_] = b;
    out.emplace_back(std::move(c));
  };
  switch (form_) {
    case GapForm::Finite:
      for (const auto& v : finite_) {
        if (v.degree() <= max_degree) out.push_back(v);
      }
      break;
    case GapForm::LineFamily:
      for (Coord s = 1; d_ * s <= max_degree; ++s) on_axes(d_ * s - 1, 1);
      break;
    case GapForm::OddOddFamily:
      for (Coord a = 1; a + 1 <= max_degree; a += 2) {
        for (Coord b = 1; a + b <= max_degree; b += 2) on_axes(a, b);
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string GapSet::describe() const {
  auto axes_text = [&] {
    return "axes (" + std::to_string(axis_a_ + 1) + "," + std::to_string(axis_b_ + 1) + ")";
  };
  switch (form_) {
    case GapForm::Finite:
      return "finite, " + std::to_string(finite_.size()) + " vector(s)";
    case GapForm::LineFamily:
      return "line (d*s-1, 1) in " + axes_text() + ", d=" + std::to_string(d_);
    case GapForm::OddOddFamily:
      return "odd-odd in " + axes_text();
  }
  return "?";
}

GapSet gap_set_closed_form(const SemigroupSpec& spec) {
  if (spec.kind() == SpecKind::MultiPinch) {
    throw SpecError("no closed form for a multipinch; use the multipinch gap search");
  }
  if (spec.kind() == SpecKind::FullVeronese) {
    throw SpecError("closed form needs a pinched spec; the full Veronese has no gaps");
  }
  const ExponentVector& m = spec.pinched();
  const Coord d = spec.d();
  const std::size_t n = spec.n();
  const Coord top = m.max();
  if (top == d) return GapSet::finite(n, d, {});
  if (top < d - 1) return GapSet::finite(n, d, {m});

  if (d == 2) {
    std::vector<std::size_t> ones;
    for (std::size_t k = 0; k < n; ++k) {
      if (m[k] == 1) ones.push_back(k);
    }
    return GapSet::odd_odd(n, ones.at(0), ones.at(1));
  }
  std::size_t big = 0;
  std::size_t one = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k] == d - 1) big = k;
    if (m[k] == 1) one = k;
  }
  return GapSet::line(n, d, big, one);
}

std::vector<ExponentVector> gap_set_bruteforce(const SemigroupSpec& spec, int t_max) {
  if (t_max < 1) throw SpecError("layer bound must be >= 1");
  LayerTable table = build_layers_parallel(spec, t_max);
  const GeneratorCone cone(spec.generators());
  std::vector<ExponentVector> out;
  for (int t = 1; t <= t_max; ++t) {
    for (auto& v : table.non_members(t)) {
      if (cone.contains(v)) out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GapCheck verify_gap_equivalence(const SemigroupSpec& spec, int t_max) {
  if (spec.kind() != SpecKind::SinglePinch) throw SpecError("gap equivalence needs a single pinch");
  auto closed = gap_set_closed_form(spec).materialize(static_cast<Coord>(t_max) * spec.d());
  auto oracle = gap_set_bruteforce(spec, t_max);
  GapCheck check;
  std::set_difference(closed.begin(), closed.end(), oracle.begin(), oracle.end(),
                      std::back_inserter(check.closed_form_only));
  std::set_difference(oracle.begin(), oracle.end(), closed.begin(), closed.end(),
                      std::back_inserter(check.oracle_only));
  check.equal = check.closed_form_only.empty() && check.oracle_only.empty();
  return check;
}

Coord multipinch_coordinate_bound(std::size_t n, Coord d) {
  return checked_mul(static_cast<Coord>(n) - 1, checked_mul(d, d) - d);
}

void require_multipinch_family(const SemigroupSpec& spec) {
  if (spec.removed().empty()) throw SpecError("multipinch needs at least one removed vector");
  if (spec.d() <= 2) throw SpecError("multipinch requires d > 2");
  for (const auto& m : spec.removed()) {
    if (m.max() >= spec.d() - 1) {
      throw SpecError("removed vector " + m.to_string() + " has max >= d-1; its gap set is not finite");
    }
  }
}

namespace {

std::vector<ExponentVector> box_gaps(const SemigroupSpec& spec, Coord side) {
  const int t_max = static_cast<int>(static_cast<Coord>(spec.n()) * (side - 1) / spec.d());
  LayerTable table = build_layers_parallel(spec, t_max, side);
  const GeneratorCone cone(spec.generators());
  std::vector<ExponentVector> out;
  for (int t = 1; t <= t_max; ++t) {
    for (auto& v : table.non_members(t)) {
      if (cone.contains(v)) out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ExponentVector> multipinch_gap_set(const SemigroupSpec& spec) {
  require_multipinch_family(spec);
  return box_gaps(spec, multipinch_coordinate_bound(spec.n(), spec.d()));
}

std::vector<ExponentVector> multipinch_gaps_beyond_bound(const SemigroupSpec& spec, Coord box_side) {
  require_multipinch_family(spec);
  const Coord bound = multipinch_coordinate_bound(spec.n(), spec.d());
  std::vector<ExponentVector> out;
  for (auto& v : box_gaps(spec, box_side)) {
    if (v.max() >= bound) out.push_back(std::move(v));
  }
  return out;
}

CokernelModel cokernel_model(const SemigroupSpec& spec) {
  switch (spec.kind()) {
    case SpecKind::FullVeronese:
      return {spec, GapSet::finite(spec.n(), spec.d(), {}), std::nullopt};
    case SpecKind::MultiPinch:
      return {spec, GapSet::finite(spec.n(), spec.d(), multipinch_gap_set(spec)), std::nullopt};
    case SpecKind::SinglePinch:
      break;
  }
  const ExponentVector& m = spec.pinched();
  if (m.max() == spec.d()) return {spec, GapSet::finite(spec.n(), spec.d(), {}), std::nullopt};
  return {spec, gap_set_closed_form(spec), m};
}

std::vector<ExponentVector> principality_violations(const CokernelModel& model, Coord max_degree) {
  auto gaps = model.gap.materialize(max_degree);
  if (!model.principal_generator) return gaps;
  MembershipOracle oracle(model.spec);
  std::vector<ExponentVector> bad;
  for (const auto& v : gaps) {
    auto rest = v.minus(*model.principal_generator);
    if (!rest || !oracle.is_member(*rest)) bad.push_back(v);
  }
  return bad;
}

}  // namespace pinch
