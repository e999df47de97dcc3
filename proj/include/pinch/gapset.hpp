#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pinch/lattice.hpp"

namespace pinch {

enum class GapForm {
  Finite,        // an explicit finite set
  LineFamily,    // v[big] = d*s - 1, v[one] = 1 (s >= 1), all else 0
  OddOddFamily,  // v[big], v[one] both odd, all else 0
};

const char* to_string(GapForm form);

/// A_{n,d} minus a sub-semigroup. Infinite forms are never listed without an
/// explicit degree bound; contains() is the authoritative description.
class GapSet {
 public:
  static GapSet finite(std::size_t n, Coord d, std::vector<ExponentVector> members);
  static GapSet line(std::size_t n, Coord d, std::size_t big_axis, std::size_t one_axis);
  static GapSet odd_odd(std::size_t n, std::size_t axis_a, std::size_t axis_b);

  GapForm form() const { return form_; }
  std::size_t n() const { return n_; }
  Coord d() const { return d_; }
  bool is_finite() const { return form_ == GapForm::Finite; }
  bool empty() const { return is_finite() && finite_.empty(); }

  // 0-based axes carrying the family; for LineFamily (big, one).
  std::pair<std::size_t, std::size_t> axes() const { return {axis_a_, axis_b_}; }
  const std::vector<ExponentVector>& finite_members() const { return finite_; }

  bool contains(const ExponentVector& v) const;

  /// Members of degree <= max_degree, sorted.
  std::vector<ExponentVector> materialize(Coord max_degree) const;

  std::string describe() const;

 private:
  GapForm form_ = GapForm::Finite;
  std::size_t n_ = 0;
  Coord d_ = 0;
  std::size_t axis_a_ = 0;
  std::size_t axis_b_ = 0;
  std::vector<ExponentVector> finite_;
};

/// Closed form for a single pinch with removed vector m:
///   max(m) < d-1            -> {m}
///   max(m) = d-1, d > 2     -> line family on the axes carrying d-1 and 1
///   d = 2, max(m) = 1       -> odd-odd family on the two axes carrying 1
///   max(m) = d              -> empty (the pinched semigroup is normal)
/// Coordinates are taken as given; nothing is reordered.
GapSet gap_set_closed_form(const SemigroupSpec& spec);

/// Oracle: points of A_{n,d} at layers 1..t_max inside the generator cone
/// that are not members of the semigroup, from dense layer enumeration.
/// Sorted.
std::vector<ExponentVector> gap_set_bruteforce(const SemigroupSpec& spec, int t_max);

struct GapCheck {
  bool equal = false;
  std::vector<ExponentVector> closed_form_only;
  std::vector<ExponentVector> oracle_only;
};

/// Compares the closed form, materialized to degree t_max*d, with the oracle.
GapCheck verify_gap_equivalence(const SemigroupSpec& spec, int t_max);

/// (n-1)(d^2-d): any point of A_{n,d} with a coordinate at least this large
/// lies in every multipinch semigroup.
Coord multipinch_coordinate_bound(std::size_t n, Coord d);

/// Requires every removed vector to have max < d-1 and d > 2 (the finite
/// family; a single removal is accepted). Throws SpecError otherwise.
void require_multipinch_family(const SemigroupSpec& spec);

/// Complete gap set of a multipinch: exhaustive search of the box
/// [0, bound)^n, outside of which every point is a member.
std::vector<ExponentVector> multipinch_gap_set(const SemigroupSpec& spec);

/// Independent check of the coordinate bound: gaps in [0, box_side)^n that
/// have some coordinate >= (n-1)(d^2-d). Empty when the bound holds there.
std::vector<ExponentVector> multipinch_gaps_beyond_bound(const SemigroupSpec& spec, Coord box_side);

/// The cokernel of the inclusion into V_{n,d}, as its monomial basis.
struct CokernelModel {
  SemigroupSpec spec;
  GapSet gap;
  std::optional<ExponentVector> principal_generator;
};

/// Single pinch: closed-form gaps, generated by m when max(m) < d.
/// Multipinch: the explicit finite gap set, no single generator claimed.
/// Full Veronese or max(m) = d: empty gap, no generator.
CokernelModel cokernel_model(const SemigroupSpec& spec);

/// Gap vectors of degree <= max_degree not of the form generator + member.
/// Empty when the cokernel is principal up to that degree.
std::vector<ExponentVector> principality_violations(const CokernelModel& model, Coord max_degree);

}  // namespace pinch
