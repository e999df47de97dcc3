#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pinch/lattice.hpp"

namespace pinch {

enum class Tristate { Yes, No, Unknown };
const char* to_string(Tristate t);

enum class Normalization {
  SelfNormal,            // max(m) = d, or no removal at all
  NormalizedByVeronese,  // normalization is V_{n,d}
  RegularSpecialCase,    // (n, d, m) = (2, 2, (1,1)): k[x^2, y^2]
};
const char* to_string(Normalization t);

/// A classification and the rule behind each asserted fact.
struct ClassificationReport {
  std::size_t dimension = 0;
  int depth = 0;
  bool cohen_macaulay = false;
  bool generalized_cm = false;
  Tristate gorenstein = Tristate::Unknown;
  Tristate complete_intersection = Tristate::Unknown;
  std::optional<Coord> a_invariant;
  Normalization normalization = Normalization::SelfNormal;
  std::vector<std::string> rules;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

Normalization normalization_type(const SemigroupSpec& spec);

/// Depth from the case table on max(m); 1 for any multipinch, n for V_{n,d}.
int depth(const SemigroupSpec& spec);

ClassificationReport classify(const SemigroupSpec& spec);

/// Monomial basis of P / (x^d, y^d) P for P = P_{2,d,m}, max(m) = d-1.
struct QuotientBasis {
  Coord d = 0;
  std::vector<ExponentVector> basis;
  std::vector<ExponentVector> socle;
};

/// Enumerates members up to degree 3d and throws std::logic_error if any
/// basis element appears above degree 2d. Throws SpecError outside n = 2,
/// max(m) = d-1.
QuotientBasis quotient_basis(const SemigroupSpec& spec);

/// degree(socle generator) - 2d, or nullopt unless the socle has one element.
std::optional<Coord> a_invariant(const QuotientBasis& qb);

/// A binomial relation lhs - rhs among the variables of a presentation,
/// written as exponent vectors over those variables.
struct BinomialRelation {
  std::string name;
  ExponentVector lhs;
  ExponentVector rhs;
};

/// Whether lhs and rhs map to the same monomial when variable k is sent to
/// images[k].
bool relation_holds(const BinomialRelation& rel, const std::vector<ExponentVector>& images);

/// Presentation of P_{3,2,(1,1,0)}: a,b,c,d,e -> x^2, xz, y^2, yz, z^2.
std::vector<ExponentVector> ci_variable_images();
std::vector<BinomialRelation> ci_relations();

/// Both defining relations ae - b^2 and ce - d^2 hold.
bool verify_ci_presentation();

/// P_{2,d,(d,0)} -> Z^2, v -> ((v1+v2)/d, v1). Throws SpecError unless
/// d divides v1 + v2.
ExponentVector lower_veronese_iso(const ExponentVector& v, Coord d);

/// Identifies the image (t, k) of the map above with the point
/// (k, t(d-1) - k) of A_{2,d-1}.
ExponentVector lower_veronese_coordinates(const ExponentVector& image, Coord d);

}  // namespace pinch
