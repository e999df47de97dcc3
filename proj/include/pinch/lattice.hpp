#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pinch {

using Coord = std::int64_t;

/// A point of N^n (n >= 2), read as the exponent vector of a monomial.
///
/// Immutable after construction. Ordering is lexicographic on coordinates,
/// which is the canonical order for every sorted set in this library.
class ExponentVector {
 public:
  explicit ExponentVector(std::vector<Coord> coords);
  ExponentVector(std::initializer_list<Coord> coords);

  static ExponentVector zero(std::size_t n);

  std::size_t size() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Coord> coords() const { return coords_; }

  Coord degree() const;
  Coord max() const;
  bool is_zero() const;

  // True iff other <= *this coordinatewise.
  bool dominates(const ExponentVector& other) const;

  // Checked: throws OverflowError instead of wrapping.
  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector scaled(Coord factor) const;

  // *this - other, or nullopt if some coordinate would go negative.
  std::optional<ExponentVector> minus(const ExponentVector& other) const;

  std::string to_string() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Coord> coords_;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

// Parses "1,1,1" (whitespace tolerated). Throws SpecError.
ExponentVector parse_exponent_vector(const std::string& text);

Coord checked_add(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All weak compositions of `total` into `parts` nonnegative parts, in
/// ascending lexicographic order.
std::vector<ExponentVector> compositions(Coord total, std::size_t parts);

/// The (i,j)-perturbation: +1 at index i, -1 at index j (0-based).
/// Throws SpecError unless i != j are valid indices with a[j] > 0.
ExponentVector perturb(const ExponentVector& a, std::size_t i, std::size_t j);

/// T_{n,d}: every exponent vector of degree exactly d, sorted.
struct GeneratorSet {
  std::size_t n = 0;
  Coord d = 0;
  std::vector<ExponentVector> members;
};

GeneratorSet veronese_generators(std::size_t n, Coord d);

enum class SpecKind { FullVeronese, SinglePinch, MultiPinch };

const char* to_string(SpecKind kind);

/// The semigroup generated by T_{n,d} minus a set of removed vectors.
///
/// A single removed vector gives a pinched Veronese semigroup with no further
/// constraint. A multipinch (more than one removal, or a single removal
/// explicitly requested as a multipinch) requires d > 2 and every removed
/// vector to have max < d - 1, which is the family whose gap set is finite.
class SemigroupSpec {
 public:
  std::size_t n() const { return n_; }
  Coord d() const { return d_; }
  SpecKind kind() const { return kind_; }
  const std::vector<ExponentVector>& removed() const { return removed_; }
  const std::vector<ExponentVector>& generators() const { return generators_; }

  // The single removed vector. Throws SpecError unless kind is SinglePinch.
  const ExponentVector& pinched() const;

  std::string describe() const;

  friend bool operator==(const SemigroupSpec&, const SemigroupSpec&) = default;

 private:
  friend SemigroupSpec pinch_spec(std::size_t, Coord, std::vector<ExponentVector>, bool);

  std::size_t n_ = 0;
  Coord d_ = 0;
  SpecKind kind_ = SpecKind::FullVeronese;
  std::vector<ExponentVector> removed_;
  std::vector<ExponentVector> generators_;
};

/// Validating constructor. `as_multipinch` forces the multipinch constraints
/// (and kind) even for a single removed vector.
SemigroupSpec pinch_spec(std::size_t n, Coord d, std::vector<ExponentVector> removed,
                         bool as_multipinch = false);

inline SemigroupSpec full_veronese(std::size_t n, Coord d) { return pinch_spec(n, d, {}); }

inline SemigroupSpec single_pinch(std::size_t n, Coord d, ExponentVector m) {
  return pinch_spec(n, d, {std::move(m)});
}

/// Removable vectors for a multipinch: those of T_{n,d} with max < d - 1.
std::vector<ExponentVector> multipinch_candidates(std::size_t n, Coord d);

/// Rational cone spanned by a generator set, as integer facet inequalities.
/// Gaps are measured inside this cone: a Veronese point outside it is not a
/// hole, just a direction the semigroup never reaches.
class GeneratorCone {
 public:
  explicit GeneratorCone(const std::vector<ExponentVector>& generators);

  bool contains(const ExponentVector& v) const;
  /// Inward normals, primitive and sorted.
  const std::vector<std::vector<Coord>>& facets() const { return facets_; }
  bool is_orthant() const { return orthant_; }

 private:
  std::vector<std::vector<Coord>> facets_;
  bool orthant_ = false;
};

}  // namespace pinch
