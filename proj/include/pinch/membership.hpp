#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pinch/lattice.hpp"

namespace pinch {

/// A witness that `target` lies in a semigroup: generators summing to it.
struct Decomposition {
  ExponentVector target;
  std::vector<ExponentVector> parts;
};

inline constexpr std::size_t kDefaultMemoCap = 10'000'000;

/// Memo cap from PINCHVER_MEMO_CAP if set to a positive integer, else
/// kDefaultMemoCap.
std::size_t default_memo_cap();

/// Memoized top-down membership test for one semigroup.
///
/// member(e) holds iff e = 0 or some generator g <= e has member(e - g).
/// Generators are tried in descending lexicographic order and the first
/// witness wins. The memo is private to the oracle, so use one oracle per
/// thread. Inserting past the cap throws ResourceError.
class MembershipOracle {
 public:
  explicit MembershipOracle(SemigroupSpec spec, std::size_t memo_cap = default_memo_cap());

  const SemigroupSpec& spec() const { return spec_; }

  bool is_member(const ExponentVector& e);
  std::optional<Decomposition> decompose(const ExponentVector& e);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  // Index into descending_ of the first witness generator, or -1.
  int resolve(const ExponentVector& e);

  SemigroupSpec spec_;
  std::vector<ExponentVector> descending_;
  std::size_t memo_cap_;
  std::unordered_map<ExponentVector, int, ExponentVectorHash> memo_;
};

bool is_member(const ExponentVector& e, const SemigroupSpec& spec);
std::optional<Decomposition> decompose(const ExponentVector& e, const SemigroupSpec& spec);

/// Sums of exactly t generators, i.e. every member of degree t*d, sorted.
std::vector<ExponentVector> layer_members(const SemigroupSpec& spec, int t);

}  // namespace pinch
