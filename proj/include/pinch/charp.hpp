#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pinch/classify.hpp"
#include "pinch/gapset.hpp"
#include "pinch/lattice.hpp"

namespace pinch {

/// A prime characteristic 2 <= p <= 10^4, checked by trial division.
class Characteristic {
 public:
  static constexpr int kMaxPrime = 10'000;
  explicit Characteristic(long long p);
  int value() const { return p_; }

 private:
  int p_;
};

bool is_prime(long long p);

/// Smallest e >= 0 with p^e >= x.
int ceil_log(Coord x, int p);

enum class FType { FRegular, FNilpotent, FInjective, Regular };
const char* to_string(FType t);

struct HslValue {
  int value = 0;
  bool exact = true;  // false: value is an upper bound
  friend bool operator==(const HslValue&, const HslValue&) = default;
};

struct FteValue {
  enum class Kind { Exact, Bound, Unknown };
  Kind kind = Kind::Unknown;
  long long value = 0;
  std::string formula;    // e.g. "binom(n,2)"
  std::string rationale;
  friend bool operator==(const FteValue&, const FteValue&) = default;
};
const char* to_string(FteValue::Kind k);

struct FSingularityReport {
  int p = 0;
  FType ftype = FType::FNilpotent;
  Tristate f_pure = Tristate::Unknown;
  HslValue hsl;
  FteValue fte;
  std::vector<std::string> rules;
  friend bool operator==(const FSingularityReport&, const FSingularityReport&) = default;
};

/// What the family structure says about v -> p*v on the whole cokernel.
enum class FamilyVerdict {
  KilledInOneStep,  // finite single-pinch gaps, line families, odd-odd with p = 2
  PersistsForever,  // odd-odd with p odd
  BoundedBy,        // multipinch: index at most ceil(log_p((n-1)(d^2-d)))
};
const char* to_string(FamilyVerdict v);

struct TraceStep {
  ExponentVector source;
  ExponentVector image;  // p * source
  bool killed = false;   // image is a semigroup member
};

struct FrobeniusTrace {
  int p = 0;
  Coord truncation = 0;
  std::vector<TraceStep> steps;
  FamilyVerdict family = FamilyVerdict::KilledInOneStep;
  int family_bound = 1;
  // Smallest e with p^e * v a member for every traced v; nullopt when every
  // traced vector persists (evidence of injectivity).
  std::optional<int> nilpotency_index;

  bool all_killed() const;
  bool all_persist() const;
};

/// Applies v -> p*v to every gap vector of degree <= truncation and checks
/// each image is either a member or again a gap. Throws SpecError for an
/// empty cokernel, std::logic_error if an image is neither.
FrobeniusTrace frobenius_on_cokernel(const CokernelModel& ck, Characteristic p, Coord truncation);

FSingularityReport f_singularity(const SemigroupSpec& spec, Characteristic p);
HslValue hsl(const SemigroupSpec& spec, Characteristic p);
FteValue fte(const SemigroupSpec& spec, Characteristic p);

/// Smallest e such that p^e * v is a member for every gap v of a multipinch,
/// by iterated membership. Throws std::logic_error if it exceeds
/// ceil(log_p((n-1)(d^2-d))).
int multipinch_nilpotency_index(const SemigroupSpec& spec, Characteristic p);

}  // namespace pinch
