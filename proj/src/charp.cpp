#include "pinch/charp.hpp"

#include <algorithm>
#include <stdexcept>

#include "pinch/errors.hpp"
#include "pinch/membership.hpp"

namespace pinch {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

Characteristic::Characteristic(long long p) : p_(0) {
  if (!is_prime(p)) throw SpecError("characteristic must be prime, got " + std::to_string(p));
  if (p > kMaxPrime) {
    throw SpecError("characteristic " + std::to_string(p) + " exceeds the supported maximum " +
                    std::to_string(kMaxPrime));
  }
  p_ = static_cast<int>(p);
}

int ceil_log(Coord x, int p) {
  if (p < 2) throw SpecError("log base must be >= 2");
  int e = 0;
  Coord power = 1;
  while (power < x) {
    power = checked_mul(power, p);
    ++e;
  }
  return e;
}

const char* to_string(FType t) {
  switch (t) {
    case FType::FRegular: return "F-regular";
    case FType::FNilpotent: return "F-nilpotent";
    case FType::FInjective: return "F-injective";
    case FType::Regular: return "regular";
  }
  return "?";
}

const char* to_string(FteValue::Kind k) {
  switch (k) {
    case FteValue::Kind::Exact: return "exact";
    case FteValue::Kind::Bound: return "bound";
    case FteValue::Kind::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(FamilyVerdict v) {
  switch (v) {
    case FamilyVerdict::KilledInOneStep: return "killed-in-one-step";
    case FamilyVerdict::PersistsForever: return "persists";
    case FamilyVerdict::BoundedBy: return "bounded";
  }
  return "?";
}

bool FrobeniusTrace::all_killed() const {
  return std::all_of(steps.begin(), steps.end(), [](const TraceStep& s) { return s.killed; });
}

bool FrobeniusTrace::all_persist() const {
  return std::none_of(steps.begin(), steps.end(), [](const TraceStep& s) { return s.killed; });
}

FrobeniusTrace frobenius_on_cokernel(const CokernelModel& ck, Characteristic p, Coord truncation) {
  if (ck.gap.empty()) throw SpecError("cokernel of " + ck.spec.describe() + " is zero");
  const int q = p.value();
  FrobeniusTrace trace;
  trace.p = q;
  trace.truncation = truncation;

  const bool multipinch = ck.spec.kind() == SpecKind::MultiPinch;
  if (multipinch) {
    trace.family = FamilyVerdict::BoundedBy;
    trace.family_bound = ceil_log(multipinch_coordinate_bound(ck.spec.n(), ck.spec.d()), q);
  } else if (ck.gap.form() == GapForm::OddOddFamily && q != 2) {
    trace.family = FamilyVerdict::PersistsForever;
    trace.family_bound = 0;
  } else {
    trace.family = FamilyVerdict::KilledInOneStep;
    trace.family_bound = 1;
  }

  MembershipOracle oracle(ck.spec);
  for (const auto& v : ck.gap.materialize(truncation)) {
    ExponentVector image = v.scaled(q);
    bool killed = oracle.is_member(image);
    if (!killed && !ck.gap.contains(image)) {
      throw std::logic_error("Frobenius image " + image.to_string() + " is neither a member nor a gap");
    }
    trace.steps.push_back({v, std::move(image), killed});
  }

  if (trace.all_killed()) {
    trace.nilpotency_index = 1;
  } else if (!trace.all_persist() || multipinch) {
    const int max_steps = std::max(trace.family_bound, 1);
    int worst = 1;
    for (const auto& s : trace.steps) {
      if (s.killed) continue;
      ExponentVector cur = s.image;
      int found = -1;
      for (int e = 2; e <= max_steps; ++e) {
        cur = cur.scaled(q);
        if (oracle.is_member(cur)) {
          found = e;
          break;
        }
      }
      if (found < 0) {
        worst = -1;
        break;
      }
      worst = std::max(worst, found);
    }
    if (worst > 0) trace.nilpotency_index = worst;
  }
  return trace;
}

namespace {

struct SingleCase {
  std::size_t n;
  Coord d;
  Coord top;
};

SingleCase single_case(const SemigroupSpec& spec) {
  return {spec.n(), spec.d(), spec.pinched().max()};
}

}  // namespace

FSingularityReport f_singularity(const SemigroupSpec& spec, Characteristic p) {
  FSingularityReport r;
  r.p = p.value();
  switch (spec.kind()) {
    case SpecKind::FullVeronese:
      r.ftype = FType::FRegular;
      r.f_pure = Tristate::Yes;
      r.rules = {"ftype: V_{n,d} is a direct summand of a polynomial ring, F-regular"};
      break;
    case SpecKind::MultiPinch:
      r.ftype = FType::FNilpotent;
      r.f_pure = Tristate::No;
      r.rules = {"ftype: finite cokernel in positive degrees, Frobenius is nilpotent on it",
                 "f-pure: no, Frobenius on H^1 is nilpotent and nonzero so not F-injective"};
      break;
    case SpecKind::SinglePinch: {
      const auto [n, d, top] = single_case(spec);
      if (top == d) {
        r.ftype = FType::FRegular;
        r.f_pure = Tristate::Yes;
        r.rules = {"ftype: max(m)=d, direct summand of a polynomial ring, F-regular",
                   "f-pure: implied by F-regularity (all ideals tightly closed)"};
      } else if (n == 2 && d == 2) {
        r.ftype = FType::Regular;
        r.f_pure = Tristate::Yes;
        r.rules = {"ftype: P_{2,2,(1,1)} = k[x^2,y^2] is regular"};
      } else if (d > 2) {
        r.ftype = FType::FNilpotent;
        r.f_pure = Tristate::No;
        r.rules = {"ftype: d>2, max(m)<d: Frobenius kills the cokernel in one step, F-nilpotent",
                   "f-pure: no, not F-injective"};
      } else if (p.value() == 2) {
        r.ftype = FType::FNilpotent;
        r.f_pure = Tristate::No;
        r.rules = {"ftype: d=2, p=2: x1^2 x2^2 lies in P, the cokernel is killed, F-nilpotent",
                   "f-pure: no, not F-injective"};
      } else {
        r.ftype = FType::FInjective;
        if (n == 3) {
          r.f_pure = Tristate::Yes;
          r.rules = {"ftype: d=2, p odd: x1^p x2^p stays outside P, Frobenius is injective, F-injective",
                     "f-pure: Gorenstein and F-injective, hence F-pure"};
        } else {
          r.f_pure = Tristate::Unknown;
          r.rules = {"ftype: d=2, p odd: x1^p x2^p stays outside P, Frobenius is injective, F-injective",
                     "f-pure: open for n>3 in odd characteristic"};
        }
      }
      break;
    }
  }
  r.hsl = hsl(spec, p);
  r.fte = fte(spec, p);
  return r;
}

HslValue hsl(const SemigroupSpec& spec, Characteristic p) {
  if (spec.kind() == SpecKind::MultiPinch) return {multipinch_nilpotency_index(spec, p), true};
  if (spec.kind() == SpecKind::FullVeronese) return {0, true};
  const auto [n, d, top] = single_case(spec);
  const bool f_injective = top == d || (n == 2 && d == 2) || (d == 2 && p.value() > 2);
  return {f_injective ? 0 : 1, true};
}

FteValue fte(const SemigroupSpec& spec, Characteristic p) {
  const int q = p.value();
  auto exact = [](long long v, std::string formula, std::string why) {
    return FteValue{FteValue::Kind::Exact, v, std::move(formula), std::move(why)};
  };
  auto bound = [](long long v, std::string formula, std::string why) {
    return FteValue{FteValue::Kind::Bound, v, std::move(formula), std::move(why)};
  };
  const std::string closed = "every parameter ideal Frobenius closed";

  if (spec.kind() == SpecKind::FullVeronese) return exact(0, "0", closed);
  if (spec.kind() == SpecKind::MultiPinch) {
    const auto n = static_cast<long long>(spec.n());
    const int e = ceil_log(multipinch_coordinate_bound(spec.n(), spec.d()), q);
    return bound(n * e, "n*ceil(log_p((n-1)(d^2-d)))",
                 "Fte <= n*HSL(H^1), HSL(H^1) <= ceil(log_p((n-1)(d^2-d)))");
  }
  const auto [n, d, top] = single_case(spec);
  const auto nn = static_cast<std::uint64_t>(n);
  if (top == d || (n == 2 && d == 2) || (n == 3 && d == 2 && q > 2)) return exact(0, "0", closed);
  if (d > 2 && top == d - 1) {
    if (n == 2) return exact(1, "1", "Cohen-Macaulay, so Fte = HSL = 1");
    return bound(static_cast<long long>(binomial(nn, 2)), "binom(n,2)", "binomial bound over local cohomology, HSL(H^2) = 1");
  }
  if (d == 2 && q == 2) {
    if (n == 3) return exact(1, "1", "Cohen-Macaulay, so Fte = HSL = 1");
    return bound(static_cast<long long>(binomial(nn, 3)), "binom(n,3)", "binomial bound over local cohomology, HSL(H^3) = 1");
  }
  if (top < d - 1) return bound(static_cast<long long>(n), "n", "binomial bound over local cohomology, HSL(H^1) = 1");
  return FteValue{FteValue::Kind::Unknown, 0, "", "F-injective, neither F-nilpotent nor Cohen-Macaulay"};
}

int multipinch_nilpotency_index(const SemigroupSpec& spec, Characteristic p) {
  require_multipinch_family(spec);
  const int q = p.value();
  const int limit = ceil_log(multipinch_coordinate_bound(spec.n(), spec.d()), q);
  auto pending = multipinch_gap_set(spec);
  MembershipOracle oracle(spec);
  int e = 0;
  while (!pending.empty()) {
    ++e;
    if (e > limit) {
      throw std::logic_error("nilpotency index of " + spec.describe() + " exceeds ceil(log_p bound)=" +
                             std::to_string(limit));
    }
    std::vector<ExponentVector> next;
    for (const auto& v : pending) {
      ExponentVector image = v.scaled(q);
      if (!oracle.is_member(image)) next.push_back(std::move(image));
    }
    pending = std::move(next);
  }
  return e;
}

}  // namespace pinch
