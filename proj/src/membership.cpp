#include "pinch/membership.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "pinch/errors.hpp"
#include "pinch/layer_kernel.hpp"

namespace pinch {

std::size_t default_memo_cap() {
  if (const char* env = std::getenv("PINCHVER_MEMO_CAP")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultMemoCap;
}

MembershipOracle::MembershipOracle(SemigroupSpec spec, std::size_t memo_cap)
    : spec_(std::move(spec)), descending_(spec_.generators()), memo_cap_(memo_cap) {
  std::sort(descending_.begin(), descending_.end(), std::greater<>());
}

int MembershipOracle::resolve(const ExponentVector& target) {
  if (auto it = memo_.find(target); it != memo_.end()) return it->second;

  struct Frame {
    ExponentVector e;
    std::size_t next;
  };
  auto remember = [&](const ExponentVector& e, int value) {
    if (memo_.size() >= memo_cap_) {
      throw ResourceError("membership memo for " + spec_.describe() + " exceeded " +
                          std::to_string(memo_cap_) + " entries");
    }
    memo_.emplace(e, value);
  };

  // Degrees strictly decrease along the stack, so no frame repeats.
  std::vector<Frame> stack;
  stack.push_back({target, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == descending_.size()) {
      remember(f.e, -1);
      stack.pop_back();
      continue;
    }
    auto rest = f.e.minus(descending_[f.next]);
    if (!rest) {
      ++f.next;
      continue;
    }
    if (rest->is_zero()) {
      remember(f.e, static_cast<int>(f.next));
      stack.pop_back();
      continue;
    }
    if (auto it = memo_.find(*rest); it != memo_.end()) {
      if (it->second >= 0) {
        remember(f.e, static_cast<int>(f.next));
        stack.pop_back();
      } else {
        ++f.next;
      }
      continue;
    }
    stack.push_back({std::move(*rest), 0});
  }
  return memo_.at(target);
}

bool MembershipOracle::is_member(const ExponentVector& e) {
  if (e.size() != spec_.n()) return false;
  if (e.is_zero()) return true;
  if (e.degree() % spec_.d() != 0) return false;
  return resolve(e) >= 0;
}

std::optional<Decomposition> MembershipOracle::decompose(const ExponentVector& e) {
  if (!is_member(e)) return std::nullopt;
  Decomposition out{e, {}};
  ExponentVector cur = e;
  while (!cur.is_zero()) {
    const ExponentVector& g = descending_[static_cast<std::size_t>(resolve(cur))];
    out.parts.push_back(g);
    cur = *cur.minus(g);
  }
  return out;
}

bool is_member(const ExponentVector& e, const SemigroupSpec& spec) {
  return MembershipOracle(spec).is_member(e);
}

std::optional<Decomposition> decompose(const ExponentVector& e, const SemigroupSpec& spec) {
  return MembershipOracle(spec).decompose(e);
}

std::vector<ExponentVector> layer_members(const SemigroupSpec& spec, int t) {
  if (t < 0) throw SpecError("layer index must be >= 0");
  return build_layers_parallel(spec, t).members(t);
}

}  // namespace pinch
