#pragma once

#include <stdexcept>
#include <string>

namespace pinch {

// Invalid user input: bad parameters, removed vectors or flags.
class SpecError : public std::invalid_argument {
 public:
  explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

// A table or exponent computation outgrew its budget.
// Oracle answers are never approximated; the computation stops instead.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

class OverflowError : public ResourceError {
 public:
  explicit OverflowError(const std::string& what) : ResourceError(what) {}
};

}  // namespace pinch
