#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace fpclust {

/// Invalid input or a violated operation contract. The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured search-space or resource limit was exceeded. The CLI maps this to exit code 2.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
  CapacityError(const std::string& what, std::uint64_t lower, std::uint64_t upper)
      : std::runtime_error(what), bounds_(Bounds{lower, upper}) {}

  struct Bounds {
    std::uint64_t lower = 0;  // best proven lower bound when the search stopped
    std::uint64_t upper = 0;  // best feasible value found so far
  };

  const std::optional<Bounds>& bounds() const { return bounds_; }

 private:
  std::optional<Bounds> bounds_;
};

}  // namespace fpclust
