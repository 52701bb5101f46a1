#pragma once

#include <cstdint>
#include <vector>

#include "fpclust/fingerprint.hpp"

namespace fpclust {

struct Cluster {
  std::vector<std::uint32_t> members;  // ascending instance indices
  ResolvedVector witness;              // common resolution of every member

  bool operator==(const Cluster&) const = default;
};

/// Disjoint covering clusters of instance indices. Producers keep the
/// canonical order (clusters sorted by their smallest member).
struct Partition {
  std::vector<Cluster> clusters;

  std::size_t size() const { return clusters.size(); }
  bool empty() const { return clusters.empty(); }

  /// index -> cluster ordinal. Throws DomainError unless the clusters are a
  /// disjoint cover of 0..n-1.
  std::vector<std::uint32_t> assignment(std::size_t n) const;

  /// Sorts members within clusters and clusters by smallest member.
  void sort_canonical();

  bool operator==(const Partition&) const = default;
};

}  // namespace fpclust
