#include "fpclust/partition.hpp"

#include <algorithm>

#include "fpclust/error.hpp"

namespace fpclust {

std::vector<std::uint32_t> Partition::assignment(std::size_t n) const {
  constexpr std::uint32_t kUnassigned = ~std::uint32_t{0};
  std::vector<std::uint32_t> owner(n, kUnassigned);
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    for (const std::uint32_t m : clusters[k].members) {
      if (m >= n) {
        throw DomainError("assignment: member index " + std::to_string(m) +
                          " out of range");
      }
      if (owner[m] != kUnassigned) {
        throw DomainError("assignment: member " + std::to_string(m) +
                          " appears in more than one cluster");
      }
      owner[m] = static_cast<std::uint32_t>(k);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (owner[i] == kUnassigned) {
      throw DomainError("assignment: member " + std::to_string(i) + " is not covered");
    }
  }
  return owner;
}

void Partition::sort_canonical() {
  for (Cluster& cluster : clusters) {
    std::sort(cluster.members.begin(), cluster.members.end());
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.members.empty() || b.members.empty()) return a.members.size() < b.members.size();
    return a.members.front() < b.members.front();
  });
}

}  // namespace fpclust
