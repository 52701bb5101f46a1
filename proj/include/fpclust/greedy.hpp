#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpclust/fingerprint.hpp"
#include "fpclust/partition.hpp"

namespace fpclust {

struct GreedyPick {
  ResolvedVector vector;
  std::uint64_t degree = 0;  // live degree of the pick: members still unplaced
  std::uint64_t taken = 0;   // members placed by the pick (equals degree)

  bool operator==(const GreedyPick&) const = default;
};

struct GreedyTrace {
  std::vector<GreedyPick> picks;  // in pick order
  std::uint64_t iterations = 0;

  bool operator==(const GreedyTrace&) const = default;
};

struct GreedyResult {
  Partition partition;  // canonical order (by smallest member)
  GreedyTrace trace;

  bool operator==(const GreedyResult&) const = default;
};

/// Maximum-degree greedy clustering: repeatedly take the candidate resolution
/// covering the most unplaced members (ties to the lexicographically smallest
/// vector) until every member is placed. Deterministic.
GreedyResult greedy_cluster(const Instance& inst);

/// Same as greedy_cluster, but after `budget` picks the remaining members are
/// placed in singleton clusters. budget == nullopt means unlimited; budget
/// must be >= 1 when present.
GreedyResult greedy_cluster_streamed(const Instance& inst,
                                     std::optional<std::uint64_t> budget);

}  // namespace fpclust
