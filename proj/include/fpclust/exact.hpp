#pragma once

#include <cstdint>

#include "fpclust/fingerprint.hpp"
#include "fpclust/objectives.hpp"
#include "fpclust/partition.hpp"

namespace fpclust {

struct OracleResult {
  Objective objective = Objective::Cmv;
  std::uint64_t optimum = 0;
  Partition witness;           // validates and re-evaluates to the optimum
  std::uint64_t explored = 0;  // search nodes visited
};

struct AssignmentOptions {
  /// Cap on the product of per-member resolution counts.
  std::uint64_t node_limit = std::uint64_t{1} << 24;
};

/// Exhaustive oracle for any objective: enumerates every way of assigning each
/// member one of its resolutions, groups members sharing a resolved vector
/// into clusters, and keeps the best value (first optimum found wins).
///
/// This reaches a global optimum because any valid cluster has a common
/// resolution, and merging clusters that end up with the same resolved vector
/// never worsens any of the three objectives.
OracleResult exact_by_assignment(const Instance& inst, Objective objective,
                                 const AssignmentOptions& opts = {});

struct SetCoverOptions {
  double timeout_seconds = 60.0;  // <= 0 disables the deadline
};

/// CMV-only oracle: branch-and-bound minimum set cover over the candidate
/// resolutions' member sets. Practical well past the assignment oracle's range
/// when p is small. Throws CapacityError carrying the best known bounds on
/// timeout.
OracleResult exact_cmv_setcover(const Instance& inst, const SetCoverOptions& opts = {});

struct RatioOptions {
  AssignmentOptions assignment;
  SetCoverOptions setcover;
};

struct RatioReport {
  std::uint64_t greedy_value = 0;
  std::uint64_t optimum = 0;
  /// opt/greedy for IECMV (maximization); greedy/opt for OECMV and CMV
  /// (minimization). 0/0 reports 1.0.
  double ratio = 1.0;
  Evaluation greedy_evaluation;
};

RatioReport ratio_report(const Instance& inst, Objective objective,
                         const RatioOptions& opts = {});

}  // namespace fpclust
