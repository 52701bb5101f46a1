#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fpclust/fingerprint.hpp"
#include "fpclust/partition.hpp"

namespace fpclust {

enum class Objective { Cmv, Iecmv, Oecmv };

const char* to_string(Objective objective);
Objective objective_from_string(std::string_view text);

struct Evaluation {
  std::uint64_t cmv = 0;     // cluster count
  std::uint64_t iecmv = 0;   // compatible pairs co-clustered
  std::uint64_t oecmv = 0;   // compatible pairs split across clusters
  std::uint64_t total_compatible_pairs = 0;

  std::uint64_t value(Objective objective) const;

  bool operator==(const Evaluation&) const = default;
};

struct ValidationResult {
  enum class Kind {
    Ok,
    EmptyCluster,
    DuplicateMember,
    MissingMember,
    IncompatiblePair,
    BadWitness,
  };

  Kind kind = Kind::Ok;
  std::size_t cluster = 0;   // cluster ordinal for cluster-scoped violations
  std::uint32_t first = 0;   // violating index (or first of the violating pair)
  std::uint32_t second = 0;  // second of the violating pair, when applicable

  bool ok() const { return kind == Kind::Ok; }
  explicit operator bool() const { return ok(); }
  std::string message() const;
};

/// Checks the partition invariants: nonempty clusters, disjoint cover, pairwise
/// compatibility inside each cluster, witnesses resolving every member.
/// Reports the first violation; member indices outside the instance throw.
ValidationResult validate(const Instance& inst, const Partition& part);

/// Number of unordered index pairs whose fingerprints are compatible.
std::uint64_t total_compatible_pairs(const Instance& inst);

/// Evaluates a valid partition under all three objectives. oecmv is computed
/// by subtraction; iecmv + oecmv == total_compatible_pairs is an identity for
/// valid partitions. Throws DomainError carrying the violation otherwise.
Evaluation evaluate(const Instance& inst, const Partition& part);

}  // namespace fpclust
