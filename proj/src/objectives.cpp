#include "fpclust/objectives.hpp"

#include <algorithm>
#include <string>

#include "fpclust/error.hpp"

namespace fpclust {

const char* to_string(Objective objective) {
  switch (objective) {
    case Objective::Cmv:
      return "cmv";
    case Objective::Iecmv:
      return "iecmv";
    case Objective::Oecmv:
      return "oecmv";
  }
  return "?";
}

Objective objective_from_string(std::string_view text) {
  if (text == "cmv") return Objective::Cmv;
  if (text == "iecmv") return Objective::Iecmv;
  if (text == "oecmv") return Objective::Oecmv;
  throw DomainError("unknown objective '" + std::string(text) +
                    "' (expected cmv, iecmv or oecmv)");
}

std::uint64_t Evaluation::value(Objective objective) const {
  switch (objective) {
    case Objective::Cmv:
      return cmv;
    case Objective::Iecmv:
      return iecmv;
    case Objective::Oecmv:
      return oecmv;
  }
  return 0;
}

std::string ValidationResult::message() const {
  switch (kind) {
    case Kind::Ok:
      return "ok";
    case Kind::EmptyCluster:
      return "cluster " + std::to_string(cluster) + " is empty";
    case Kind::DuplicateMember:
      return "member " + std::to_string(first) + " appears in more than one cluster";
    case Kind::MissingMember:
      return "member " + std::to_string(first) + " is not covered by any cluster";
    case Kind::IncompatiblePair:
      return "cluster " + std::to_string(cluster) + " holds the incompatible pair (" +
             std::to_string(first) + ", " + std::to_string(second) + ")";
    case Kind::BadWitness:
      return "cluster " + std::to_string(cluster) + " witness does not resolve member " +
             std::to_string(first);
  }
  return "?";
}

ValidationResult validate(const Instance& inst, const Partition& part) {
  const std::size_t n = inst.size();
  for (const Cluster& cluster : part.clusters) {
    for (const std::uint32_t m : cluster.members) {
      if (m >= n) {
        throw DomainError("partition: member index " + std::to_string(m) +
                          " out of range (instance has " + std::to_string(n) +
                          " fingerprints)");
      }
    }
  }

  for (std::size_t k = 0; k < part.clusters.size(); ++k) {
    if (part.clusters[k].members.empty()) {
      return {ValidationResult::Kind::EmptyCluster, k, 0, 0};
    }
  }

  std::vector<char> seen(n, 0);
  for (std::size_t k = 0; k < part.clusters.size(); ++k) {
    for (const std::uint32_t m : part.clusters[k].members) {
      if (seen[m]) {
        return {ValidationResult::Kind::DuplicateMember, k, m, 0};
      }
      seen[m] = 1;
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!seen[i]) {
      return {ValidationResult::Kind::MissingMember, 0, i, 0};
    }
  }

  for (std::size_t k = 0; k < part.clusters.size(); ++k) {
    const auto& members = part.clusters[k].members;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (!compatible(inst[members[a]], inst[members[b]])) {
          return {ValidationResult::Kind::IncompatiblePair, k, members[a], members[b]};
        }
      }
    }
  }

  for (std::size_t k = 0; k < part.clusters.size(); ++k) {
    const Cluster& cluster = part.clusters[k];
    if (cluster.witness.length() != inst.length) {
      return {ValidationResult::Kind::BadWitness, k, cluster.members.front(), 0};
    }
    for (const std::uint32_t m : cluster.members) {
      if (!is_resolution(cluster.witness, inst[m])) {
        return {ValidationResult::Kind::BadWitness, k, m, 0};
      }
    }
  }

  return {};
}

std::uint64_t total_compatible_pairs(const Instance& inst) {
  const std::size_t n = inst.size();
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto iv = inst[i].values();
    const auto im = inst[i].missing();
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto jv = inst[j].values();
      const auto jm = inst[j].missing();
      bool ok = true;
      for (std::size_t w = 0; w < iv.size(); ++w) {
        if (((iv[w] ^ jv[w]) & ~im[w] & ~jm[w]) != 0) {
          ok = false;
          break;
        }
      }
      pairs += ok;
    }
  }
  return pairs;
}

Evaluation evaluate(const Instance& inst, const Partition& part) {
  const ValidationResult check = validate(inst, part);
  if (!check.ok()) {
    throw DomainError("invalid partition: " + check.message());
  }
  Evaluation eval;
  eval.cmv = part.clusters.size();
  for (const Cluster& cluster : part.clusters) {
    const std::uint64_t size = cluster.members.size();
    eval.iecmv += size * (size - 1) / 2;
  }
  eval.total_compatible_pairs = total_compatible_pairs(inst);
  eval.oecmv = eval.total_compatible_pairs - eval.iecmv;
  return eval;
}

}  // namespace fpclust
