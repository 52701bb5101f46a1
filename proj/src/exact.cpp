#include "fpclust/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fpclust/error.hpp"
#include "fpclust/greedy.hpp"

namespace fpclust {

namespace {

Partition partition_from_assigned(const Instance& inst,
                                  const std::vector<ResolvedVector>& assigned) {
  std::unordered_map<ResolvedVector, std::uint32_t, ResolvedVectorHash> ordinal;
  Partition part;
  for (std::uint32_t i = 0; i < assigned.size(); ++i) {
    auto [it, inserted] =
        ordinal.emplace(assigned[i], static_cast<std::uint32_t>(part.clusters.size()));
    if (inserted) {
      part.clusters.push_back(Cluster{{}, assigned[i]});
    }
    part.clusters[it->second].members.push_back(i);
  }
  // first-appearance order already sorts clusters by smallest member
  return part;
}

struct AssignmentSearch {
  const Instance& inst;
  Objective objective;
  std::vector<std::vector<ResolvedVector>> options;
  std::uint64_t total_pairs = 0;

  std::vector<std::uint32_t> choice;
  std::vector<std::uint32_t> best_choice;
  bool have_best = false;
  std::uint64_t best_value = 0;
  std::uint64_t explored = 0;

  std::unordered_map<ResolvedVector, std::uint32_t, ResolvedVectorHash> counts;
  std::uint64_t distinct = 0;
  std::uint64_t pairs = 0;

  explicit AssignmentSearch(const Instance& instance, Objective obj)
      : inst(instance), objective(obj) {}

  std::uint64_t leaf_value() const {
    switch (objective) {
      case Objective::Cmv:
        return distinct;
      case Objective::Iecmv:
        return pairs;
      case Objective::Oecmv:
        return total_pairs - pairs;
    }
    return 0;
  }

  bool improves(std::uint64_t value) const {
    if (!have_best) return true;
    if (objective == Objective::Iecmv) return value > best_value;
    return value < best_value;
  }

  void dfs(std::size_t i) {
    ++explored;
    if (i == inst.size()) {
      const std::uint64_t value = leaf_value();
      if (improves(value)) {
        have_best = true;
        best_value = value;
        best_choice = choice;
      }
      return;
    }
    // cluster count only grows as members are assigned, so for CMV a branch
    // already at the incumbent value cannot strictly improve
    if (objective == Objective::Cmv && have_best && distinct >= best_value) return;

    for (std::uint32_t c = 0; c < options[i].size(); ++c) {
      const ResolvedVector& r = options[i][c];
      auto [it, inserted] = counts.emplace(r, 0);
      if (inserted) ++distinct;
      pairs += it->second;
      ++it->second;
      choice[i] = c;

      dfs(i + 1);

      --it->second;
      pairs -= it->second;
      if (it->second == 0) {
        counts.erase(it);
        --distinct;
      }
    }
  }
};

}  // namespace

OracleResult exact_by_assignment(const Instance& inst, Objective objective,
                                 const AssignmentOptions& opts) {
  AssignmentSearch search(inst, objective);
  search.options.reserve(inst.size());

  std::uint64_t space = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    search.options.push_back(enumerate_resolutions(inst[i]));
    const std::uint64_t count = search.options.back().size();
    if (!overflow) {
      if (space > opts.node_limit / count) {
        overflow = true;
      } else {
        space *= count;
      }
    }
  }
  if (overflow || space > opts.node_limit) {
    throw CapacityError("assignment search space exceeds the node limit of " +
                        std::to_string(opts.node_limit));
  }

  search.total_pairs = total_compatible_pairs(inst);
  search.choice.assign(inst.size(), 0);
  search.dfs(0);

  std::vector<ResolvedVector> assigned;
  assigned.reserve(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    assigned.push_back(search.options[i][search.best_choice[i]]);
  }

  OracleResult result;
  result.objective = objective;
  result.optimum = search.best_value;
  result.witness = partition_from_assigned(inst, assigned);
  result.explored = search.explored;
  return result;
}

namespace {

using Bitset = std::vector<Word>;

std::uint64_t popcount(const Bitset& b) {
  std::uint64_t count = 0;
  for (const Word w : b) count += static_cast<std::uint64_t>(std::popcount(w));
  return count;
}

bool subset_of(const Bitset& a, const Bitset& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

std::uint64_t intersection_size(const Bitset& a, const Bitset& b) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    count += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  }
  return count;
}

struct SetCoverSearch {
  std::size_t n = 0;
  std::vector<Bitset> sets;                         // reduced candidate member sets
  std::vector<std::uint32_t> reps;                  // set -> candidate index
  std::vector<std::vector<std::uint32_t>> covers;   // element -> sets containing it
  std::uint64_t max_set_size = 1;

  std::vector<std::uint32_t> chosen;
  std::vector<std::uint32_t> best_cover;
  std::uint64_t best = 0;
  std::uint64_t explored = 0;

  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;
  std::uint64_t root_lower = 0;

  bool covers_all(const std::vector<std::uint32_t>& cover) const {
    Bitset acc(word_count(n), 0);
    for (const std::uint32_t s : cover) {
      for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= sets[s][w];
    }
    return popcount(acc) == n;
  }

  /// Drops sets whose elements are already covered by the rest; highest set
  /// index first so the surviving cover is deterministic.
  void prune_redundant(std::vector<std::uint32_t>& cover) const {
    std::vector<std::uint32_t> order = cover;
    std::sort(order.begin(), order.end(), std::greater<>());
    for (const std::uint32_t candidate : order) {
      std::vector<std::uint32_t> trimmed;
      trimmed.reserve(cover.size() - 1);
      for (const std::uint32_t s : cover) {
        if (s != candidate) trimmed.push_back(s);
      }
      if (trimmed.size() < cover.size() && covers_all(trimmed)) {
        cover = std::move(trimmed);
      }
    }
  }

  std::vector<std::uint32_t> greedy_cover() const {
    Bitset uncovered(word_count(n), ~Word{0});
    if (!uncovered.empty()) uncovered.back() = tail_mask(n);
    std::vector<std::uint32_t> cover;
    std::uint64_t left = n;
    while (left > 0) {
      std::uint32_t pick = 0;
      std::uint64_t gain = 0;
      for (std::uint32_t s = 0; s < sets.size(); ++s) {
        const std::uint64_t g = intersection_size(sets[s], uncovered);
        if (g > gain) {
          gain = g;
          pick = s;
        }
      }
      cover.push_back(pick);
      for (std::size_t w = 0; w < uncovered.size(); ++w) uncovered[w] &= ~sets[pick][w];
      left -= gain;
    }
    return cover;
  }

  /// Packing bound: elements whose covering-set lists are pairwise disjoint
  /// each need a distinct set.
  std::uint64_t lower_bound(const Bitset& uncovered) const {
    std::vector<char> used(sets.size(), 0);
    std::uint64_t packed = 0;
    std::uint64_t left = 0;
    for (std::size_t e = 0; e < n; ++e) {
      if (((uncovered[e / kWordBits] >> (e % kWordBits)) & 1U) == 0) continue;
      ++left;
      bool free = true;
      for (const std::uint32_t s : covers[e]) {
        if (used[s]) {
          free = false;
          break;
        }
      }
      if (free) {
        ++packed;
        for (const std::uint32_t s : covers[e]) used[s] = 1;
      }
    }
    const std::uint64_t by_size = (left + max_set_size - 1) / max_set_size;
    return std::max(packed, by_size);
  }

  void check_deadline() {
    if (!has_deadline || (explored & 0x3FF) != 0) return;
    if (std::chrono::steady_clock::now() >= deadline) {
      throw CapacityError("set cover search timed out (lower bound " +
                              std::to_string(std::max(root_lower, std::uint64_t{1})) +
                              ", best cover " + std::to_string(best) + ")",
                          root_lower, best);
    }
  }

  void dfs(Bitset& uncovered, std::uint64_t left) {
    ++explored;
    check_deadline();
    if (left == 0) {
      std::vector<std::uint32_t> cover = chosen;
      prune_redundant(cover);
      if (cover.size() < best) {
        best = cover.size();
        best_cover = std::move(cover);
      }
      return;
    }
    if (chosen.size() + lower_bound(uncovered) >= best) return;

    // branch on the uncovered element with the fewest covering sets
    std::size_t element = n;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t e = 0; e < n; ++e) {
      if (((uncovered[e / kWordBits] >> (e % kWordBits)) & 1U) == 0) continue;
      if (covers[e].size() < fewest) {
        fewest = covers[e].size();
        element = e;
      }
    }

    std::vector<std::pair<std::uint64_t, std::uint32_t>> branches;
    branches.reserve(covers[element].size());
    for (const std::uint32_t s : covers[element]) {
      branches.emplace_back(intersection_size(sets[s], uncovered), s);
    }
    std::sort(branches.begin(), branches.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });

    for (const auto& [gain, s] : branches) {
      Bitset next = uncovered;
      for (std::size_t w = 0; w < next.size(); ++w) next[w] &= ~sets[s][w];
      chosen.push_back(s);
      dfs(next, left - gain);
      chosen.pop_back();
    }
  }
};

}  // namespace

OracleResult exact_cmv_setcover(const Instance& inst, const SetCoverOptions& opts) {
  OracleResult result;
  result.objective = Objective::Cmv;
  const std::size_t n = inst.size();
  if (n == 0) {
    result.explored = 1;
    return result;
  }

  const std::vector<Candidate> cands = candidate_resolutions(inst);

  SetCoverSearch search;
  search.n = n;

  // dedupe identical member sets (lex-smallest representative wins), then drop
  // sets contained in another set
  std::vector<Bitset> raw_sets;
  std::vector<std::uint32_t> raw_reps;
  {
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    for (std::uint32_t c = 0; c < cands.size(); ++c) {
      Bitset bits(word_count(n), 0);
      for (const std::uint32_t m : cands[c].members) {
        bits[m / kWordBits] |= Word{1} << (m % kWordBits);
      }
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (const Word w : bits) h = (h ^ w) * 0x100000001b3ULL;
      bool duplicate = false;
      for (const std::uint32_t other : buckets[h]) {
        if (raw_sets[other] == bits) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) {
        buckets[h].push_back(static_cast<std::uint32_t>(raw_sets.size()));
        raw_sets.push_back(std::move(bits));
        raw_reps.push_back(c);
      }
    }
  }
  for (std::uint32_t s = 0; s < raw_sets.size(); ++s) {
    bool dominated = false;
    for (std::uint32_t t = 0; t < raw_sets.size(); ++t) {
      if (t != s && subset_of(raw_sets[s], raw_sets[t]) && raw_sets[s] != raw_sets[t]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      search.sets.push_back(raw_sets[s]);
      search.reps.push_back(raw_reps[s]);
    }
  }

  search.covers.assign(n, {});
  for (std::uint32_t s = 0; s < search.sets.size(); ++s) {
    const std::uint64_t size = popcount(search.sets[s]);
    search.max_set_size = std::max(search.max_set_size, size);
    for (std::size_t e = 0; e < n; ++e) {
      if ((search.sets[s][e / kWordBits] >> (e % kWordBits)) & 1U) {
        search.covers[e].push_back(s);
      }
    }
  }

  search.best_cover = search.greedy_cover();
  search.prune_redundant(search.best_cover);
  search.best = search.best_cover.size();

  if (opts.timeout_seconds > 0) {
    search.has_deadline = true;
    search.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(opts.timeout_seconds));
  }

  Bitset uncovered(word_count(n), ~Word{0});
  uncovered.back() = tail_mask(n);
  search.root_lower = search.lower_bound(uncovered);
  search.dfs(uncovered, n);

  // convert the optimal cover into a partition: every member joins the first
  // covering set in candidate (lexicographic) order
  std::vector<std::uint32_t> cover = search.best_cover;
  std::sort(cover.begin(), cover.end());
  std::vector<ResolvedVector> assigned;
  assigned.reserve(n);
  for (std::uint32_t e = 0; e < n; ++e) {
    for (const std::uint32_t s : cover) {
      if ((search.sets[s][e / kWordBits] >> (e % kWordBits)) & 1U) {
        assigned.push_back(cands[search.reps[s]].vector);
        break;
      }
    }
  }

  result.optimum = search.best;
  result.witness = partition_from_assigned(inst, assigned);
  result.explored = search.explored;
  return result;
}

RatioReport ratio_report(const Instance& inst, Objective objective,
                         const RatioOptions& opts) {
  RatioReport report;
  const GreedyResult greedy = greedy_cluster(inst);
  report.greedy_evaluation = evaluate(inst, greedy.partition);
  report.greedy_value = report.greedy_evaluation.value(objective);

  const OracleResult oracle = (objective == Objective::Cmv)
                                  ? exact_cmv_setcover(inst, opts.setcover)
                                  : exact_by_assignment(inst, objective, opts.assignment);
  report.optimum = oracle.optimum;

  const double num = objective == Objective::Iecmv
                         ? static_cast<double>(report.optimum)
                         : static_cast<double>(report.greedy_value);
  const double den = objective == Objective::Iecmv
                         ? static_cast<double>(report.greedy_value)
                         : static_cast<double>(report.optimum);
  if (num == 0.0 && den == 0.0) {
    report.ratio = 1.0;
  } else {
    report.ratio = num / den;  // x/0 intentionally yields inf: a loud bound breach
  }
  return report;
}

}  // namespace fpclust
