#include "fpclust/greedy.hpp"

#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fpclust/error.hpp"

namespace fpclust {

namespace {

// heap entries are (live degree, candidate rank); stale entries are skipped
struct EntryLess {
  bool operator()(const std::pair<std::uint64_t, std::uint32_t>& a,
                  const std::pair<std::uint64_t, std::uint32_t>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;  // lower rank = lexicographically smaller vector
  }
};

GreedyResult run(const Instance& inst, std::optional<std::uint64_t> budget) {
  GreedyResult out;
  const std::size_t n = inst.size();
  if (n == 0) return out;

  const std::vector<Candidate> cands = candidate_resolutions(inst);

  std::unordered_map<ResolvedVector, std::uint32_t, ResolvedVectorHash> rank;
  rank.reserve(cands.size() * 2);
  for (std::uint32_t c = 0; c < cands.size(); ++c) {
    rank.emplace(cands[c].vector, c);
  }

  // each member sits in the sets of exactly its own resolutions
  std::vector<std::vector<std::uint32_t>> member_cands(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const ResolvedVector& r : enumerate_resolutions(inst[i])) {
      member_cands[i].push_back(rank.at(r));
    }
  }

  std::vector<std::uint64_t> live(cands.size());
  std::priority_queue<std::pair<std::uint64_t, std::uint32_t>,
                      std::vector<std::pair<std::uint64_t, std::uint32_t>>, EntryLess>
      heap;
  for (std::uint32_t c = 0; c < cands.size(); ++c) {
    live[c] = cands[c].members.size();
    heap.emplace(live[c], c);
  }

  std::vector<char> alive(n, 1);
  std::size_t remaining = n;
  std::vector<Cluster> clusters;

  while (remaining > 0) {
    if (budget && out.trace.picks.size() >= *budget) break;

    std::uint32_t pick = 0;
    while (true) {
      const auto [deg, c] = heap.top();
      heap.pop();
      if (deg == live[c] && deg > 0) {
        pick = c;
        break;
      }
    }

    Cluster cluster;
    cluster.witness = cands[pick].vector;
    for (const std::uint32_t m : cands[pick].members) {
      if (alive[m]) cluster.members.push_back(m);
    }
    for (const std::uint32_t m : cluster.members) {
      alive[m] = 0;
      --remaining;
      for (const std::uint32_t c : member_cands[m]) {
        --live[c];
        heap.emplace(live[c], c);
      }
    }
    out.trace.picks.push_back(
        {cluster.witness, cluster.members.size(), cluster.members.size()});
    clusters.push_back(std::move(cluster));
  }

  // budget exhausted: remaining members become singletons
  for (std::uint32_t i = 0; i < n; ++i) {
    if (alive[i]) {
      clusters.push_back(Cluster{{i}, merge_resolution({inst[i]})});
    }
  }

  out.trace.iterations = out.trace.picks.size();
  out.partition.clusters = std::move(clusters);
  out.partition.sort_canonical();
  return out;
}

}  // namespace

GreedyResult greedy_cluster(const Instance& inst) { return run(inst, std::nullopt); }

GreedyResult greedy_cluster_streamed(const Instance& inst,
                                     std::optional<std::uint64_t> budget) {
  if (budget && *budget == 0) {
    throw DomainError("greedy budget must be >= 1 when present");
  }
  return run(inst, budget);
}

}  // namespace fpclust
