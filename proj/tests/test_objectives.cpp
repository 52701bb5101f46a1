#include <random>
#include <vector>

#include <doctest.h>

#include "fpclust/error.hpp"
#include "fpclust/greedy.hpp"
#include "fpclust/objectives.hpp"
#include "support/reference.hpp"

using namespace fpclust;

namespace {

Instance tight() { return Instance::from_strings({"00NN", "0N00", "001N", "0100"}); }

Partition make_partition(const Instance& inst,
                         const std::vector<std::vector<std::uint32_t>>& groups) {
  Partition part;
  for (const auto& members : groups) {
    std::vector<Fingerprint> fps;
    for (const auto m : members) fps.push_back(inst[m]);
    part.clusters.push_back(Cluster{members, merge_resolution(fps)});
  }
  part.sort_canonical();
  return part;
}

/// Random valid partition: members assigned a random resolution, grouped by
/// equal resolved vector.
Partition random_partition(std::mt19937_64& rng, const Instance& inst) {
  std::vector<ResolvedVector> assigned;
  for (const auto& f : inst.fingerprints) {
    const auto rs = enumerate_resolutions(f);
    assigned.push_back(rs[rng() % rs.size()]);
  }
  Partition part;
  for (std::uint32_t i = 0; i < assigned.size(); ++i) {
    bool placed = false;
    for (auto& cluster : part.clusters) {
      if (cluster.witness == assigned[i]) {
        cluster.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) part.clusters.push_back(Cluster{{i}, assigned[i]});
  }
  part.sort_canonical();
  return part;
}

}  // namespace

TEST_CASE("validate accepts the greedy tight partition") {
  const Instance inst = tight();
  const auto part = make_partition(inst, {{0, 1}, {2}, {3}});
  CHECK(validate(inst, part).ok());
}

TEST_CASE("validate reports the first incompatible pair") {
  const Instance inst = tight();
  Partition part;
  part.clusters.push_back(Cluster{{0}, ResolvedVector::from_string("0000")});
  part.clusters.push_back(Cluster{{1}, ResolvedVector::from_string("0000")});
  part.clusters.push_back(Cluster{{2, 3}, ResolvedVector::from_string("0010")});
  const auto result = validate(inst, part);
  CHECK_FALSE(result.ok());
  CHECK(result.kind == ValidationResult::Kind::IncompatiblePair);
  CHECK(result.first == 2);
  CHECK(result.second == 3);
}

TEST_CASE("validate catches every structural violation") {
  const Instance inst = tight();

  Partition overlap = make_partition(inst, {{0, 1}, {2}, {3}});
  overlap.clusters[1].members.push_back(0);
  const auto dup = validate(inst, overlap);
  CHECK(dup.kind == ValidationResult::Kind::DuplicateMember);
  CHECK(dup.first == 0);

  const Partition missing = make_partition(inst, {{0, 1}, {2}});
  CHECK(validate(inst, missing).kind == ValidationResult::Kind::MissingMember);

  Partition empty_cluster = make_partition(inst, {{0, 1}, {2}, {3}});
  empty_cluster.clusters.push_back(Cluster{{}, ResolvedVector::from_string("0000")});
  CHECK(validate(inst, empty_cluster).kind == ValidationResult::Kind::EmptyCluster);

  Partition bad_witness = make_partition(inst, {{0, 1}, {2}, {3}});
  bad_witness.clusters[0].witness = ResolvedVector::from_string("1111");
  const auto bw = validate(inst, bad_witness);
  CHECK(bw.kind == ValidationResult::Kind::BadWitness);

  Partition short_witness = make_partition(inst, {{0, 1}, {2}, {3}});
  short_witness.clusters[0].witness = ResolvedVector::from_string("00");
  CHECK(validate(inst, short_witness).kind == ValidationResult::Kind::BadWitness);

  Partition out_of_range = make_partition(inst, {{0, 1}, {2}, {3}});
  out_of_range.clusters[0].members.push_back(9);
  CHECK_THROWS_AS(validate(inst, out_of_range), DomainError);
}

TEST_CASE("empty partition on the empty instance validates") {
  const Instance inst = Instance::from_fingerprints({});
  CHECK(validate(inst, Partition{}).ok());
  const Evaluation eval = evaluate(inst, Partition{});
  CHECK(eval == Evaluation{0, 0, 0, 0});
}

TEST_CASE("total_compatible_pairs on the worked examples") {
  CHECK(total_compatible_pairs(tight()) == 3);
  CHECK(total_compatible_pairs(Instance::from_strings({"00", "01", "10", "11"})) == 0);
  const Instance copies = Instance::from_strings({"1N0", "1N0", "1N0", "1N0", "1N0"});
  CHECK(total_compatible_pairs(copies) == 10);  // 5*4/2
}

TEST_CASE("total_compatible_pairs agrees with the reference") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 150; ++iter) {
    const auto rows = ref::random_rows(rng, rng() % 12, 1 + rng() % 80, 4);
    CHECK(total_compatible_pairs(Instance::from_strings(rows)) == ref::total_pairs(rows));
  }
}

TEST_CASE("evaluate reproduces the tight-instance numbers") {
  const Instance inst = tight();
  const Evaluation greedy_eval = evaluate(inst, make_partition(inst, {{0, 1}, {2}, {3}}));
  CHECK(greedy_eval.cmv == 3);
  CHECK(greedy_eval.iecmv == 1);
  CHECK(greedy_eval.oecmv == 2);

  const Evaluation opt_eval = evaluate(inst, make_partition(inst, {{0, 2}, {1, 3}}));
  CHECK(opt_eval.cmv == 2);
  CHECK(opt_eval.iecmv == 2);
  CHECK(opt_eval.oecmv == 1);

  const Evaluation singletons = evaluate(inst, make_partition(inst, {{0}, {1}, {2}, {3}}));
  CHECK(singletons.cmv == 4);
  CHECK(singletons.iecmv == 0);
  CHECK(singletons.oecmv == singletons.total_compatible_pairs);
}

TEST_CASE("evaluate rejects invalid partitions") {
  const Instance inst = tight();
  Partition bad;
  bad.clusters.push_back(Cluster{{0, 1, 2, 3}, ResolvedVector::from_string("0000")});
  CHECK_THROWS_AS(evaluate(inst, bad), DomainError);
}

TEST_CASE("conservation holds on random valid partitions") {
  std::mt19937_64 rng(9000);
  for (int iter = 0; iter < 200; ++iter) {
    const auto rows = ref::random_rows(rng, 1 + rng() % 10, 1 + rng() % 10, 2);
    const Instance inst = Instance::from_strings(rows);
    const Partition part = random_partition(rng, inst);
    const Evaluation eval = evaluate(inst, part);
    CHECK(eval.iecmv + eval.oecmv == eval.total_compatible_pairs);
    CHECK(eval.cmv == part.size());
    CHECK(eval.cmv >= 1);
  }
}

TEST_CASE("merging two mergeable clusters never hurts the pair objectives") {
  std::mt19937_64 rng(9100);
  int probes = 0;
  for (int iter = 0; iter < 400 && probes < 100; ++iter) {
    const auto rows = ref::random_rows(rng, 2 + rng() % 9, 1 + rng() % 8, 2);
    const Instance inst = Instance::from_strings(rows);
    const Partition part = random_partition(rng, inst);
    if (part.size() < 2) continue;
    const std::size_t a = rng() % part.size();
    std::size_t b = rng() % part.size();
    if (a == b) continue;
    std::vector<Fingerprint> merged_fps;
    std::vector<std::uint32_t> merged_members;
    for (const auto m : part.clusters[a].members) {
      merged_fps.push_back(inst[m]);
      merged_members.push_back(m);
    }
    for (const auto m : part.clusters[b].members) {
      merged_fps.push_back(inst[m]);
      merged_members.push_back(m);
    }
    bool mergeable = true;
    for (std::size_t i = 0; i < merged_fps.size() && mergeable; ++i) {
      for (std::size_t j = i + 1; j < merged_fps.size(); ++j) {
        if (!compatible(merged_fps[i], merged_fps[j])) {
          mergeable = false;
          break;
        }
      }
    }
    if (!mergeable) continue;
    ++probes;

    Partition merged;
    merged.clusters.push_back(Cluster{merged_members, merge_resolution(merged_fps)});
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (k != a && k != b) merged.clusters.push_back(part.clusters[k]);
    }
    merged.sort_canonical();

    const Evaluation before = evaluate(inst, part);
    const Evaluation after = evaluate(inst, merged);
    CHECK(after.iecmv >= before.iecmv);
    CHECK(after.oecmv <= before.oecmv);
  }
  CHECK(probes > 0);
}

TEST_CASE("objective names round trip") {
  CHECK(objective_from_string("cmv") == Objective::Cmv);
  CHECK(objective_from_string("iecmv") == Objective::Iecmv);
  CHECK(objective_from_string("oecmv") == Objective::Oecmv);
  CHECK_THROWS_AS(objective_from_string("x"), DomainError);
  const Evaluation eval{5, 7, 2, 9};
  CHECK(eval.value(Objective::Cmv) == 5);
  CHECK(eval.value(Objective::Iecmv) == 7);
  CHECK(eval.value(Objective::Oecmv) == 2);
}
