#include <random>
#include <vector>

#include <doctest.h>

#include "fpclust/error.hpp"
#include "fpclust/exact.hpp"
#include "fpclust/gen.hpp"
#include "fpclust/greedy.hpp"
#include "fpclust/objectives.hpp"
#include "support/reference.hpp"

using namespace fpclust;

namespace {

Instance tight() { return Instance::from_strings({"00NN", "0N00", "001N", "0100"}); }

void check_witness(const Instance& inst, const OracleResult& result) {
  CHECK(validate(inst, result.witness).ok());
  const Evaluation eval = evaluate(inst, result.witness);
  CHECK(eval.value(result.objective) == result.optimum);
  CHECK(eval.iecmv + eval.oecmv == eval.total_compatible_pairs);
}

}  // namespace

TEST_CASE("assignment oracle reproduces the tight-instance optima") {
  const Instance inst = tight();

  const OracleResult iecmv = exact_by_assignment(inst, Objective::Iecmv);
  CHECK(iecmv.optimum == 2);
  REQUIRE(iecmv.witness.size() == 2);
  CHECK(iecmv.witness.clusters[0].members == std::vector<std::uint32_t>{0, 2});
  CHECK(iecmv.witness.clusters[1].members == std::vector<std::uint32_t>{1, 3});
  check_witness(inst, iecmv);

  const OracleResult oecmv = exact_by_assignment(inst, Objective::Oecmv);
  CHECK(oecmv.optimum == 1);
  check_witness(inst, oecmv);

  const OracleResult cmv = exact_by_assignment(inst, Objective::Cmv);
  CHECK(cmv.optimum == 2);
  check_witness(inst, cmv);
}

TEST_CASE("assignment oracle agrees with partition enumeration") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 60; ++iter) {
    const auto rows = ref::random_rows(rng, 1 + rng() % 6, 1 + rng() % 8, 2, 0.4);
    const Instance inst = Instance::from_strings(rows);
    const ref::Optima expected = ref::optima(rows);

    const OracleResult cmv = exact_by_assignment(inst, Objective::Cmv);
    CHECK(cmv.optimum == expected.cmv);
    check_witness(inst, cmv);

    const OracleResult iecmv = exact_by_assignment(inst, Objective::Iecmv);
    CHECK(iecmv.optimum == expected.iecmv);
    check_witness(inst, iecmv);

    const OracleResult oecmv = exact_by_assignment(inst, Objective::Oecmv);
    CHECK(oecmv.optimum == expected.oecmv);
    check_witness(inst, oecmv);
  }
}

TEST_CASE("assignment oracle handles the empty instance") {
  const Instance inst = Instance::from_fingerprints({});
  for (const Objective obj : {Objective::Cmv, Objective::Iecmv, Objective::Oecmv}) {
    const OracleResult result = exact_by_assignment(inst, obj);
    CHECK(result.optimum == 0);
    CHECK(result.witness.empty());
  }
}

TEST_CASE("assignment oracle enforces the node limit by name") {
  const Instance inst = tight();  // search space 4 * 2 * 2 * 1 = 16
  AssignmentOptions opts;
  opts.node_limit = 15;
  CHECK_THROWS_WITH_AS(exact_by_assignment(inst, Objective::Cmv, opts),
                       doctest::Contains("15"), CapacityError);
  opts.node_limit = 16;
  CHECK(exact_by_assignment(inst, Objective::Cmv, opts).optimum == 2);
}

TEST_CASE("set cover oracle on small instances") {
  CHECK(exact_cmv_setcover(tight()).optimum == 2);
  CHECK(exact_cmv_setcover(Instance::from_strings({"1N1"})).optimum == 1);
  CHECK(exact_cmv_setcover(Instance::from_fingerprints({})).optimum == 0);
  check_witness(tight(), exact_cmv_setcover(tight()));
}

TEST_CASE("set cover oracle matches the assignment oracle") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 80; ++iter) {
    const auto rows = ref::random_rows(rng, 1 + rng() % 8, 1 + rng() % 10, 2, 0.35);
    const Instance inst = Instance::from_strings(rows);
    const OracleResult cover = exact_cmv_setcover(inst);
    const OracleResult assign = exact_by_assignment(inst, Objective::Cmv);
    CHECK(cover.optimum == assign.optimum);
    check_witness(inst, cover);
  }
}

TEST_CASE("set cover timeout raises a capacity error with bounds") {
  const GadgetInstance gadget = gen_gadget(k4());
  SetCoverOptions opts;
  opts.timeout_seconds = 1e-9;
  try {
    exact_cmv_setcover(gadget.instance, opts);
    FAIL("expected a timeout");
  } catch (const CapacityError& e) {
    REQUIRE(e.bounds().has_value());
    CHECK(e.bounds()->lower >= 1);
    CHECK(e.bounds()->upper >= e.bounds()->lower);
  }
}

TEST_CASE("greedy stays within a factor 2 of the oracle on both pair objectives") {
  std::mt19937_64 rng(123);
  for (int iter = 0; iter < 60; ++iter) {
    const auto rows = ref::random_rows(rng, 1 + rng() % 7, 1 + rng() % 9, 2, 0.4);
    const Instance inst = Instance::from_strings(rows);
    const Evaluation greedy_eval = evaluate(inst, greedy_cluster(inst).partition);
    const OracleResult iecmv = exact_by_assignment(inst, Objective::Iecmv);
    CHECK(iecmv.optimum <= 2 * greedy_eval.iecmv);
    const OracleResult oecmv = exact_by_assignment(inst, Objective::Oecmv);
    CHECK(greedy_eval.oecmv <= 2 * oecmv.optimum);
    if (oecmv.optimum == 0) CHECK(greedy_eval.oecmv == 0);
  }
}

TEST_CASE("ratio_report reproduces both tight ratios") {
  const Instance inst = tight();

  const RatioReport iecmv = ratio_report(inst, Objective::Iecmv);
  CHECK(iecmv.greedy_value == 1);
  CHECK(iecmv.optimum == 2);
  CHECK(iecmv.ratio == 2.0);

  const RatioReport oecmv = ratio_report(inst, Objective::Oecmv);
  CHECK(oecmv.greedy_value == 2);
  CHECK(oecmv.optimum == 1);
  CHECK(oecmv.ratio == 2.0);
}

TEST_CASE("ratio_report is 1.0 when one resolution covers everything") {
  const Instance inst = Instance::from_strings({"0NN0", "0N10", "00N0"});
  const RatioReport report = ratio_report(inst, Objective::Iecmv);
  CHECK(report.ratio == 1.0);
  CHECK(report.greedy_value == report.optimum);

  // no compatible pairs at all: 0/0 reports 1.0
  const Instance lonely = Instance::from_strings({"00", "11"});
  CHECK(ratio_report(lonely, Objective::Iecmv).ratio == 1.0);
  CHECK(ratio_report(lonely, Objective::Oecmv).ratio == 1.0);

  const RatioReport cmv = ratio_report(tight(), Objective::Cmv);
  CHECK(cmv.greedy_value == 3);
  CHECK(cmv.optimum == 2);
  CHECK(cmv.ratio == doctest::Approx(1.5));
}
