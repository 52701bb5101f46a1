#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpclust/error.hpp"
#include "fpclust/exact.hpp"
#include "fpclust/gen.hpp"
#include "fpclust/greedy.hpp"
#include "fpclust/io.hpp"
#include "fpclust/objectives.hpp"

namespace {

using fpclust::CapacityError;
using fpclust::DomainError;
using nlohmann::json;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DomainError("cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// write-to-temp plus rename: no partial files on error
void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw DomainError("cannot write '" + path + "'");
    }
    out << content;
    if (!out.flush()) {
      std::remove(tmp.c_str());
      throw DomainError("cannot write '" + path + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw DomainError("cannot move output into place at '" + path + "': " + ec.message());
  }
}

void emit_text(const std::string& content, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(output_path, content);
  }
}

json instance_meta(const fpclust::Instance& inst) {
  return json{{"n", inst.size()}, {"l", inst.length}, {"p", inst.max_missing}};
}

json evaluation_json(const fpclust::Evaluation& eval) {
  return json{{"cmv", eval.cmv},
              {"iecmv", eval.iecmv},
              {"oecmv", eval.oecmv},
              {"total_compatible_pairs", eval.total_compatible_pairs}};
}

json ratio_json(double ratio) {
  if (std::isfinite(ratio)) return ratio;
  return "inf";
}

void print_report(json report, double wall_ms) {
  report["wall_ms"] = wall_ms;
  std::cout << report.dump(2) << "\n";
}

struct CommonFlags {
  int workers = 1;
};

void run_greedy(const std::string& input, const std::string& output,
                std::optional<std::uint64_t> budget, const CommonFlags& common) {
  const fpclust::Instance inst = fpclust::parse_instance(read_file(input));
  Stopwatch watch;
  const fpclust::GreedyResult result = budget
                                           ? fpclust::greedy_cluster_streamed(inst, budget)
                                           : fpclust::greedy_cluster(inst);
  const fpclust::Evaluation eval = fpclust::evaluate(inst, result.partition);
  const double wall_ms = watch.elapsed_ms();

  if (!output.empty()) {
    write_file_atomic(output, fpclust::emit_partition(result.partition, eval));
  }
  json config = {{"input", input}, {"workers", common.workers}};
  if (!output.empty()) config["output"] = output;
  if (budget) config["budget"] = *budget;
  json report = {{"algorithm", "greedy"},
                 {"instance", instance_meta(inst)},
                 {"evaluation", evaluation_json(eval)},
                 {"iterations", result.trace.iterations},
                 {"config", std::move(config)}};
  print_report(std::move(report), wall_ms);
}

void run_exact(const std::string& input, const std::string& output,
               const std::string& objective_name, const std::string& method,
               std::uint64_t node_limit, double timeout, const CommonFlags& common) {
  const fpclust::Instance inst = fpclust::parse_instance(read_file(input));
  const fpclust::Objective objective = fpclust::objective_from_string(objective_name);

  bool use_setcover = false;
  if (method == "setcover") {
    if (objective != fpclust::Objective::Cmv) {
      throw DomainError("the set-cover oracle only solves cmv");
    }
    use_setcover = true;
  } else if (method == "auto") {
    use_setcover = objective == fpclust::Objective::Cmv;
  } else if (method != "assignment") {
    throw DomainError("unknown method '" + method +
                      "' (expected auto, assignment or setcover)");
  }

  Stopwatch watch;
  fpclust::OracleResult result;
  if (use_setcover) {
    result = fpclust::exact_cmv_setcover(inst, {timeout});
  } else {
    result = fpclust::exact_by_assignment(inst, objective, {node_limit});
  }
  const fpclust::Evaluation eval = fpclust::evaluate(inst, result.witness);
  const double wall_ms = watch.elapsed_ms();

  if (!output.empty()) {
    write_file_atomic(output, fpclust::emit_partition(result.witness, eval));
  }
  json config = {{"input", input},
                 {"objective", objective_name},
                 {"method", method},
                 {"node_limit", node_limit},
                 {"timeout", timeout},
                 {"workers", common.workers}};
  if (!output.empty()) config["output"] = output;
  json report = {{"algorithm", use_setcover ? "exact-setcover" : "exact-assignment"},
                 {"instance", instance_meta(inst)},
                 {"objective", objective_name},
                 {"optimum", result.optimum},
                 {"explored", result.explored},
                 {"evaluation", evaluation_json(eval)},
                 {"config", std::move(config)}};
  print_report(std::move(report), wall_ms);
}

void run_eval(const std::string& input, const std::string& partition_path,
              const CommonFlags& common) {
  const fpclust::Instance inst = fpclust::parse_instance(read_file(input));
  const fpclust::Partition part = fpclust::parse_partition(read_file(partition_path));
  Stopwatch watch;
  const fpclust::Evaluation eval = fpclust::evaluate(inst, part);
  const double wall_ms = watch.elapsed_ms();
  json report = {{"algorithm", "eval"},
                 {"instance", instance_meta(inst)},
                 {"evaluation", evaluation_json(eval)},
                 {"config",
                  {{"input", input}, {"partition", partition_path}, {"workers", common.workers}}}};
  print_report(std::move(report), wall_ms);
}

void run_gen_random(std::uint64_t n, std::uint64_t l, std::uint64_t p,
                    std::uint64_t centers, double missing_rate, std::uint64_t seed,
                    const std::string& output) {
  fpclust::RandomInstanceParams params;
  params.n = n;
  params.length = l;
  params.max_missing = p;
  params.centers = centers;
  params.missing_rate = missing_rate;
  params.seed = seed;
  emit_text(fpclust::emit_instance(fpclust::gen_random(params)), output);
}

void run_gen_gadget(const std::string& graph_path, const std::string& output,
                    const std::string& certificate_path) {
  const fpclust::CubicGraph graph = fpclust::parse_cubic_graph(read_file(graph_path));
  const fpclust::GadgetInstance gadget = fpclust::gen_gadget(graph);
  emit_text(fpclust::emit_instance(gadget.instance), output);
  if (!certificate_path.empty()) {
    write_file_atomic(certificate_path, fpclust::emit_certificate(gadget.certificate));
  }
}

void run_bench(const std::string& suite, std::uint64_t seeds, std::uint64_t max_n,
               const CommonFlags& common) {
  json runs = json::array();
  json aggregate;
  if (suite == "ratio") {
    const std::size_t cap = max_n == 0 ? 6 : max_n;
    struct Stats {
      double min = 0.0, max = 0.0, sum = 0.0;
      std::uint64_t count = 0;
      void add(double r) {
        if (count == 0 || r < min) min = r;
        if (count == 0 || r > max) max = r;
        sum += r;
        ++count;
      }
    };
    Stats stats[2];
    const fpclust::Objective objectives[2] = {fpclust::Objective::Iecmv,
                                              fpclust::Objective::Oecmv};
    for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
      const fpclust::RandomInstanceParams params = fpclust::bench_ratio_params(seed, cap);
      const fpclust::Instance inst = fpclust::gen_random(params);
      for (int o = 0; o < 2; ++o) {
        Stopwatch watch;
        const fpclust::RatioReport rr = fpclust::ratio_report(inst, objectives[o]);
        runs.push_back(json{{"seed", seed},
                            {"instance", instance_meta(inst)},
                            {"objective", fpclust::to_string(objectives[o])},
                            {"greedy", rr.greedy_value},
                            {"optimum", rr.optimum},
                            {"ratio", ratio_json(rr.ratio)},
                            {"wall_ms", watch.elapsed_ms()}});
        stats[o].add(rr.ratio);
      }
    }
    for (int o = 0; o < 2; ++o) {
      aggregate[fpclust::to_string(objectives[o])] = {
          {"min_ratio", ratio_json(stats[o].count ? stats[o].min : 1.0)},
          {"mean_ratio",
           ratio_json(stats[o].count ? stats[o].sum / static_cast<double>(stats[o].count)
                                     : 1.0)},
          {"max_ratio", ratio_json(stats[o].count ? stats[o].max : 1.0)}};
    }
  } else if (suite == "scale") {
    const std::size_t n = max_n == 0 ? 10000 : max_n;
    double wall_sum = 0.0;
    for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
      fpclust::RandomInstanceParams params;
      params.n = n;
      params.length = 64;
      params.max_missing = 2;
      params.centers = std::max<std::size_t>(1, n / 100);
      params.missing_rate = 0.05;
      params.seed = seed;
      const fpclust::Instance inst = fpclust::gen_random(params);
      Stopwatch watch;
      const fpclust::GreedyResult result = fpclust::greedy_cluster(inst);
      const double greedy_ms = watch.elapsed_ms();
      const fpclust::Evaluation eval = fpclust::evaluate(inst, result.partition);
      wall_sum += greedy_ms;
      runs.push_back(json{{"seed", seed},
                          {"instance", instance_meta(inst)},
                          {"evaluation", evaluation_json(eval)},
                          {"wall_ms", greedy_ms}});
    }
    aggregate = {{"mean_greedy_ms",
                  seeds == 0 ? 0.0 : wall_sum / static_cast<double>(seeds)}};
  } else {
    throw DomainError("unknown suite '" + suite + "' (expected ratio or scale)");
  }

  json report = {{"suite", suite},
                 {"config", {{"seeds", seeds}, {"max_n", max_n}, {"workers", common.workers}}},
                 {"runs", std::move(runs)},
                 {"aggregate", std::move(aggregate)}};
  // aggregate wall time is itself timing data; keep it under the wall_ms key
  // so consumers strip every timing field the same way
  std::cout << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clustering of {0,1,N} fingerprint vectors"};
  app.require_subcommand(1);

  CommonFlags common;
  app.add_option("--workers", common.workers,
                 "internal worker cap; never changes emitted bytes")
      ->check(CLI::PositiveNumber);

  std::string input, output, partition_path, graph_path, certificate_path;
  std::string objective = "iecmv";
  std::string method = "auto";
  std::uint64_t node_limit = std::uint64_t{1} << 24;
  double timeout = 60.0;
  std::optional<std::uint64_t> budget;

  auto* greedy = app.add_subcommand("greedy", "greedy maximum-degree clustering");
  greedy->fallthrough();
  greedy->add_option("-i,--input", input, "instance file")->required();
  greedy->add_option("-o,--output", output, "partition JSON output");
  greedy->add_option("--budget", budget, "max greedy picks; leftovers become singletons");

  auto* exact = app.add_subcommand("exact", "exact desk-scale oracle");
  exact->fallthrough();
  exact->add_option("-i,--input", input, "instance file")->required();
  exact->add_option("-o,--output", output, "witness partition JSON output");
  exact->add_option("--objective", objective, "cmv, iecmv or oecmv")->required();
  exact->add_option("--method", method, "auto, assignment or setcover");
  exact->add_option("--node-limit", node_limit, "assignment search-space cap");
  exact->add_option("--timeout", timeout, "set-cover time budget in seconds");

  auto* eval = app.add_subcommand("eval", "validate and evaluate a partition");
  eval->fallthrough();
  eval->add_option("-i,--input", input, "instance file")->required();
  eval->add_option("-P,--partition", partition_path, "partition JSON file")->required();

  auto* gen_tight_cmd = app.add_subcommand("gen-tight", "the four-row tight-ratio instance");
  gen_tight_cmd->fallthrough();
  gen_tight_cmd->add_option("-o,--output", output, "instance output path");

  std::uint64_t rn = 0, rl = 0, rp = 0, rcenters = 1, rseed = 0;
  double rrate = 0.0;
  auto* gen_random_cmd = app.add_subcommand("gen-random", "planted-center random instance");
  gen_random_cmd->fallthrough();
  gen_random_cmd->add_option("-n", rn, "rows")->required();
  gen_random_cmd->add_option("-l", rl, "vector length")->required();
  gen_random_cmd->add_option("-p", rp, "max N positions per row")->required();
  gen_random_cmd->add_option("--centers", rcenters, "planted centers")->required();
  gen_random_cmd->add_option("--missing-rate", rrate, "per-position N probability")->required();
  gen_random_cmd->add_option("--seed", rseed, "RNG seed")->required();
  gen_random_cmd->add_option("-o,--output", output, "instance output path");

  auto* gen_gadget_cmd =
      app.add_subcommand("gen-gadget", "vertex-cover gadget instance from a cubic graph");
  gen_gadget_cmd->fallthrough();
  gen_gadget_cmd->add_option("-g,--graph", graph_path, "cubic graph edge-list file")->required();
  gen_gadget_cmd->add_option("-o,--output", output, "instance output path");
  gen_gadget_cmd->add_option("--certificate", certificate_path, "certificate JSON output");

  std::string suite = "ratio";
  std::uint64_t seeds = 20, max_n = 0;
  auto* bench = app.add_subcommand("bench", "benchmark suites (ratio, scale)");
  bench->fallthrough();
  bench->add_option("--suite", suite, "ratio or scale")->required();
  bench->add_option("--seeds", seeds, "number of seeded runs");
  bench->add_option("--max-n", max_n, "instance size cap (0 = suite default)");

  try {
    app.parse(argc, argv);
    if (greedy->parsed()) {
      run_greedy(input, output, budget, common);
    } else if (exact->parsed()) {
      run_exact(input, output, objective, method, node_limit, timeout, common);
    } else if (eval->parsed()) {
      run_eval(input, partition_path, common);
    } else if (gen_tight_cmd->parsed()) {
      emit_text(fpclust::emit_instance(fpclust::gen_tight()), output);
    } else if (gen_random_cmd->parsed()) {
      run_gen_random(rn, rl, rp, rcenters, rrate, rseed, output);
    } else if (gen_gadget_cmd->parsed()) {
      run_gen_gadget(graph_path, output, certificate_path);
    } else if (bench->parsed()) {
      run_bench(suite, seeds, max_n, common);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
