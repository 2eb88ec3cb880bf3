#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "treesplit/cli.hpp"

int main(int argc, char** argv) {
  using namespace treesplit::cli;

  CLI::App app{"treesplit - balanced edge cuts in vertex-weighted trees"};
  app.require_subcommand(1);

  SplitOptions split_opts;
  auto* split = app.add_subcommand(
      "split", "Find a cut edge or certify that none exists");
  split->add_option("-i,--input", split_opts.input, "tree file")->required();
  split->add_option("-e,--epsilon", split_opts.epsilon,
                    "tolerance around half the total weight")->required();
  split->add_option("--start", split_opts.start,
                    "start vertex: improved, random, or an id (default improved)");
  split->add_option("--method", split_opts.method,
                    "descent, literal, or oracle (default descent)");
  split->add_option("--seed", split_opts.seed, "seed for --start random");
  split->add_flag("--trace", split_opts.trace, "print the per-iteration log");
  split->add_option("--format", split_opts.format, "human or structured");

  CheckOptions check_opts;
  std::vector<std::uint32_t> check_edge;
  auto* check = app.add_subcommand("check", "Test whether one edge is a cut edge");
  check->add_option("-i,--input", check_opts.input, "tree file")->required();
  check->add_option("-e,--epsilon", check_opts.epsilon, "tolerance")->required();
  check->add_option("--edge", check_edge, "edge endpoints: u v")
      ->expected(2)
      ->required();
  check->add_option("--format", check_opts.format, "human or structured");

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate a random tree file");
  gen->add_option("--kind", gen_opts.kind, "prufer or grid")->required();
  gen->add_option("--n", gen_opts.n, "vertex count (prufer)");
  gen->add_option("--width", gen_opts.width, "grid width");
  gen->add_option("--height", gen_opts.height, "grid height");
  gen->add_option("--weights", gen_opts.weights,
                  "const:<c> or uniform:<lo>:<hi> (default const:1)");
  gen->add_option("--seed", gen_opts.seed, "generator seed");
  gen->add_option("-o,--output", gen_opts.output, "output path (default stdout)");

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand(
      "bench", "Compare search methods against the random-edge baseline");
  bench->add_option("-i,--input", bench_opts.input, "tree file (fixed instance)");
  bench->add_option("--kind", bench_opts.kind, "prufer or grid (generated instances)");
  bench->add_option("--n", bench_opts.n, "vertex count (prufer)");
  bench->add_option("--width", bench_opts.width, "grid width");
  bench->add_option("--height", bench_opts.height, "grid height");
  bench->add_option("--weights", bench_opts.weights,
                    "weight spec for generated instances (default uniform:1:100)");
  bench->add_option("-e,--epsilon", bench_opts.epsilon, "fixed tolerance");
  bench->add_option("--epsilon-ratio", bench_opts.epsilon_ratio,
                    "tolerance as <num>/<den> of each instance's total");
  bench->add_option("--trials", bench_opts.trials, "instance count (default 1)");
  bench->add_option("--seed", bench_opts.seed, "base seed");
  bench->add_option("--methods", bench_opts.methods,
                    "subset of descent,literal,baseline")->delimiter(',');
  bench->add_option("--starts", bench_opts.starts,
                    "subset of improved,random")->delimiter(',');
  bench->add_option("--max-attempts", bench_opts.max_attempts,
                    "baseline give-up bound (default 1000)");
  bench->add_option("--format", bench_opts.format, "human or structured");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (split->parsed()) return run_split(split_opts, std::cout, std::cerr);
  if (check->parsed()) {
    check_opts.edge_u = check_edge[0];
    check_opts.edge_v = check_edge[1];
    return run_check(check_opts, std::cout, std::cerr);
  }
  if (gen->parsed()) return run_gen(gen_opts, std::cout, std::cerr);
  if (bench->parsed()) return run_bench(bench_opts, std::cout, std::cerr);
  return kExitUsage;
}
