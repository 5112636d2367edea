#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "ph/driver.hpp"

namespace {

void add_pms_flags(CLI::App* cmd, ph::PmsOptions& pms) {
  static const std::map<std::string, ph::SchedulePolicy> policies{
      {"all", ph::SchedulePolicy::All},
      {"big-nbhd", ph::SchedulePolicy::BigNbhdFirst},
      {"neg-first", ph::SchedulePolicy::NegFirst},
  };
  cmd->add_option("--max-iter", pms.max_iter, "iteration cap (0 = run to fixpoint)");
  cmd->add_option("--processor-cap", pms.processor_cap,
                  "neighbourhoods reduced per iteration (0 = unbounded)");
  cmd->add_option("--policy", pms.policy, "scheduling policy")
      ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case));
  cmd->add_flag("--compress-clear", pms.compress_clear,
                "enable clearing by compression");
  cmd->add_option("--workers", pms.workers,
                  "parallel workers for column reduction (0 = simulate)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"persistent-homology boundary matrix reduction"};
  app.require_subcommand(1);

  ph::SampleArgs sample;
  auto* cmd_sample = app.add_subcommand("sample", "sample a point-cloud ensemble");
  cmd_sample->add_option("ensemble", sample.ensemble,
                         "gaussian3d | figure8 | trefoil | sphere_product")
      ->required();
  cmd_sample->add_option("n", sample.n, "number of points")->required()
      ->check(CLI::PositiveNumber);
  cmd_sample->add_option("seed", sample.seed, "rng seed")->required();
  cmd_sample->add_option("out", sample.out_path, "output cloud csv")->required();
  cmd_sample->add_option("--jitter", sample.jitter, "jitter amplitude");

  ph::BuildArgs build;
  auto* cmd_build = app.add_subcommand("build", "build a Vietoris-Rips boundary matrix");
  cmd_build->add_option("cloud", build.cloud_path, "point-cloud csv")->required();
  cmd_build->add_option("out", build.matrix_out, "output matrix file")->required();
  cmd_build->add_option("--r-max", build.r_max, "maximum filtration scale");
  cmd_build->add_option("--divisions", build.divisions, "scale-grid divisions");
  cmd_build->add_option("--max-dim", build.max_dim, "maximum simplex dimension");
  cmd_build->add_option("--filtration-out", build.filtration_out,
                        "also write the ordered simplex listing");

  ph::ReduceArgs reduce;
  auto* cmd_reduce = app.add_subcommand("reduce", "reduce a boundary matrix");
  cmd_reduce->add_option("matrix", reduce.matrix_path, "matrix file")->required();
  cmd_reduce->add_option("--algo", reduce.algo, "std | twist | pms");
  cmd_reduce->add_option("--trace-out", reduce.trace_out, "per-iteration trace csv");
  cmd_reduce->add_option("--barcode-out", reduce.barcode_out, "barcode file");
  cmd_reduce->add_option("--filtration", reduce.filtration_path,
                         "simplex listing supplying scales for the barcode");
  add_pms_flags(cmd_reduce, reduce.pms);

  ph::BenchArgs bench;
  auto* cmd_bench = app.add_subcommand(
      "bench", "run std, twist and pms over sampled clouds and summarize");
  cmd_bench->add_option("ensemble", bench.ensemble)->required();
  cmd_bench->add_option("out_dir", bench.out_dir, "output directory")->required();
  cmd_bench->add_option("-n,--points", bench.n, "points per cloud");
  cmd_bench->add_option("--seed", bench.seeds, "seeds, one run each");
  cmd_bench->add_option("--r-max", bench.r_max, "maximum filtration scale");
  cmd_bench->add_option("--divisions", bench.divisions, "scale-grid divisions");
  cmd_bench->add_option("--max-dim", bench.max_dim, "maximum simplex dimension");
  cmd_bench->add_option("--jitter", bench.jitter, "jitter amplitude");
  add_pms_flags(cmd_bench, bench.pms);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_sample->parsed()) return ph::run_sample(sample);
    if (cmd_build->parsed()) return ph::run_build(build);
    if (cmd_reduce->parsed()) return ph::run_reduce(reduce);
    if (cmd_bench->parsed()) return ph::run_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
