#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ph/metrics.hpp"
#include "ph/reduce_pms.hpp"

namespace ph {

// End-to-end commands behind the CLI. Exit codes: 0 fixpoint/success,
// 2 partial result (max_iter hit before fixpoint); errors throw.

struct SampleArgs {
  std::string ensemble;
  int n = 15;
  uint64_t seed = 1;
  double jitter = 0.05;
  std::string out_path;
};
int run_sample(const SampleArgs& args);

struct BuildArgs {
  std::string cloud_path;
  double r_max = 5.0;
  int divisions = 10;
  int max_dim = 5;
  std::string matrix_out;
  std::string filtration_out;  // optional debug listing
};
int run_build(const BuildArgs& args);

struct ReduceArgs {
  std::string matrix_path;
  std::string algo = "pms";  // std | twist | pms
  PmsOptions pms;
  std::string trace_out;
  std::string barcode_out;
  std::string filtration_path;  // supplies scales; indices are used without it
};
int run_reduce(const ReduceArgs& args);

struct BenchArgs {
  std::string ensemble = "gaussian3d";
  int n = 15;
  std::vector<uint64_t> seeds = {1};
  double r_max = 5.0;
  int divisions = 10;
  int max_dim = 5;
  double jitter = 0.05;
  PmsOptions pms;
  std::string out_dir = ".";
};
int run_bench(const BenchArgs& args);

// First iteration at which a trace reaches a level; -1 if never.
int iterations_to_error(const std::vector<TraceRow>& rows, double level);
int iterations_to_unreduced(const std::vector<TraceRow>& rows, double level);
int iterations_to_precision(const std::vector<TraceRow>& rows, double level);

}  // namespace ph
