#include "ph/driver.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "ph/barcode.hpp"
#include "ph/ensembles.hpp"
#include "ph/filtration.hpp"
#include "ph/reduce_baseline.hpp"

namespace ph {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return in;
}

LowVector reference_lowstar(const BoundaryMatrix& matrix) {
  BoundaryMatrix copy = matrix;
  TraceSink sink;
  return reduce_standard(copy, sink);
}

LowVector run_algo(const std::string& algo, BoundaryMatrix& matrix,
                   const PmsOptions& pms, TraceSink& trace) {
  if (algo == "std") return reduce_standard(matrix, trace);
  if (algo == "twist") return reduce_twist(matrix, trace);
  if (algo == "pms") return reduce_pms(matrix, pms, trace);
  throw std::invalid_argument("unknown algorithm: " + algo);
}

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

int run_sample(const SampleArgs& args) {
  PointCloud cloud = sample_ensemble(args.ensemble, args.n, args.seed, args.jitter);
  auto out = open_out(args.out_path);
  write_cloud_csv(out, cloud);
  return 0;
}

int run_build(const BuildArgs& args) {
  auto in = open_in(args.cloud_path);
  PointCloud cloud = read_cloud_csv(in);
  Filtration filtration =
      build_vietoris_rips(cloud, args.r_max, args.divisions, args.max_dim);
  BoundaryMatrix matrix = boundary_matrix(filtration);
  {
    auto out = open_out(args.matrix_out);
    write_matrix(out, matrix);
  }
  if (!args.filtration_out.empty()) {
    auto out = open_out(args.filtration_out);
    write_filtration(out, filtration);
  }
  std::cerr << "m = " << matrix.size() << ", nnz = " << matrix.nnz() << "\n";
  return 0;
}

int run_reduce(const ReduceArgs& args) {
  auto in = open_in(args.matrix_path);
  BoundaryMatrix matrix = read_matrix(in);

  TraceSink trace;
  trace.set_reference(reference_lowstar(matrix));
  LowVector low = run_algo(args.algo, matrix, args.pms, trace);

  if (!args.trace_out.empty()) {
    auto out = open_out(args.trace_out);
    trace.write_csv(out);
  }

  const bool fixpoint = is_reduced(low);
  if (!args.barcode_out.empty()) {
    if (fixpoint) {
      std::vector<double> scales(matrix.size() + 1, 0.0);
      std::vector<int> dims(matrix.size() + 1, 0);
      if (!args.filtration_path.empty()) {
        auto fin = open_in(args.filtration_path);
        Filtration filtration = read_filtration(fin);
        if (filtration.size() != matrix.size())
          throw std::runtime_error("filtration/matrix size mismatch");
        for (Index j = 1; j <= matrix.size(); ++j) {
          scales[j] = filtration.simplices[j - 1].scale;
          dims[j] = filtration.simplices[j - 1].dim;
        }
      } else {
        for (Index j = 1; j <= matrix.size(); ++j) {
          scales[j] = j;  // no scale information: index barcode
          dims[j] = matrix.dim(j);
        }
      }
      auto out = open_out(args.barcode_out);
      write_barcode(out, extract_pairs(scales, dims, low));
    } else {
      std::cerr << "partial reduction: barcode not written\n";
    }
  }
  return fixpoint ? 0 : 2;
}

int iterations_to_error(const std::vector<TraceRow>& rows, double level) {
  for (const TraceRow& r : rows)
    if (r.rel_l1_err <= level) return r.iter;
  return -1;
}

int iterations_to_unreduced(const std::vector<TraceRow>& rows, double level) {
  for (const TraceRow& r : rows)
    if (r.unreduced_frac <= level) return r.iter;
  return -1;
}

int iterations_to_precision(const std::vector<TraceRow>& rows, double level) {
  for (const TraceRow& r : rows)
    if (r.essential_precision >= level) return r.iter;
  return -1;
}

int run_bench(const BenchArgs& args) {
  namespace fs = std::filesystem;
  fs::create_directories(args.out_dir);
  auto summary = open_out((fs::path(args.out_dir) / "summary.txt").string());

  static const double err_levels[] = {0.1, 0.01, 0.001, 0.0001, 0.0};
  static const double unreduced_levels[] = {0.9, 0.5, 0.1, 0.05, 0.01};
  static const double precision_levels[] = {0.1, 0.5, 0.9, 0.95, 1.0};
  static const char* algos[] = {"std", "twist", "pms"};

  for (uint64_t seed : args.seeds) {
    PointCloud cloud = sample_ensemble(args.ensemble, args.n, seed, args.jitter);
    Filtration filtration =
        build_vietoris_rips(cloud, args.r_max, args.divisions, args.max_dim);
    BoundaryMatrix matrix = boundary_matrix(filtration);
    LowVector reference = reference_lowstar(matrix);

    const std::string prefix = "seed" + std::to_string(seed);
    summary << prefix << ".m = " << matrix.size() << "\n";
    summary << prefix << ".nnz = " << matrix.nnz() << "\n";

    long long total_adds[3] = {0, 0, 0};
    for (int a = 0; a < 3; ++a) {
      BoundaryMatrix copy = matrix;
      TraceSink trace;
      trace.set_reference(reference);
      run_algo(algos[a], copy, args.pms, trace);

      const std::string name = args.ensemble + "-" + prefix + "-" + algos[a] + ".csv";
      auto out = open_out((fs::path(args.out_dir) / name).string());
      trace.write_csv(out);

      const auto& rows = trace.rows();
      total_adds[a] = rows.empty() ? 0 : rows.back().col_adds_cum;
      const std::string key = prefix + "." + algos[a];
      summary << key << ".iterations = " << (rows.empty() ? 0 : rows.back().iter)
              << "\n";
      summary << key << ".total_col_adds = " << total_adds[a] << "\n";
      summary << key << ".total_xor_ops = "
              << (rows.empty() ? 0 : rows.back().xor_ops_cum) << "\n";
      for (double level : err_levels)
        summary << key << ".iters_to_rel_err_" << format_double(level) << " = "
                << iterations_to_error(rows, level) << "\n";
      for (double level : unreduced_levels)
        summary << key << ".iters_to_unreduced_" << format_double(level) << " = "
                << iterations_to_unreduced(rows, level) << "\n";
      for (double level : precision_levels)
        summary << key << ".iters_to_precision_" << format_double(level) << " = "
                << iterations_to_precision(rows, level) << "\n";
    }
    summary << prefix << ".ratio_pms_over_std = "
            << format_double(static_cast<double>(total_adds[2]) /
                             static_cast<double>(total_adds[0]))
            << "\n";
    summary << prefix << ".ratio_pms_over_twist = "
            << format_double(static_cast<double>(total_adds[2]) /
                             static_cast<double>(total_adds[1]))
            << "\n";
  }
  return 0;
}

}  // namespace ph
