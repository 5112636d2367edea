#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracle.hpp"
#include "ph/barcode.hpp"
#include "ph/driver.hpp"
#include "ph/filtration.hpp"
#include "ph/point_cloud.hpp"

using namespace ph;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ph-test-" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("point cloud csv round trip") {
  const PointCloud cloud = sample_ensemble("trefoil", 6, 3);
  std::stringstream buf;
  write_cloud_csv(buf, cloud);
  const PointCloud back = read_cloud_csv(buf);
  CHECK(back.points == cloud.points);
}

TEST_CASE("boundary matrix text round trip") {
  const BoundaryMatrix matrix = oracle::t7_matrix();
  std::stringstream buf;
  write_matrix(buf, matrix);
  const BoundaryMatrix back = read_matrix(buf);
  REQUIRE(back.size() == matrix.size());
  for (Index j = 1; j <= matrix.size(); ++j) {
    CHECK(back.column(j) == matrix.column(j));
    CHECK(back.dim(j) == matrix.dim(j));
  }
}

TEST_CASE("filtration text round trip") {
  const Filtration f = build_vietoris_rips(
      sample_ensemble("gaussian3d", 6, 11), 2.0, 5, 2);
  std::stringstream buf;
  write_filtration(buf, f);
  const Filtration back = read_filtration(buf);
  REQUIRE(back.size() == f.size());
  for (Index j = 1; j <= f.size(); ++j) {
    CHECK(back.simplices[j - 1].vertices == f.simplices[j - 1].vertices);
    CHECK(back.simplices[j - 1].dim == f.simplices[j - 1].dim);
    CHECK(back.simplices[j - 1].scale ==
          doctest::Approx(f.simplices[j - 1].scale));
  }
}

TEST_CASE("sample, build and reduce through the driver") {
  TempDir dir;

  SampleArgs sample;
  sample.ensemble = "gaussian3d";
  sample.n = 7;
  sample.seed = 5;
  sample.out_path = dir.file("cloud.csv");
  CHECK(run_sample(sample) == 0);

  BuildArgs build;
  build.cloud_path = sample.out_path;
  build.r_max = 2.5;
  build.divisions = 6;
  build.max_dim = 2;
  build.matrix_out = dir.file("matrix.txt");
  build.filtration_out = dir.file("filtration.txt");
  CHECK(run_build(build) == 0);

  ReduceArgs reduce;
  reduce.matrix_path = build.matrix_out;
  reduce.algo = "pms";
  reduce.trace_out = dir.file("trace-pms.csv");
  reduce.barcode_out = dir.file("barcode-pms.txt");
  reduce.filtration_path = build.filtration_out;
  CHECK(run_reduce(reduce) == 0);

  ReduceArgs std_reduce = reduce;
  std_reduce.algo = "std";
  std_reduce.trace_out = dir.file("trace-std.csv");
  std_reduce.barcode_out = dir.file("barcode-std.txt");
  CHECK(run_reduce(std_reduce) == 0);

  // Both reducers produce the same barcode file.
  std::ifstream a(reduce.barcode_out), b(std_reduce.barcode_out);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK_FALSE(sa.str().empty());

  // The trace carries real error columns because the driver computes its
  // own reference reduction.
  std::ifstream t(reduce.trace_out);
  std::string line;
  std::getline(t, line);
  while (!line.empty() && line[0] == '#') std::getline(t, line);
  CHECK(line.rfind("iter,algo,", 0) == 0);
  CHECK(std::getline(t, line));
  CHECK(line.find("nan") == std::string::npos);
}

TEST_CASE("a capped reduce run signals a partial result") {
  TempDir dir;
  const std::string matrix_path = dir.file("s8.txt");
  {
    std::ofstream out(matrix_path);
    write_matrix(out, oracle::s8_matrix());
  }

  ReduceArgs reduce;
  reduce.matrix_path = matrix_path;
  reduce.algo = "pms";
  reduce.pms.max_iter = 1;
  reduce.trace_out = dir.file("trace.csv");
  reduce.barcode_out = dir.file("barcode.txt");
  CHECK(run_reduce(reduce) == 2);
  CHECK_FALSE(fs::exists(reduce.barcode_out));  // no barcode for partials

  reduce.pms.max_iter = 0;
  CHECK(run_reduce(reduce) == 0);
  CHECK(fs::exists(reduce.barcode_out));
}

TEST_CASE("barcode file format") {
  std::stringstream out;
  write_barcode(out, Barcode{{0.0, 1.5, 0},
                             {0.25, std::numeric_limits<double>::infinity(), 1}});
  CHECK(out.str() == "0 1.5 0\n0.25 inf 1\n");
}
